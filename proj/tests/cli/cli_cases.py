#!/usr/bin/env python3
"""CLI cases: cli_cases.py --list, or cli_cases.py <qahom> <fixtures> <case>."""

import json
import os
import re
import subprocess
import sys
import tempfile

# name: (args, exit code, patterns that must appear in stdout+stderr)
CASES = {
    "cohomology_cone": (["cohomology", "{f}/cone_identity.json"], 0, [r"acyclic: yes"]),
    "cohomology_filtered": (["cohomology", "{f}/filtered_cohomology.json"], 0, [r"H\^0 = Q\^1 \(weights 1\)"]),
    "cohomology_nonstrict": (["cohomology", "{f}/nonstrict_two_term.json"], 0, [r"acyclic: yes"]),
    "cohomology_corrupt_d2": (["cohomology", "{f}/corrupt_d2.json"], 1, [r"d\^1 o d\^0 != 0: entry \(0,0\)"]),
    "classify_shift_map": (
        ["classify-map", "{f}/shift_map.json"],
        0,
        [r"^mono: yes, strict mono: no, fibration: no, weak equivalence: no$"],
    ),
    "classify_strict_inclusion": (["classify-map", "{f}/strict_inclusion.json"], 0, [r"injective cofibration: yes"]),
    "classify_trivial_fibration": (
        ["classify-map", "{f}/trivial_fibration.json"],
        0,
        [r"projective fibration: yes, trivial: yes"],
    ),
    "lift_found": (["check-lift", "{f}/lift_square.json"], 0, [r"lift: found", r"h\^0 = "]),
    "lift_none": (["check-lift", "{f}/no_lift_square.json"], 1, [r"lift: none", r"witness: "]),
    "lift_noncommuting": (
        ["check-lift", "{f}/noncommuting_square.json"],
        1,
        [r"degree 0, entry \(0,0\)"],
    ),
    "factor": (["factor", "{f}/factor_morphism.json"], 0, [r"coimage", r"image"]),
    "resolve_ce_abelian2": (["resolve-ce", "{f}/abelian2.json"], 0, [r"CE resolution: pass"]),
    "resolve_ce_heisenberg": (["--weight-bound", "3", "resolve-ce", "{f}/heisenberg.json"], 0, [r"weight 3: all zero"]),
    "resolve_ce_sl2": (["resolve-ce", "{f}/sl2.json"], 0, [r"length <= 4: H\^0 = 1"]),
    "resolve_ce_odd": (["resolve-ce", "{f}/odd.json"], 2, [r"degree 0"]),
    "resolve_koszul": (["resolve-koszul", "{f}/koszul_rank2.json"], 0, [r"augmentation quasi-isomorphism: pass"]),
    "resolve_koszul_m": (["resolve-koszul", "{f}/koszul_m.json"], 0, [r"base change: pass"]),
    "pbw_sl2": (["pbw", "{f}/sl2.json"], 0, [r"n = 6: dim gr U = 28, dim Sym = 28", r"PBW: pass"]),
    "pbw_odd": (["--pbw-bound", "4", "pbw", "{f}/odd.json"], 0, [r"PBW: pass"]),
    "pbw_corrupt": (["pbw", "{f}/corrupt_jacobi.json"], 1, [r"Jacobi fails"]),
    "lie_check_solvable2": (["lie-check", "{f}/solvable2.json"], 0, [r"underlying complex acyclic: yes"]),
    "lie_check_corrupt": (["lie-check", "{f}/corrupt_jacobi.json"], 1, [r"Jacobi fails at \(h, e, f\)"]),
    "derived_ddt": (["derived-quotient", "{f}/derived_ddt.json"], 0, [r"weight 0: H\^0 = 1$", r"weight 1: all zero"]),
    "derived_euler": (["derived-quotient", "{f}/derived_euler.json"], 0, [r"weight 0: H\^0 = 1, H\^1 = 1"]),
    "crit_x3": (["crit", "{f}/crit_x3.json"], 0, [r"dim H0 = 2 \(stabilized\), H-1 = 0"]),
    "crit_x3_y3": (["crit", "{f}/crit_x3_y3.json"], 0, [r"dim H0 = 4 \(stabilized\)"]),
    "crit_poly": (["--degree-bound", "8", "crit", "--poly", "x^4 + y^4"], 0, [r"dim H0 = 9 \(stabilized\)"]),
    "flags_after_subcommand": (["crit", "{f}/crit_x3.json", "--degree-bound", "5"], 0, [r"dim H0 = 2"]),
    "missing_file": (["cohomology", "{f}/no_such_file.json"], 2, [r"cannot read"]),
    "bad_flag": (["--degree-bound", "0", "crit", "{f}/crit_x3.json"], 2, []),
    "unknown_flag": (["--frobnicate", "cohomology", "{f}/cone_identity.json"], 2, []),
    "no_subcommand": ([], 2, []),
    "wrong_shape": (["cohomology", "{f}/sl2.json"], 2, [r"field '"]),
}

SPECIAL = ["malformed_json", "machine_format", "machine_failure", "deterministic", "selftest"]


def run(exe, args):
    p = subprocess.run([exe] + args, capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def expect(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def check_case(exe, fixtures, name):
    if name in CASES:
        args, code, patterns = CASES[name]
        args = [a.replace("{f}", fixtures) for a in args]
        rc, out, err = run(exe, args)
        print(out + err)
        expect(rc == code, f"exit {rc}, expected {code}")
        for pat in patterns:
            expect(re.search(pat, out + err, re.M), f"missing /{pat}/")
        return
    if name == "malformed_json":
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as t:
            t.write('{"objects": {"0": ')
        try:
            rc, out, err = run(exe, ["cohomology", t.name])
        finally:
            os.unlink(t.name)
        print(out + err)
        expect(rc == 2, f"exit {rc}, expected 2")
        expect("not valid JSON" in out + err, "no JSON error message")
    elif name == "machine_format":
        rc, out, _ = run(exe, ["--format", "machine", "cohomology", f"{fixtures}/filtered_cohomology.json"])
        expect(rc == 0, f"exit {rc}")
        doc = json.loads(out)
        print(json.dumps(doc, indent=1))
        for key in ("command", "input", "input_sha256", "options", "status", "result"):
            expect(key in doc, f"missing key {key}")
        expect(doc["status"] == "ok", "status")
        expect(re.fullmatch(r"[0-9a-f]{64}", doc["input_sha256"]), "sha256")
    elif name == "machine_failure":
        rc, out, _ = run(exe, ["--format", "machine", "check-lift", f"{fixtures}/no_lift_square.json"])
        expect(rc == 1, f"exit {rc}")
        doc = json.loads(out)
        print(json.dumps(doc, indent=1))
        expect(doc["status"] != "ok", "status")
        expect(doc.get("witness"), "witness")
    elif name == "deterministic":
        for args in (
            ["--format", "machine", "resolve-ce", f"{fixtures}/heisenberg.json"],
            ["--format", "machine", "crit", f"{fixtures}/crit_x3_y3.json"],
            ["--seed", "3", "selftest"],
        ):
            a = run(exe, args)
            b = run(exe, args)
            expect(a == b, f"outputs differ for {args}")
        print("identical")
    elif name == "selftest":
        # Criterion 5 fails: the projective lifting property is false for
        # non-strictly exact kernels, so selftest reports a witness and exits 1.
        rc, out, err = run(exe, ["selftest"])
        print(out + err)
        expect(rc == 1, f"exit {rc}, expected 1")
        for i in range(1, 13):
            expect(re.search(rf"^(PASS|FAIL) {i} ", out, re.M), f"no line for criterion {i}")
        expect(re.search(r"^FAIL 5 ", out, re.M), "criterion 5 expected to fail")
        expect(len(re.findall(r"^PASS \d+ ", out, re.M)) == 11, "other criteria should pass")
    else:
        expect(False, f"unknown case {name}")


def main():
    if len(sys.argv) == 2 and sys.argv[1] == "--list":
        print("\n".join(list(CASES) + SPECIAL))
        return
    if len(sys.argv) != 4:
        print(__doc__)
        sys.exit(2)
    check_case(sys.argv[1], sys.argv[2], sys.argv[3])
    print("ok")


if __name__ == "__main__":
    main()
