#pragma once

#include <doctest.h>

#include <string>

#include "qahom/rational.hpp"

inline qahom::Rational q(const std::string& s) { return qahom::parse_rational(s); }

inline bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }
