#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sgchroma {

// Exact rational arithmetic; everything on the optimum path stays exact.
using Rat = boost::multiprecision::cpp_rational;

// "p/q" (or "p" when q == 1), normalized by cpp_rational.
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", optional leading '-'. Throws on malformed input.
Rat parse_rat(const std::string& s);

}  // namespace sgchroma
