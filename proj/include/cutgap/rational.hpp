#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace cutgap {

// Exact arithmetic used throughout graph construction and the closed-form
// probability calculus. Doubles appear only around the LP solver.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q" reduced.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q" (optional leading '-'). Rejects zero denominators,
/// empty fields and stray characters.
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace cutgap
