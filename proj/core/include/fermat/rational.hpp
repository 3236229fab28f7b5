#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fermat {

// All arithmetic in the library is exact: big integers and big rationals
// (kept in lowest terms by cpp_rational), no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rat& r) { return r.sign(); }

/// Renders "num" when the denominator is 1, "num/den" otherwise.
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& n);

} // namespace fermat
