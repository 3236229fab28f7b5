#pragma once

#include "fermat/quadfield.hpp"

#include <vector>

namespace fermat {

struct FundamentalUnit {
    FieldElem eps;  // minimal unit > 1 under the sqrt(d) > 0 embedding
    int norm_sign;  // +1 or -1
};

/// Fundamental unit of O_K from the periodic continued fraction of sqrt(d),
/// or of (1+sqrt(d))/2 when d = 1 mod 4 (so half-integral units are found).
FundamentalUnit fundamental_unit(const QuadField& field);

/// All units ±eps^n with |n| <= exponent_bound, each exactly once.
std::vector<FieldElem> units_in_box(const QuadField& field, int exponent_bound);

} // namespace fermat
