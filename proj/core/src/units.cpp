#include "fermat/units.hpp"

#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <utility>

namespace fermat {

namespace {

struct SurdState {
    std::int64_t p, q; // (p + sqrt(d)) / q
    bool operator<(const SurdState& o) const {
        return p != o.p ? p < o.p : q < o.q;
    }
};

} // namespace

FundamentalUnit fundamental_unit(const QuadField& field) {
    const std::int64_t d = field.d();
    const std::int64_t s = static_cast<std::int64_t>(num::isqrt_u64(static_cast<std::uint64_t>(d)));

    // Continued fraction of (p0 + sqrt(d)) / q0 via the integer (P, Q)
    // recurrence. The first repeated state delimits the period.
    SurdState st{};
    if (field.half_integral_basis()) {
        st = {1, 2};
    } else {
        st = {0, 1};
    }

    std::map<SurdState, int> seen;
    std::vector<std::int64_t> quotients;
    int cycle_start = -1;
    while (true) {
        auto [it, inserted] = seen.emplace(st, static_cast<int>(quotients.size()));
        if (!inserted) {
            cycle_start = it->second;
            break;
        }
        const std::int64_t a = (st.p + s) / st.q; // q > 0 throughout
        quotients.push_back(a);
        const std::int64_t p_next = a * st.q - st.p;
        const std::int64_t q_next = (d - p_next * p_next) / st.q;
        st = {p_next, q_next};
    }

    // st is now the first repeated state; the quotients from cycle_start to
    // the end form one full period of the purely periodic reduced surd
    // beta = (st.p + sqrt(d)) / st.q. The fundamental automorph of beta gives
    // the fundamental unit eps = k*beta + k', where [[h,h'],[k,k']] is the
    // product of the quotient matrices over the period.
    Int h = 1, hp = 0, k = 0, kp = 1;
    for (std::size_t i = static_cast<std::size_t>(cycle_start); i < quotients.size(); ++i) {
        const Int a = quotients[i];
        Int nh = a * h + hp, nk = a * k + kp;
        hp = h;
        kp = k;
        h = nh;
        k = nk;
    }

    const Rat qr(st.q);
    FieldElem eps = field.element(Rat(k * st.p + kp * st.q) / qr, Rat(k) / qr);

    assert(eps.is_integral());
    const Rat nrm = eps.norm();
    assert(nrm == 1 || nrm == -1);
    assert(eps.is_positive());

    return FundamentalUnit{eps, nrm == 1 ? 1 : -1};
}

std::vector<FieldElem> units_in_box(const QuadField& field, int exponent_bound) {
    if (exponent_bound < 0) throw OutOfRange("units_in_box: negative exponent bound");
    const FundamentalUnit fu = fundamental_unit(field);
    std::vector<FieldElem> out;
    out.reserve(2 * (2 * exponent_bound + 1));
    for (int n = -exponent_bound; n <= exponent_bound; ++n) {
        const FieldElem u = fu.eps.pow(n);
        out.push_back(u);
        out.push_back(-u);
    }
    return out;
}

} // namespace fermat
