#include "fermat/sunit.hpp"

#include "fermat/errors.hpp"
#include "fermat/numutil.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

namespace fermat {

std::string to_string(Relevance r) {
    return r == Relevance::irrelevant ? "irrelevant" : "relevant";
}

namespace {

constexpr int kMaxPrincipalPower = 24;

// Searches integral elements of |norm| = target with sqrt(d)-coordinate up
// to height_bound, in the chart matching the integral basis. Returns the
// first element (in scan order) satisfying pred.
template <typename Pred>
std::optional<FieldElem> norm_equation_scan(const QuadField& field, const Int& target,
                                            std::int64_t height_bound, Pred&& pred) {
    const Int d(field.d());
    const bool half = field.half_integral_basis();
    const Int m = half ? 4 * target : target;

    Int dy2 = 0;     // d * y^2
    Int step = d;    // d * (2y + 1)
    for (std::int64_t y = 0; y <= height_bound; ++y) {
        for (int s : {-1, +1}) {
            const Int t = dy2 + s * m;
            Int x;
            if (t >= 0 && num::is_perfect_square(t, &x)) {
                FieldElem cand = half ? field.element(Rat(x, 2), Rat(y, 2))
                                      : field.element(Rat(x), Rat(y));
                if (!cand.is_zero() && cand.is_integral()) {
                    if (pred(cand)) return cand;
                    FieldElem cc = cand.conj();
                    if (!cc.is_zero() && pred(cc)) return cc;
                }
            }
        }
        dy2 += step;
        step += 2 * d;
    }
    return std::nullopt;
}

} // namespace

SGenerators s_generators(const QuadField& field, const std::vector<PrimeIdeal>& s_set,
                         std::int64_t height_bound) {
    if (s_set.empty()) throw OutOfRange("s_generators: empty prime set");

    SGenerators gens{fundamental_unit(field), {}, {}};

    for (const PrimeIdeal& P : s_set) {
        if (P.kind == SplitKind::inert) {
            gens.pi_list.push_back({P, field.from_int(P.q), 1});
            continue;
        }
        bool found = false;
        for (int k = 1; k <= kMaxPrincipalPower && !found; ++k) {
            Int target = 1;
            for (int i = 0; i < P.f * k; ++i) target *= P.q;
            auto hit = norm_equation_scan(field, target, height_bound,
                                          [&](const FieldElem& cand) {
                                              return valuation(P, cand) == k;
                                          });
            if (hit) {
                gens.pi_list.push_back({P, *hit, k});
                found = true;
            }
        }
        if (!found)
            throw GeneratorNotFound("s_generators: no generator of a power of " + P.label() +
                                    " within height " + std::to_string(height_bound) +
                                    "; raise the height bound");
    }

    // When both primes above a split q are in S but P^k is principal only for
    // k > 1, the per-prime generators span a proper sublattice: P*Pbar = (q)
    // is missing. Adding q itself restores the full lattice.
    std::set<Int> aux_done;
    for (const PrimePower& pp : gens.pi_list) {
        if (pp.prime.kind != SplitKind::split || pp.power <= 1) continue;
        if (aux_done.count(pp.prime.q)) continue;
        const auto both_in_s = std::count_if(
            s_set.begin(), s_set.end(),
            [&](const PrimeIdeal& Q) { return Q.q == pp.prime.q; });
        if (both_in_s == 2) {
            gens.aux.push_back(field.from_int(pp.prime.q));
            aux_done.insert(pp.prime.q);
        }
    }

    return gens;
}

bool is_s_unit(const QuadField& field, const FieldElem& alpha,
               const std::vector<PrimeIdeal>& s_set) {
    if (alpha.is_zero()) return false;
    const Rat nrm = alpha.norm();
    Int num = boost::multiprecision::abs(numerator(nrm));
    Int den = denominator(nrm);

    std::vector<Int> under;
    for (const PrimeIdeal& P : s_set) {
        if (std::find(under.begin(), under.end(), P.q) == under.end())
            under.push_back(P.q);
    }
    for (const Int& q : under) {
        while (num % q == 0) num /= q;
        while (den % q == 0) den /= q;
    }
    if (num != 1 || den != 1) return false;

    // A split prime above a q under S may itself lie outside S; its valuation
    // must vanish even when the norm carries no net q-power.
    for (const Int& q : under) {
        for (const PrimeIdeal& P : split_prime(field, q)) {
            if (std::find(s_set.begin(), s_set.end(), P) == s_set.end()) {
                if (valuation(P, alpha) != 0) return false;
            }
        }
    }
    return true;
}

SUnitSolution make_solution(const FieldElem& lambda, const FieldElem& mu,
                            const std::vector<PrimeIdeal>& s_set) {
    SUnitSolution sol;
    sol.lambda = lambda;
    sol.mu = mu;
    for (const PrimeIdeal& P : s_set)
        sol.valuations.emplace(P, std::make_pair(valuation(P, lambda), valuation(P, mu)));
    sol.relevance = classify(sol);
    return sol;
}

SUnitSolutionList solve_unit_equation(const QuadField& field,
                                      const std::vector<PrimeIdeal>& s_set, int bound,
                                      std::int64_t height_bound) {
    if (bound < 1) throw OutOfRange("solve_unit_equation: bound must be >= 1");
    const SGenerators gens = s_generators(field, s_set, height_bound);

    std::vector<FieldElem> generators;
    generators.push_back(gens.eps.eps);
    for (const PrimePower& pp : gens.pi_list) generators.push_back(pp.generator);
    for (const FieldElem& g : gens.aux) generators.push_back(g);

    // Power tables g^e for e in [-bound, bound].
    const int width = 2 * bound + 1;
    std::vector<std::vector<FieldElem>> powers(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        powers[i].reserve(width);
        for (int e = -bound; e <= bound; ++e) powers[i].push_back(generators[i].pow(e));
    }

    const FieldElem one = field.one();
    std::set<std::pair<FieldElem, FieldElem>> found;

    auto consider = [&](const FieldElem& lambda) {
        if (lambda.is_zero() || lambda == one) return;
        const FieldElem mu = one - lambda;
        if (!is_s_unit(field, mu, s_set)) return;
        found.emplace(lambda, mu);
        found.emplace(mu, lambda); // mu is an S-unit and lambda = 1 - mu
    };

    // Depth-first over exponent vectors, carrying the partial product.
    auto enumerate = [&](auto&& self, std::size_t idx, const FieldElem& partial) -> void {
        if (idx == powers.size()) {
            consider(partial);
            consider(-partial);
            return;
        }
        for (int e = 0; e < width; ++e) self(self, idx + 1, partial * powers[idx][e]);
    };
    enumerate(enumerate, 0, one);

    SUnitSolutionList out;
    out.bounded = true;
    out.exponent_bound = bound;
    out.s_set = s_set;
    for (const auto& [lambda, mu] : found)
        out.solutions.push_back(make_solution(lambda, mu, s_set));
    return out;
}

Relevance classify(const SUnitSolution& sol) {
    const Rat& lx = sol.lambda.x();
    const Rat& mx = sol.mu.x();
    if (sol.lambda.is_rational() && sol.mu.is_rational()) {
        if ((lx == 2 && mx == -1) || (lx == -1 && mx == 2) ||
            (lx == Rat(1, 2) && mx == Rat(1, 2)))
            return Relevance::irrelevant;
    }
    return Relevance::relevant;
}

namespace {

std::pair<long long, long long> solution_valuations(const SUnitSolution& sol,
                                                    const PrimeIdeal& P) {
    auto it = sol.valuations.find(P);
    if (it != sol.valuations.end()) return it->second;
    return {valuation(P, sol.lambda), valuation(P, sol.mu)};
}

} // namespace

bool check_condition_23(const SUnitSolution& sol, const PrimeIdeal& P) {
    const auto [vl, vm] = solution_valuations(sol, P);
    const long long v2 = (P.q == 2) ? P.e : 0;
    return std::max(std::abs(vl), std::abs(vm)) <= 4 * v2;
}

bool check_condition_25(const SUnitSolution& sol, const PrimeIdeal& P) {
    if (!check_condition_23(sol, P)) return false;
    const auto [vl, vm] = solution_valuations(sol, P);
    const long long v2 = (P.q == 2) ? P.e : 0;
    return num::mod_pos_ll(vl + vm, 3) == num::mod_pos_ll(v2, 3);
}

} // namespace fermat
