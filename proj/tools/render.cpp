#include "render.hpp"

#include "fermat/io.hpp"

#include <sstream>

namespace fermat::render {

namespace {

json prime_json(const PrimeIdeal& P) {
    return json{{"label", P.label()},
                {"q", P.q.str()},
                {"kind", to_string(P.kind)},
                {"e", P.e},
                {"f", P.f}};
}

json valuation_entry_json(const SUnitSolution& sol, const PrimeIdeal& P) {
    const auto [vl, vm] = sol.valuations.at(P);
    return json{{"prime", P.label()},
                {"v_2", P.q == 2 ? P.e : 0},
                {"v_lambda", vl},
                {"v_mu", vm},
                {"condition_23", check_condition_23(sol, P)},
                {"condition_25", check_condition_25(sol, P)}};
}

} // namespace

json field_info_json(const QuadField& field) {
    const FundamentalUnit fu = fundamental_unit(field);
    json splitting = json::array();
    for (const PrimeIdeal& P : s_k(field)) splitting.push_back(prime_json(P));
    json sk = json::array(), uk = json::array();
    for (const PrimeIdeal& P : s_k(field)) sk.push_back(P.label());
    for (const PrimeIdeal& P : u_k(field)) uk.push_back(P.label());
    return json{{"d", field.d()},
                {"disc", field.disc().str()},
                {"integral_basis", field.integral_basis_desc()},
                {"splitting_of_2", splitting},
                {"fundamental_unit",
                 json{{"eps", format_field_elem(fu.eps)}, {"norm", fu.norm_sign}}},
                {"s_k", sk},
                {"u_k", uk}};
}

std::string field_info_text(const QuadField& field) {
    const FundamentalUnit fu = fundamental_unit(field);
    std::ostringstream os;
    os << "K = Q(sqrt(" << field.d() << "))\n";
    os << "  discriminant:   " << field.disc() << "\n";
    os << "  integral basis: " << field.integral_basis_desc() << "\n";
    os << "  2 splits as:    ";
    bool first = true;
    for (const PrimeIdeal& P : s_k(field)) {
        if (!first) os << ", ";
        os << P.label() << " (" << to_string(P.kind) << ", e=" << P.e << ", f=" << P.f << ")";
        first = false;
    }
    os << "\n";
    os << "  fundamental unit: " << format_field_elem(fu.eps) << " (norm " << fu.norm_sign
       << ")\n";
    os << "  S_K: ";
    first = true;
    for (const PrimeIdeal& P : s_k(field)) {
        if (!first) os << ", ";
        os << P.label();
        first = false;
    }
    os << "\n  U_K: ";
    first = true;
    for (const PrimeIdeal& P : u_k(field)) {
        if (!first) os << ", ";
        os << P.label();
        first = false;
    }
    os << "\n";
    return os.str();
}

json solutions_json(const SUnitSolutionList& list) {
    json sols = json::array();
    for (const SUnitSolution& sol : list.solutions) {
        json vals = json::array();
        for (const auto& [P, _] : sol.valuations) vals.push_back(valuation_entry_json(sol, P));
        sols.push_back(json{{"lambda", format_field_elem(sol.lambda)},
                            {"mu", format_field_elem(sol.mu)},
                            {"relevance", to_string(sol.relevance)},
                            {"valuations", vals}});
    }
    json s_set = json::array();
    for (const PrimeIdeal& P : list.s_set) s_set.push_back(P.label());
    return json{{"bounded", list.bounded},
                {"bound", list.exponent_bound},
                {"s_set", s_set},
                {"solutions", sols}};
}

std::string solutions_text(const SUnitSolutionList& list) {
    std::ostringstream os;
    os << list.solutions.size() << " solution(s) of lambda + mu = 1 within exponent box "
       << "[-" << list.exponent_bound << ", " << list.exponent_bound << "]"
       << (list.bounded ? " (bounded search)" : "") << "\n";
    for (const SUnitSolution& sol : list.solutions) {
        os << "  lambda = " << format_field_elem(sol.lambda)
           << ", mu = " << format_field_elem(sol.mu) << "  [" << to_string(sol.relevance)
           << "]\n";
        for (const auto& [P, vals] : sol.valuations) {
            os << "    " << P.label() << ": v(lambda) = " << vals.first
               << ", v(mu) = " << vals.second
               << ", (2.3) " << (check_condition_23(sol, P) ? "pass" : "FAIL")
               << ", (2.5) " << (check_condition_25(sol, P) ? "pass" : "FAIL") << "\n";
        }
    }
    return os.str();
}

json report_json(const CriterionReport& rep) {
    json witnesses = json::array();
    for (const Witness& w : rep.witnesses) {
        json vals = json::object();
        for (const auto& [k, v] : w.valuations) vals[k] = v;
        witnesses.push_back(json{{"subject", w.subject},
                                 {"prime", w.prime},
                                 {"clause", w.clause},
                                 {"passed", w.passed},
                                 {"valuations", vals}});
    }
    return json{{"rule", rep.rule},
                {"field", rep.field_desc},
                {"verdict", to_string(rep.verdict)},
                {"witnesses", witnesses},
                {"bounded_input", rep.bounded_input},
                {"es_assumed", rep.es_assumed},
                {"vacuous", rep.vacuous},
                {"s_prime_equals_s", rep.s_prime_equals_s},
                {"sign_waiver_used", rep.sign_waiver_used},
                {"separate_coefficient_witness", rep.separate_coefficient_witness},
                {"matched_cases", rep.matched_cases},
                {"notes", rep.notes}};
}

std::string report_text(const CriterionReport& rep) {
    std::ostringstream os;
    os << rep.rule << "\n";
    os << "  field:   " << rep.field_desc << "\n";
    os << "  verdict: " << to_string(rep.verdict);
    if (rep.vacuous) os << " (vacuous)";
    if (rep.es_assumed) os << " [assumes Eichler-Shimura]";
    os << "\n";
    if (!rep.matched_cases.empty()) {
        os << "  congruence cases:";
        for (int c : rep.matched_cases) os << " " << c;
        os << "\n";
    }
    if (!rep.notes.empty()) os << "  note: " << rep.notes << "\n";
    for (const Witness& w : rep.witnesses) {
        os << "  " << (w.passed ? "[pass] " : "[fail] ") << w.subject << " at " << w.prime
           << ": " << w.clause;
        if (!w.valuations.empty()) {
            os << " {";
            bool first = true;
            for (const auto& [k, v] : w.valuations) {
                if (!first) os << ", ";
                os << k << "=" << v;
                first = false;
            }
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

json frey_json(const FreyData& fd, const WkCheck& wk,
               const std::vector<ReductionReport>& reductions) {
    json reds = json::array();
    for (const ReductionReport& r : reductions) {
        json entry{{"prime", r.prime.label()},
                   {"v_delta", r.v_delta},
                   {"type", to_string(r.type)},
                   {"p_divides_v_delta", r.p_divides_v_delta},
                   {"three_divides_v_delta", r.three_divides_v_delta},
                   {"conductor_exponent_bound", r.conductor_exponent_bound},
                   {"in_s_prime", r.in_s_prime},
                   {"in_gcd_support", r.in_gcd_support}};
        entry["v_c4"] = r.v_c4 ? json(*r.v_c4) : json();
        entry["v_j"] = r.v_j ? json(*r.v_j) : json();
        entry["p_divides_v_j"] = r.p_divides_v_j ? json(*r.p_divides_v_j) : json();
        if (r.prime.q == 2) {
            entry["threshold_x2"] = r.threshold_x2;
            entry["threshold_met"] = r.threshold_met;
        }
        reds.push_back(entry);
    }
    return json{{"A", format_field_elem(fd.A)},
                {"B", format_field_elem(fd.B)},
                {"C", format_field_elem(fd.C)},
                {"a", format_field_elem(fd.a)},
                {"b", format_field_elem(fd.b)},
                {"c", format_field_elem(fd.c)},
                {"p", fd.p},
                {"c4", format_field_elem(fd.c4)},
                {"delta", format_field_elem(fd.delta)},
                {"j", format_field_elem(fd.j)},
                {"w_k", json{{"member", wk.ok}, {"reason", wk.reason}}},
                {"reduction", reds}};
}

std::string frey_text(const FreyData& fd, const WkCheck& wk,
                      const std::vector<ReductionReport>& reductions) {
    std::ostringstream os;
    os << "Frey curve y^2 = x(x - A a^p)(x + B b^p) for "
       << "A=" << format_field_elem(fd.A) << " B=" << format_field_elem(fd.B)
       << " C=" << format_field_elem(fd.C) << " a=" << format_field_elem(fd.a)
       << " b=" << format_field_elem(fd.b) << " c=" << format_field_elem(fd.c)
       << " p=" << fd.p << "\n";
    os << "  c4    = " << format_field_elem(fd.c4) << "\n";
    os << "  delta = " << format_field_elem(fd.delta) << "\n";
    os << "  j     = " << format_field_elem(fd.j) << "\n";
    os << "  W_K membership: " << (wk.ok ? "yes" : "no");
    if (!wk.reason.empty()) os << " (" << wk.reason << ")";
    os << "\n";
    for (const ReductionReport& r : reductions) {
        os << "  at " << r.prime.label() << ": v(delta)=" << r.v_delta;
        if (r.v_c4) os << " v(c4)=" << *r.v_c4;
        if (r.v_j) os << " v(j)=" << *r.v_j;
        os << " type=" << to_string(r.type)
           << " conductor_exp<=" << r.conductor_exponent_bound;
        if (r.prime.q == 2)
            os << (r.threshold_met ? " [p above threshold]" : " [p below threshold]");
        os << "\n";
    }
    return os.str();
}

json density_json(const DensityReport& rep) {
    json classes = json::array();
    for (const auto& [rm, count] : rep.class_counts)
        classes.push_back(json{{"r", rm.first}, {"m", rm.second}, {"count", count}});
    json running = json::array();
    for (const auto& [xi, est] : rep.running) running.push_back(json::array({xi, est}));
    json out{{"x", rep.x},
             {"mode", rep.mode == ScanMode::congruence_only ? "congruence" : "solver"},
             {"total_squarefree", rep.total_squarefree},
             {"criterion_count", rep.criterion_count},
             {"delta_rel_estimate", rep.delta_rel_estimate},
             {"delta_rel_exact", rat_to_string(rep.delta_rel_exact)},
             {"asymptotic_prediction", rep.asymptotic_prediction},
             {"class_counts", classes},
             {"running", running}};
    if (rep.mode == ScanMode::congruence_plus_bounded_solver) {
        out["solver"] = json{{"bound", rep.solver_bound},
                             {"d_cap", rep.d_cap},
                             {"only_irrelevant", rep.solver_only_irrelevant},
                             {"relevant", rep.solver_relevant}};
    }
    return out;
}

std::string density_text(const DensityReport& rep) {
    std::ostringstream os;
    os << "density scan up to x = " << rep.x << "\n";
    os << "  square-free d in [2, x]:  " << rep.total_squarefree << "\n";
    os << "  matching a congruence case: " << rep.criterion_count << "\n";
    os << "  relative density estimate:  " << rep.delta_rel_estimate << " ("
       << rat_to_string(rep.delta_rel_exact) << ")\n";
    os << "  square-free main term (6/pi^2) x = " << rep.asymptotic_prediction << "\n";
    if (rep.mode == ScanMode::congruence_plus_bounded_solver) {
        os << "  solver (bound " << rep.solver_bound << ", d <= " << rep.d_cap
           << "): only irrelevant found for " << rep.solver_only_irrelevant
           << ", relevant found for " << rep.solver_relevant << "\n";
    }
    return os.str();
}

void write_density_csv(std::ostream& os, const DensityReport& rep) {
    os << "d,squarefree,case,solver_status\n";
    for (const ScanRow& row : rep.rows) {
        os << row.d << "," << (row.squarefree ? 1 : 0) << "," << row.case_matched << ","
           << to_string(row.solver_status) << "\n";
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace fermat::render
