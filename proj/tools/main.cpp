#include "render.hpp"

#include "fermat/errors.hpp"
#include "fermat/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace fermat;

struct ElemArgs {
    std::string A = "1", B = "1", C = "1";
    std::string a = "1", b = "1", c = "1";
};

int cmd_field(std::int64_t d, bool as_json) {
    const QuadField field(d);
    if (as_json)
        std::cout << render::dump(render::field_info_json(field));
    else
        std::cout << render::field_info_text(field);
    return 0;
}

int cmd_sunit(std::int64_t d, int bound, std::int64_t height,
              const std::optional<ElemArgs>& coeffs, bool as_json) {
    const QuadField field(d);
    std::vector<PrimeIdeal> s_set;
    if (coeffs) {
        const FieldElem A = parse_field_elem(coeffs->A, field);
        const FieldElem B = parse_field_elem(coeffs->B, field);
        const FieldElem C = parse_field_elem(coeffs->C, field);
        s_set = s_k_prime(field, A, B, C);
    } else {
        s_set = s_k(field);
    }
    const SUnitSolutionList list = solve_unit_equation(field, s_set, bound, height);
    if (as_json)
        std::cout << render::dump(render::solutions_json(list));
    else
        std::cout << render::solutions_text(list);
    return 0;
}

int cmd_check(std::int64_t d, const ElemArgs& args, int bound, std::int64_t height,
              const std::string& target, bool as_json) {
    const QuadField field(d);
    const FieldElem A = parse_field_elem(args.A, field);
    const FieldElem B = parse_field_elem(args.B, field);
    const FieldElem C = parse_field_elem(args.C, field);

    const auto s_prime = s_k_prime(field, A, B, C);
    const SUnitSolutionList list = solve_unit_equation(field, s_prime, bound, height);

    const CriterionReport rep = target == "K3" ? theorem_24_check(field, A, B, C, list)
                                               : theorem_22_check(field, A, B, C, list);

    std::optional<CriterionReport> local;
    if (target == "K3" && d > 6) {
        local = quadratic_criterion_K(d, A, B, C);
    }

    if (as_json) {
        render::json out{{"d", d},
                         {"A", format_field_elem(A)},
                         {"B", format_field_elem(B)},
                         {"C", format_field_elem(C)},
                         {"target", target},
                         {"report", render::report_json(rep)},
                         {"solutions", render::solutions_json(list)}};
        if (local) out["local_route"] = render::report_json(*local);
        std::cout << render::dump(out);
    } else {
        std::cout << render::solutions_text(list) << "\n" << render::report_text(rep);
        if (local) std::cout << "\nlocal criterion route:\n" << render::report_text(*local);
    }
    return rep.exit_code();
}

int cmd_frey(std::int64_t d, const ElemArgs& args, std::int64_t p, bool as_json) {
    const QuadField field(d);
    const FieldElem A = parse_field_elem(args.A, field);
    const FieldElem B = parse_field_elem(args.B, field);
    const FieldElem C = parse_field_elem(args.C, field);
    const FieldElem a = parse_field_elem(args.a, field);
    const FieldElem b = parse_field_elem(args.b, field);
    const FieldElem c = parse_field_elem(args.c, field);

    const FreyData fd = frey_invariants(A, B, C, a, b, c, p);
    const WkCheck wk = is_in_w_k(field, A, B, C, a, b, c, p);

    std::vector<ReductionReport> reductions;
    for (const PrimeIdeal& P : s_k_prime(field, A, B, C))
        reductions.push_back(classify_reduction(fd, P));

    if (as_json)
        std::cout << render::dump(render::frey_json(fd, wk, reductions));
    else
        std::cout << render::frey_text(fd, wk, reductions);
    return 0;
}

int cmd_density(std::int64_t x, const std::string& mode, int bound, std::int64_t d_cap,
                const std::string& csv_path, bool as_json) {
    const ScanMode scan_mode = mode == "solver" ? ScanMode::congruence_plus_bounded_solver
                                                : ScanMode::congruence_only;
    const bool keep_rows = !csv_path.empty();
    const DensityReport rep = density_scan(x, scan_mode, bound, d_cap, keep_rows);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error("cannot open CSV output file: " + csv_path);
        render::write_density_csv(out, rep);
    }
    if (as_json)
        std::cout << render::dump(render::density_json(rep));
    else
        std::cout << render::density_text(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local criteria toolkit for generalized Fermat equations "
                 "A x^p + B y^p + C z^p = 0 over real quadratic fields"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::int64_t d = 2, x = 100, p = 3, height = fermat::kDefaultHeightBound;
    std::int64_t d_cap = 200;
    int bound = fermat::kDefaultExponentBound;
    int density_bound = 8;
    ElemArgs elems;
    bool have_A = false, have_B = false, have_C = false;
    std::string target = "WK", mode = "congruence", csv_path;

    auto* field_cmd = app.add_subcommand("field", "field data: discriminant, basis, "
                                                  "splitting of 2, fundamental unit");
    field_cmd->add_option("--d", d, "square-free d >= 2")->required();

    auto* sunit_cmd = app.add_subcommand("sunit", "bounded S-unit equation search");
    sunit_cmd->add_option("--d", d, "square-free d >= 2")->required();
    sunit_cmd->add_option("--bound", bound, "exponent box bound per generator");
    sunit_cmd->add_option("--height", height, "generator search height bound");
    sunit_cmd->add_option("--A", elems.A)->each([&](const std::string&) { have_A = true; });
    sunit_cmd->add_option("--B", elems.B)->each([&](const std::string&) { have_B = true; });
    sunit_cmd->add_option("--C", elems.C)->each([&](const std::string&) { have_C = true; });

    auto* check_cmd = app.add_subcommand("check", "criterion checks for A x^p + B y^p + "
                                                  "C z^p = 0");
    check_cmd->add_option("--d", d)->required();
    check_cmd->add_option("--A", elems.A)->required();
    check_cmd->add_option("--B", elems.B)->required();
    check_cmd->add_option("--C", elems.C)->required();
    check_cmd->add_option("--bound", bound);
    check_cmd->add_option("--height", height);
    check_cmd->add_option("--target", target)->check(CLI::IsMember({"WK", "K3"}));

    auto* frey_cmd = app.add_subcommand("frey", "Frey curve invariants and reduction types");
    frey_cmd->add_option("--d", d)->required();
    frey_cmd->add_option("--A", elems.A)->required();
    frey_cmd->add_option("--B", elems.B)->required();
    frey_cmd->add_option("--C", elems.C)->required();
    frey_cmd->add_option("--a", elems.a)->required();
    frey_cmd->add_option("--b", elems.b)->required();
    frey_cmd->add_option("--c", elems.c)->required();
    frey_cmd->add_option("--p", p, "odd prime exponent")->required();

    auto* density_cmd = app.add_subcommand("density", "square-free sieve and criterion "
                                                      "density scan");
    density_cmd->add_option("--x", x, "scan limit")->required();
    density_cmd->add_option("--mode", mode)->check(CLI::IsMember({"congruence", "solver"}));
    density_cmd->add_option("--bound", density_bound, "solver exponent bound");
    density_cmd->add_option("--dcap", d_cap, "run the solver only for d <= dcap");
    density_cmd->add_option("--csv", csv_path, "write per-d CSV rows to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (field_cmd->parsed()) return cmd_field(d, as_json);
        if (sunit_cmd->parsed()) {
            std::optional<ElemArgs> coeffs;
            if (have_A || have_B || have_C) coeffs = elems;
            return cmd_sunit(d, bound, height, coeffs, as_json);
        }
        if (check_cmd->parsed()) return cmd_check(d, elems, bound, height, target, as_json);
        if (frey_cmd->parsed()) return cmd_frey(d, elems, p, as_json);
        if (density_cmd->parsed())
            return cmd_density(x, mode, density_bound, d_cap, csv_path, as_json);
    } catch (const fermat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
