#include "cli.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stratadiv/chern.hpp"
#include "stratadiv/divisor_solver.hpp"
#include "stratadiv/errors.hpp"
#include "stratadiv/msd_enum.hpp"
#include "stratadiv/porteous.hpp"
#include "stratadiv/pushforward.hpp"
#include "stratadiv/rewrite.hpp"
#include "stratadiv/serialize.hpp"

namespace stratadiv::cli {

namespace {

std::string class_line(const DivisorClass& c) {
    std::ostringstream ss;
    ss << c.lambda << "*lambda";
    auto term = [&ss](const Rational& v, const char* name) {
        if (v < 0)
            ss << " - " << -v << "*" << name;
        else
            ss << " + " << v << "*" << name;
    };
    term(c.delta0, "delta0");
    term(c.delta1, "delta1");
    return ss.str();
}

void print_count_report(std::ostream& out, const CountReport& r) {
    for (const auto& e : r.entries)
        out << e.label << ": " << e.count << "  [" << e.citation << "]\n";
    out << "total: " << r.total << "\n";
}

int run_class(std::ostream& out, bool json) {
    const DivisorClass stack = full_stack_class();
    const DivisorClass coarse = coarse_class(stack);
    const DivisorClass hyp = hyperelliptic_component_class();
    const NonHyperellipticReport nonhyp = nonhyperelliptic_sum();
    if (json) {
        nlohmann::json j{{"stack", to_json(stack)},
                         {"coarse", to_json(coarse)},
                         {"hyperelliptic", to_json(hyp)},
                         {"nonhyperelliptic", to_json(nonhyp)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "stack:  " << class_line(stack)
        << "  [degeneracy locus + test curves A, C]\n";
    out << "coarse: " << class_line(coarse) << "  [stack-to-coarse conversion]\n";
    out << "hyperelliptic component: " << class_line(hyp)
        << "  [56 * hyperelliptic divisor class]\n";
    out << "non-hyperelliptic sum (computed): " << class_line(nonhyp.computed)
        << "  [subtraction]\n";
    out << "non-hyperelliptic sum (published): " << class_line(nonhyp.published)
        << "  [verbatim]\n";
    if (nonhyp.discrepancy)
        out << "note: computed and published delta1 coefficients disagree; "
               "both are reported.\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact divisor-class and boundary-counting calculator for "
                 "strata of meromorphic differentials"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* cmd_class = app.add_subcommand(
        "class", "Full divisor-class pipeline: stack and coarse classes");

    std::string bundle, signature;
    int chern_n = 2, chern_g = 3, chern_dmax = -1;
    auto* cmd_chern = app.add_subcommand("chern", "Chern class constructors");
    cmd_chern->add_option("--bundle", bundle, "En or F")->required()
        ->check(CLI::IsMember({"En", "F"}));
    cmd_chern->add_option("--n", chern_n, "pole order n for En");
    cmd_chern->add_option("--g", chern_g, "genus for En");
    cmd_chern->add_option("--dmax", chern_dmax, "truncation degree for En");
    cmd_chern->add_option("--signature", signature,
                          "zero/pole type \"a1,a2;-b1,-b2\" for F");

    std::string pf_expr;
    int pf_g = 3, pf_d = 2;
    auto* cmd_pf = app.add_subcommand(
        "pushforward", "Reduce an expression and forget its last marked point");
    cmd_pf->add_option("--expr", pf_expr, "expression in text form")->required();
    cmd_pf->add_option("--g", pf_g, "genus")->required();
    cmd_pf->add_option("--d", pf_d, "number of marked points")->required();

    std::string table_id;
    auto* cmd_count = app.add_subcommand("count", "Boundary counts of one table");
    cmd_count->add_option("--table", table_id, "4-22, 5-32 or 6-222")->required();

    auto* cmd_tables = app.add_subcommand("tables", "All shipped boundary tables");

    std::string family;
    std::int64_t degree_a = 0;
    auto* cmd_degree = app.add_subcommand("degree", "Closed-form cover degrees");
    cmd_degree->add_option("--family", family, "degree family")->required()
        ->check(CLI::IsMember({"g2-one-zero", "g1-second-kind", "g2-second-kind-622"}));
    cmd_degree->add_option("--a", degree_a, "pole order parameter a");

    int dim_g = 0, dim_n = 0;
    auto* cmd_dim = app.add_subcommand(
        "dim", "Dimension of the projection of the second-kind locus");
    cmd_dim->add_option("--g", dim_g, "genus")->required();
    cmd_dim->add_option("--n", dim_n, "number of zeros")->required();

    auto* cmd_report = app.add_subcommand(
        "report", "Stage-by-stage trace of the degeneracy-locus pipeline");

    for (auto* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const bool json = format == "json";
    try {
        if (cmd_class->parsed()) return run_class(out, json);

        if (cmd_chern->parsed()) {
            TautExpr e = TautExpr::zero({0, 0});
            if (bundle == "En") {
                const int dmax = chern_dmax >= 0 ? chern_dmax : 3 * chern_g - 3 + 1;
                e = chern_E(chern_n, chern_g, dmax);
            } else {
                if (signature.empty()) {
                    err << "usage error: --bundle F requires --signature\n";
                    return 2;
                }
                e = chern_F(Signature::parse(signature));
            }
            if (json)
                out << to_json(e).dump(2) << "\n";
            else
                out << to_text(e) << "\n";
            return 0;
        }

        if (cmd_pf->parsed()) {
            const TautExpr in = parse_expr(pf_expr, {pf_g, pf_d});
            const TautExpr result = pushforward_last(reduce(in), pf_g);
            if (json)
                out << to_json(result).dump(2) << "\n";
            else
                out << to_text(result) << "\n";
            return 0;
        }

        if (cmd_count->parsed()) {
            const CountReport r = table_total(shipped_table(table_id));
            if (json)
                out << to_json(r).dump(2) << "\n";
            else
                print_count_report(out, r);
            return 0;
        }

        if (cmd_tables->parsed()) {
            if (json) {
                nlohmann::json j = nlohmann::json::object();
                for (const char* id : {"4-22", "5-32", "6-222"})
                    j[id] = to_json(table_total(shipped_table(id)));
                out << j.dump(2) << "\n";
            } else {
                for (const char* id : {"4-22", "5-32", "6-222"}) {
                    out << "table " << id << "\n";
                    print_count_report(out, table_total(shipped_table(id)));
                }
            }
            return 0;
        }

        if (cmd_degree->parsed()) {
            if (family == "g2-second-kind-622") {
                const SecondKind622 r = degree_g2_second_kind_622();
                if (json) {
                    nlohmann::json j{{"d_a", r.d_a}, {"d_b", r.d_b},
                                     {"d_c", r.d_c}, {"total", r.total}};
                    out << j.dump(2) << "\n";
                } else {
                    out << "d_a: " << r.d_a << "  [3 pole choices * table 6-222]\n";
                    out << "d_b: " << r.d_b << "  [42 * 3 differentials]\n";
                    out << "d_c: " << r.d_c << "  [35 differentials * table 4-22]\n";
                    out << "total: " << r.total << "  [doubled for component swap]\n";
                }
                return 0;
            }
            if (!cmd_degree->count("--a")) {
                err << "usage error: --family " << family << " requires --a\n";
                return 2;
            }
            const std::int64_t v = family == "g2-one-zero"
                                       ? degree_g2_one_zero(degree_a)
                                       : degree_g1_second_kind(degree_a);
            if (json)
                out << nlohmann::json{{"degree", v}}.dump(2) << "\n";
            else
                out << v << "  [" << family << ", a=" << degree_a << "]\n";
            return 0;
        }

        if (cmd_dim->parsed()) {
            const std::int64_t v = dim_projection_second_kind(dim_g, dim_n);
            if (json)
                out << nlohmann::json{{"dim", v}}.dump(2) << "\n";
            else
                out << v << "  [second-kind projection, g=" << dim_g
                    << ", n=" << dim_n << "]\n";
            return 0;
        }

        if (cmd_report->parsed()) {
            const LambdaReport r = lambda_pipeline();
            if (json) {
                out << to_json(r).dump(2) << "\n";
            } else {
                for (const auto& [name, expr] : r.trace)
                    out << name << ": " << to_text(expr) << "\n";
                out << "raw: " << r.raw << "  [degeneracy-locus class]\n";
                out << "correction: " << r.correction << "  [diagonal locus]\n";
                out << "multiplicity: " << r.multiplicity << "  [prong number]\n";
                out << "interior: " << r.interior << "  [raw - 5 * correction]\n";
            }
            return 0;
        }
    } catch (const InputError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace stratadiv::cli
