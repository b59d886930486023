// Command-line front end: exact construction and verification of the type D
// reconstruction algebra and the chart-by-chart minimal resolution of
// C^2/D(n,q).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "recond/emit.hpp"
#include "recond/verify.hpp"

using namespace recond;

namespace {

struct Options {
    long n = 0, q = 0;
    std::string presentation = "moduli";
    std::string basis = "w";
    std::string format = "text";
    int max_degree = -1;
    long n_max = 0;
    std::string suite = "all";
};

Presentation parse_presentation(const std::string& s) {
    if (s == "moduli") return Presentation::Moduli;
    return Presentation::Symmetric;
}

Basis parse_basis(const std::string& s) { return s == "w" ? Basis::W : Basis::V; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    if (opt.format == "json")
        print_json(info_json(gd));
    else
        std::cout << info_text(gd);
    return 0;
}

int cmd_invariants(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    Basis basis = parse_basis(opt.basis);
    if (opt.format == "json")
        print_json(invariants_json(gd, basis));
    else
        std::cout << invariants_text(gd, basis);
    return 0;
}

int cmd_specials(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    Basis basis = parse_basis(opt.basis);
    if (opt.format == "json")
        print_json(specials_json(gd, basis));
    else
        std::cout << specials_text(gd, basis);
    return 0;
}

int cmd_quiver(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    auto qv = build_quiver(gd);
    if (opt.format == "dot")
        std::cout << quiver_dot(qv);
    else if (opt.format == "json")
        print_json(quiver_json(qv));
    else
        std::cout << quiver_text(qv);
    return 0;
}

int cmd_relations(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    Presentation pres = parse_presentation(opt.presentation);
    if (opt.format == "json")
        print_json(relations_json(gd, pres));
    else
        std::cout << relations_text(gd, pres);
    return 0;
}

int cmd_labels(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    Presentation pres = parse_presentation(opt.presentation);
    if (opt.format == "dot") {
        auto lq = label_arrows(gd, pres);
        std::cout << quiver_dot(lq.quiver, &lq);
    } else if (opt.format == "json") {
        print_json(labels_json(gd, pres));
    } else {
        std::cout << labels_text(gd, pres);
    }
    return 0;
}

int cmd_charts(const Options& opt) {
    auto gd = build_group_data(opt.n, opt.q);
    if (opt.format == "json")
        print_json(charts_json(gd));
    else
        std::cout << charts_text(gd);
    return 0;
}

int cmd_verify(const Options& opt) {
    auto rep = run_suite(opt.suite, opt.n, opt.q, opt.max_degree);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name
                  << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
    return rep.pass() ? 0 : 1;
}

int cmd_sweep(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    auto lines = run_sweep(opt.suite, opt.n_max, opt.max_degree);
    long failures = 0;
    for (const auto& line : lines) {
        if (!line.pass) ++failures;
        std::cout << (line.pass ? "[ok]   " : "[FAIL] ") << "(" << line.n << "," << line.q << ")"
                  << (line.detail.empty() ? "" : "  -- " + line.detail) << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " suite=" << opt.suite
              << " pairs=" << lines.size() << " failures=" << failures << " (" << ms << " ms)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reconstruction algebras of type D: exact construction and verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_nq = [&opt](CLI::App* cmd) {
        cmd->add_option("n", opt.n, "n of D(n,q)")->required();
        cmd->add_option("q", opt.q, "q of D(n,q)")->required();
    };
    auto add_format = [&opt](CLI::App* cmd, bool with_dot) {
        auto* o = cmd->add_option("--format", opt.format, "output format");
        o->check(CLI::IsMember(with_dot ? std::vector<std::string>{"text", "json", "dot"}
                                        : std::vector<std::string>{"text", "json"}));
    };

    auto* info = app.add_subcommand("info", "group data, series, dual graph");
    add_nq(info);
    add_format(info, false);

    auto* invariants = app.add_subcommand("invariants", "invariant ring generators");
    add_nq(invariants);
    invariants->add_option("--basis", opt.basis, "w or v")->check(CLI::IsMember({"w", "v"}));
    add_format(invariants, false);

    auto* specials = app.add_subcommand("specials", "special CM module generator table");
    add_nq(specials);
    specials->add_option("--basis", opt.basis, "w or v")->check(CLI::IsMember({"w", "v"}));
    add_format(specials, false);

    auto* quiver = app.add_subcommand("quiver", "the doubled-up quiver with k-arrows");
    add_nq(quiver);
    add_format(quiver, true);

    auto* relations = app.add_subcommand("relations", "defining relations");
    add_nq(relations);
    relations->add_option("--presentation", opt.presentation, "moduli or symmetric")
        ->check(CLI::IsMember({"moduli", "symmetric"}));
    add_format(relations, false);

    auto* labels = app.add_subcommand("labels", "polynomial arrow labels");
    add_nq(labels);
    labels->add_option("--presentation", opt.presentation, "moduli or symmetric")
        ->check(CLI::IsMember({"moduli", "symmetric"}));
    add_format(labels, true);

    auto* charts_cmd = app.add_subcommand("charts", "resolution charts, ratios and glues");
    add_nq(charts_cmd);
    add_format(charts_cmd, false);

    auto* verify = app.add_subcommand("verify", "run a verification suite on one group");
    add_nq(verify);
    verify->add_option("--suite", opt.suite, "all|series|invariants|specials|relations|charts")
        ->check(CLI::IsMember({"all", "series", "invariants", "specials", "relations", "charts"}));
    verify->add_option("--max-degree", opt.max_degree, "degree bound override");

    auto* sweep = app.add_subcommand("sweep", "run a suite over all (n,q) up to --n-max");
    sweep->add_option("--n-max", opt.n_max, "upper bound for n")->required();
    sweep->add_option("--suite", opt.suite, "all|series|invariants|specials|relations|charts")
        ->check(CLI::IsMember({"all", "series", "invariants", "specials", "relations", "charts"}));
    sweep->add_option("--max-degree", opt.max_degree, "degree bound override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_info(opt);
        if (invariants->parsed()) return cmd_invariants(opt);
        if (specials->parsed()) return cmd_specials(opt);
        if (quiver->parsed()) return cmd_quiver(opt);
        if (relations->parsed()) return cmd_relations(opt);
        if (labels->parsed()) return cmd_labels(opt);
        if (charts_cmd->parsed()) return cmd_charts(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
