// Command-line front end: exact tables of the generating polynomials, the
// cross-validation harness, and ASCII renderings of the combinatorial
// objects. All output is deterministic UTF-8 text.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 enumeration limit exceeded.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pignose/ansatz.hpp"
#include "pignose/errors.hpp"
#include "pignose/genfun.hpp"
#include "pignose/matching.hpp"
#include "pignose/paths.hpp"
#include "pignose/render.hpp"
#include "pignose/tableaux.hpp"
#include "pignose/verify.hpp"

namespace {

using namespace pignose;

struct TableArgs {
    std::string kind;
    int n = 0;
    std::string format = "csv";
    int limit = kDefaultEnumLimit;
};

struct VerifyArgs {
    std::string name = "all";
    int max_n = -1;  // -1: suite defaults (5 polynomial, 7 integer)
    int jobs = 1;
    int limit = kDefaultEnumLimit;
};

struct RenderArgs {
    std::string kind;
    std::string inline_input;
    std::string input_file;
};

struct SeriesArgs {
    int order = 5;
    int t_val = 0;
    int q_val = 0;
    bool has_t = false;
    bool has_q = false;
};

int run_table(const TableArgs& args) {
    struct Row {
        int n, k;
        MultiPoly poly;
    };
    std::vector<Row> rows;
    if (args.kind == "bnk") {
        GenTable table = gen_table(args.n, args.limit);
        if (args.n == 0)
            rows.push_back({0, 0, table.b_k[0]});
        else
            for (int k = 1; k <= 2 * args.n; ++k)
                rows.push_back({args.n, k, table.b_k[static_cast<std::size_t>(k)]});
    } else if (args.kind == "bstar") {
        GenTable table = gen_table(args.n, args.limit);
        for (int k = 1; k <= 2 * args.n; ++k)
            rows.push_back({args.n, k, table.b_star[static_cast<std::size_t>(k)]});
    } else if (args.kind == "eulerian-b") {
        for (int k = 0; k <= args.n; ++k)
            rows.push_back({args.n, k, eulerian_b_poly(args.n, k, args.limit)});
    } else if (args.kind == "eulerian-a") {
        for (int k = 1; k <= args.n; ++k)
            rows.push_back({args.n, k, e_poly_type_a(args.n, k, args.limit)});
    } else {
        std::cerr << "unknown table kind: " << args.kind << "\n";
        return 2;
    }
    if (args.format == "csv") {
        for (const Row& r : rows)
            std::cout << r.n << ',' << r.k << ',' << r.poly.str_compact() << "\n";
    } else if (args.format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "\n  {\"n\":" << rows[i].n << ",\"k\":" << rows[i].k
                      << ",\"poly\":" << rows[i].poly.json_str() << "}";
        }
        std::cout << "\n]\n";
    } else {
        std::cerr << "unknown format: " << args.format << "\n";
        return 2;
    }
    return 0;
}

int run_verify(const VerifyArgs& args) {
    VerifyOptions opts;
    if (args.max_n >= 0) {
        opts.max_n_poly = args.max_n;
        opts.max_n_int = args.max_n + 2;
    }
    if (args.max_n > 5)
        std::cerr << "warning: exhaustive suites at n=" << opts.max_n_int << " visit "
                  << "2^n n! objects per check; expect minutes, not seconds\n";
    opts.limit = std::max(args.limit, std::max(opts.max_n_poly, opts.max_n_int) + 1);
    if (opts.limit > args.limit)
        std::cerr << "note: enumeration limit raised to " << opts.limit
                  << " to cover the requested ranges\n";

    std::vector<std::string> names;
    if (args.name == "all") {
        names = verify_check_names();
    } else {
        const auto& known = verify_check_names();
        if (std::find(known.begin(), known.end(), args.name) == known.end()) {
            std::cerr << "unknown check: " << args.name << "\n";
            return 2;
        }
        names.push_back(args.name);
    }

    bool all_pass = true;
    auto stream = [&](const VerifyReport& r) {
        std::printf("[%s] %-12s (%s) %.3fs\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.range.c_str(), r.seconds);
        if (!r.pass) std::printf("  counterexample: %s\n", r.counterexample.c_str());
        std::fflush(stdout);
    };
    std::vector<VerifyReport> reports = run_checks(names, opts, args.jobs, stream);
    double total = 0;
    int passed = 0;
    for (const VerifyReport& r : reports) {
        total += r.seconds;
        if (r.pass) ++passed;
        all_pass = all_pass && r.pass;
    }
    if (args.jobs > 1) {
        // The stream above is ordered by completion; recap in name order.
        std::printf("results by name:");
        for (const VerifyReport& r : reports)
            std::printf(" %s=%s", r.name.c_str(), r.pass ? "pass" : "FAIL");
        std::printf("\n");
    }
    std::printf("summary: %d/%zu checks passed, %.3fs total\n", passed, reports.size(), total);
    return all_pass ? 0 : 1;
}

std::string load_input(const RenderArgs& args) {
    if (!args.input_file.empty()) {
        std::ifstream in(args.input_file);
        if (!in) throw Error("cannot open " + args.input_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        if (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
    }
    return args.inline_input;
}

int run_render(const RenderArgs& args) {
    std::string input = load_input(args);
    if (args.kind == "tableau") {
        // Inline tableaux may use ';' as a line separator.
        for (char& ch : input)
            if (ch == ';') ch = '\n';
        BorderShape shape = BorderShape::parse(input.substr(0, input.find('\n')));
        std::size_t lines = 1;
        for (char ch : input)
            if (ch == '\n') ++lines;
        bool type_b = lines >= 1 + static_cast<std::size_t>(shape.cols() + shape.rows()) &&
                      shape.cols() > 0;
        if (type_b)
            std::cout << render_tableau(parse_tableau_b(input)) << "\n";
        else
            std::cout << render_tableau(parse_tableau(input)) << "\n";
    } else if (args.kind == "pignose") {
        std::cout << render_pignose(SignedPerm::parse(input)) << "\n";
    } else if (args.kind == "full-pignose") {
        std::cout << render_full_pignose(SignedPerm::parse(input)) << "\n";
    } else if (args.kind == "matching") {
        std::cout << render_matching(OrderedMatching::parse(input)) << "\n";
    } else if (args.kind == "path") {
        if (!input.empty() && input[0] == '@')
            std::cout << render_path(MotzkinSuffix::parse(input)) << "\n";
        else
            std::cout << render_path(LabeledMotzkinPath::parse(input)) << "\n";
    } else {
        std::cerr << "unknown render kind: " << args.kind << "\n";
        return 2;
    }
    return 0;
}

int run_series(const SeriesArgs& args) {
    Series s = cf_series(args.order);
    for (int n = 0; n <= args.order; ++n) {
        MultiPoly c = s[n];
        if (args.has_t) c = eval_subst(c, std::nullopt, args.t_val);
        if (args.has_q) c = eval_subst(c, std::nullopt, std::nullopt, args.q_val);
        std::cout << "z^" << n << ": " << c.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables, cross-validation, and ASCII drawings for signed\n"
                 "permutation statistics, type B permutation tableaux, matchings,\n"
                 "labeled Motzkin paths, and their generating polynomials"};
    app.require_subcommand(1);

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "emit a table of generating polynomials");
    table->add_option("kind", table_args.kind, "bnk | bstar | eulerian-b | eulerian-a")
        ->required();
    table->add_option("--n", table_args.n, "size n")
        ->required()
        ->check(CLI::NonNegativeNumber)
        ->envname("PIGNOSE_N");
    table->add_option("--format", table_args.format, "csv | json")->envname("PIGNOSE_FORMAT");
    table->add_option("--limit", table_args.limit, "enumeration size limit")
        ->envname("PIGNOSE_LIMIT");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("name", verify_args.name,
                       "all | zigzag | symmetry | cro-al | ansatz | recurrence | cfrac | paths | "
                       "fv1 | fz1 | bndes | formula | lagrange | schroeder | narayana | binomial "
                       "| distribution");
    verify->add_option("--max-n,--n", verify_args.max_n,
                       "exhaustive bound for polynomial suites (integer suites use +2); "
                       "default 5/7")
        ->envname("PIGNOSE_MAX_N");
    verify->add_option("--jobs", verify_args.jobs, "run checks on this many threads")
        ->envname("PIGNOSE_JOBS");
    verify->add_option("--limit", verify_args.limit, "enumeration size limit")
        ->envname("PIGNOSE_LIMIT");

    RenderArgs render_args;
    CLI::App* render = app.add_subcommand("render", "draw an object as ASCII art");
    render->add_option("kind", render_args.kind, "tableau | pignose | full-pignose | matching | path")
        ->required();
    render->add_option("object", render_args.inline_input, "inline object text");
    render->add_option("--input", render_args.input_file, "read the object from a file");

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "continued-fraction series coefficients");
    series->add_option("--order", series_args.order, "truncation order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* topt = series->add_option("--t", series_args.t_val, "substitute an integer for t");
    auto* qopt = series->add_option("--q", series_args.q_val, "substitute an integer for q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    series_args.has_t = topt->count() > 0;
    series_args.has_q = qopt->count() > 0;

    try {
        if (table->parsed()) return run_table(table_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (render->parsed()) return run_render(render_args);
        if (series->parsed()) return run_series(series_args);
    } catch (const LimitExceededError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
