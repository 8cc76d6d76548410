#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "cik/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"cik: exact tables, cross-verification and numeric evaluation of "
                 "G_j(v) = v^j/(1-e^{-v}) and the Clark-Ismail conjecture coefficients"};
    app.require_subcommand(1);

    cik::cli::TableOptions table;
    std::string table_j = "1..9", table_k = "0..9";
    auto* t = app.add_subcommand("table", "emit a table of G_j^(k)(0), gamma(j,k) or C(j,k)");
    t->add_option("kind", table.kind, "G | gamma | C")->required();
    t->add_option("--j", table_j, "j range, e.g. 1..9");
    t->add_option("--k", table_k, "k range, e.g. 0..9");
    t->add_option("--format", table.format, "csv | json | pretty (default pretty)");
    t->add_flag("--golden", table.golden, "diff against the embedded reference tables");
    t->add_option("--method", table.method,
                  "producing formula: stirling_sum | closed_form | bernoulli_form | "
                  "determinantal | recursion | series_oracle (default bernoulli_form)");

    cik::cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "run the cross-verification suites");
    v->add_option("suite", verify.suite, "routes | bell | hessenberg | series | all")->required();
    v->add_option("--jmax", verify.j_max, "override suite j bound");
    v->add_option("--kmax", verify.k_max, "override suite k bound");

    cik::cli::ScanOptions scan;
    auto* s = app.add_subcommand("scan", "scan gamma(j,k) or C(j,k) for negative cells");
    s->add_option("kind", scan.kind, "gamma | C")->required();
    s->add_option("--jmax", scan.j_max, "largest j")->required();
    s->add_option("--kmax", scan.k_max, "largest k")->required();
    s->add_option("--jobs", scan.jobs, "worker threads (default 1)");
    s->add_option("--out", scan.out_file, "write the CSV report to FILE");

    cik::cli::EvalOptions eval;
    auto* e = app.add_subcommand("eval", "numeric evaluation away from v = 0");
    e->add_option("target", eval.target, "G | f | bound")->required();
    e->add_option("--j", eval.j, "j >= 1")->required();
    e->add_option("--k", eval.k, "derivative order (target G)");
    e->add_option("--v", eval.v, "evaluation point (v != 0)")->required();
    e->add_option("--terms", eval.terms, "series stages for target bound (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;  // usage errors are exit 2
    }

    try {
        if (t->parsed()) {
            auto jr = cik::cli::parse_range(table_j);
            auto kr = cik::cli::parse_range(table_k);
            if (!jr || !kr) {
                std::cerr << "table: ranges must look like 1..9 (got --j " << table_j << " --k "
                          << table_k << ")\n";
                return 2;
            }
            table.j = *jr;
            table.k = *kr;
            return cik::cli::cmd_table(table, std::cout, std::cerr);
        }
        if (v->parsed()) return cik::cli::cmd_verify(verify, std::cout, std::cerr);
        if (s->parsed()) return cik::cli::cmd_scan(scan, std::cout, std::cerr);
        if (e->parsed()) return cik::cli::cmd_eval(eval, std::cout, std::cerr);
    } catch (const std::exception& ex) {
        std::cerr << "cik: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
