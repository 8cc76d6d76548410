#include "cik/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <vector>

#include "cik/clark_ismail.hpp"
#include "cik/combinatorics.hpp"
#include "cik/records.hpp"
#include "cik/verify.hpp"

namespace cik::cli {

namespace {

std::string fmt_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::optional<Method> method_from_string(const std::string& s) {
    for (Method m : {Method::stirling_sum, Method::closed_form, Method::bernoulli_form,
                     Method::determinantal, Method::recursion, Method::series_oracle})
        if (method_name(m) == s) return m;
    return std::nullopt;
}

void write_pretty(std::ostream& out, const std::string& kind, const TableOptions& opt,
                  const std::vector<std::vector<Rational>>& rows) {
    const int kw = opt.k.hi - opt.k.lo + 1;
    std::vector<size_t> width(kw, 0);
    for (int c = 0; c < kw; ++c) {
        width[c] = ("k=" + std::to_string(opt.k.lo + c)).size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].str().size());
    }
    size_t label_w = ("j=" + std::to_string(opt.j.hi)).size();

    out << kind << " table, j=" << opt.j.lo << ".." << opt.j.hi << ", k=" << opt.k.lo << ".."
        << opt.k.hi << "\n";
    out << std::string(label_w, ' ');
    for (int c = 0; c < kw; ++c)
        out << "  " << std::setw(static_cast<int>(width[c])) << ("k=" + std::to_string(opt.k.lo + c));
    out << '\n';
    for (size_t r = 0; r < rows.size(); ++r) {
        out << std::setw(static_cast<int>(label_w)) << ("j=" + std::to_string(opt.j.lo + static_cast<int>(r)));
        for (int c = 0; c < kw; ++c)
            out << "  " << std::setw(static_cast<int>(width[c])) << rows[r][c].str();
        out << '\n';
    }
}

}  // namespace

std::optional<IndexRange> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(text, &used);
            if (used != text.size()) return std::nullopt;
            return IndexRange{v, v};
        }
        int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) return std::nullopt;
        std::string hi_text = text.substr(dots + 2);
        int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) return std::nullopt;
        if (lo > hi) return std::nullopt;
        return IndexRange{lo, hi};
    } catch (...) {
        return std::nullopt;
    }
}

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.kind != "G" && opt.kind != "gamma" && opt.kind != "C") {
        err << "table: kind must be G, gamma or C\n";
        return 2;
    }
    if (opt.j.lo < 1 || opt.j.hi < opt.j.lo || opt.k.lo < 0 || opt.k.hi < opt.k.lo) {
        err << "table: invalid range (need j >= 1, k >= 0, lo <= hi)\n";
        return 2;
    }
    auto method = method_from_string(opt.method);
    if (!method) {
        err << "table: unknown method \"" << opt.method << "\"\n";
        return 2;
    }
    if (opt.kind != "G" && *method != Method::stirling_sum && *method != Method::bernoulli_form &&
        *method != Method::series_oracle) {
        err << "table: " << opt.kind << " supports stirling_sum, bernoulli_form, series_oracle\n";
        return 2;
    }
    if (opt.format != "csv" && opt.format != "json" && opt.format != "pretty") {
        err << "table: format must be csv, json or pretty\n";
        return 2;
    }

    const GoldenTable* golden = nullptr;
    if (opt.golden) {
        golden = (opt.kind == "G") ? &golden_G() : (opt.kind == "gamma") ? &golden_gamma()
                                                                         : &golden_C();
        if (!golden->contains(opt.j.lo, opt.j.hi, opt.k.lo, opt.k.hi)) {
            err << "table: --golden covers j=" << golden->j_lo << ".." << golden->j_hi
                << ", k=" << golden->k_lo << ".." << golden->k_hi << " only\n";
            return 2;
        }
    }

    std::vector<std::vector<Rational>> rows;
    for (int j = opt.j.lo; j <= opt.j.hi; ++j) {
        if (opt.kind == "G") {
            std::vector<Rational> row;
            for (int k = opt.k.lo; k <= opt.k.hi; ++k) row.push_back(G_value(j, k, *method));
            rows.push_back(std::move(row));
        } else {
            auto full = (opt.kind == "gamma") ? gamma_row(j, opt.k.hi, *method)
                                              : frak_C_row(j, opt.k.hi, *method);
            rows.emplace_back(full.begin() + opt.k.lo, full.end());
        }
    }

    int mismatches = 0;
    if (golden) {
        for (int j = opt.j.lo; j <= opt.j.hi; ++j)
            for (int k = opt.k.lo; k <= opt.k.hi; ++k) {
                const Rational& got = rows[j - opt.j.lo][k - opt.k.lo];
                const Rational& want = golden->at(j, k);
                if (got != want) {
                    ++mismatches;
                    err << "golden mismatch at (j=" << j << ", k=" << k << "): computed "
                        << got.str() << ", table says " << want.str() << '\n';
                }
            }
    }

    if (opt.format == "pretty") {
        write_pretty(out, opt.kind, opt, rows);
    } else {
        std::vector<OutputRecord> records;
        for (int j = opt.j.lo; j <= opt.j.hi; ++j)
            for (int k = opt.k.lo; k <= opt.k.hi; ++k)
                records.push_back({opt.kind, j, k, rows[j - opt.j.lo][k - opt.k.lo], opt.method});
        if (opt.format == "csv")
            write_csv(out, records);
        else
            write_json(out, records);
    }

    if (golden) {
        if (mismatches > 0) {
            err << "golden: " << mismatches << " mismatching cell(s)\n";
            return 1;
        }
        err << "golden: all " << (opt.j.hi - opt.j.lo + 1) * (opt.k.hi - opt.k.lo + 1)
            << " cells match\n";
    }
    return 0;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    const bool all = opt.suite == "all";
    if (!all && opt.suite != "routes" && opt.suite != "bell" && opt.suite != "hessenberg" &&
        opt.suite != "series") {
        err << "verify: suite must be routes, bell, hessenberg, series or all\n";
        return 2;
    }

    auto bounds_for = [&](const std::string& suite) {
        VerifyBounds b;
        if (suite == "hessenberg") b.j_max = 30;
        if (opt.j_max >= 0) b.j_max = opt.j_max;
        if (opt.k_max >= 0) b.k_max = opt.k_max;
        return b;
    };

    std::vector<SuiteResult> results;
    auto run = [&](const std::string& suite) {
        VerifyBounds b = bounds_for(suite);
        if (suite == "routes") results.push_back(verify_routes(b));
        else if (suite == "bell") results.push_back(verify_bell(b));
        else if (suite == "hessenberg") results.push_back(verify_hessenberg(b));
        else results.push_back(verify_series(b));
    };
    if (all) {
        for (const char* s : {"routes", "bell", "hessenberg", "series"}) run(s);
    } else {
        run(opt.suite);
    }

    bool ok = true;
    for (const auto& suite : results) {
        out << "suite " << suite.name << ": " << suite.checks << " checks, "
            << suite.failures.size() << " failures\n";
        for (const auto& f : suite.failures)
            out << "  FAIL " << f.route << " (j=" << f.j << ", k=" << f.k << "): lhs=" << f.lhs
                << " rhs=" << f.rhs << '\n';
        ok = ok && suite.ok();
    }
    return ok ? 0 : 1;
}

int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.kind != "gamma" && opt.kind != "C") {
        err << "scan: kind must be gamma or C\n";
        return 2;
    }
    if (opt.j_max < 1 || opt.k_max < 1 || opt.jobs < 1) {
        err << "scan: bounds and --jobs must be >= 1\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.out_file.empty()) {
        file.open(opt.out_file);
        if (!file) {
            err << "scan: cannot open \"" << opt.out_file << "\" for writing\n";
            return 2;
        }
        sink = &file;
    }

    ScanKind kind = (opt.kind == "gamma") ? ScanKind::gamma : ScanKind::frak_C;
    ScanReport rep = scan_nonnegativity(kind, opt.j_max, opt.k_max, opt.jobs);

    std::vector<OutputRecord> records;
    for (const auto& neg : rep.negatives)
        records.push_back({opt.kind, neg.j, neg.k, neg.value, "bernoulli_form"});
    write_csv(*sink, records);
    *sink << "scanned " << rep.cells_scanned << " cells, " << rep.negatives.size()
          << " negative\n";
    if (!opt.out_file.empty() && !file) {
        err << "scan: write to \"" << opt.out_file << "\" failed\n";
        return 2;
    }
    return 0;
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.target != "G" && opt.target != "f" && opt.target != "bound") {
        err << "eval: target must be G, f or bound\n";
        return 2;
    }
    if (opt.j < 1 || opt.k < 0 || opt.terms < 1) {
        err << "eval: need j >= 1, k >= 0, terms >= 1\n";
        return 2;
    }
    if (opt.v == 0.0) {
        err << "eval: v = 0 is the exact regime; use `table` for exact at-zero values\n";
        return 2;
    }

    try {
        if (opt.target == "G") {
            out << fmt_double(G_eval_numeric({opt.v, opt.j, opt.k})) << '\n';
        } else if (opt.target == "f") {
            out << fmt_double(f_eval_numeric(opt.j, opt.v)) << '\n';
        } else {
            if (opt.v <= 0) {
                err << "eval bound: need v > 0\n";
                return 2;
            }
            double bound = f_lower_bound_series(opt.j, opt.v, opt.terms);
            double value = f_eval_numeric(opt.j, opt.v) / factorial(opt.j).get_d();
            out << "lower_bound(f_j/j!) = " << fmt_double(bound) << '\n';
            out << "f_j(v)/j!          = " << fmt_double(value) << '\n';
        }
    } catch (const std::exception& e) {
        err << "eval: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace cik::cli
