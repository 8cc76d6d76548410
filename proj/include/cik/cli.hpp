#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace cik::cli {

struct IndexRange {
    int lo = 0;
    int hi = 0;
};

/// Parses "a..b" or a single "a"; nullopt on malformed input or lo > hi.
std::optional<IndexRange> parse_range(const std::string& text);

// Exit codes shared by every subcommand: 0 pass, 1 verification failure,
// 2 usage or I/O error.

struct TableOptions {
    std::string kind;  // G | gamma | C
    IndexRange j;
    IndexRange k;
    std::string format = "pretty";  // csv | json | pretty
    bool golden = false;
    std::string method = "bernoulli_form";
};
int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string suite = "all";  // routes | bell | hessenberg | series | all
    int j_max = -1;             // -1 = suite default
    int k_max = -1;
};
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct ScanOptions {
    std::string kind;  // gamma | C
    int j_max = 1;
    int k_max = 1;
    int jobs = 1;
    std::string out_file;  // empty = stdout
};
int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

struct EvalOptions {
    std::string target;  // G | f | bound
    int j = 1;
    int k = 0;
    double v = 0.0;
    int terms = 5;
};
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace cik::cli
