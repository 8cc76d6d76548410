#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// One emitted value. value_exact is the canonical "p/q" rendering; the float
/// column is derived from it on output (nearest double, 17 significant
/// digits), so re-emitting a parsed table is byte-identical.
struct OutputRecord {
    std::string quantity;  // G | gamma | C | f_coeff | bernoulli | det
    int j = 0;
    int k = 0;
    Rational value;
    std::string method;
};

/// Nearest double of r rendered with 17 significant digits ("%.17g").
std::string float_17g(const Rational& r);

extern const char kCsvHeader[];  // "quantity,j,k,value_exact,value_float,method"

void write_csv(std::ostream& os, std::span<const OutputRecord> records);

/// Parses CSV produced by write_csv (header required). Throws
/// std::invalid_argument on malformed input.
std::vector<OutputRecord> parse_csv(std::string_view text);

void write_json(std::ostream& os, std::span<const OutputRecord> records);

/// Reference tables of known values, embedded as golden fixtures.
struct GoldenTable {
    int j_lo, j_hi, k_lo, k_hi;
    std::vector<Rational> cells;  // row-major

    const Rational& at(int j, int k) const;
    bool contains(int j_lo_q, int j_hi_q, int k_lo_q, int k_hi_q) const;
};

const GoldenTable& golden_G();      // G_j^(k)(0), 1 <= j <= 9, 0 <= k <= 9
const GoldenTable& golden_gamma();  // gamma(j,k), 1 <= j <= 9, 0 <= k <= 7
const GoldenTable& golden_C();      // C(j,k),     1 <= j <= 8, 0 <= k <= 9

}  // namespace cik
