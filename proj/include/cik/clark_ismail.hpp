#pragma once

#include <string>
#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// Formula family that produced a value.
enum class Method {
    stirling_sum,
    closed_form,
    bernoulli_form,
    determinantal,
    recursion,
    series_oracle,
};

std::string method_name(Method m);

/// Evaluation argument for the numeric routes. v = 0 is reserved for the
/// exact routes.
struct EvalPoint {
    double v = 0.0;
    int j = 1;
    int k = 0;
};

/// (j,k)-indexed grid of exact values, each cell recording the formula that
/// produced it.
class CoefficientTable {
public:
    struct Cell {
        Rational value;
        Method method = Method::bernoulli_form;
    };

    CoefficientTable(int j_lo, int j_hi, int k_lo, int k_hi);

    int j_lo() const { return j_lo_; }
    int j_hi() const { return j_hi_; }
    int k_lo() const { return k_lo_; }
    int k_hi() const { return k_hi_; }

    void set(int j, int k, Rational value, Method m);
    const Cell& at(int j, int k) const;

    struct Mismatch {
        int j, k;
        Rational lhs, rhs;
    };
    /// Cell-wise comparison of two tables over the same ranges.
    static std::vector<Mismatch> compare(const CoefficientTable& a, const CoefficientTable& b);

private:
    int index(int j, int k) const;
    int j_lo_, j_hi_, k_lo_, k_hi_;
    std::vector<Cell> cells_;
};

// ---- G_j^(k)(0) by five independent routes -------------------------------
// Every route returns exactly 0 for k < j-1.

/// Alternating Stirling sum (the power-series theorem).
Rational G_value_stirling(int j, int k);

/// The closed form in powers of v/(1-e^{-v}), evaluated as an exact truncated
/// power series in v and read off at the constant term.
Rational G_value_closed_form(int j, int k);

/// k! (-1)^{k-j+1} B_{k-j+1}/(k-j+1)!.
Rational G_value_bernoulli(int j, int k);

/// Bordered Hessenberg determinant of F_1 derivative values at 0.
Rational G_value_determinantal(int j, int k);

/// The recursion G_j^(k) = (1/F_1)[<j-1>_k v^{j-k-1} - sum C(k,r) F_1^(k-r) G_j^(r)]
/// specialized at 0.
Rational G_value_recursive(int j, int k);

Rational G_value(int j, int k, Method m);

// ---- Maclaurin data of f_j = G_j^{(j)} -----------------------------------

/// Coefficient of v^i in f_j, by both the Stirling-sum formula and the
/// Bernoulli form; the two must agree (std::logic_error otherwise).
Rational f_maclaurin_coeff(int j, int i);

/// f_j^{(m)}(0): j!/2 for m = 0; (m+j)! B_{m+1}/(m+1)! for odd m; 0 for even
/// m >= 2.
Rational f_derivative_at_zero(int j, int m);

// ---- gamma(j,k) and C(j,k) -----------------------------------------------

Rational gamma_coeff_stirling(int j, int k);
Rational gamma_coeff_bernoulli(int j, int k);
/// Both routes, asserted equal.
Rational gamma_coeff(int j, int k);

/// Row gamma(j, 0..k_max) by one route; shares the memoized inner sums across
/// the row, which is what makes the scans cheap.
std::vector<Rational> gamma_row(int j, int k_max, Method m);

Rational frak_C_coeff_stirling(int j, int k);
Rational frak_C_coeff_bernoulli(int j, int k);
/// Both routes, asserted equal.
Rational frak_C_coeff(int j, int k);

std::vector<Rational> frak_C_row(int j, int k_max, Method m);

// ---- numeric evaluation ----------------------------------------------------

/// Floating evaluation of G_j^(k)(v) by the closed form in powers of
/// v/(1-e^{-v}); |v| < 1e-3 is redirected to a 30-term Maclaurin sum. v = 0
/// throws std::invalid_argument (use the exact routes).
double G_eval_numeric(const EvalPoint& p);

/// f_j(v) = G_j^(j)(v), numerically.
double f_eval_numeric(int j, double v);

/// Partial sum (`terms` stages of each split series) of the lower-bound series
/// for f_j(v)/j! obtained from the two-sided Bernoulli inequality with
/// alpha = 0 and beta = 2 + ln(1-6/pi^2)/ln 2.
double f_lower_bound_series(int j, double v, int terms);

/// The constant beta = 2 + ln(1-6/pi^2)/ln 2 = 0.6491...
double bernoulli_bound_beta();

// ---- property reports ------------------------------------------------------

struct LogConvexityReport {
    int j = 0;
    int k_max = 0;
    bool extended_first_step = false;   // |f_j'(0)|^2 <= |f_j(0)| |f_j'''(0)|
    std::vector<int> interior_failures; // k with |f^(2k-1)|^2 > |f^(2k-3)| |f^(2k+1)|
    bool interior_all_pass() const { return interior_failures.empty(); }
};

/// Exact-rational log-convexity check of |f_j^(2k-1)(0)| for 2 <= k <= k_max,
/// plus the extended first step.
LogConvexityReport log_convexity_report(int j, int k_max);

enum class ScanKind { gamma, frak_C };

struct ScanReport {
    ScanKind kind = ScanKind::gamma;
    int j_max = 0;
    int k_max = 0;
    long cells_scanned = 0;
    struct NegativeCell {
        int j, k;
        Rational value;
    };
    std::vector<NegativeCell> negatives;  // row-major order
};

/// Computes every cell in 1..j_max x 0..k_max by the Bernoulli-form route and
/// reports any negative ones. Makes no assertion; the report is the product.
/// With jobs > 1 rows are distributed across threads after prewarming the memo
/// tables; the report is identical regardless of jobs.
ScanReport scan_nonnegativity(ScanKind kind, int j_max, int k_max, int jobs = 1);

}  // namespace cik
