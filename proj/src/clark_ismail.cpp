#include "cik/clark_ismail.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cik/combinatorics.hpp"
#include "cik/hessenberg.hpp"
#include "cik/series.hpp"

namespace cik {

namespace {

void require_jk(int j, int k, const char* who) {
    if (j < 1 || k < 0)
        throw std::invalid_argument(std::string(who) + ": need j >= 1 and k >= 0");
}

Rational sign_flip(const Rational& r, int parity) { return parity % 2 == 0 ? r : -r; }

// F_1^{(m)}(0) = (-1)^m/(m+1)
Rational f1_deriv_at_zero(int m) {
    Rational r(Integer(1), Integer(m + 1));
    return sign_flip(r, m);
}

// sum_{q=0}^{d} (-1)^q/(q+1) * S(d+q, q) / ((d-q)! (d+q)!), the kernel shared
// by the Stirling-sum routes (equals B_d / (d! (d+1)!)).
Rational stirling_kernel(int d) {
    Rational acc;
    for (int q = 0; q <= d; ++q) {
        Rational term(stirling2(d + q, q), Integer(q + 1) * factorial(d - q) * factorial(d + q));
        acc += sign_flip(term, q);
    }
    return acc;
}

// Maclaurin coefficient of v^i in f_j, Stirling-sum route.
Rational f_coeff_stirling(int j, int i) {
    Rational pre(Integer(i + 1) * Integer(i + 2) * factorial(j + i));
    return sign_flip(pre * stirling_kernel(i + 1), i + 1);
}

// Maclaurin coefficient of v^i in f_j, Bernoulli-form route.
Rational f_coeff_bernoulli(int j, int i) {
    Rational pre(factorial(j) * binomial(j + i, j), factorial(i + 1));
    return sign_flip(pre * bernoulli(i + 1), i + 1);
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::stirling_sum: return "stirling_sum";
        case Method::closed_form: return "closed_form";
        case Method::bernoulli_form: return "bernoulli_form";
        case Method::determinantal: return "determinantal";
        case Method::recursion: return "recursion";
        case Method::series_oracle: return "series_oracle";
    }
    return "unknown";
}

CoefficientTable::CoefficientTable(int j_lo, int j_hi, int k_lo, int k_hi)
    : j_lo_(j_lo), j_hi_(j_hi), k_lo_(k_lo), k_hi_(k_hi) {
    if (j_hi < j_lo || k_hi < k_lo)
        throw std::invalid_argument("CoefficientTable: empty range");
    cells_.resize(static_cast<size_t>(j_hi - j_lo + 1) * (k_hi - k_lo + 1));
}

int CoefficientTable::index(int j, int k) const {
    if (j < j_lo_ || j > j_hi_ || k < k_lo_ || k > k_hi_)
        throw std::out_of_range("CoefficientTable: (j,k) outside range");
    return (j - j_lo_) * (k_hi_ - k_lo_ + 1) + (k - k_lo_);
}

void CoefficientTable::set(int j, int k, Rational value, Method m) {
    cells_[index(j, k)] = Cell{std::move(value), m};
}

const CoefficientTable::Cell& CoefficientTable::at(int j, int k) const {
    return cells_[index(j, k)];
}

std::vector<CoefficientTable::Mismatch> CoefficientTable::compare(const CoefficientTable& a,
                                                                  const CoefficientTable& b) {
    if (a.j_lo_ != b.j_lo_ || a.j_hi_ != b.j_hi_ || a.k_lo_ != b.k_lo_ || a.k_hi_ != b.k_hi_)
        throw std::invalid_argument("CoefficientTable::compare: range mismatch");
    std::vector<Mismatch> out;
    for (int j = a.j_lo_; j <= a.j_hi_; ++j)
        for (int k = a.k_lo_; k <= a.k_hi_; ++k)
            if (a.at(j, k).value != b.at(j, k).value)
                out.push_back({j, k, a.at(j, k).value, b.at(j, k).value});
    return out;
}

// ---- the five at-zero routes ----------------------------------------------

Rational G_value_stirling(int j, int k) {
    require_jk(j, k, "G_value_stirling");
    if (k < j - 1) return Rational(0);
    const int d = k - j + 1;
    Rational pre(factorial(k) * factorial(d + 1));
    return sign_flip(pre * stirling_kernel(d), d);
}

Rational G_value_bernoulli(int j, int k) {
    require_jk(j, k, "G_value_bernoulli");
    if (k < j - 1) return Rational(0);
    const int d = k - j + 1;
    return sign_flip(Rational(factorial(k), factorial(d)) * bernoulli(d), d);
}

Rational G_value_closed_form(int j, int k) {
    require_jk(j, k, "G_value_closed_form");
    if (k < j - 1) return Rational(0);
    // The theorem's expression is v^{j-k-1} sum_q bracket_q(u(v)) v^q with
    // u = v/(1-e^{-v}). Expand u as a series, collect the coefficient of the
    // overall power v^0, and insist the negative powers cancel.
    const int target = k + 1 - j;
    const int order = target + 1;
    TruncatedSeries u = series_invert(series_F1(order));
    std::vector<TruncatedSeries> u_pow;
    u_pow.reserve(k + 2);
    u_pow.emplace_back(order);  // u^0 = 1
    u_pow[0][0] = 1;
    for (int m = 1; m <= k + 1; ++m) u_pow.push_back(series_mul(u_pow.back(), u));

    std::vector<Rational> acc(k + order);
    for (int q = 0; q <= k; ++q) {
        for (int l = q; l <= k; ++l) {
            Rational c = Rational(binomial(k, l) * factorial(l - q) * stirling2(l + 1, l - q + 1)) *
                         falling_factorial(Rational(j), k - l);
            if (c.is_zero()) continue;
            c = sign_flip(c, l - q);
            const TruncatedSeries& up = u_pow[l - q + 1];
            for (int i = 0; i < order; ++i) acc[q + i] += c * up[i];
        }
    }
    for (int e = 0; e < target; ++e)
        if (!acc[e].is_zero())
            throw std::logic_error("G_value_closed_form: singular part fails to cancel at (" +
                                   std::to_string(j) + "," + std::to_string(k) + ")");
    return acc[target];
}

Rational G_value_determinantal(int j, int k) {
    require_jk(j, k, "G_value_determinantal");
    std::vector<Rational> g(k + 1), h(k + 1);
    for (int l = 0; l <= k; ++l) {
        if (l == j - 1) g[l] = Rational(factorial(j - 1));
        h[l] = f1_deriv_at_zero(l);
    }
    return ratio_derivative_via_determinant(g, h, k);
}

Rational G_value_recursive(int j, int k) {
    require_jk(j, k, "G_value_recursive");
    std::vector<Rational> G(k + 1);
    for (int t = 0; t <= k; ++t) {
        Rational acc = (t == j - 1) ? Rational(factorial(j - 1)) : Rational(0);
        for (int r = 0; r < t; ++r)
            acc -= Rational(binomial(t, r)) * f1_deriv_at_zero(t - r) * G[r];
        G[t] = acc;  // F_1(0) = 1
    }
    return G[k];
}

Rational G_value(int j, int k, Method m) {
    switch (m) {
        case Method::stirling_sum: return G_value_stirling(j, k);
        case Method::closed_form: return G_value_closed_form(j, k);
        case Method::bernoulli_form: return G_value_bernoulli(j, k);
        case Method::determinantal: return G_value_determinantal(j, k);
        case Method::recursion: return G_value_recursive(j, k);
        case Method::series_oracle: {
            require_jk(j, k, "G_value");
            TruncatedSeries g = oracle_G_series(j, k + 1);
            return Rational(factorial(k)) * g[k];
        }
    }
    throw std::invalid_argument("G_value: unknown method");
}

// ---- f_j Maclaurin ---------------------------------------------------------

Rational f_maclaurin_coeff(int j, int i) {
    if (j < 1 || i < 0) throw std::invalid_argument("f_maclaurin_coeff: need j >= 1, i >= 0");
    Rational by_stirling = f_coeff_stirling(j, i);
    Rational by_bernoulli = f_coeff_bernoulli(j, i);
    if (by_stirling != by_bernoulli)
        throw std::logic_error("f_maclaurin_coeff: stirling_sum and bernoulli_form disagree at (" +
                               std::to_string(j) + "," + std::to_string(i) + "): " +
                               by_stirling.str() + " vs " + by_bernoulli.str());
    return by_stirling;
}

Rational f_derivative_at_zero(int j, int m) {
    if (j < 1 || m < 0) throw std::invalid_argument("f_derivative_at_zero: need j >= 1, m >= 0");
    if (m == 0) return Rational(factorial(j), Integer(2));
    if (m % 2 == 0) return Rational(0);
    return Rational(factorial(m + j), factorial(m + 1)) * bernoulli(m + 1);
}

// ---- gamma(j,k) and C(j,k) -------------------------------------------------

namespace {

// T(m,p) = sum_q (-1)^q C(m+p, p-q) S(m+q, q)
Integer gamma_inner_T(int m, int p) {
    Integer acc = 0;
    for (int q = 0; q <= p; ++q) {
        Integer term = binomial(m + p, p - q) * stirling2(m + q, q);
        acc += (q % 2 == 0) ? term : -term;
    }
    return acc;
}

// W_j(m) = sum_p (-1)^p <j+1>_p/(m+p)! T(m,p); the Maclaurin coefficients of
// F_1^{j+1} carry these values as (-1)^m W_j(m).
std::vector<Rational> gamma_W_column(int j, int m_max) {
    std::vector<Rational> W(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        Rational acc;
        Integer ff = 1;  // <j+1>_p
        for (int p = 0; p <= m; ++p) {
            if (p > 0) ff *= (j + 2 - p);
            if (sgn(ff) == 0) break;
            Rational term = Rational(ff * gamma_inner_T(m, p), factorial(m + p));
            acc += sign_flip(term, p);
        }
        W[m] = acc;
    }
    return W;
}

// E_j(l) = sum_m (-1)^m j^{l-m}/(l-m)! W_j(m) = [v^l] e^{jv} F_1(v)^{j+1}
std::vector<Rational> gamma_E_column(int j, int l_max, const std::vector<Rational>& W) {
    std::vector<Rational> E(l_max + 1);
    for (int l = 0; l <= l_max; ++l) {
        Rational acc;
        for (int m = 0; m <= l; ++m) {
            Rational term = Rational(pow(Integer(j), l - m), factorial(l - m)) * W[m];
            acc += sign_flip(term, m);
        }
        E[l] = acc;
    }
    return E;
}

std::vector<Rational> f_coeff_column(int j, int r_max, Method m) {
    std::vector<Rational> A(r_max + 1);
    for (int r = 0; r <= r_max; ++r)
        A[r] = (m == Method::stirling_sum) ? f_coeff_stirling(j, r) : f_coeff_bernoulli(j, r);
    return A;
}

void require_route(Method m, const char* who) {
    if (m != Method::stirling_sum && m != Method::bernoulli_form && m != Method::series_oracle)
        throw std::invalid_argument(std::string(who) +
                                    ": route must be stirling_sum, bernoulli_form or series_oracle");
}

}  // namespace

std::vector<Rational> gamma_row(int j, int k_max, Method m) {
    require_jk(j, k_max, "gamma_row");
    require_route(m, "gamma_row");
    if (m == Method::series_oracle) {
        TruncatedSeries g = oracle_gamma_series(j, k_max + 1);
        return g.coeffs();
    }
    std::vector<Rational> W = gamma_W_column(j, k_max);
    std::vector<Rational> E = gamma_E_column(j, k_max, W);
    std::vector<Rational> A = f_coeff_column(j, k_max, m);
    std::vector<Rational> row(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        Rational acc;
        for (int r = 0; r <= k; ++r) acc += A[r] * E[k - r];
        row[k] = acc;
    }
    return row;
}

Rational gamma_coeff_stirling(int j, int k) { return gamma_row(j, k, Method::stirling_sum).back(); }

Rational gamma_coeff_bernoulli(int j, int k) {
    return gamma_row(j, k, Method::bernoulli_form).back();
}

Rational gamma_coeff(int j, int k) {
    Rational s = gamma_coeff_stirling(j, k);
    Rational b = gamma_coeff_bernoulli(j, k);
    if (s != b)
        throw std::logic_error("gamma_coeff: stirling_sum and bernoulli_form disagree at (" +
                               std::to_string(j) + "," + std::to_string(k) + "): " + s.str() +
                               " vs " + b.str());
    return s;
}

std::vector<Rational> frak_C_row(int j, int k_max, Method m) {
    require_jk(j, k_max, "frak_C_row");
    require_route(m, "frak_C_row");
    if (m == Method::series_oracle) {
        TruncatedSeries g = oracle_frak_g_series(j, k_max + 1);
        std::vector<Rational> row(k_max + 1);
        for (int k = 0; k <= k_max; ++k)
            row[k] = Rational(factorial(k), factorial(j + 1)) * g[k];
        return row;
    }
    std::vector<Rational> A = f_coeff_column(j, k_max, m);
    std::vector<Rational> row(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        Rational acc;
        for (int r = 0; r <= k; ++r)
            acc += A[r] * Rational(stirling2(k - r, j + 1), factorial(k - r));
        row[k] = acc * Rational(factorial(k));
    }
    return row;
}

Rational frak_C_coeff_stirling(int j, int k) {
    return frak_C_row(j, k, Method::stirling_sum).back();
}

Rational frak_C_coeff_bernoulli(int j, int k) {
    return frak_C_row(j, k, Method::bernoulli_form).back();
}

Rational frak_C_coeff(int j, int k) {
    Rational s = frak_C_coeff_stirling(j, k);
    Rational b = frak_C_coeff_bernoulli(j, k);
    if (s != b)
        throw std::logic_error("frak_C_coeff: stirling_sum and bernoulli_form disagree at (" +
                               std::to_string(j) + "," + std::to_string(k) + "): " + s.str() +
                               " vs " + b.str());
    return s;
}

// ---- numeric evaluation ----------------------------------------------------

namespace {

double powi(double base, int e) {
    double r = 1.0;
    const bool neg = e < 0;
    for (int i = 0, n = neg ? -e : e; i < n; ++i) r *= base;
    return neg ? 1.0 / r : r;
}

// Signed integer coefficients of the closed form: coeff[q][m] multiplies
// u^m v^q (m >= 1).
std::vector<std::vector<Integer>> closed_form_coeffs(int j, int k) {
    std::vector<std::vector<Integer>> coeff(k + 1, std::vector<Integer>(k + 2, Integer(0)));
    for (int q = 0; q <= k; ++q)
        for (int l = q; l <= k; ++l) {
            Rational ff = falling_factorial(Rational(j), k - l);
            Integer c = binomial(k, l) * factorial(l - q) * stirling2(l + 1, l - q + 1) * ff.num();
            coeff[q][l - q + 1] = (l - q) % 2 == 0 ? c : -c;
        }
    return coeff;
}

const std::vector<std::vector<Integer>>& cached_closed_form_coeffs(int j, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<Integer>>> cache;
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace({j, k});
    if (inserted) it->second = closed_form_coeffs(j, k);
    return it->second;
}

// The closed form cancels its own leading growth: terms reach u^{k+1} v^k
// while the value sits near j!. Binary64 runs out of digits around
// j*log10(v) ~ 16, so the sum is carried in MPFR at a working precision sized
// from j, k and |v|, and rounded to double once at the end.
mpfr_prec_t closed_form_precision(int k, double v) {
    const double lg_v = std::log2(std::max(std::fabs(v), 2.0));
    const double bits = 96.0 + (2.0 * k + 2.0) * lg_v + 2.0 * (k + 2.0) * std::log2(k + 2.0);
    return static_cast<mpfr_prec_t>(std::min(std::max(bits, 256.0), 8192.0));
}

// 30-term Maclaurin fallback for |v| < 1e-3, where the closed form cancels
// catastrophically: G_j^(k)(v) ~ sum_l (-1)^l B_l/l! <j+l-1>_k v^{j+l-1-k}.
double maclaurin_G_numeric(int j, int k, double v) {
    double acc = 0.0;
    for (int l = 0; l < 30; ++l) {
        Rational c = sign_flip(Rational(bernoulli(l)) / Rational(factorial(l)), l) *
                     falling_factorial(Rational(j + l - 1), k);
        if (c.is_zero()) continue;
        acc += c.to_double() * powi(v, j + l - 1 - k);
    }
    return acc;
}

}  // namespace

double G_eval_numeric(const EvalPoint& p) {
    require_jk(p.j, p.k, "G_eval_numeric");
    if (p.v == 0.0)
        throw std::invalid_argument("G_eval_numeric: v = 0; use the exact at-zero routes");
    if (!std::isfinite(p.v)) throw std::invalid_argument("G_eval_numeric: v must be finite");
    if (std::fabs(p.v) < 1e-3) return maclaurin_G_numeric(p.j, p.k, p.v);

    const auto& coeff = cached_closed_form_coeffs(p.j, p.k);
    const mpfr_prec_t prec = closed_form_precision(p.k, p.v);

    mpfr_t v, u, up, inner, term, acc, vpow;
    mpfr_inits2(prec, v, u, up, inner, term, acc, vpow, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(v, p.v, MPFR_RNDN);

    // u = v / (1 - e^{-v})
    mpfr_neg(u, v, MPFR_RNDN);
    mpfr_exp(u, u, MPFR_RNDN);
    mpfr_ui_sub(u, 1, u, MPFR_RNDN);
    mpfr_div(u, v, u, MPFR_RNDN);

    mpfr_set_zero(acc, 1);
    for (int q = p.k; q >= 0; --q) {
        mpfr_set_zero(inner, 1);
        mpfr_set_ui(up, 1, MPFR_RNDN);
        for (int m = 1; m <= p.k + 1; ++m) {
            mpfr_mul(up, up, u, MPFR_RNDN);
            if (sgn(coeff[q][m]) == 0) continue;
            mpfr_mul_z(term, up, coeff[q][m].get_mpz_t(), MPFR_RNDN);
            mpfr_add(inner, inner, term, MPFR_RNDN);
        }
        mpfr_mul(acc, acc, v, MPFR_RNDN);  // Horner over v^q, q descending
        mpfr_add(acc, acc, inner, MPFR_RNDN);
    }
    mpfr_pow_si(vpow, v, p.j - p.k - 1, MPFR_RNDN);
    mpfr_mul(acc, acc, vpow, MPFR_RNDN);

    const double out = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(v, u, up, inner, term, acc, vpow, static_cast<mpfr_ptr>(nullptr));
    return out;
}

double f_eval_numeric(int j, double v) { return G_eval_numeric({v, j, j}); }

double bernoulli_bound_beta() {
    const double pi = std::numbers::pi;
    return 2.0 + std::log(1.0 - 6.0 / (pi * pi)) / std::log(2.0);
}

double f_lower_bound_series(int j, double v, int terms) {
    if (j < 1 || terms < 1)
        throw std::invalid_argument("f_lower_bound_series: need j >= 1, terms >= 1");
    if (v <= 0) throw std::invalid_argument("f_lower_bound_series: need v > 0");
    const double pi = std::numbers::pi;
    const double beta = bernoulli_bound_beta();
    const double x = v / (2.0 * pi);
    double acc = 0.0;
    for (int r = 1; r <= terms; ++r) {
        double plus = binomial(j + 4 * r - 3, j).get_d() / (1.0 - std::exp2(-(4.0 * r - 2.0)));
        double minus = binomial(j + 4 * r - 1, j).get_d() / (1.0 - std::exp2(beta - 4.0 * r));
        acc += plus * powi(x, 4 * r - 3) - minus * powi(x, 4 * r - 1);
    }
    return 0.5 + acc / pi;
}

// ---- property reports ------------------------------------------------------

LogConvexityReport log_convexity_report(int j, int k_max) {
    if (j < 1 || k_max < 2)
        throw std::invalid_argument("log_convexity_report: need j >= 1, k_max >= 2");
    LogConvexityReport rep;
    rep.j = j;
    rep.k_max = k_max;

    auto odd_abs = [&](int k) { return f_derivative_at_zero(j, 2 * k - 1).abs(); };
    rep.extended_first_step =
            odd_abs(1) * odd_abs(1) <= f_derivative_at_zero(j, 0).abs() * odd_abs(2);
    for (int k = 2; k <= k_max; ++k)
        if (odd_abs(k) * odd_abs(k) > odd_abs(k - 1) * odd_abs(k + 1))
            rep.interior_failures.push_back(k);
    return rep;
}

ScanReport scan_nonnegativity(ScanKind kind, int j_max, int k_max, int jobs) {
    if (j_max < 1 || k_max < 0) throw std::invalid_argument("scan_nonnegativity: bad bounds");
    if (jobs < 1) jobs = 1;

    prewarm_memo(std::max(j_max, k_max));
    std::vector<std::vector<Rational>> rows(j_max);
    auto compute_row = [&](int j) {
        rows[j - 1] = (kind == ScanKind::gamma) ? gamma_row(j, k_max, Method::bernoulli_form)
                                                : frak_C_row(j, k_max, Method::bernoulli_form);
    };

    if (jobs == 1) {
        for (int j = 1; j <= j_max; ++j) compute_row(j);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (int j = 1 + w; j <= j_max; j += jobs) compute_row(j);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    ScanReport rep;
    rep.kind = kind;
    rep.j_max = j_max;
    rep.k_max = k_max;
    rep.cells_scanned = static_cast<long>(j_max) * (k_max + 1);
    for (int j = 1; j <= j_max; ++j)
        for (int k = 0; k <= k_max; ++k)
            if (rows[j - 1][k].sign() < 0) rep.negatives.push_back({j, k, rows[j - 1][k]});
    return rep;
}

}  // namespace cik
