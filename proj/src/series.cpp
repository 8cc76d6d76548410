#include "cik/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "cik/combinatorics.hpp"

namespace cik {

int TruncatedSeries::check_order(int order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    return order;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(order());
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i)
        for (int k = 0; k <= i; ++k) r[i] += a[k] * b[i - k];
    return r;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries r(a.order());
    for (int i = 0; i < r.order(); ++i) r[i] = a[i] * c;
    return r;
}

TruncatedSeries series_shift(const TruncatedSeries& a, int m) {
    if (m >= 0) {
        TruncatedSeries r(a.order() + m);
        for (int i = 0; i < a.order(); ++i) r[i + m] = a[i];
        return r;
    }
    const int drop = -m;
    if (drop >= a.order())
        throw std::invalid_argument("series_shift: shift removes every retained coefficient");
    for (int i = 0; i < drop; ++i)
        if (!a[i].is_zero())
            throw std::invalid_argument("series_shift: nonzero coefficient of v^" +
                                        std::to_string(i) + " under division by v^" +
                                        std::to_string(drop));
    TruncatedSeries r(a.order() - drop);
    for (int i = 0; i < r.order(); ++i) r[i] = a[i + drop];
    return r;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
    if (a[0].is_zero()) throw std::invalid_argument("series_invert: zero constant term");
    TruncatedSeries b(a.order());
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (int n = 1; n < a.order(); ++n) {
        Rational acc;
        for (int i = 1; i <= n; ++i) acc += a[i] * b[n - i];
        b[n] = -inv0 * acc;
    }
    return b;
}

TruncatedSeries series_derivative(const TruncatedSeries& a, int times) {
    if (times < 0) throw std::invalid_argument("series_derivative: negative order");
    if (times == 0) return a;
    if (times >= a.order())
        throw std::invalid_argument("series_derivative: derivative order exceeds series order");
    TruncatedSeries r(a.order() - times);
    for (int i = 0; i < r.order(); ++i)
        r[i] = a[i + times] * Rational(factorial(i + times) / factorial(i));
    return r;
}

TruncatedSeries series_truncate(const TruncatedSeries& a, int order) {
    if (order >= a.order()) return a;
    TruncatedSeries r(order);
    for (int i = 0; i < order; ++i) r[i] = a[i];
    return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, int e) {
    if (e < 0) throw std::invalid_argument("series_pow: negative exponent");
    TruncatedSeries r(a.order());
    r[0] = 1;
    for (int i = 0; i < e; ++i) r = series_mul(r, a);
    return r;
}

TruncatedSeries series_exp(int order) { return series_exp_scaled(Rational(1), order); }

TruncatedSeries series_exp_scaled(const Rational& c, int order) {
    TruncatedSeries r(order);
    Rational term(1);  // c^i / i!
    r[0] = term;
    for (int i = 1; i < order; ++i) {
        term *= c / Rational(i);
        r[i] = term;
    }
    return r;
}

TruncatedSeries series_expm1_over_v(int order) {
    TruncatedSeries r(order);
    for (int i = 0; i < order; ++i) r[i] = Rational(Integer(1), factorial(i + 1));
    return r;
}

TruncatedSeries series_F1(int order) {
    TruncatedSeries r(order);
    for (int i = 0; i < order; ++i) {
        Rational c(Integer(1), factorial(i + 1));
        r[i] = (i % 2 == 0) ? c : -c;
    }
    return r;
}

TruncatedSeries oracle_G_series(int j, int order) {
    if (j < 1) throw std::invalid_argument("oracle_G_series: j must be >= 1");
    TruncatedSeries g1 = series_invert(series_F1(order));  // v/(1-e^{-v})
    return series_truncate(series_shift(g1, j - 1), order);
}

TruncatedSeries oracle_f_series(int j, int order) {
    if (j < 1) throw std::invalid_argument("oracle_f_series: j must be >= 1");
    return series_derivative(oracle_G_series(j, order + j), j);
}

TruncatedSeries oracle_gamma_series(int j, int order) {
    if (j < 1) throw std::invalid_argument("oracle_gamma_series: j must be >= 1");
    TruncatedSeries g = series_pow(series_F1(order), j + 1);
    g = series_mul(g, series_exp_scaled(Rational(j), order));
    return series_mul(g, oracle_f_series(j, order));
}

TruncatedSeries oracle_frak_g_series(int j, int order) {
    if (j < 1) throw std::invalid_argument("oracle_frak_g_series: j must be >= 1");
    TruncatedSeries em1 = series_shift(series_expm1_over_v(order), 1);  // e^v - 1
    return series_mul(series_pow(series_truncate(em1, order), j + 1), oracle_f_series(j, order));
}

}  // namespace cik
