#pragma once

#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// Finite prefix of a formal power series over Rational: coefficient i is the
/// coefficient of v^i and order() is the number of retained coefficients.
/// Arithmetic truncates to the minimum order of the operands; two series
/// compare equal iff they agree coefficient-wise up to the common order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(check_order(order)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int i) const { return coeffs_[i]; }
    Rational& operator[](int i) { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    static int check_order(int order);
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);

/// Multiplies by v^m (m >= 0, order grows by m) or divides by v^{-m} (m < 0,
/// order shrinks; the leading -m coefficients must vanish, else
/// std::invalid_argument).
TruncatedSeries series_shift(const TruncatedSeries& a, int m);

/// Reciprocal series b with a*b = 1 up to order, by the linear recurrence
/// b_0 = 1/a_0, b_n = -(1/a_0) sum_{i=1}^n a_i b_{n-i}. Requires a_0 != 0.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// `times`-fold derivative; order shrinks by `times`.
TruncatedSeries series_derivative(const TruncatedSeries& a, int times);

TruncatedSeries series_truncate(const TruncatedSeries& a, int order);
TruncatedSeries series_pow(const TruncatedSeries& a, int e);

/// e^v = sum v^i/i!.
TruncatedSeries series_exp(int order);

/// e^{cv} = sum c^i v^i/i! (the one composition instance the formulas need).
TruncatedSeries series_exp_scaled(const Rational& c, int order);

/// (e^v - 1)/v = sum v^i/(i+1)!.
TruncatedSeries series_expm1_over_v(int order);

/// F_1(v) = (1 - e^{-v})/v = sum (-1)^i v^i/(i+1)!.
TruncatedSeries series_F1(int order);

/// Maclaurin series of G_j(v) = v^j/(1-e^{-v}), computed as v^{j-1}/F_1(v).
/// G_j^(k)(0) = k! * coefficient k.
TruncatedSeries oracle_G_series(int j, int order);

/// f_j = G_j^{(j)}; the j-fold derivative of the G_j series.
TruncatedSeries oracle_f_series(int j, int order);

/// g_j(v) = F_1(v)^{j+1} e^{jv} f_j(v); coefficient k is gamma(j,k).
TruncatedSeries oracle_gamma_series(int j, int order);

/// frak g_j(v) = (e^v-1)^{j+1} f_j(v); coefficient k is (j+1)! C(j,k)/k!.
TruncatedSeries oracle_frak_g_series(int j, int order);

}  // namespace cik
