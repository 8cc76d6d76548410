#include "cik/hessenberg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "cik/combinatorics.hpp"

namespace cik {

HessenbergMatrix::HessenbergMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("HessenbergMatrix: dimension must be >= 1");
    row_start_.resize(n + 1);
    int total = 0;
    for (int r = 0; r < n; ++r) {
        row_start_[r] = total;
        total += std::min(r + 2, n);  // columns 0..r+1, clipped at n-1
    }
    row_start_[n] = total;
    band_.resize(total);
}

HessenbergMatrix HessenbergMatrix::from_generator(
        int n, const std::function<Rational(int, int)>& entry) {
    HessenbergMatrix m(n);
    for (int r = 0; r < n; ++r) {
        const int cols = m.row_start_[r + 1] - m.row_start_[r];
        for (int c = 0; c < cols; ++c) m.band_[m.row_start_[r] + c] = entry(r, c);
    }
    return m;
}

const Rational& HessenbergMatrix::zero() {
    static const Rational z(0);
    return z;
}

const Rational& HessenbergMatrix::at(int r, int c) const {
    if (r < 0 || c < 0 || r >= n_ || c >= n_)
        throw std::out_of_range("HessenbergMatrix::at");
    if (c > r + 1) return zero();
    return band_[row_start_[r] + c];
}

Rational det_hessenberg(const HessenbergMatrix& m) {
    const int n = m.size();
    std::vector<Rational> H(n + 1);
    H[0] = 1;
    for (int d = 1; d <= n; ++d) {
        // H_d = sum_{r=1}^{d} (-1)^{d-r} h_{d,r} (prod_{l=r}^{d-1} h_{l,l+1}) H_{r-1}
        Rational acc;
        Rational super_prod(1);
        for (int r = d; r >= 1; --r) {
            Rational term = m.at(d - 1, r - 1) * super_prod * H[r - 1];
            acc += ((d - r) % 2 == 0) ? term : -term;
            if (r >= 2) super_prod *= m.at(r - 2, r - 1);
        }
        H[d] = acc;
    }
    return H[n];
}

Rational wronski_inverse_coeff(std::span<const Rational> a, int j) {
    if (j < 1) throw std::invalid_argument("wronski_inverse_coeff: j must be >= 1");
    if (static_cast<int>(a.size()) < j)
        throw std::invalid_argument("wronski_inverse_coeff: need coefficients a_1..a_j");
    auto m = HessenbergMatrix::from_generator(j, [&](int r, int c) {
        if (c == r + 1) return Rational(1);
        return a[r - c];  // a_{r-c+1} in 1-based terms
    });
    Rational det = det_hessenberg(m);
    return (j % 2 == 0) ? det : -det;
}

Rational bernoulli_hessenberg_det(int j) {
    if (j < 0) throw std::invalid_argument("bernoulli_hessenberg_det: j must be >= 0");
    auto m = HessenbergMatrix::from_generator(j + 1, [](int r, int c) {
        if (c == r + 1) return Rational(1);
        return Rational(Integer(1), factorial(r - c + 2));
    });
    return det_hessenberg(m);
}

Rational rising_factorial_hessenberg_det(const Rational& theta, int j) {
    if (j < 1) throw std::invalid_argument("rising_factorial_hessenberg_det: j must be >= 1");
    auto m = HessenbergMatrix::from_generator(
            j, [&](int r, int c) { return generalized_binomial(theta, r - c + 1); });
    return det_hessenberg(m);
}

Rational ratio_derivative_via_determinant(std::span<const Rational> g_derivs,
                                          std::span<const Rational> h_derivs, int j) {
    if (j < 0) throw std::invalid_argument("ratio_derivative_via_determinant: negative order");
    if (static_cast<int>(g_derivs.size()) < j + 1 || static_cast<int>(h_derivs.size()) < j + 1)
        throw std::invalid_argument("ratio_derivative_via_determinant: need derivatives 0..j");
    if (h_derivs[0].is_zero())
        throw std::invalid_argument("ratio_derivative_via_determinant: h vanishes at the point");
    if (j == 0) return g_derivs[0] / h_derivs[0];

    auto w = HessenbergMatrix::from_generator(j + 1, [&](int r, int c) {
        if (c == 0) return g_derivs[r];
        if (r - c + 1 < 0) return Rational(0);
        return Rational(binomial(r, c - 1)) * h_derivs[r - c + 1];
    });
    Rational det = det_hessenberg(w);
    Rational scaled = det / pow(h_derivs[0], j + 1);
    return (j % 2 == 0) ? scaled : -scaled;
}

namespace {

// Exact determinant of a small dense matrix by fraction-free Gaussian
// elimination; used only for the Whittaker numerator band, which carries two
// subdiagonals and so falls outside the Hessenberg recursion.
Rational det_dense(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rational lambda_at(std::span<const Rational> lambda, int i) {
    if (i < 0 || i >= static_cast<int>(lambda.size())) return Rational(0);
    return lambda[i];
}

// D_m: m x m with entries lambda_{1-r+c} (1-based), evaluated as a lower
// Hessenberg determinant of the transpose.
Rational whittaker_denominator(std::span<const Rational> lambda, int m) {
    if (m == 0) return Rational(1);
    auto t = HessenbergMatrix::from_generator(
            m, [&](int r, int c) { return lambda_at(lambda, 1 + r - c); });
    return det_hessenberg(t);
}

// N_m for m >= 2: (m-1) x (m-1) with entries lambda_{2-r+c} (1-based).
Rational whittaker_numerator(std::span<const Rational> lambda, int m) {
    if (m == 1) return Rational(1);
    const int n = m - 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = lambda_at(lambda, 2 - (r + 1) + (c + 1));
    return det_dense(std::move(a));
}

}  // namespace

Rational whittaker_root_partial_sum(std::span<const Rational> lambda, int terms) {
    if (terms < 1) throw std::invalid_argument("whittaker_root_partial_sum: terms must be >= 1");
    if (lambda.size() < 2 || lambda[0].is_zero() || lambda[1].is_zero())
        throw std::invalid_argument("whittaker_root_partial_sum: need lambda_0 != 0 and lambda_1 != 0");

    Rational sum;
    Rational lambda0_pow(1);
    Rational d_prev(1);  // D_{m-1}
    for (int m = 1; m <= terms; ++m) {
        lambda0_pow *= lambda[0];
        Rational d_m = whittaker_denominator(lambda, m);
        if (d_m.is_zero())
            throw std::runtime_error("whittaker_root_partial_sum: series stage degenerate at " +
                                     std::to_string(m));
        sum -= lambda0_pow * whittaker_numerator(lambda, m) / (d_prev * d_m);
        d_prev = d_m;
    }
    return sum;
}

}  // namespace cik
