#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// Lower Hessenberg matrix over Rational: entries strictly above the
/// superdiagonal are exactly 0. Rows and columns are 0-based. Immutable after
/// construction.
class HessenbergMatrix {
public:
    /// Builds an n x n matrix from a generator; the generator is only
    /// consulted for c <= r+1.
    static HessenbergMatrix from_generator(int n,
                                           const std::function<Rational(int, int)>& entry);

    int size() const { return n_; }
    const Rational& at(int r, int c) const;

private:
    explicit HessenbergMatrix(int n);
    static const Rational& zero();

    int n_;
    std::vector<Rational> band_;  // row r holds columns 0..r+1
    std::vector<int> row_start_;
};

/// Determinant by the one-term-per-row recursion
/// H_n = sum_{r=1}^n (-1)^{n-r} h_{n,r} (prod_{l=r}^{n-1} h_{l,l+1}) H_{r-1}.
Rational det_hessenberg(const HessenbergMatrix& m);

/// Coefficient b_j of g = 1/f for f = 1 + sum a_k v^k, via the (-1)^j-signed
/// Toeplitz-Hessenberg determinant (Wronski formula). a supplies a_1..a_j (or
/// more).
Rational wronski_inverse_coeff(std::span<const Rational> a, int j);

/// Determinant of the (j+1)x(j+1) matrix with 1/(r-c+2)! on and below the
/// diagonal and 1 on the superdiagonal; equals (-1)^{j+1} B_{j+1}/(j+1)!.
Rational bernoulli_hessenberg_det(int j);

/// Determinant of the j x j matrix with entries C(theta, r-c+1) in the
/// Hessenberg band; equals the rising factorial (theta)_j / j!.
Rational rising_factorial_hessenberg_det(const Rational& theta, int j);

/// j-th derivative of g/h at a point, from derivative values
/// g_derivs = g, g', ..., g^(j) and h_derivs = h, h', ..., h^(j), via the
/// (j+1)x(j+1) bordered Hessenberg determinant scaled by (-1)^j/h^{j+1}.
/// Requires h != 0 at the point.
Rational ratio_derivative_via_determinant(std::span<const Rational> g_derivs,
                                          std::span<const Rational> h_derivs, int j);

/// Partial sum of Whittaker's determinantal series for the smallest-modulus
/// root of 0 = lambda_0 + lambda_1 v + lambda_2 v^2 + ...; `terms` stages.
/// Requires lambda_0 != 0 and lambda_1 != 0; throws std::runtime_error
/// "series stage degenerate at m" when a denominator determinant vanishes.
Rational whittaker_root_partial_sum(std::span<const Rational> lambda, int terms);

}  // namespace cik
