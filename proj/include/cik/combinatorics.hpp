#pragma once

#include <span>
#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// n! for n >= 0 (memoized, arbitrary precision).
Integer factorial(int n);

/// C(n,k); 0 whenever (n,k) falls outside 0 <= k <= n with n >= 0.
Integer binomial(long n, long k);

/// Generalized binomial C(x,m) = <x>_m / m! for rational x, integer m >= 0.
Rational generalized_binomial(const Rational& x, int m);

/// Falling factorial <x>_j = x(x-1)...(x-j+1); 1 for j = 0.
Rational falling_factorial(const Rational& x, int j);

/// Rising factorial (x)_j = x(x+1)...(x+j-1); 1 for j = 0.
Rational rising_factorial(const Rational& x, int j);

/// Second-kind Stirling number S(n,k), by the triangular recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1); S(n,k) = 0 for k > n, S(n,n) = 1.
Integer stirling2(int n, int k);

/// Bernoulli number B_n in the v/(e^v-1) convention (B_1 = -1/2). Each value
/// is computed by two independent routes -- inversion of the power series
/// (e^v-1)/v and the Bernoulli--Stirling sum -- which must agree; disagreement
/// throws std::logic_error.
Rational bernoulli(int n);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) by enumeration of the
/// partition multi-indices (sum i*l_i = n, sum l_i = k). B_{0,0} = 1 and
/// B_{n,k} = 0 for k > n (empty sum). xs must supply at least n-k+1 values.
Rational bell_partial(int n, int k, std::span<const Rational> xs);

/// Checks the scaling identity
/// B_{n,k}(a*b*x_1, a*b^2*x_2, ...) == a^k * b^n * B_{n,k}(x_1, x_2, ...);
/// property-test helper, always true for a correct bell_partial.
bool bell_scaling_check(int n, int k, const Rational& a, const Rational& b,
                        std::span<const Rational> xs);

/// B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)) by the closed-form Stirling sum
/// n!/(n+k)! * sum_l (-1)^{k-l} C(n+k, k-l) S(n+l, l).
Rational bell_at_reciprocals(int n, int k);

/// n-th derivative of f(h(v)) at a point, from the derivative values of f at
/// h(v0) (outer_derivs[0..n]) and of h at v0 (inner_derivs[0] = h', ...,
/// inner_derivs[n-1] = h^(n)):  sum_k f^(k) * B_{n,k}(h', h'', ...).
Rational faa_di_bruno(std::span<const Rational> outer_derivs,
                      std::span<const Rational> inner_derivs, int n);

/// Coefficients c_l = (-1)^l l! S(n+1, l+1), l = 0..n, of the expansion
/// d^n/dv^n [1/(1-e^{-v})] = sum_l c_l (1/(1-e^{-v}))^{l+1}.
std::vector<Rational> reciprocal_derivative_coeffs(int n);

/// Fills the memo tables up front so later phases (possibly parallel) only read.
void prewarm_memo(int n);

}  // namespace cik
