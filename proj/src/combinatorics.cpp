#include "cik/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "cik/memo.hpp"

namespace cik {

Integer factorial(int n) { return MemoTables::instance().factorial(n); }

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    const Integer& num = factorial(static_cast<int>(n));
    return num / (factorial(static_cast<int>(k)) * factorial(static_cast<int>(n - k)));
}

Rational generalized_binomial(const Rational& x, int m) {
    if (m < 0) return Rational(0);
    return falling_factorial(x, m) / Rational(factorial(m));
}

Rational falling_factorial(const Rational& x, int j) {
    if (j < 0) throw std::invalid_argument("falling_factorial: negative j");
    Rational p(1);
    for (int l = 0; l < j; ++l) p *= x - Rational(l);
    return p;
}

Rational rising_factorial(const Rational& x, int j) {
    if (j < 0) throw std::invalid_argument("rising_factorial: negative j");
    Rational p(1);
    for (int l = 0; l < j; ++l) p *= x + Rational(l);
    return p;
}

Integer stirling2(int n, int k) { return MemoTables::instance().stirling2(n, k); }

Rational bernoulli(int n) { return MemoTables::instance().bernoulli(n); }

namespace {

// Sums n!/prod(l_i!) * prod((x_i/i!)^{l_i}) over all multi-indices with
// sum i*l_i = n and sum l_i = k, recursing over part size i.
void bell_enumerate(int i, int rem_n, int rem_k, const Rational& partial,
                    std::span<const Rational> xs, Rational& acc) {
    if (rem_k == 0) {
        if (rem_n == 0) acc += partial;
        return;
    }
    if (i < 1 || rem_n < rem_k || rem_n > rem_k * i) return;  // prune on sum i*l_i = n
    Rational weight = xs[i - 1] / Rational(factorial(i));
    Rational scaled = partial;
    const int max_li = std::min(rem_k, rem_n / i);
    for (int li = 0; li <= max_li; ++li) {
        if (li > 0) scaled *= weight / Rational(li);
        bell_enumerate(i - 1, rem_n - i * li, rem_k - li, scaled, xs, acc);
    }
}

}  // namespace

Rational bell_partial(int n, int k, std::span<const Rational> xs) {
    if (n < 0 || k < 0) throw std::invalid_argument("bell_partial: negative index");
    if (k > n) return Rational(0);  // empty partition sum
    const int needed = n - k + 1;
    if (k > 0 && static_cast<int>(xs.size()) < needed)
        throw std::invalid_argument("bell_partial: xs supplies " + std::to_string(xs.size()) +
                                    " values, need " + std::to_string(needed));
    if (n == 0) return Rational(1);  // B_{0,0}
    Rational acc;
    bell_enumerate(needed, n, k, Rational(1), xs, acc);
    return acc * Rational(factorial(n));
}

bool bell_scaling_check(int n, int k, const Rational& a, const Rational& b,
                        std::span<const Rational> xs) {
    std::vector<Rational> scaled(xs.size());
    Rational abp = a;  // a * b^i
    for (size_t i = 0; i < xs.size(); ++i) {
        abp *= b;
        scaled[i] = abp * xs[i];
    }
    Rational lhs = bell_partial(n, k, scaled);
    Rational rhs = pow(a, k) * pow(b, n) * bell_partial(n, k, xs);
    return lhs == rhs;
}

Rational bell_at_reciprocals(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bell_at_reciprocals: need 0 <= k <= n");
    Integer sum = 0;
    for (int l = 0; l <= k; ++l) {
        Integer term = binomial(n + k, k - l) * stirling2(n + l, l);
        sum += ((k - l) % 2 == 0) ? term : -term;
    }
    return Rational(factorial(n) * sum, factorial(n + k));
}

Rational faa_di_bruno(std::span<const Rational> outer_derivs,
                      std::span<const Rational> inner_derivs, int n) {
    if (n < 0) throw std::invalid_argument("faa_di_bruno: negative order");
    if (static_cast<int>(outer_derivs.size()) < n + 1)
        throw std::invalid_argument("faa_di_bruno: need outer derivatives 0..n");
    if (static_cast<int>(inner_derivs.size()) < n)
        throw std::invalid_argument("faa_di_bruno: need inner derivatives 1..n");
    Rational acc;
    for (int k = 0; k <= n; ++k) {
        const auto need = static_cast<size_t>(n - k + 1);
        auto xs = inner_derivs.subspan(0, std::min(need, inner_derivs.size()));
        acc += outer_derivs[k] * bell_partial(n, k, xs);
    }
    return acc;
}

std::vector<Rational> reciprocal_derivative_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("reciprocal_derivative_coeffs: negative order");
    std::vector<Rational> c(n + 1);
    for (int l = 0; l <= n; ++l) {
        Integer v = factorial(l) * stirling2(n + 1, l + 1);
        c[l] = Rational(l % 2 == 0 ? v : -v);
    }
    return c;
}

void prewarm_memo(int n) { MemoTables::instance().prewarm(n); }

}  // namespace cik
