#include "cik/verify.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "cik/clark_ismail.hpp"
#include "cik/combinatorics.hpp"
#include "cik/series.hpp"

namespace cik {

namespace {

void expect_eq(SuiteResult& suite, const std::string& route, int j, int k, const Rational& lhs,
               const Rational& rhs) {
    ++suite.checks;
    if (lhs != rhs) suite.failures.push_back({route, j, k, lhs.str(), rhs.str()});
}

void expect_true(SuiteResult& suite, const std::string& route, int j, int k, bool ok) {
    ++suite.checks;
    if (!ok) suite.failures.push_back({route, j, k, "false", "true"});
}

}  // namespace

// splitmix64; deterministic across platforms, which keeps the randomized
// suites byte-reproducible.
RationalGen::RationalGen(unsigned long long seed) : state_(seed) {}

unsigned long long RationalGen::next_u64() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long RationalGen::next_index(long n) { return static_cast<long>(next_u64() % n); }

Rational RationalGen::next() {
    long num = next_index(19) - 9;
    long den = next_index(9) + 1;
    return Rational(num, den);
}

Rational RationalGen::next_nonzero() {
    while (true) {
        Rational r = next();
        if (!r.is_zero()) return r;
    }
}

Rational det_cofactor_reference(const std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Rational>> minor(n - 1, std::vector<Rational>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t col = 0; col < n; ++col) {
                if (col == c) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        Rational term = m[0][c] * det_cofactor_reference(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

SuiteResult verify_routes(const VerifyBounds& b) {
    SuiteResult suite;
    suite.name = "routes";
    const std::array<Method, 6> routes = {Method::stirling_sum,  Method::closed_form,
                                          Method::bernoulli_form, Method::determinantal,
                                          Method::recursion,      Method::series_oracle};

    // one CoefficientTable per route over the same range, compared cell-wise
    std::vector<CoefficientTable> tables;
    for (Method m : routes) {
        CoefficientTable t(1, b.j_max, 0, b.k_max);
        for (int j = 1; j <= b.j_max; ++j) {
            if (m == Method::series_oracle) {
                TruncatedSeries g = oracle_G_series(j, b.k_max + 1);
                for (int k = 0; k <= b.k_max; ++k)
                    t.set(j, k, Rational(factorial(k)) * g[k], m);
            } else {
                for (int k = 0; k <= b.k_max; ++k) t.set(j, k, G_value(j, k, m), m);
            }
        }
        tables.push_back(std::move(t));
    }
    const CoefficientTable& oracle_table = tables.back();
    for (size_t r = 0; r + 1 < tables.size(); ++r) {
        const std::string label = method_name(routes[r]) + " vs series_oracle";
        suite.checks += static_cast<long>(b.j_max) * (b.k_max + 1);
        for (const auto& mm : CoefficientTable::compare(tables[r], oracle_table))
            suite.failures.push_back({label, mm.j, mm.k, mm.lhs.str(), mm.rhs.str()});
    }
    for (int j = 1; j <= b.j_max; ++j)
        for (int k = 0; k < std::min(j - 1, b.k_max + 1); ++k)
            for (size_t r = 0; r < tables.size(); ++r)
                expect_eq(suite, method_name(routes[r]) + " vanishing band", j, k,
                          tables[r].at(j, k).value, Rational(0));

    const int gamma_kmax = std::min(b.k_max, 15);
    for (int j = 1; j <= std::min(b.j_max, 8); ++j) {
        auto g_st = gamma_row(j, gamma_kmax, Method::stirling_sum);
        auto g_be = gamma_row(j, gamma_kmax, Method::bernoulli_form);
        auto g_or = gamma_row(j, gamma_kmax, Method::series_oracle);
        auto c_st = frak_C_row(j, gamma_kmax, Method::stirling_sum);
        auto c_be = frak_C_row(j, gamma_kmax, Method::bernoulli_form);
        auto c_or = frak_C_row(j, gamma_kmax, Method::series_oracle);
        for (int k = 0; k <= gamma_kmax; ++k) {
            expect_eq(suite, "gamma stirling_sum vs bernoulli_form", j, k, g_st[k], g_be[k]);
            expect_eq(suite, "gamma stirling_sum vs series_oracle", j, k, g_st[k], g_or[k]);
            expect_eq(suite, "C stirling_sum vs bernoulli_form", j, k, c_st[k], c_be[k]);
            expect_eq(suite, "C stirling_sum vs series_oracle", j, k, c_st[k], c_or[k]);
        }
    }
    return suite;
}

SuiteResult verify_bell(const VerifyBounds& b) {
    SuiteResult suite;
    suite.name = "bell";
    const int n_max = std::min(b.j_max + 5, 14);

    std::vector<Rational> ones(n_max + 1, Rational(1));
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k)
            expect_eq(suite, "bell at ones vs stirling2", n, k, bell_partial(n, k, ones),
                      Rational(stirling2(n, k)));

    const int recip_max = std::min(n_max, 12);
    for (int n = 0; n <= recip_max; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<Rational> xs;
            for (int i = 0; i <= n - k; ++i) xs.emplace_back(Integer(1), Integer(i + 2));
            expect_eq(suite, "bell at reciprocals closed form", n, k, bell_at_reciprocals(n, k),
                      bell_partial(n, k, xs));
        }

    RationalGen gen(0x42eb5u);
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(gen.next_index(10)) + 1;
        int k = static_cast<int>(gen.next_index(n + 1));
        std::vector<Rational> xs(n - k + 1);
        for (auto& x : xs) x = gen.next();
        Rational a = gen.next_nonzero();
        Rational bb = gen.next_nonzero();
        expect_true(suite, "bell scaling identity", n, k, bell_scaling_check(n, k, a, bb, xs));
    }
    return suite;
}

SuiteResult verify_hessenberg(const VerifyBounds& b) {
    SuiteResult suite;
    suite.name = "hessenberg";

    RationalGen gen(0x7a11fu);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(gen.next_index(7)) + 1;
        std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c <= std::min(r + 1, n - 1); ++c) dense[r][c] = gen.next();
        auto m = HessenbergMatrix::from_generator(n, [&](int r, int c) { return dense[r][c]; });
        expect_eq(suite, "det_hessenberg vs cofactor", n, t, det_hessenberg(m),
                  det_cofactor_reference(dense));
    }

    for (int j = 0; j <= b.j_max; ++j) {
        Rational expect = bernoulli(j + 1) / Rational(factorial(j + 1));
        if (j % 2 == 0) expect = -expect;  // (-1)^{j+1}
        expect_eq(suite, "bernoulli_hessenberg_det", j, 0, bernoulli_hessenberg_det(j), expect);
    }

    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> a(12);
        for (auto& x : a) x = gen.next();
        std::vector<Rational> f(13);
        f[0] = 1;
        for (int i = 1; i <= 12; ++i) f[i] = a[i - 1];
        TruncatedSeries inv = series_invert(TruncatedSeries(f));
        for (int j = 1; j <= 12; ++j)
            expect_eq(suite, "wronski vs series_invert", j, t, wronski_inverse_coeff(a, j),
                      inv[j]);
    }

    for (int t = 0; t < 20; ++t) {
        Rational theta = gen.next();
        for (int j = 1; j <= 10; ++j)
            expect_eq(suite, "rising_factorial_hessenberg_det", j, t,
                      rising_factorial_hessenberg_det(theta, j) * Rational(factorial(j)),
                      rising_factorial(theta, j));
    }

    // Whittaker on (1-v)(1-2v): smallest root 1/2; the error halves each stage.
    {
        const std::vector<Rational> lambda = {Rational(1), Rational(-3), Rational(2)};
        const Rational root(1, 2);
        Rational prev_err;
        for (int m = 1; m <= 8; ++m) {
            Rational err = (whittaker_root_partial_sum(lambda, m) - root).abs();
            if (m > 1) expect_true(suite, "whittaker error decreasing", m, 0, err < prev_err);
            prev_err = err;
        }
        Rational err20 = (whittaker_root_partial_sum(lambda, 20) - root).abs();
        expect_true(suite, "whittaker error < 1e-6 at 20 terms", 20, 0,
                    err20 < Rational(1, 1000000));
    }
    return suite;
}

SuiteResult verify_series(const VerifyBounds& b) {
    SuiteResult suite;
    suite.name = "series";

    RationalGen gen(0x5e41e5u);
    for (int t = 0; t < 100; ++t) {
        TruncatedSeries a(16);
        a[0] = gen.next_nonzero();
        for (int i = 1; i < 16; ++i) a[i] = gen.next();
        TruncatedSeries prod = series_mul(a, series_invert(a));
        bool ok = prod[0] == Rational(1);
        for (int i = 1; i < 16; ++i) ok = ok && prod[i].is_zero();
        expect_true(suite, "series_invert round trip", t, 0, ok);
    }

    {
        TruncatedSeries g1 = oracle_G_series(1, 21);
        for (int k = 0; k <= 20; ++k) {
            Rational expect = bernoulli(k) / Rational(factorial(k));
            if (k % 2 == 1) expect = -expect;
            expect_eq(suite, "G_1 coefficients = (-1)^k B_k/k!", 1, k, g1[k], expect);
        }
        TruncatedSeries binv = series_invert(series_expm1_over_v(41));
        for (int n = 0; n <= 40; ++n)
            expect_eq(suite, "bernoulli vs series inversion", n, 0,
                      Rational(factorial(n)) * binv[n], bernoulli(n));
    }

    for (int j = 1; j <= std::min(b.j_max, 6); ++j) {
        const int order = 20;
        TruncatedSeries frak = oracle_frak_g_series(j, order);
        TruncatedSeries rhs = series_truncate(
                series_shift(series_mul(series_exp(order), oracle_gamma_series(j, order)), j + 1),
                order);
        for (int k = 0; k < order; ++k)
            expect_eq(suite, "frak g = v^{j+1} e^v g_j", j, k, frak[k], rhs[k]);
    }
    return suite;
}

std::vector<SuiteResult> verify_all(const VerifyBounds& b) {
    return {verify_routes(b), verify_bell(b), verify_hessenberg(b), verify_series(b)};
}

}  // namespace cik
