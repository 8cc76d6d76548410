#include "cik/memo.hpp"

#include "cik/combinatorics.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cik {

MemoTables& MemoTables::instance() {
    static MemoTables tables;
    return tables;
}

MemoTables::MemoTables() : limit_(-1) {
    if (const char* env = std::getenv("CIK_MEMO_LIMIT")) {
        limit_ = std::atoi(env);
        if (limit_ < 0) limit_ = -1;
    }
    factorials_ = {Integer(1)};
    stirling_rows_ = {{Integer(1)}};  // S(0,0) = 1
    bernoulli_ = {Rational(1)};
}

void MemoTables::check_limit(int n, const char* table) const {
    if (limit_ >= 0 && n > limit_)
        throw std::runtime_error(std::string(table) + " index " + std::to_string(n) +
                                 " exceeds CIK_MEMO_LIMIT=" + std::to_string(limit_));
}

void MemoTables::grow_factorials(int n) {
    std::unique_lock lock(fact_mu_);
    for (int m = static_cast<int>(factorials_.size()); m <= n; ++m)
        factorials_.push_back(factorials_.back() * m);
}

Integer MemoTables::factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    check_limit(n, "factorial");
    {
        std::shared_lock lock(fact_mu_);
        if (n < static_cast<int>(factorials_.size())) return factorials_[n];
    }
    grow_factorials(n);
    std::shared_lock lock(fact_mu_);
    return factorials_[n];
}

void MemoTables::grow_stirling(int n) {
    std::unique_lock lock(stir_mu_);
    for (int m = static_cast<int>(stirling_rows_.size()); m <= n; ++m) {
        const auto& prev = stirling_rows_.back();
        std::vector<Integer> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (int k = 1; k < m; ++k) row[k] = k * prev[k] + prev[k - 1];
        stirling_rows_.push_back(std::move(row));
    }
}

Integer MemoTables::stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    check_limit(n, "stirling2");
    {
        std::shared_lock lock(stir_mu_);
        if (n < static_cast<int>(stirling_rows_.size())) return stirling_rows_[n][k];
    }
    grow_stirling(n);
    std::shared_lock lock(stir_mu_);
    return stirling_rows_[n][k];
}

void MemoTables::grow_bernoulli(int n) {
    // Inversion of (e^v-1)/v = 1 + sum a_i v^i, a_i = 1/(i+1)!:
    // b_0 = 1, b_m = -sum_{i=1}^m a_i b_{m-i}, and B_m = m! b_m.
    // Cross-checked against B_m = sum_i (-1)^i C(m+1,i+1)/C(m+i,i) S(m+i,i).
    std::unique_lock lock(bern_mu_);
    const int have = static_cast<int>(bernoulli_.size());
    if (n < have) return;

    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int i = 1; i <= m; ++i)
            acc += b[m - i] / Rational(factorial(i + 1));
        b[m] = -acc;
    }
    for (int m = have; m <= n; ++m) {
        Rational by_inversion = Rational(factorial(m)) * b[m];
        Rational by_stirling;
        for (int i = 0; i <= m; ++i) {
            Rational term = Rational(binomial(m + 1, i + 1) * stirling2(m + i, i),
                                     binomial(m + i, i));
            by_stirling += (i % 2 == 0) ? term : -term;
        }
        if (by_inversion != by_stirling)
            throw std::logic_error("bernoulli: series-inversion and Stirling-sum routes disagree at n=" +
                                   std::to_string(m) + ": " + by_inversion.str() + " vs " +
                                   by_stirling.str());
        bernoulli_.push_back(by_inversion);
    }
}

Rational MemoTables::bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative argument");
    check_limit(n, "bernoulli");
    {
        std::shared_lock lock(bern_mu_);
        if (n < static_cast<int>(bernoulli_.size())) return bernoulli_[n];
    }
    grow_bernoulli(n);
    std::shared_lock lock(bern_mu_);
    return bernoulli_[n];
}

void MemoTables::prewarm(int n) {
    if (n < 0) return;
    factorial(3 * n + 4);
    stirling2(2 * n + 2, 0);
    bernoulli(n + 2);
}

}  // namespace cik
