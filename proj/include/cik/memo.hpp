#pragma once

#include <shared_mutex>
#include <vector>

#include "cik/rational.hpp"

namespace cik {

/// Process-wide caches of factorials, second-kind Stirling rows and Bernoulli
/// numbers. Entries are immutable once written; tables grow on demand and are
/// never evicted. Reads take a shared lock, growth an exclusive one, so values
/// may be read concurrently; prewarm() fills everything up front so a parallel
/// phase never has to take the write path.
///
/// The environment variable CIK_MEMO_LIMIT, when set, caps the largest index a
/// table may grow to; exceeding it throws std::runtime_error.
class MemoTables {
public:
    static MemoTables& instance();

    Integer factorial(int n);
    Integer stirling2(int n, int k);
    Rational bernoulli(int n);

    /// Grows all tables to cover indices used by the desk-scale formulas at
    /// bound n: factorials to jmax+2*kmax-ish, Stirling rows to 2n, Bernoulli
    /// to n+2.
    void prewarm(int n);

private:
    MemoTables();
    void check_limit(int n, const char* table) const;
    void grow_factorials(int n);
    void grow_stirling(int n);
    void grow_bernoulli(int n);

    int limit_;  // -1 = unlimited
    std::shared_mutex fact_mu_;
    std::vector<Integer> factorials_;
    std::shared_mutex stir_mu_;
    std::vector<std::vector<Integer>> stirling_rows_;
    std::shared_mutex bern_mu_;
    std::vector<Rational> bernoulli_;
};

}  // namespace cik
