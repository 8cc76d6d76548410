#pragma once

#include <string>
#include <vector>

#include "cik/hessenberg.hpp"
#include "cik/rational.hpp"

namespace cik {

struct VerifyFailure {
    std::string route;  // which identity / pair of routes
    int j = 0;
    int k = 0;
    std::string lhs;
    std::string rhs;
};

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct VerifyBounds {
    int j_max = 9;
    int k_max = 12;
};

/// Five at-zero routes plus the series oracle agree cell-wise; the k < j-1
/// band vanishes; gamma/C route agreement against each other and the oracle.
SuiteResult verify_routes(const VerifyBounds& b);

/// Bell polynomial identities: at ones = Stirling, at reciprocals = closed
/// form, scaling identity on randomized inputs.
SuiteResult verify_bell(const VerifyBounds& b);

/// Hessenberg identities: determinant vs cofactor reference, Bernoulli
/// determinant, Wronski vs series inversion, rising-factorial determinant,
/// Whittaker root convergence.
SuiteResult verify_hessenberg(const VerifyBounds& b);

/// Series arithmetic invariants: inversion round trip, G_1 coefficients are
/// signed Bernoulli numbers, frak g_j = v^{j+1} e^v g_j, Bernoulli cross-check
/// against series inversion.
SuiteResult verify_series(const VerifyBounds& b);

std::vector<SuiteResult> verify_all(const VerifyBounds& b);

/// Reference determinant by cofactor expansion along the first row; O(n!),
/// test oracle only.
Rational det_cofactor_reference(const std::vector<std::vector<Rational>>& m);

/// Deterministic small-rational generator for the randomized suites.
class RationalGen {
public:
    explicit RationalGen(unsigned long long seed);
    /// numerator in [-9, 9], denominator in [1, 9]
    Rational next();
    /// nonzero variant
    Rational next_nonzero();
    long next_index(long n);  // uniform in [0, n)

private:
    unsigned long long state_;
    unsigned long long next_u64();
};

}  // namespace cik
