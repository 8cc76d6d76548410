#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cik {

using Integer = mpz_class;

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1. Equality is structural equality of canonical forms.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
    /// on malformed input or zero denominator.
    static Rational from_string(std::string_view s);

    /// Exact value of a finite double (doubles are dyadic rationals).
    static Rational from_double_exact(double d);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical rendering "p/q" with "/q" suppressed when q = 1 ("12", "13/72", "-1/30").
    std::string str() const;

    /// Nearest double (round to nearest, ties to even). mpq_get_d truncates, so
    /// the result is fixed up by exact comparison against the adjacent doubles.
    double to_double() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// r^e for integer e; e < 0 requires r != 0 (throws std::domain_error).
Rational pow(const Rational& r, long e);

Integer pow(const Integer& base, unsigned long e);

}  // namespace cik
