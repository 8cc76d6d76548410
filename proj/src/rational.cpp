#include "cik/rational.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cik {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: malformed \"" + std::string(s) + "\"");
    }
}

Rational Rational::from_double_exact(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("Rational: non-finite double");
    Rational r;
    r.v_ = mpq_class(d);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

double Rational::to_double() const {
    const double d0 = v_.get_d();  // truncated toward zero, off by at most 1 ulp
    if (!std::isfinite(d0)) return d0;
    const double inf = std::numeric_limits<double>::infinity();
    const double candidates[3] = {std::nextafter(d0, -inf), d0, std::nextafter(d0, inf)};

    double best = d0;
    Rational best_err;
    bool have = false;
    for (double c : candidates) {
        if (!std::isfinite(c)) continue;
        Rational err = (*this - from_double_exact(c)).abs();
        if (!have || err < best_err) {
            best = c;
            best_err = err;
            have = true;
        } else if (err == best_err) {
            // exact tie: round to even mantissa
            if ((std::bit_cast<std::uint64_t>(c) & 1u) == 0) best = c;
        }
    }
    return best;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (e < 0 && r.is_zero()) throw std::domain_error("pow: zero base, negative exponent");
    const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational p(pow(r.num(), ue), pow(r.den(), ue));
    return e < 0 ? Rational(1) / p : p;
}

Integer pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace cik
