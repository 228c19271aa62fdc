#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecci {

/// Arbitrary-precision rational kept in reduced form (gcd(|num|, den) = 1,
/// den >= 1). All comparisons and arithmetic are exact; rendering to decimal
/// happens only in reports.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(std::string_view s) {
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        q.canonicalize();
        return Rational(q);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Decimal approximation, `sig` significant digits.
    std::string decimal(int sig = 12) const {
        mpf_class f(v_, 256);
        char buf[128];
        gmp_snprintf(buf, sizeof buf, "%.*Fg", sig, f.get_mpf_t());
        return buf;
    }

    double to_double() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Rational frac(long num, long den) { return Rational(num, den); }

}  // namespace ecci
