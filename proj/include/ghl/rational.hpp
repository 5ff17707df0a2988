#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ghl {

// Exact rational number. GMP keeps mpq_class canonical (den > 0, reduced).
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d);

    // "12", "-3/4"; throws std::invalid_argument
    static Rational parse(std::string_view text);
    // exact value of a decimal literal such as "0.125" or "1e-3"
    static Rational from_decimal(std::string_view text);

    static constexpr bool exact = true;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool approx_eq(const Rational& o) const { return v_ == o.v_; }
    // used by polynomial addition to decide whether a sum cancelled
    bool cancels(const Rational&, const Rational&) const { return is_zero(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }
    double to_double() const { return v_.get_d(); }
    Rational abs() const { return Rational(::abs(v_)); }

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

} // namespace ghl
