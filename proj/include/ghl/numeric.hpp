#pragma once

#include <string>

namespace ghl {

// Default comparison tolerance for the floating backend. Process-wide,
// set once by the CLI before any computation starts.
double default_tolerance();
void set_default_tolerance(double tol);

// |a-b| <= tol * max(1, |a|, |b|)
bool hybrid_close(double a, double b, double tol);

// Floating scalar carrying its comparison tolerance.
class Numeric {
public:
    Numeric() : v_(0.0), tol_(default_tolerance()) {}
    Numeric(int n) : Numeric(static_cast<double>(n), default_tolerance()) {}
    Numeric(long n) : Numeric(static_cast<double>(n), default_tolerance()) {}
    explicit Numeric(double v) : Numeric(v, default_tolerance()) {}
    Numeric(double v, double tol); // rejects NaN/Inf and negative tol

    static constexpr bool exact = false;

    double value() const { return v_; }
    double tolerance() const { return tol_; }
    double to_double() const { return v_; }

    bool is_zero() const { return hybrid_close(v_, 0.0, tol_); }
    bool is_one() const { return hybrid_close(v_, 1.0, tol_); }
    int sign() const { return is_zero() ? 0 : (v_ < 0 ? -1 : 1); }
    bool approx_eq(const Numeric& o) const;
    // a sum cancelled when it is small relative to both summands
    bool cancels(const Numeric& a, const Numeric& b) const;

    Numeric abs() const { return Numeric(v_ < 0 ? -v_ : v_, tol_); }
    Numeric sqrt() const;

    std::string str() const; // shortest round-trip decimal

    Numeric operator-() const { return Numeric(-v_, tol_); }
    Numeric& operator+=(const Numeric& o);
    Numeric& operator-=(const Numeric& o);
    Numeric& operator*=(const Numeric& o);
    Numeric& operator/=(const Numeric& o);

    friend Numeric operator+(Numeric a, const Numeric& b) { return a += b; }
    friend Numeric operator-(Numeric a, const Numeric& b) { return a -= b; }
    friend Numeric operator*(Numeric a, const Numeric& b) { return a *= b; }
    friend Numeric operator/(Numeric a, const Numeric& b) { return a /= b; }
    friend bool operator==(const Numeric& a, const Numeric& b) { return a.approx_eq(b); }

private:
    double v_;
    double tol_;
};

} // namespace ghl
