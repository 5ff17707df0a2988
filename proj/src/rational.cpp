#include "ghl/rational.hpp"
#include "ghl/numeric.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ghl {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view n = s.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw std::invalid_argument("not a rational literal: " + std::string(text));
    mpz_class num(std::string(n), 10), den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
    Rational r(num, den);
    return neg ? -r : r;
}

Rational Rational::from_decimal(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        auto [p, ec] = std::from_chars(es.data() + (es.size() && es[0] == '+' ? 1 : 0), es.data() + es.size(), exp10);
        if (ec != std::errc() || p != es.data() + es.size())
            throw std::invalid_argument("bad exponent in " + std::string(text));
        s = s.substr(0, e);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exp10 -= static_cast<long>(s.size() - dot - 1);
    } else {
        digits = std::string(s);
    }
    if (!all_digits(digits)) throw std::invalid_argument("not a decimal literal: " + std::string(text));
    mpz_class num(digits, 10), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Rational r = exp10 < 0 ? Rational(num, scale) : Rational(num * scale, 1);
    return neg ? -r : r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

// ---- Numeric -------------------------------------------------------------

static std::atomic<double> g_tol{1e-9};

double default_tolerance() { return g_tol.load(std::memory_order_relaxed); }
void set_default_tolerance(double tol) {
    if (!(tol >= 0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be finite and >= 0");
    g_tol.store(tol, std::memory_order_relaxed);
}

bool hybrid_close(double a, double b, double tol) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

Numeric::Numeric(double v, double tol) : v_(v), tol_(tol) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite numeric value");
    if (!(tol >= 0) || !std::isfinite(tol)) throw std::domain_error("invalid tolerance");
}

bool Numeric::approx_eq(const Numeric& o) const {
    return hybrid_close(v_, o.v_, std::max(tol_, o.tol_));
}

bool Numeric::cancels(const Numeric& a, const Numeric& b) const {
    double t = std::max(a.tol_, b.tol_);
    double scale = std::max({1.0, std::fabs(a.v_), std::fabs(b.v_)});
    return std::fabs(v_) <= t * scale;
}

Numeric Numeric::sqrt() const {
    if (v_ < 0) {
        if (is_zero()) return Numeric(0.0, tol_);
        throw std::domain_error("sqrt of negative value");
    }
    return Numeric(std::sqrt(v_), tol_);
}

std::string Numeric::str() const {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v_);
    (void)ec;
    return std::string(buf, p);
}

Numeric& Numeric::operator+=(const Numeric& o) { *this = Numeric(v_ + o.v_, std::max(tol_, o.tol_)); return *this; }
Numeric& Numeric::operator-=(const Numeric& o) { *this = Numeric(v_ - o.v_, std::max(tol_, o.tol_)); return *this; }
Numeric& Numeric::operator*=(const Numeric& o) { *this = Numeric(v_ * o.v_, std::max(tol_, o.tol_)); return *this; }
Numeric& Numeric::operator/=(const Numeric& o) {
    if (o.v_ == 0.0) throw std::domain_error("division by zero");
    *this = Numeric(v_ / o.v_, std::max(tol_, o.tol_));
    return *this;
}

} // namespace ghl
