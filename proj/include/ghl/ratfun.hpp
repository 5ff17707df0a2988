#pragma once

#include "ghl/numeric.hpp"
#include "ghl/polynomial.hpp"
#include "ghl/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace ghl {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {
// Rescale num/den so den is primitive with positive leading coefficient
// (exact) or monic (numeric).
void normalize_content(Polynomial<Rational>& num, Polynomial<Rational>& den);
void normalize_content(Polynomial<Numeric>& num, Polynomial<Numeric>& den);
std::string canonical_text(const Polynomial<Rational>& num, const Polynomial<Rational>& den);
std::string canonical_text(const Polynomial<Numeric>& num, const Polynomial<Numeric>& den);
} // namespace detail

// Element of K(vars). Not necessarily gcd-reduced; equality is decided by
// cross-multiplication.
template <class K>
class RatFun {
public:
    using Poly = Polynomial<K>;
    using Coeff = K;

    RatFun() : den_(1L) {}
    RatFun(long c) : num_(c), den_(1L) {}
    explicit RatFun(const K& c) : num_(c), den_(1L) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(1L) {}
    RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }

    static RatFun variable(const std::string& v) { return RatFun(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool depends_on(const std::string& v) const { return num_.depends_on(v) || den_.depends_on(v); }
    int total_degree() const { return std::max(num_.total_degree_max(), den_.total_degree_max()); }

    RatFun operator-() const { RatFun r = *this; r.num_ = -r.num_; return r; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        if (a.den_.is_constant() && b.den_.is_constant()) {
            RatFun r;
            r.num_ = (a.num_ * b.num_).scaled(K(1) / (a.den_.constant_value() * b.den_.constant_value()));
            return r;
        }
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inv() const {
        if (num_.is_zero()) throw std::domain_error("division by the zero rational function");
        return RatFun(den_, num_);
    }
    RatFun pow(int n) const {
        if (n < 0) return inv().pow(-n);
        RatFun r;
        r.num_ = num_.pow(static_cast<unsigned>(n));
        r.den_ = den_.pow(static_cast<unsigned>(n));
        return r;
    }
    RatFun scaled(const K& k) const {
        RatFun r = *this;
        r.num_ = num_.scaled(k);
        if (r.num_.is_zero()) r.den_ = Poly(1L);
        return r;
    }

    K evaluate(const std::map<std::string, K>& at) const {
        K d = den_.evaluate(at);
        if (d.is_zero()) throw PoleError("pole at assignment " + describe(at));
        return num_.evaluate(at) / d;
    }
    RatFun substitute(const std::string& v, const K& value) const {
        if (!depends_on(v)) return *this;
        Poly d = den_.substitute(v, value);
        if (d.is_zero()) throw PoleError("pole at " + v + "=" + value.str());
        return RatFun(num_.substitute(v, value), d);
    }
    RatFun substitute(const std::map<std::string, K>& at) const {
        RatFun r = *this;
        for (auto& [k, v] : at) r = r.substitute(k, v);
        return r;
    }

    // Canonical text: fully expanded, integer coefficients where possible.
    std::string str() const { return detail::canonical_text(num_, den_); }

private:
    static std::string describe(const std::map<std::string, K>& at) {
        std::string s;
        for (auto& [k, v] : at) s += (s.empty() ? "" : ",") + k + "=" + v.str();
        return s;
    }

    static RatFun add(const RatFun& a, const RatFun& b, bool sub) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return sub ? -b : b;
        RatFun r;
        if (a.den_.is_constant() && b.den_.is_constant()) {
            K da = a.den_.constant_value(), db = b.den_.constant_value();
            Poly bn = sub ? -b.num_ : b.num_;
            r.num_ = a.num_.scaled(K(1) / da) + bn.scaled(K(1) / db);
            return r;
        }
        if (a.den_.equals(b.den_)) {
            r.num_ = sub ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
            r.reduce();
            return r;
        }
        // Shared non-monomial part: combine over the lcm of the monomial parts.
        auto vs = Poly::union_vars(Poly::union_vars(a.num_.vars(), a.den_.vars()),
                                   Poly::union_vars(b.num_.vars(), b.den_.vars()));
        Poly da = a.den_.with_vars(vs), db = b.den_.with_vars(vs);
        Exponent ma = da.monomial_gcd(), mb = db.monomial_gcd();
        Poly pa = da.divided_by_monomial(ma), pb = db.divided_by_monomial(mb);
        if (pa.equals(pb)) {
            Exponent l(vs.size()), fa(vs.size()), fb(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) {
                l[i] = std::max(ma[i], mb[i]);
                fa[i] = static_cast<std::uint16_t>(l[i] - ma[i]);
                fb[i] = static_cast<std::uint16_t>(l[i] - mb[i]);
            }
            Poly na = a.num_.with_vars(vs).times_monomial(fa);
            Poly nb = b.num_.with_vars(vs).times_monomial(fb);
            return RatFun(sub ? na - nb : na + nb, pa.times_monomial(l));
        }
        Poly n = sub ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
        return RatFun(n, a.den_ * b.den_);
    }

    void reduce() {
        if (num_.is_zero()) { den_ = Poly(1L); return; }
        auto vs = Poly::union_vars(num_.vars(), den_.vars());
        num_ = num_.with_vars(vs);
        den_ = den_.with_vars(vs);
        Exponent gn = num_.monomial_gcd(), gd = den_.monomial_gcd();
        bool any = false;
        for (std::size_t i = 0; i < gn.size(); ++i) {
            gn[i] = std::min(gn[i], gd[i]);
            any = any || gn[i];
        }
        if (any) {
            num_ = num_.divided_by_monomial(gn);
            den_ = den_.divided_by_monomial(gn);
        }
        detail::normalize_content(num_, den_);
        if constexpr (K::exact) {
            if (!den_.is_monomial()) {
                Poly q;
                if (num_.total_degree_max() >= den_.total_degree_max() && num_.divide_exact(den_, q)) {
                    num_ = q;
                    den_ = Poly(1L);
                } else if (!num_.is_constant() && den_.total_degree_max() >= num_.total_degree_max() &&
                           den_.divide_exact(num_, q)) {
                    num_ = Poly(1L);
                    den_ = q;
                    detail::normalize_content(num_, den_);
                }
            }
        }
    }

    Poly num_, den_;
};

template <class K>
bool is_zero(const RatFun<K>& a) { return a.is_zero(); }

template <class K>
bool are_equal(const RatFun<K>& a, const RatFun<K>& b) {
    return (a.num() * b.den()).equals(b.num() * a.den());
}

using Exact = RatFun<Rational>;
using Approx = RatFun<Numeric>;

} // namespace ghl
