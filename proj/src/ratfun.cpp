#include "ghl/ratfun.hpp"

#include <atomic>

namespace ghl {

static std::atomic<int> g_max_degree{64};

int max_degree() { return g_max_degree.load(std::memory_order_relaxed); }
void set_max_degree(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be positive");
    g_max_degree.store(cap, std::memory_order_relaxed);
}

namespace detail {

namespace {

// lcm of coefficient denominators and gcd of the resulting integer numerators
void integer_content(const Polynomial<Rational>& p, mpz_class& lcm_den, mpz_class& gcd_num) {
    for (auto& [e, c] : p.terms()) {
        mpz_class d = c.denominator();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    for (auto& [e, c] : p.terms()) {
        mpz_class n = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
}

bool is_plain_power(const Polynomial<Rational>& p) {
    if (!p.is_monomial()) return false;
    auto& [e, c] = *p.terms().begin();
    if (!c.is_one()) return false;
    int nz = 0;
    for (auto x : e) nz += x != 0;
    return nz <= 1;
}

} // namespace

void normalize_content(Polynomial<Rational>& num, Polynomial<Rational>& den) {
    mpz_class l = 1, g = 0;
    integer_content(den, l, g);
    Rational c(g, l);
    if (den.leading_coeff().sign() < 0) c = -c;
    if (c.is_one()) return;
    Rational k = Rational(1) / c;
    num = num.scaled(k);
    den = den.scaled(k);
}

void normalize_content(Polynomial<Numeric>& num, Polynomial<Numeric>& den) {
    Numeric lc = den.leading_coeff();
    if (lc.value() == 1.0) return;
    Numeric k = Numeric(1.0, lc.tolerance()) / lc;
    num = num.scaled(k);
    den = den.scaled(k);
    if (den.is_constant()) den = Polynomial<Numeric>(1L);
}

std::string canonical_text(const Polynomial<Rational>& num, const Polynomial<Rational>& den) {
    if (num.is_zero()) return "0";
    mpz_class l = 1, g = 0;
    integer_content(num, l, g);
    integer_content(den, l, g);
    // integer_content() reuses l when accumulating g, so recompute g over both
    g = 0;
    for (auto* p : {&num, &den})
        for (auto& [e, c] : p->terms()) {
            mpz_class n = c.numerator() * (l / c.denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    Rational k(l, g);
    Polynomial<Rational> n = num.scaled(k), d = den.scaled(k);
    std::string ns = n.str();
    if (d.is_constant() && d.constant_value().is_one()) return ns;
    if (n.size() > 1) ns = "(" + ns + ")";
    std::string ds = d.str();
    bool bare = d.is_constant() || is_plain_power(d);
    return ns + " / " + (bare ? ds : "(" + ds + ")");
}

std::string canonical_text(const Polynomial<Numeric>& num, const Polynomial<Numeric>& den) {
    if (num.is_zero()) return "0";
    std::string ns = num.str();
    if (den.is_constant() && den.constant_value().value() == 1.0) return ns;
    if (num.size() > 1) ns = "(" + ns + ")";
    return ns + " / (" + den.str() + ")";
}

} // namespace detail
} // namespace ghl
