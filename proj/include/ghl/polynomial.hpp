#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghl {

struct DegreeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total-degree cap for products; process-wide, default 64.
int max_degree();
void set_max_degree(int cap);

using Exponent = std::vector<std::uint16_t>;

inline unsigned total_degree(const Exponent& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded lex, largest first. Variables are sorted alphabetically, so the
// first slot is the alphabetically smallest name.
struct GrlexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

template <class K>
class Polynomial {
public:
    using Terms = std::map<Exponent, K, GrlexDesc>;

    Polynomial() = default;
    Polynomial(long c) {
        if (c != 0) terms_.emplace(Exponent{}, K(c));
    }
    explicit Polynomial(const K& c) {
        if (!c.is_zero()) terms_.emplace(Exponent{}, c);
    }

    static Polynomial variable(const std::string& name) {
        Polynomial p;
        p.vars_ = {name};
        p.terms_.emplace(Exponent{1}, K(1));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }
    K constant_value() const {
        for (auto& [e, c] : terms_)
            if (total_degree(e) == 0) return c;
        return K(0);
    }
    K leading_coeff() const { return terms_.empty() ? K(0) : terms_.begin()->second; }
    const Exponent& leading_exponent() const { return terms_.begin()->first; }

    int total_degree_max() const {
        return terms_.empty() ? 0 : static_cast<int>(total_degree(terms_.begin()->first));
    }
    int degree_in(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return 0;
        std::size_t i = it - vars_.begin();
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max<int>(d, e[i]);
        return d;
    }
    bool depends_on(const std::string& v) const { return degree_in(v) > 0; }

    // Re-express over a superset of the variable list.
    Polynomial with_vars(const std::vector<std::string>& vs) const {
        if (vs == vars_) return *this;
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(vs.begin(), vs.end(), vars_[i]);
            if (it == vs.end() || *it != vars_[i]) throw std::logic_error("with_vars: not a superset");
            where[i] = it - vs.begin();
        }
        Polynomial r;
        r.vars_ = vs;
        for (auto& [e, c] : terms_) {
            Exponent ne(vs.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
        if (a == b) return a;
        std::vector<std::string> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return u;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        if (a.total_degree_max() + b.total_degree_max() > max_degree())
            throw DegreeGuardError("degree guard exceeded: total degree " +
                                   std::to_string(a.total_degree_max() + b.total_degree_max()) + " > " +
                                   std::to_string(max_degree()));
        auto vs = union_vars(a.vars_, b.vars_);
        Polynomial abuf, bbuf;
        const Polynomial* xp = &a;
        const Polynomial* y = &b;
        if (a.vars_ != vs) { abuf = a.with_vars(vs); xp = &abuf; }
        if (b.vars_ != vs) { bbuf = b.with_vars(vs); y = &bbuf; }
        Polynomial r;
        r.vars_ = vs;
        Exponent e(vs.size());
        for (auto& [ea, ca] : xp->terms_) {
            for (auto& [eb, cb] : y->terms_) {
                for (std::size_t i = 0; i < vs.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                K prod = ca * cb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    if (!prod.is_zero()) r.terms_.emplace(e, prod);
                } else {
                    K s = it->second + prod;
                    if (s.cancels(it->second, prod)) r.terms_.erase(it);
                    else it->second = s;
                }
            }
        }
        return r;
    }

    Polynomial scaled(const K& k) const {
        if (k.is_zero()) return Polynomial();
        Polynomial r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            K v = c * k;
            if (!v.is_zero()) r.terms_.emplace(e, v);
        }
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial result(1L), base = *this;
        while (n) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    // componentwise minimum exponent over all terms (aligned to vars())
    Exponent monomial_gcd() const {
        Exponent g;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (first) { g = e; first = false; }
            else for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
        }
        if (first) g.assign(vars_.size(), 0);
        return g;
    }
    Polynomial divided_by_monomial(const Exponent& m) const {
        Polynomial r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            Exponent ne = e;
            for (std::size_t i = 0; i < ne.size(); ++i) {
                if (ne[i] < m[i]) throw std::logic_error("monomial does not divide");
                ne[i] = static_cast<std::uint16_t>(ne[i] - m[i]);
            }
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }
    Polynomial times_monomial(const Exponent& m) const {
        Polynomial r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            Exponent ne = e;
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = static_cast<std::uint16_t>(ne[i] + m[i]);
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    // Exact division: true and q = *this / d when d divides *this.
    bool divide_exact(const Polynomial& d, Polynomial& q) const {
        if (d.is_zero()) return false;
        auto vs = union_vars(vars_, d.vars_);
        Polynomial p = with_vars(vs), dd = d.with_vars(vs);
        Polynomial quo;
        quo.vars_ = vs;
        const Exponent& ld = dd.leading_exponent();
        K lc = dd.leading_coeff();
        std::size_t guard = 0, limit = 4 * (p.size() + 1) * (dd.size() + 1) + 64;
        while (!p.is_zero()) {
            if (++guard > limit) return false;
            const Exponent& lp = p.leading_exponent();
            Exponent m(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (lp[i] < ld[i]) return false;
                m[i] = static_cast<std::uint16_t>(lp[i] - ld[i]);
            }
            K c = p.leading_coeff() / lc;
            Polynomial t;
            t.vars_ = vs;
            t.terms_.emplace(m, c);
            quo = quo + t;
            p = p - dd.times_monomial(m).scaled(c);
        }
        q = quo;
        return true;
    }

    K evaluate(const std::map<std::string, K>& at) const {
        std::vector<K> vals;
        vals.reserve(vars_.size());
        for (auto& v : vars_) {
            auto it = at.find(v);
            if (it == at.end()) {
                if (degree_in(v) == 0) { vals.push_back(K(0)); continue; }
                throw std::invalid_argument("no value for parameter '" + v + "'");
            }
            vals.push_back(it->second);
        }
        K sum(0);
        for (auto& [e, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) term *= vals[i];
            sum += term;
        }
        return sum;
    }

    Polynomial substitute(const std::string& var, const K& value) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
        if (it == vars_.end() || *it != var) return *this;
        std::size_t idx = it - vars_.begin();
        Polynomial r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            K k = c;
            for (unsigned j = 0; j < e[idx]; ++j) k *= value;
            Exponent ne = e;
            ne[idx] = 0;
            Polynomial t;
            t.vars_ = vars_;
            if (!k.is_zero()) t.terms_.emplace(std::move(ne), k);
            r = r + t;
        }
        return r;
    }

    bool equals(const Polynomial& o) const {
        auto vs = union_vars(vars_, o.vars_);
        Polynomial a = with_vars(vs), b = o.with_vars(vs);
        if constexpr (K::exact) {
            if (a.terms_.size() != b.terms_.size()) return false;
            auto it = b.terms_.begin();
            for (auto& [e, c] : a.terms_) {
                if (it->first != e || !(it->second == c)) return false;
                ++it;
            }
            return true;
        } else {
            // coefficientwise hybrid comparison; a missing term counts as 0
            auto ia = a.terms_.begin(), ib = b.terms_.begin();
            GrlexDesc less;
            while (ia != a.terms_.end() || ib != b.terms_.end()) {
                if (ib == b.terms_.end() || (ia != a.terms_.end() && less(ia->first, ib->first))) {
                    if (!ia->second.is_zero()) return false;
                    ++ia;
                } else if (ia == a.terms_.end() || less(ib->first, ia->first)) {
                    if (!ib->second.is_zero()) return false;
                    ++ib;
                } else {
                    if (!ia->second.approx_eq(ib->second)) return false;
                    ++ia, ++ib;
                }
            }
            return true;
        }
    }

    std::string monomial_str(const Exponent& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += '*';
            s += vars_[i];
            if (e[i] > 1) s += '^' + std::to_string(e[i]);
        }
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [e, c] : terms_) {
            bool neg = c.sign() < 0;
            K a = neg ? -c : c;
            std::string mono = monomial_str(e);
            std::string body;
            bool unit;
            if constexpr (K::exact) unit = a.is_one();
            else unit = a.to_double() == 1.0;
            if (mono.empty()) body = a.str();
            else if (unit) body = mono;
            else body = a.str() + "*" + mono;
            if (first) out += (neg ? "-" : "") + body;
            else out += (neg ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

    // build directly from terms (used by parsers/tests); zero coefficients dropped
    static Polynomial from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponent, K>>& ts) {
        Polynomial p;
        p.vars_ = std::move(vars);
        for (auto& [e, c] : ts) {
            Polynomial t;
            t.vars_ = p.vars_;
            if (!c.is_zero()) t.terms_.emplace(e, c);
            p = p + t;
        }
        return p;
    }

private:
    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        auto vs = union_vars(a.vars_, b.vars_);
        Polynomial r = a.vars_ == vs ? a : a.with_vars(vs);
        Polynomial ybuf;
        const Polynomial* y = &b;
        if (b.vars_ != vs) { ybuf = b.with_vars(vs); y = &ybuf; }
        for (auto& [e, c] : y->terms_) {
            K add = subtract ? -c : c;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(e, add);
            else {
                K s = it->second + add;
                if (s.cancels(it->second, add)) r.terms_.erase(it);
                else it->second = s;
            }
        }
        return r;
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

} // namespace ghl
