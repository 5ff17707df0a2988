#pragma once

#include "ghl/forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghl {

// Structure constants of g = h + m in an adapted frame: global indices
// 0..q-1 span the isotropy h, q..q+2m-1 the complement with the standard
// complex structure and inner product.
template <class K>
struct BracketSpec {
    using S = RatFun<K>;

    std::string name;
    int q = 0;
    int m = 1;
    std::vector<std::string> params;
    Bracket<S> mu;

    BracketSpec() = default;
    BracketSpec(std::string name_, int q_, int m_, std::vector<std::string> params_)
        : name(std::move(name_)), q(q_), m(m_), params(std::move(params_)), mu(q_ + 2 * m_) {}

    int dim() const { return q + 2 * m; }
    int mdim() const { return 2 * m; }
};

template <class K>
bool spec_equal(const BracketSpec<K>& a, const BracketSpec<K>& b) {
    if (a.q != b.q || a.m != b.m || a.params != b.params) return false;
    for (int x = 0; x < a.dim(); ++x)
        for (int y = x + 1; y < a.dim(); ++y)
            for (int c = 0; c < a.dim(); ++c)
                if (!are_equal(a.mu.at(x, y)[c], b.mu.at(x, y)[c])) return false;
    return true;
}

struct Condition {
    std::string name;   // h1 .. h5
    bool pass = true;
    std::string detail; // witness on failure
};

struct ValidationReport {
    std::vector<Condition> conditions;
    bool integrable = false;
    // h1 to h4; h5 is informational
    bool ok() const {
        for (auto& c : conditions)
            if (c.name != "h5" && !c.pass) return false;
        return true;
    }
};

// Projections of mu restricted to the complement: mu_h(X,Y) (q components)
// and mu_m(X,Y) (2m components), local indices 0..2m-1.
template <class K>
struct SplitBracket {
    int q = 0, n = 0;
    std::vector<Vec<RatFun<K>>> h, m; // index x*n+y
    const Vec<RatFun<K>>& mu_h(int x, int y) const { return h[x * n + y]; }
    const Vec<RatFun<K>>& mu_m(int x, int y) const { return m[x * n + y]; }
};

template <class K>
SplitBracket<K> split_bracket(const BracketSpec<K>& spec);

// N(X,Y) = -mu(IX,IY) + mu(X,Y) + I mu(IX,Y) + I mu(X,IY) with mu the m-part; index x*n+y
template <class K>
std::vector<Vec<RatFun<K>>> nijenhuis(const BracketSpec<K>& spec);

template <class K>
ValidationReport validate(const BracketSpec<K>& spec);

// Drops the isotropy kernel {Z : mu(Z, m) = 0}. Returns the reduced spec; its
// q is the effective isotropy dimension.
template <class K>
BracketSpec<K> reduce_non_effective(const BracketSpec<K>& spec);

// c.mu: unchanged on h ^ g, mu_h / c^2, mu_m / c
template <class K>
BracketSpec<K> rescale(const BracketSpec<K>& spec, const RatFun<K>& c);

// Substitutes parameter values; the substituted names leave the parameter list.
template <class K>
BracketSpec<K> instantiate(const BracketSpec<K>& spec, const std::map<std::string, K>& at);

// Exact to floating conversion (used for sweeps with the numeric backend).
BracketSpec<Numeric> to_numeric(const BracketSpec<Rational>& spec);

// label of a global basis index
std::string basis_label(int i);

} // namespace ghl
