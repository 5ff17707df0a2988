#include "ghl/spec.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ghl {

std::string basis_label(int i) { return "e" + std::to_string(i); }

namespace {

template <class S>
Vec<S> apply_I(const Vec<S>& v) {
    Vec<S> r(v.size());
    for (std::size_t k = 0; 2 * k + 1 < v.size(); ++k) {
        r[2 * k + 1] = v[2 * k];
        r[2 * k] = -v[2 * k + 1];
    }
    return r;
}

// I e_x = sign * e_{partner}
inline int I_partner(int x) { return x ^ 1; }
inline int I_sign(int x) { return (x % 2 == 0) ? 1 : -1; }

std::string triple(int a, int b, int c) {
    return "(" + basis_label(a) + "," + basis_label(b) + "," + basis_label(c) + ")";
}
std::string pair(int a, int b) { return "(" + basis_label(a) + "," + basis_label(b) + ")"; }

} // namespace

template <class K>
SplitBracket<K> split_bracket(const BracketSpec<K>& spec) {
    SplitBracket<K> s;
    s.q = spec.q;
    s.n = spec.mdim();
    int n = s.n, q = spec.q;
    s.h.assign(n * n, Vec<RatFun<K>>(q));
    s.m.assign(n * n, Vec<RatFun<K>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& v = spec.mu.at(q + x, q + y);
            for (int i = 0; i < q; ++i) s.h[x * n + y][i] = v[i];
            for (int c = 0; c < n; ++c) s.m[x * n + y][c] = v[q + c];
        }
    return s;
}

template <class K>
std::vector<Vec<RatFun<K>>> nijenhuis(const BracketSpec<K>& spec) {
    using S = RatFun<K>;
    auto sp = split_bracket(spec);
    int n = sp.n;
    std::vector<Vec<S>> N(n * n, Vec<S>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int ix = I_partner(x), iy = I_partner(y);
            S sx(static_cast<long>(I_sign(x))), sy(static_cast<long>(I_sign(y)));
            Vec<S> a = sp.mu_m(ix, iy), b = sp.mu_m(x, y);
            Vec<S> c = apply_I(sp.mu_m(ix, y)), d = apply_I(sp.mu_m(x, iy));
            for (int k = 0; k < n; ++k) N[x * n + y][k] = -(sx * sy * a[k]) + b[k] + sx * c[k] + sy * d[k];
        }
    return N;
}

template <class K>
ValidationReport validate(const BracketSpec<K>& spec) {
    using S = RatFun<K>;
    ValidationReport rep;
    int n = spec.dim(), q = spec.q;
    const auto& mu = spec.mu;

    {
        Condition c{"h1", true, ""};
        for (int a = 0; a < n && c.pass; ++a)
            for (int b = a + 1; b < n && c.pass; ++b)
                for (int d = b + 1; d < n && c.pass; ++d) {
                    Vec<S> j1 = mu.apply(mu.at(a, b), unit_vector<S>(n, d));
                    Vec<S> j2 = mu.apply(mu.at(b, d), unit_vector<S>(n, a));
                    Vec<S> j3 = mu.apply(mu.at(d, a), unit_vector<S>(n, b));
                    for (int k = 0; k < n; ++k)
                        if (!(j1[k] + j2[k] + j3[k]).is_zero()) {
                            c.pass = false;
                            c.detail = "Jacobi identity fails at " + triple(a, b, d);
                            break;
                        }
                }
        for (int a = 0; a < q && c.pass; ++a)
            for (int b = 0; b < n && c.pass; ++b) {
                const auto& v = mu.at(a, b);
                if (b < q) {
                    for (int k = q; k < n; ++k)
                        if (!v[k].is_zero()) {
                            c.pass = false;
                            c.detail = "isotropy is not a subalgebra: " + pair(a, b) + " has a component on " + basis_label(k);
                            break;
                        }
                } else {
                    for (int k = 0; k < q; ++k)
                        if (!v[k].is_zero()) {
                            c.pass = false;
                            c.detail = "complement is not isotropy-invariant: " + pair(a, b) + " has a component on " + basis_label(k);
                            break;
                        }
                }
            }
        rep.conditions.push_back(c);
    }
    {
        Condition c{"h2", true, ""};
        for (int z = 0; z < q && c.pass; ++z)
            for (int x = q; x < n && c.pass; ++x)
                for (int y = x; y < n && c.pass; ++y)
                    if (!(mu.at(z, x)[y] + mu.at(z, y)[x]).is_zero()) {
                        c.pass = false;
                        c.detail = "isotropy does not act skew-symmetrically at " + triple(z, x, y);
                    }
        rep.conditions.push_back(c);
    }
    {
        Condition c{"h3", true, ""};
        for (int z = 0; z < q && c.pass; ++z)
            for (int x = 0; x < spec.mdim() && c.pass; ++x) {
                int ix = I_partner(x);
                S sx(static_cast<long>(I_sign(x)));
                Vec<S> lhs(spec.mdim()), img(spec.mdim());
                for (int k = 0; k < spec.mdim(); ++k) {
                    lhs[k] = sx * mu.at(z, q + ix)[q + k];
                    img[k] = mu.at(z, q + x)[q + k];
                }
                Vec<S> rhs = apply_I(img);
                for (int k = 0; k < spec.mdim(); ++k)
                    if (!are_equal(lhs[k], rhs[k])) {
                        c.pass = false;
                        c.detail = "isotropy does not commute with I at " + pair(z, q + x);
                        break;
                    }
            }
        rep.conditions.push_back(c);
    }
    {
        Condition c{"h4", true, ""};
        if (q > 0) {
            RowSpace<S> rs(q);
            for (int x = q; x < n; ++x)
                for (int k = 0; k < n; ++k) {
                    std::vector<S> row(q);
                    for (int z = 0; z < q; ++z) row[z] = mu.at(z, x)[k];
                    rs.add(row);
                }
            if (rs.rank() < q) {
                c.pass = false;
                auto ker = rs.nullspace();
                std::string v;
                for (int z = 0; z < q; ++z) {
                    if (ker[0][z].is_zero()) continue;
                    if (!v.empty()) v += " + ";
                    v += "(" + ker[0][z].str() + ")*" + basis_label(z);
                }
                c.detail = "not effective: " + v + " acts trivially on the complement";
            }
        }
        rep.conditions.push_back(c);
    }
    {
        Condition c{"h5", true, ""};
        auto N = nijenhuis(spec);
        int m2 = spec.mdim();
        for (int x = 0; x < m2 && c.pass; ++x)
            for (int y = x + 1; y < m2 && c.pass; ++y)
                if (!vec_is_zero(N[x * m2 + y])) {
                    c.pass = false;
                    c.detail = "Nijenhuis tensor nonzero at " + pair(q + x, q + y);
                }
        rep.integrable = c.pass;
        rep.conditions.push_back(c);
    }
    return rep;
}

template <class K>
BracketSpec<K> reduce_non_effective(const BracketSpec<K>& spec) {
    using S = RatFun<K>;
    int n = spec.dim(), q = spec.q;
    if (q == 0) return spec;
    RowSpace<S> rs(q);
    for (int x = q; x < n; ++x)
        for (int k = 0; k < n; ++k) {
            std::vector<S> row(q);
            for (int z = 0; z < q; ++z) row[z] = spec.mu.at(z, x)[k];
            rs.add(row);
        }
    if (rs.rank() == q) return spec;
    auto ker = rs.nullspace();
    int r = static_cast<int>(ker.size());
    std::vector<int> piv = rs.pivots();
    std::sort(piv.begin(), piv.end());
    std::set<int> pivset(piv.begin(), piv.end());
    std::vector<int> free_cols;
    for (int f = 0; f < q; ++f)
        if (!pivset.count(f)) free_cols.push_back(f);

    // new isotropy basis: kernel vectors first, then pivot unit vectors
    std::vector<Vec<S>> basis;
    for (auto& k : ker) {
        Vec<S> v(n);
        for (int z = 0; z < q; ++z) v[z] = k[z];
        basis.push_back(v);
    }
    for (int p : piv) basis.push_back(unit_vector<S>(n, p));
    for (int x = q; x < n; ++x) basis.push_back(unit_vector<S>(n, x));

    // coordinates in the new basis, restricted to the surviving directions
    auto coords = [&](const Vec<S>& v) {
        Vec<S> out;
        for (int p : piv) {
            S c = v[p];
            for (int j = 0; j < r; ++j)
                if (!ker[j][p].is_zero() && !v[free_cols[j]].is_zero()) c -= v[free_cols[j]] * ker[j][p];
            out.push_back(c);
        }
        for (int x = q; x < n; ++x) out.push_back(v[x]);
        return out;
    };

    BracketSpec<K> red(spec.name, q - r, spec.m, spec.params);
    int nn = red.dim();
    for (int a = 0; a < nn; ++a)
        for (int b = a + 1; b < nn; ++b)
            red.mu.set(a, b, coords(spec.mu.apply(basis[r + a], basis[r + b])));
    return red;
}

template <class K>
BracketSpec<K> rescale(const BracketSpec<K>& spec, const RatFun<K>& c) {
    using S = RatFun<K>;
    if (c.is_zero()) throw std::invalid_argument("rescale: c must be nonzero");
    BracketSpec<K> out = spec;
    int q = spec.q, n = spec.dim();
    S ic = c.inv(), ic2 = ic * ic;
    for (int a = q; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec<S> v = spec.mu.at(a, b);
            for (int k = 0; k < q; ++k)
                if (!v[k].is_zero()) v[k] = v[k] * ic2;
            for (int k = q; k < n; ++k)
                if (!v[k].is_zero()) v[k] = v[k] * ic;
            out.mu.set(a, b, v);
        }
    return out;
}

template <class K>
BracketSpec<K> instantiate(const BracketSpec<K>& spec, const std::map<std::string, K>& at) {
    BracketSpec<K> out = spec;
    out.params.clear();
    for (auto& p : spec.params)
        if (!at.count(p)) out.params.push_back(p);
    int n = spec.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec<RatFun<K>> v = spec.mu.at(a, b);
            for (auto& x : v)
                if (!x.is_zero()) x = x.substitute(at);
            out.mu.set(a, b, v);
        }
    return out;
}

namespace {
Polynomial<Numeric> poly_to_numeric(const Polynomial<Rational>& p) {
    std::vector<std::pair<Exponent, Numeric>> ts;
    for (auto& [e, c] : p.terms()) ts.push_back({e, Numeric(c.to_double())});
    return Polynomial<Numeric>::from_terms(p.vars(), ts);
}
} // namespace

BracketSpec<Numeric> to_numeric(const BracketSpec<Rational>& spec) {
    BracketSpec<Numeric> out(spec.name, spec.q, spec.m, spec.params);
    int n = spec.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec<Approx> v(n);
            for (int k = 0; k < n; ++k) {
                const Exact& x = spec.mu.at(a, b)[k];
                if (!x.is_zero()) v[k] = Approx(poly_to_numeric(x.num()), poly_to_numeric(x.den()));
            }
            out.mu.set(a, b, v);
        }
    return out;
}

#define GHL_INSTANTIATE(K)                                                               \
    template SplitBracket<K> split_bracket(const BracketSpec<K>&);                       \
    template std::vector<Vec<RatFun<K>>> nijenhuis(const BracketSpec<K>&);               \
    template ValidationReport validate(const BracketSpec<K>&);                           \
    template BracketSpec<K> reduce_non_effective(const BracketSpec<K>&);                 \
    template BracketSpec<K> rescale(const BracketSpec<K>&, const RatFun<K>&);            \
    template BracketSpec<K> instantiate(const BracketSpec<K>&, const std::map<std::string, K>&);

GHL_INSTANTIATE(Rational)
GHL_INSTANTIATE(Numeric)

} // namespace ghl
