#include "ghl/invariants.hpp"

namespace ghl {

namespace {

template <class K>
using Tn = MultiTensor<RatFun<K>>;

template <class K>
Mat<RatFun<K>> lift(const Mat<K>& a) {
    Mat<RatFun<K>> r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!a(i, j).is_zero()) r(i, j) = RatFun<K>(a(i, j));
    return r;
}

template <class K>
Mat<K> lower(const Mat<RatFun<K>>& a) {
    Mat<K> r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = constant_of(a(i, j));
    return r;
}

// flattened constant entries of a tensor
template <class K>
std::vector<K> constants(const Tn<K>& t) {
    std::vector<K> out;
    out.reserve(t.size());
    for (auto& x : t.data()) out.push_back(constant_of(x));
    return out;
}

// Adds the rows of the linear system sum_i c_i cols[i] = 0 (one row per
// tensor entry). Stops early once the row space is full.
template <class K>
void add_system(RowSpace<K>& rs, const std::vector<std::vector<K>>& cols, std::size_t offset) {
    if (cols.empty()) return;
    std::size_t len = cols[0].size();
    std::vector<K> row(rs.ncols(), K(0));
    for (std::size_t e = 0; e < len && rs.rank() < rs.ncols(); ++e) {
        bool any = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            row[offset + i] = cols[i][e];
            any = any || !cols[i][e].is_zero();
        }
        if (any) rs.add(row);
    }
}

template <class K>
std::vector<std::vector<K>> action_columns(const std::vector<Mat<K>>& basis, const Tn<K>& T) {
    std::vector<std::vector<K>> cols;
    for (auto& B : basis) cols.push_back(constants<K>(derivation_action(lift(B), T)));
    return cols;
}

template <class K>
bool vec_zero(const Vec<K>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class K>
std::vector<K> flatten(const KillingGenerator<K>& g) {
    std::vector<K> out(g.v.begin(), g.v.end());
    for (auto& x : g.A.data()) out.push_back(x);
    return out;
}

} // namespace

template <class K>
DerivativeTuple<K> hermitian_s_tuple(const Geometry<K>& g, int s) {
    if (s < 0) throw std::invalid_argument("s-tuple: s must be >= 0");
    DerivativeTuple<K> t;
    t.s = s;
    auto jc = g.derivative_chain(g.J_tensor(), Connection::LeviCivita, s + 2);
    t.J.assign(jc.begin() + 1, jc.end());
    t.Rm = g.derivative_chain(g.Rm_tensor(), Connection::LeviCivita, s);
    return t;
}

template <class K>
std::vector<IdentityCheck> check_tuple_identities(const Geometry<K>& g, const DerivativeTuple<K>& tup) {
    const int n = g.n();
    const auto& R = tup.Rm.at(0);
    IdentityCheck pair{"pair-symmetry", true, ""}, bianchi{"first-bianchi", true, ""}, alt{"D2J-alternation", true, ""};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    // <Rm(x,y)z, w> = <Rm(z,w)x, y>
                    if (pair.pass && !are_equal(R.at({x, y}, w, z), R.at({z, w}, y, x))) {
                        pair.pass = false;
                        pair.detail = "at " + basis_label(x) + "," + basis_label(y) + "," + basis_label(z) + "," + basis_label(w);
                    }
                    // cyclic sum of Rm(x,y)z, component w
                    if (bianchi.pass) {
                        auto s = R.at({x, y}, w, z) + R.at({y, z}, w, x) + R.at({z, x}, w, y);
                        if (!s.is_zero()) {
                            bianchi.pass = false;
                            bianchi.detail = "at " + basis_label(x) + "," + basis_label(y) + "," + basis_label(z);
                        }
                    }
                }
    const auto& D2J = tup.J.at(1);
    const auto& J = g.J();
    for (int x = 0; x < n && alt.pass; ++x)
        for (int y = 0; y < n && alt.pass; ++y) {
            auto lhs = D2J.value({x, y}) - D2J.value({y, x});
            auto rhs = -commutator(R.value({x, y}), J);
            if (!mat_equal(lhs, rhs)) {
                alt.pass = false;
                alt.detail = "at " + basis_label(x) + "," + basis_label(y);
            }
        }
    return {pair, bianchi, alt};
}

template <class K>
std::vector<Mat<K>> orthogonal_basis(int n) {
    std::vector<Mat<K>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<K> a(n);
            a(j, i) = K(1);
            a(i, j) = K(-1);
            out.push_back(a);
        }
    return out;
}

template <class K>
std::vector<Mat<K>> unitary_basis(int m) {
    int n = 2 * m;
    std::vector<Mat<K>> out;
    auto add = [&](int r, int c, long v, Mat<K>& a) {
        a(r, c) += K(v);
        a(c, r) -= K(v);
    };
    for (int k = 0; k < m; ++k) {
        Mat<K> a(n);
        add(2 * k + 1, 2 * k, 1, a);
        out.push_back(a);
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            Mat<K> re(n), im(n);
            // real part: e_{2k} -> e_{2l}, e_{2k+1} -> e_{2l+1}
            add(2 * l, 2 * k, 1, re);
            add(2 * l + 1, 2 * k + 1, 1, re);
            // imaginary part: e_{2k} -> e_{2l+1}, e_{2k+1} -> -e_{2l}
            add(2 * l + 1, 2 * k, 1, im);
            add(2 * l, 2 * k + 1, -1, im);
            out.push_back(re);
            out.push_back(im);
        }
    return out;
}

template <class K>
std::vector<Mat<K>> constant_curvature(const Geometry<K>& g) {
    std::vector<Mat<K>> out;
    for (auto& r : g.Rm_all()) out.push_back(lower<K>(r));
    return out;
}

template <class K>
SingerResult singer(const Geometry<K>& g, int kmax) {
    const int m = g.m();
    auto basis = unitary_basis<K>(m);
    const int d = static_cast<int>(basis.size());
    const auto& C = g.levi_civita();
    // derivatives are built lazily: the tensors grow by a factor 2m per order
    Tn<K> DJ = covariant_step(C, g.J_tensor()), DR = g.Rm_tensor();
    SingerResult res;
    RowSpace<K> rs(d);
    // j(k): A.D^i Rm = 0 (i <= k), A.D^j J = 0 (1 <= j <= k+2)
    add_system(rs, action_columns<K>(basis, DJ), 0);
    for (int k = 0; k <= kmax + 1; ++k) {
        if (k > 0) DR = covariant_step(C, DR);
        DJ = covariant_step(C, DJ);
        add_system(rs, action_columns<K>(basis, DR), 0);
        add_system(rs, action_columns<K>(basis, DJ), 0);
        res.dims.push_back(d - rs.rank());
        int s = static_cast<int>(res.dims.size());
        if (s >= 2 && res.dims[s - 1] == res.dims[s - 2]) {
            res.k_Jg = s - 2;
            break;
        }
    }
    return res;
}

template <class K>
KillingGenerator<K> nomizu_bracket(const KillingGenerator<K>& a, const KillingGenerator<K>& b,
                                   const std::vector<Mat<K>>& Rm) {
    const int n = a.A.dim();
    KillingGenerator<K> r;
    r.v = a.A.apply(b.v);
    auto bv = b.A.apply(a.v);
    for (int i = 0; i < n; ++i) r.v[i] -= bv[i];
    r.A = commutator(a.A, b.A);
    for (int x = 0; x < n; ++x) {
        if (a.v[x].is_zero()) continue;
        for (int y = 0; y < n; ++y)
            if (!b.v[y].is_zero()) r.A += (a.v[x] * b.v[y]) * Rm[x * n + y];
    }
    return r;
}

template <class K>
KillingAlgebra<K> killing_generators(const Geometry<K>& g, int max_order) {
    const int n = g.n();
    auto so = orthogonal_basis<K>(n);
    const int nu = n + static_cast<int>(so.size());
    const auto& C = g.levi_civita();
    Tn<K> J0 = g.J_tensor(), J1 = covariant_step(C, J0);
    Tn<K> R0 = g.Rm_tensor(), R1 = covariant_step(C, R0);

    KillingAlgebra<K> alg;
    RowSpace<K> rs(nu);
    auto add_order = [&](const Tn<K>& Q, const Tn<K>& DQ) {
        // v . (e_j _| D^{k+1}Q) + A . D^k Q = 0
        std::vector<std::vector<K>> cols;
        for (int j = 0; j < n; ++j) cols.push_back(constants<K>(DQ.slice(j)));
        for (auto& c : action_columns<K>(so, Q)) cols.push_back(std::move(c));
        add_system(rs, cols, 0);
    };
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) {
            J0 = std::move(J1);
            J1 = covariant_step(C, J0);
            R0 = std::move(R1);
            R1 = covariant_step(C, R0);
        }
        add_order(J0, J1);
        add_order(R0, R1);
        alg.dims.push_back(nu - rs.rank());
        int s = static_cast<int>(alg.dims.size());
        if (s >= 2 && alg.dims[s - 1] == alg.dims[s - 2]) {
            alg.order = k;
            break;
        }
    }

    for (auto& x : rs.nullspace()) {
        KillingGenerator<K> gen;
        gen.v.assign(x.begin(), x.begin() + n);
        gen.A = Mat<K>(n);
        for (std::size_t i = 0; i < so.size(); ++i)
            if (!x[n + i].is_zero()) gen.A += x[n + i] * so[i];
        alg.basis.push_back(std::move(gen));
    }

    auto Rm = constant_curvature(g);
    const int d = alg.dim();
    RowSpace<K> span(n + n * n);
    for (auto& b : alg.basis) span.add(flatten(b));
    alg.closed = true;
    std::vector<KillingGenerator<K>> br(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            br[a * d + b] = nomizu_bracket(alg.basis[a], alg.basis[b], Rm);
            if (a < b && alg.closed) {
                RowSpace<K> probe = span;
                if (probe.add(flatten(br[a * d + b]))) alg.closed = false;
            }
        }
    alg.jacobi = true;
    for (int a = 0; a < d && alg.jacobi; ++a)
        for (int b = a + 1; b < d && alg.jacobi; ++b)
            for (int c = b + 1; c < d && alg.jacobi; ++c) {
                auto s1 = nomizu_bracket(br[a * d + b], alg.basis[c], Rm);
                auto s2 = nomizu_bracket(br[b * d + c], alg.basis[a], Rm);
                auto s3 = nomizu_bracket(br[c * d + a], alg.basis[b], Rm);
                Vec<K> v = s1.v;
                for (int i = 0; i < n; ++i) v[i] += s2.v[i] + s3.v[i];
                Mat<K> A = s1.A + s2.A + s3.A;
                if (!vec_zero(v) || !A.is_zero()) alg.jacobi = false;
            }
    RowSpace<K> vs(n);
    for (auto& b : alg.basis) vs.add(b.v);
    alg.transitive = vs.rank() == n;
    return alg;
}

#define GHL_INSTANTIATE(K)                                                                                       \
    template DerivativeTuple<K> hermitian_s_tuple(const Geometry<K>&, int);                                     \
    template std::vector<IdentityCheck> check_tuple_identities(const Geometry<K>&, const DerivativeTuple<K>&);  \
    template std::vector<Mat<K>> unitary_basis<K>(int);                                                         \
    template std::vector<Mat<K>> orthogonal_basis<K>(int);                                                      \
    template std::vector<Mat<K>> constant_curvature(const Geometry<K>&);                                        \
    template SingerResult singer(const Geometry<K>&, int);                                                      \
    template KillingGenerator<K> nomizu_bracket(const KillingGenerator<K>&, const KillingGenerator<K>&,         \
                                                const std::vector<Mat<K>>&);                                   \
    template KillingAlgebra<K> killing_generators(const Geometry<K>&, int);

GHL_INSTANTIATE(Rational)
GHL_INSTANTIATE(Numeric)

} // namespace ghl
