#include "ghl/geometry.hpp"

#include <cmath>
#include <limits>

namespace ghl {

namespace {

inline int partner(int x) { return x ^ 1; }
inline long isign(int x) { return (x % 2 == 0) ? 1 : -1; }

template <class S>
double magnitude(const S& v) {
    if (v.is_zero()) return 0;
    if (!v.is_constant()) {
        double worst = 0, lead = 1;
        for (auto& [e, c] : v.num().terms()) worst = std::max(worst, std::fabs(c.to_double()));
        if (!v.den().is_zero()) lead = std::fabs(v.den().leading_coeff().to_double());
        return lead > 0 ? worst / lead : std::numeric_limits<double>::infinity();
    }
    return std::fabs(v.constant_value().to_double());
}

} // namespace

template <class K>
Geometry<K>::Geometry(const BracketSpec<K>& spec, std::optional<K> t)
    : spec_(spec), n_(spec.mdim()), t_value_(t) {
    const int n = n_, q = spec.q;
    t_ = t ? S(*t) : S::variable("t");
    split_ = split_bracket(spec);
    J_ = M::standard_J(n);

    ad_.assign(q, M(n));
    for (int z = 0; z < q; ++z)
        for (int y = 0; y < n; ++y)
            for (int c = 0; c < n; ++c) ad_[z](c, y) = spec.mu.at(z, q + y)[q + c];

    N_ = ghl::nijenhuis(spec);

    auto mum = [&](int a, int b, int c) -> const S& { return split_.mu_m(a, b)[c]; };

    // reported F: cyclic sum of <mu(Ia, Ib), c>
    F_ = KForm<S>(n, 3);
    Fp_int_ = KForm<S>(n, 3);
    Fm_int_ = KForm<S>(n, 3);
    auto f_code = [&](int a, int b, int c) {
        return S(isign(a) * isign(b)) * mum(partner(a), partner(b), c);
    };
    auto fp_term = [&](int a, int b, int c) {
        // -<mu(a,b),c> + <mu(Ia,b),Ic> + <mu(a,Ib),Ic>
        S sc(isign(c));
        return -mum(a, b, c) + S(isign(a)) * sc * mum(partner(a), b, partner(c)) +
               S(isign(b)) * sc * mum(a, partner(b), partner(c));
    };
    auto fm_term = [&](int a, int b, int c) { return N_[a * n + b][c]; };
    for (auto& I : increasing_tuples(n, 3)) {
        int a = I[0], b = I[1], c = I[2];
        F_.set(I, f_code(a, b, c) + f_code(b, c, a) + f_code(c, a, b));
        Fp_int_.set(I, fp_term(a, b, c) + fp_term(b, c, a) + fp_term(c, a, b));
        Fm_int_.set(I, fm_term(a, b, c) + fm_term(b, c, a) + fm_term(c, a, b));
    }
    Fplus_ = -Fp_int_;
    Fminus_ = -Fm_int_;

    // Levi-Civita: <S(X)Y,Z> = -1/2 <mu(X,Y),Z> - 1/2 <mu(Z,X),Y> - 1/2 <mu(Z,Y),X>
    S half = S(1L) / S(2L);
    S_.assign(n, M(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                S v = mum(x, y, z) + mum(z, x, y) + mum(z, y, x);
                if (!v.is_zero()) S_[x](z, y) = -(half * v);
            }

    // Gauduchon family, split as A0 + t A1
    S quarter = S(1L) / S(4L);
    A0_.assign(n, M(n));
    A1_.assign(n, M(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                S fj = S(isign(y) * isign(z)) * fp(x, partner(y), partner(z));
                S f = fp(x, y, z);
                S a1 = quarter * (fj + f);
                S a0 = S_[x](z, y) + quarter * (fj - f) - quarter * N_[y * n + z][x] - quarter * fm(x, y, z);
                A0_[x](z, y) = a0;
                A1_[x](z, y) = a1;
            }
    A_ = gauduchon_at(t_);
    for (int x = 0; x < n; ++x) {
        if (!is_skew(A_[x]) || !commutator(A_[x], J_).is_zero())
            throw EngineError("Gauduchon connection is not u(m)-valued at " + basis_label(q + x));
    }

    // curvatures and torsion
    Rm_.assign(n * n, M(n));
    Om_.assign(n * n, M(n));
    T_.assign(n * n, V(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (y < x) {
                Rm_[x * n + y] = -Rm_[y * n + x];
                Om_[x * n + y] = -Om_[y * n + x];
                V neg(n);
                for (int c = 0; c < n; ++c) neg[c] = -T_[y * n + x][c];
                T_[x * n + y] = neg;
                continue;
            }
            M adh(n);
            const V& h = split_.mu_h(x, y);
            for (int z = 0; z < q; ++z)
                if (!h[z].is_zero()) adh += h[z] * ad_[z];
            const V& w = split_.mu_m(x, y);
            M Sw(n), Aw(n);
            for (int c = 0; c < n; ++c)
                if (!w[c].is_zero()) {
                    Sw += w[c] * S_[c];
                    Aw += w[c] * A_[c];
                }
            Rm_[x * n + y] = adh - commutator(S_[x], S_[y]) - Sw;
            Om_[x * n + y] = adh - commutator(A_[x], A_[y]) - Aw;
            V tv(n);
            for (int c = 0; c < n; ++c) tv[c] = A_[y](c, x) - A_[x](c, y) - w[c];
            T_[x * n + y] = tv;
        }

    // Ricci forms and scalar curvature
    M W(n);
    for (int k = 0; 2 * k + 1 < n; ++k) W += Om_[(2 * k) * n + 2 * k + 1];
    rho2_ = KForm<S>(n, 2);
    rho1_ = KForm<S>(n, 2);
    for (auto& ij : increasing_tuples(n, 2)) {
        int i = ij[0], j = ij[1];
        rho2_.set(ij, W(i, j));
        const M& o1 = Om_[i * n + j];
        const M& o2 = Om_[partner(i) * n + partner(j)];
        S sj(isign(i) * isign(j));
        S acc;
        for (int k = 0; 2 * k + 1 < n; ++k) acc += o1(2 * k, 2 * k + 1) + sj * o2(2 * k, 2 * k + 1);
        rho1_.set(ij, half * acc);
    }
    S s1 = S(2L) * complex_trace_form(rho1_), s2 = S(2L) * complex_trace_form(rho2_);
    if (!are_equal(s1, s2))
        throw EngineError("scalar curvature traces disagree: " + s1.str() + " vs " + s2.str());
    scal_ = s2;

    // Lee form from tr T^t(X,.) = (t+1)/2 theta(X), read at t = 1 and checked at t = 0
    {
        auto A1 = gauduchon_at(S(1L)), A0 = gauduchon_at(S(0L));
        lee_ = KForm<S>(n, 1);
        for (int x = 0; x < n; ++x) {
            S tr1, tr0;
            for (int j = 0; j < n; ++j) {
                const S& w = split_.mu_m(x, j)[j];
                tr1 += A1[j](j, x) - A1[x](j, j) - w;
                tr0 += A0[j](j, x) - A0[x](j, j) - w;
            }
            if (!are_equal(tr1, S(2L) * tr0))
                throw EngineError("torsion trace is not proportional to (t+1) at " + basis_label(q + x));
            lee_.set({x}, tr1);
        }
    }

    // flags
    flags_.integrable = true;
    for (auto& v : N_)
        if (!vec_is_zero(v)) flags_.integrable = false;
    KForm<S> omega = lift_form(fundamental_form<S>(n), q);
    flags_.almost_kahler = coboundary(spec.mu, omega).is_zero();
    flags_.balanced = coboundary(spec.mu, form_power(omega, spec.m - 1)).is_zero();
}

template <class K>
typename Geometry<K>::S Geometry<K>::fp(int a, int b, int c) const { return Fp_int_.get({a, b, c}); }
template <class K>
typename Geometry<K>::S Geometry<K>::fm(int a, int b, int c) const { return Fm_int_.get({a, b, c}); }

template <class K>
std::vector<typename Geometry<K>::M> Geometry<K>::gauduchon_at(const S& t) const {
    std::vector<M> out(n_);
    for (int x = 0; x < n_; ++x) out[x] = A0_[x] + t * A1_[x];
    return out;
}

template <class K>
KForm<typename Geometry<K>::S> Geometry<K>::torsion_trace() const {
    KForm<S> tr(n_, 1);
    for (int x = 0; x < n_; ++x) {
        S s;
        for (int j = 0; j < n_; ++j) s += T(x, j)[j];
        tr.set({x}, s);
    }
    return tr;
}

template <class K>
typename Geometry<K>::M Geometry<K>::curvature(const V& X, const V& Y) const {
    M r(n_);
    for (int x = 0; x < n_; ++x) {
        if (X[x].is_zero()) continue;
        for (int y = 0; y < n_; ++y) {
            if (x == y || Y[y].is_zero()) continue;
            r += (X[x] * Y[y]) * Rm(x, y);
        }
    }
    return r;
}

template <class K>
typename Geometry<K>::M Geometry<K>::connection(Connection c, const V& X) const {
    const auto& C = c == Connection::LeviCivita ? S_ : A_;
    M r(n_);
    for (int x = 0; x < n_; ++x)
        if (!X[x].is_zero()) r += X[x] * C[x];
    return r;
}

template <class K>
typename Geometry<K>::S Geometry<K>::sectional(const V& X, const V& Y, bool normalize) const {
    S v = dot(curvature(X, Y).apply(X), Y);
    if (!normalize) return v;
    S area = dot(X, X) * dot(Y, Y) - dot(X, Y) * dot(X, Y);
    if (area.is_zero()) throw std::invalid_argument("sectional curvature: vectors are parallel");
    return v / area;
}

template <class K>
typename Geometry<K>::Tensor Geometry<K>::Rm_tensor() const {
    Tensor r(n_, 2, true);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            const M& R = Rm(x, y);
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) r.at({x, y}, a, b) = R(a, b);
        }
    return r;
}

template <class K>
std::vector<typename Geometry<K>::Tensor> Geometry<K>::derivative_chain(const Tensor& Q, Connection c, int order) const {
    const auto& C = c == Connection::LeviCivita ? S_ : A_;
    std::vector<Tensor> out{Q};
    for (int k = 0; k < order; ++k) out.push_back(covariant_step(C, out.back()));
    return out;
}

template <class K>
AuditReport Geometry<K>::audit() const {
    AuditReport rep;
    const int n = n_;
    // Gamma = S - A
    std::vector<M> G(n);
    for (int x = 0; x < n; ++x) G[x] = S_[x] - A_[x];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                S lhs = S(2L) * G[x](z, y);
                S rhs = T(x, y)[z] - T(y, z)[x] + T(z, x)[y];
                S d = lhs - rhs;
                if (!d.is_zero()) {
                    rep.torsion_identity = false;
                    rep.torsion_residual = std::max(rep.torsion_residual, magnitude(d));
                }
            }
    Tensor Gt(n, 1, true);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) Gt.at({x}, a, b) = G[x](a, b);
    auto DG = derivative_chain(Gt, Connection::LeviCivita, 1)[1]; // DG(y, x) = (D_y Gamma)_x
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            M rhs = DG.value({y, x}) - DG.value({x, y}) - commutator(G[x], G[y]);
            M d = Omega(x, y) - Rm(x, y) - rhs;
            for (auto& v : d.data())
                if (!v.is_zero()) {
                    rep.curvature_identity = false;
                    rep.curvature_residual = std::max(rep.curvature_residual, magnitude(v));
                }
        }
    return rep;
}

template class Geometry<Rational>;
template class Geometry<Numeric>;

} // namespace ghl
