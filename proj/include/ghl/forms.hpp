#pragma once

#include "ghl/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ghl {

using Index = std::vector<int>;

// Sorts idx in place; returns the permutation sign, 0 on a repeated index.
inline int sort_with_sign(Index& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

// all strictly increasing k-tuples in [0, n)
inline std::vector<Index> increasing_tuples(int n, int k) {
    std::vector<Index> out;
    if (k > n || k < 0) return out;
    Index cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Antisymmetric bracket table on R^n: at(a,b) is the coordinate vector of mu(e_a,e_b).
template <class S>
class Bracket {
public:
    Bracket() = default;
    explicit Bracket(int n) : n_(n), t_(static_cast<std::size_t>(n) * n, Vec<S>(n)) {}

    int dim() const { return n_; }
    const Vec<S>& at(int a, int b) const { return t_[static_cast<std::size_t>(a) * n_ + b]; }
    void set(int a, int b, Vec<S> v) {
        Vec<S> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        t_[static_cast<std::size_t>(a) * n_ + b] = std::move(v);
        t_[static_cast<std::size_t>(b) * n_ + a] = std::move(neg);
    }
    Vec<S> apply(const Vec<S>& x, const Vec<S>& y) const {
        Vec<S> r(n_);
        for (int a = 0; a < n_; ++a) {
            if (x[a].is_zero()) continue;
            for (int b = 0; b < n_; ++b) {
                if (a == b || y[b].is_zero()) continue;
                S f = x[a] * y[b];
                const Vec<S>& ab = at(a, b);
                for (int c = 0; c < n_; ++c)
                    if (!ab[c].is_zero()) r[c] += f * ab[c];
            }
        }
        return r;
    }
    bool is_zero() const {
        for (auto& v : t_)
            if (!vec_is_zero(v)) return false;
        return true;
    }
    template <class F>
    Bracket map(F f) const {
        Bracket r(n_);
        for (std::size_t i = 0; i < t_.size(); ++i)
            for (int c = 0; c < n_; ++c) r.t_[i][c] = f(t_[i][c]);
        return r;
    }

private:
    int n_ = 0;
    std::vector<Vec<S>> t_;
};

// ---------------------------------------------------------------------------

template <class S>
class KForm {
public:
    KForm() = default;
    KForm(int n, int k) : n_(n), k_(k) {}

    static KForm basis(int n, int i) {
        KForm f(n, 1);
        f.c_[{i}] = S(1L);
        return f;
    }

    int dim() const { return n_; }
    int degree() const { return k_; }
    const std::map<Index, S>& components() const { return c_; }

    S get(Index idx) const {
        int s = sort_with_sign(idx);
        if (s == 0) return S();
        auto it = c_.find(idx);
        if (it == c_.end()) return S();
        return s > 0 ? it->second : -it->second;
    }
    void add(Index idx, const S& v) {
        if (v.is_zero()) return;
        int s = sort_with_sign(idx);
        if (s == 0) return;
        auto it = c_.find(idx);
        S nv = (it == c_.end() ? S() : it->second) + (s > 0 ? v : -v);
        if (nv.is_zero()) {
            if (it != c_.end()) c_.erase(it);
        } else {
            c_[idx] = nv;
        }
    }
    void set(Index idx, const S& v) {
        int s = sort_with_sign(idx);
        if (s == 0) {
            if (!v.is_zero()) throw std::invalid_argument("repeated index in form component");
            return;
        }
        if (v.is_zero()) c_.erase(idx);
        else c_[idx] = s > 0 ? v : -v;
    }

    bool is_zero() const { return c_.empty(); }

    KForm operator-() const {
        KForm r = *this;
        for (auto& [i, v] : r.c_) v = -v;
        return r;
    }
    friend KForm operator+(const KForm& a, const KForm& b) {
        check_same(a, b);
        KForm r = a;
        for (auto& [i, v] : b.c_) r.add(i, v);
        return r;
    }
    friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }
    friend KForm operator*(const S& s, const KForm& a) {
        KForm r(a.n_, a.k_);
        for (auto& [i, v] : a.c_) r.add(i, s * v);
        return r;
    }

    template <class F>
    KForm map(F f) const {
        KForm r(n_, k_);
        for (auto& [i, v] : c_) r.add(i, f(v));
        return r;
    }

private:
    static void check_same(const KForm& a, const KForm& b) {
        if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("form dimension/degree mismatch");
    }
    int n_ = 0, k_ = 0;
    std::map<Index, S> c_;
};

template <class S>
bool form_equal(const KForm<S>& a, const KForm<S>& b) { return (a - b).is_zero(); }

template <class S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    KForm<S> r(a.dim(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.dim()) return r;
    for (auto& [ia, va] : a.components())
        for (auto& [ib, vb] : b.components()) {
            Index idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(idx, va * vb);
        }
    return r;
}

// phi(v_1, ..., v_k) for k = degree; the determinant convention, no 1/k!.
template <class S>
S evaluate(const KForm<S>& phi, const std::vector<Vec<S>>& vs) {
    int k = phi.degree();
    if (static_cast<int>(vs.size()) != k) throw std::invalid_argument("evaluate: need exactly degree vectors");
    for (auto& v : vs)
        if (static_cast<int>(v.size()) != phi.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
    S total;
    if (k == 0) {
        auto it = phi.components().find(Index{});
        return it == phi.components().end() ? S() : it->second;
    }
    Index perm(k);
    for (auto& [idx, c] : phi.components()) {
        // det of the k x k minor M[a][b] = vs[b][idx[a]]
        std::iota(perm.begin(), perm.end(), 0);
        S det;
        do {
            S term(1L);
            bool zero = false;
            for (int a = 0; a < k && !zero; ++a) {
                const S& x = vs[perm[a]][idx[a]];
                if (x.is_zero()) zero = true;
                else term *= x;
            }
            if (zero) continue;
            Index p = perm;
            int s = sort_with_sign(p);
            det += s > 0 ? term : -term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!det.is_zero()) total += c * det;
    }
    return total;
}

template <class S>
S evaluate_basis(const KForm<S>& phi, const Index& idx) { return phi.get(idx); }

// contraction against the leading slots: (i_v phi)(rest) = phi(v_1..v_l, rest)
template <class S>
KForm<S> interior_product(const KForm<S>& phi, const std::vector<Vec<S>>& vs) {
    int l = static_cast<int>(vs.size()), n = phi.dim(), k = phi.degree();
    if (l > k) throw std::invalid_argument("interior_product: more vectors than degree");
    KForm<S> r(n, k - l);
    for (auto& rest : increasing_tuples(n, k - l)) {
        std::vector<Vec<S>> args = vs;
        for (int j : rest) args.push_back(unit_vector<S>(n, j));
        r.set(rest, evaluate(phi, args));
    }
    return r;
}

// Chevalley-Eilenberg differential: (d phi)(X_0..X_k) = sum_{i<j} (-1)^{i+j} phi(mu(X_i,X_j), X_0..^i..^j..X_k)
template <class S>
KForm<S> coboundary(const Bracket<S>& mu, const KForm<S>& phi) {
    int n = phi.dim(), k = phi.degree();
    if (mu.dim() != n) throw std::invalid_argument("coboundary: dimension mismatch");
    KForm<S> r(n, k + 1);
    if (k + 1 > n) return r;
    for (auto& J : increasing_tuples(n, k + 1)) {
        S val;
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                const Vec<S>& w = mu.at(J[i], J[j]);
                if (vec_is_zero(w)) continue;
                Index rest;
                for (int l = 0; l <= k; ++l)
                    if (l != i && l != j) rest.push_back(J[l]);
                S inner;
                for (int c = 0; c < n; ++c) {
                    if (w[c].is_zero()) continue;
                    Index idx{c};
                    idx.insert(idx.end(), rest.begin(), rest.end());
                    S pv = phi.get(idx);
                    if (!pv.is_zero()) inner += w[c] * pv;
                }
                if (inner.is_zero()) continue;
                val += ((i + j) % 2 == 0) ? inner : -inner;
            }
        r.set(J, val);
    }
    return r;
}

// (pi11 alpha)(X,Y) = 1/2 (alpha(X,Y) + alpha(JX,JY))
template <class S>
KForm<S> pi_11(const KForm<S>& alpha, const Mat<S>& J) {
    if (alpha.degree() != 2) throw std::invalid_argument("pi_11: needs a 2-form");
    int n = alpha.dim();
    KForm<S> r(n, 2);
    S half = S(1L) / S(2L);
    for (auto& ij : increasing_tuples(n, 2)) {
        S v = alpha.get(ij) + evaluate(alpha, {J.column(ij[0]), J.column(ij[1])});
        r.set(ij, half * v);
    }
    return r;
}

// alpha(JX,JY) == alpha(X,Y) on all basis pairs
template <class S>
bool is_J_invariant(const KForm<S>& alpha, const Mat<S>& J) {
    int n = alpha.dim();
    for (auto& ij : increasing_tuples(n, 2))
        if (!are_equal(alpha.get(ij), evaluate(alpha, {J.column(ij[0]), J.column(ij[1])}))) return false;
    return true;
}

// sum_k alpha(e_{2k}, e_{2k+1}) in the standard unitary frame
template <class S>
S complex_trace_form(const KForm<S>& alpha) {
    S s;
    for (int k = 0; 2 * k + 1 < alpha.dim(); ++k) s += alpha.get({2 * k, 2 * k + 1});
    return s;
}

// complex trace of a skew endomorphism: sum_k <W e_{2k}, e_{2k+1}>
template <class S>
S complex_trace(const Mat<S>& W) {
    S s;
    for (int k = 0; 2 * k + 1 < W.dim(); ++k) s += W(2 * k + 1, 2 * k);
    return s;
}

// complex trace of a symmetric J-invariant endomorphism: tr(h)/2
template <class S>
S complex_trace_sym(const Mat<S>& h) {
    S s;
    for (int i = 0; i < h.dim(); ++i) s += h(i, i);
    return s / S(2L);
}

// fundamental form sum_k e^{2k} ^ e^{2k+1}
template <class S>
KForm<S> fundamental_form(int n) {
    KForm<S> w(n, 2);
    for (int k = 0; 2 * k + 1 < n; ++k) w.set({2 * k, 2 * k + 1}, S(1L));
    return w;
}

template <class S>
KForm<S> form_power(const KForm<S>& a, int p) {
    KForm<S> r(a.dim(), 0);
    r.set({}, S(1L));
    for (int i = 0; i < p; ++i) r = wedge(r, a);
    return r;
}

// A.phi = -phi(..A X..) summed over slots
template <class S>
KForm<S> derivation_action(const Mat<S>& A, const KForm<S>& phi) {
    int n = phi.dim(), k = phi.degree();
    KForm<S> r(n, k);
    for (auto& I : increasing_tuples(n, k)) {
        S val;
        for (int s = 0; s < k; ++s)
            for (int j = 0; j < n; ++j) {
                const S& a = A(j, I[s]);
                if (a.is_zero()) continue;
                Index idx = I;
                idx[s] = j;
                S pv = phi.get(idx);
                if (!pv.is_zero()) val -= a * pv;
            }
        r.set(I, val);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dense tensor with k covector slots and an optional endomorphism slot.
// Component (i_1..i_k; a, b) is row a, column b of T(e_{i_1}, .., e_{i_k}).

template <class S>
class MultiTensor {
public:
    MultiTensor() = default;
    MultiTensor(int n, int k, bool end) : n_(n), k_(k), end_(end) {
        std::size_t sz = 1;
        for (int i = 0; i < k; ++i) sz *= n;
        if (end) sz *= static_cast<std::size_t>(n) * n;
        d_.assign(sz, S());
    }

    static MultiTensor from_endomorphism(const Mat<S>& M) {
        MultiTensor t(M.dim(), 0, true);
        for (int a = 0; a < M.dim(); ++a)
            for (int b = 0; b < M.dim(); ++b) t.d_[a * M.dim() + b] = M(a, b);
        return t;
    }
    static MultiTensor from_form(const KForm<S>& f) {
        MultiTensor t(f.dim(), f.degree(), false);
        std::vector<int> idx(f.degree());
        for (std::size_t flat = 0; flat < t.d_.size(); ++flat) {
            t.unflatten(flat, idx);
            t.d_[flat] = f.get(idx);
        }
        return t;
    }
    // bilinear form G(X,Y) = X^T G Y as a 2-slot tensor
    static MultiTensor from_bilinear(const Mat<S>& G) {
        MultiTensor t(G.dim(), 2, false);
        for (int i = 0; i < G.dim(); ++i)
            for (int j = 0; j < G.dim(); ++j) t.d_[i * G.dim() + j] = G(i, j);
        return t;
    }

    int dim() const { return n_; }
    int rank() const { return k_; }
    bool has_end() const { return end_; }
    std::size_t size() const { return d_.size(); }
    std::size_t slot_block() const { return end_ ? static_cast<std::size_t>(n_) * n_ : 1; }

    const std::vector<S>& data() const { return d_; }
    std::vector<S>& data() { return d_; }

    S& at(const std::vector<int>& idx, int a = 0, int b = 0) { return d_[flatten(idx, a, b)]; }
    const S& at(const std::vector<int>& idx, int a = 0, int b = 0) const { return d_[flatten(idx, a, b)]; }

    // value on basis vectors: the endomorphism T(e_idx) (End-valued only)
    Mat<S> value(const std::vector<int>& idx) const {
        Mat<S> M(n_);
        std::size_t base = flatten(idx, 0, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) M(a, b) = d_[base + a * n_ + b];
        return M;
    }

    // T(e_i, ...) as a tensor of rank k-1
    MultiTensor slice(int i) const {
        if (k_ == 0) throw std::invalid_argument("slice of rank-0 tensor");
        MultiTensor r(n_, k_ - 1, end_);
        std::size_t stride = r.d_.size();
        std::copy(d_.begin() + i * stride, d_.begin() + (i + 1) * stride, r.d_.begin());
        return r;
    }

    bool is_zero() const {
        for (auto& x : d_)
            if (!x.is_zero()) return false;
        return true;
    }

    MultiTensor operator-() const {
        MultiTensor r = *this;
        for (auto& x : r.d_) x = -x;
        return r;
    }
    friend MultiTensor operator+(const MultiTensor& a, const MultiTensor& b) {
        check_same(a, b);
        MultiTensor r = a;
        for (std::size_t i = 0; i < r.d_.size(); ++i)
            if (!b.d_[i].is_zero()) r.d_[i] += b.d_[i];
        return r;
    }
    friend MultiTensor operator-(const MultiTensor& a, const MultiTensor& b) { return a + (-b); }
    friend MultiTensor operator*(const S& s, const MultiTensor& a) {
        MultiTensor r = a;
        for (auto& x : r.d_)
            if (!x.is_zero()) x = s * x;
        return r;
    }

    template <class F>
    MultiTensor map(F f) const {
        MultiTensor r(n_, k_, end_);
        for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = f(d_[i]);
        return r;
    }

    void unflatten(std::size_t flat, std::vector<int>& idx) const {
        idx.resize(k_);
        flat /= slot_block();
        for (int s = k_ - 1; s >= 0; --s) {
            idx[s] = static_cast<int>(flat % n_);
            flat /= n_;
        }
    }

private:
    std::size_t flatten(const std::vector<int>& idx, int a, int b) const {
        std::size_t f = 0;
        for (int s = 0; s < k_; ++s) f = f * n_ + idx[s];
        f *= slot_block();
        if (end_) f += static_cast<std::size_t>(a) * n_ + b;
        return f;
    }
    static void check_same(const MultiTensor& a, const MultiTensor& b) {
        if (a.n_ != b.n_ || a.k_ != b.k_ || a.end_ != b.end_) throw std::invalid_argument("tensor shape mismatch");
    }

    int n_ = 0, k_ = 0;
    bool end_ = false;
    std::vector<S> d_;
};

template <class S>
bool tensor_equal(const MultiTensor<S>& a, const MultiTensor<S>& b) { return (a - b).is_zero(); }

// Tensor product; at most one factor may carry the endomorphism slot.
template <class S>
MultiTensor<S> tensor_product(const MultiTensor<S>& a, const MultiTensor<S>& b) {
    if (a.dim() != b.dim() || (a.has_end() && b.has_end()))
        throw std::invalid_argument("tensor_product: incompatible shapes");
    int n = a.dim();
    bool end = a.has_end() || b.has_end();
    MultiTensor<S> r(n, a.rank() + b.rank(), end);
    std::vector<int> ia, ib, ir;
    std::size_t blk = end ? static_cast<std::size_t>(n) * n : 1;
    std::size_t na = a.size() / a.slot_block(), nb = b.size() / b.slot_block();
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y)
            for (std::size_t e = 0; e < blk; ++e) {
                const S& va = a.data()[x * a.slot_block() + (a.has_end() ? e : 0)];
                const S& vb = b.data()[y * b.slot_block() + (b.has_end() ? e : 0)];
                if (va.is_zero() || vb.is_zero()) continue;
                r.data()[(x * nb + y) * blk + e] = va * vb;
            }
    return r;
}

// A acting as a derivation: [A, .] on the End slot, -T(..A X..) on each covector slot.
template <class S>
MultiTensor<S> derivation_action(const Mat<S>& A, const MultiTensor<S>& T) {
    int n = T.dim(), k = T.rank();
    MultiTensor<S> r(n, k, T.has_end());
    std::size_t blk = T.slot_block();
    std::size_t nslots = T.size() / blk;
    // nonzero entries of A by column
    std::vector<std::vector<std::pair<int, S>>> col(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!A(j, i).is_zero()) col[i].push_back({j, A(j, i)});
    std::vector<int> idx;
    for (std::size_t x = 0; x < nslots; ++x) {
        T.unflatten(x * blk, idx);
        if (T.has_end()) {
            Mat<S> M = T.value(idx);
            if (!M.is_zero()) {
                Mat<S> C = commutator(A, M);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!C(a, b).is_zero()) r.data()[x * blk + a * n + b] += C(a, b);
            }
        }
        for (int s = 0; s < k; ++s) {
            int orig = idx[s];
            for (auto& [j, a] : col[orig]) {
                idx[s] = j;
                std::size_t base = 0;
                for (int u = 0; u < k; ++u) base = base * n + idx[u];
                base *= blk;
                for (std::size_t e = 0; e < blk; ++e) {
                    const S& v = T.data()[base + e];
                    if (!v.is_zero()) r.data()[x * blk + e] -= a * v;
                }
            }
            idx[s] = orig;
        }
    }
    return r;
}

// endomorphism derivation: A.M = [A, M]
template <class S>
Mat<S> derivation_action(const Mat<S>& A, const Mat<S>& M) { return commutator(A, M); }

// One step of iterated covariant differentiation along a connection form C
// (one endomorphism per basis vector): T'(e_x, rest) = -(C(e_x) . T)(rest).
template <class S>
MultiTensor<S> covariant_step(const std::vector<Mat<S>>& C, const MultiTensor<S>& T) {
    int n = T.dim();
    MultiTensor<S> r(n, T.rank() + 1, T.has_end());
    std::size_t stride = T.size();
    for (int x = 0; x < n; ++x) {
        MultiTensor<S> d = derivation_action(C[x], T);
        for (std::size_t i = 0; i < stride; ++i)
            if (!d.data()[i].is_zero()) r.data()[x * stride + i] = -d.data()[i];
    }
    return r;
}

// v contracted into the first slot
template <class S>
MultiTensor<S> contract_first(const Vec<S>& v, const MultiTensor<S>& T) {
    MultiTensor<S> r(T.dim(), T.rank() - 1, T.has_end());
    std::size_t stride = r.size();
    for (int i = 0; i < T.dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < stride; ++j) {
            const S& x = T.data()[i * stride + j];
            if (!x.is_zero()) r.data()[j] += v[i] * x;
        }
    }
    return r;
}

} // namespace ghl
