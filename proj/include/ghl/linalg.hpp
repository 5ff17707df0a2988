#pragma once

#include "ghl/numeric.hpp"
#include "ghl/ratfun.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace ghl {

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> unit_vector(int n, int i) {
    Vec<S> v(n);
    v[i] = S(1L);
    return v;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    S s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

// Dense square matrix. Column-action convention: column b is the image of e_b.
template <class S>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1L);
        return m;
    }
    // standard complex structure on R^{2m}: I e_{2k} = e_{2k+1}
    static Mat standard_J(int n) {
        Mat m(n);
        for (int k = 0; 2 * k + 1 < n; ++k) {
            m(2 * k + 1, 2 * k) = S(1L);
            m(2 * k, 2 * k + 1) = S(-1L);
        }
        return m;
    }

    int dim() const { return n_; }
    S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat transpose() const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    Vec<S> apply(const Vec<S>& v) const {
        Vec<S> r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    Vec<S> column(int j) const {
        Vec<S> r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (*this)(i, j);
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r(x.n_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r(x.n_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        int n = x.n_;
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const S& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Mat operator*(const S& s, const Mat& x) {
        Mat r(x.n_);
        if (s.is_zero()) return r;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            if (!x.a_[i].is_zero()) r.a_[i] = s * x.a_[i];
        return r;
    }
    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
        return *this;
    }

    template <class F>
    Mat map(F f) const {
        Mat r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i]);
        return r;
    }

    const std::vector<S>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<S> a_;
};

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) { return a * b - b * a; }

inline bool are_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool are_equal(const Numeric& a, const Numeric& b) { return a == b; }

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!are_equal(a(i, j), b(i, j))) return false;
    return true;
}

template <class S>
bool is_skew(const Mat<S>& a) { return (a + a.transpose()).is_zero(); }

// ---------------------------------------------------------------------------
// Row reduction over a field K (Rational, Numeric with tolerance and
// magnitude pivoting, or rational functions for generic ranks). Rows can be added incrementally; the echelon basis is kept
// fully reduced.

template <class K>
class RowSpace {
public:
    explicit RowSpace(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // returns true if the row increased the rank
    bool add(std::vector<K> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K f = row[pivots_[r]];
            if (f.is_zero()) continue;
            for (int j = 0; j < ncols_; ++j)
                if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
            row[pivots_[r]] = K(0);
        }
        int p = -1;
        double best = 0;
        for (int j = 0; j < ncols_; ++j) {
            if (row[j].is_zero()) { row[j] = K(0); continue; }
            if constexpr (!std::is_same_v<K, Numeric>) {
                if (p < 0) p = j;
            } else {
                double a = std::fabs(row[j].to_double());
                if (a > best) { best = a; p = j; }
            }
        }
        if (p < 0) return false;
        K inv = K(1) / row[p];
        for (auto& x : row) x *= inv;
        row[p] = K(1);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K f = rows_[r][p];
            if (f.is_zero()) continue;
            for (int j = 0; j < ncols_; ++j)
                if (!row[j].is_zero()) rows_[r][j] -= f * row[j];
            rows_[r][p] = K(0);
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    // basis of {x : row . x = 0 for all rows}
    std::vector<std::vector<K>> nullspace() const {
        std::vector<bool> is_pivot(ncols_, false);
        for (int p : pivots_) is_pivot[p] = true;
        std::vector<std::vector<K>> out;
        for (int f = 0; f < ncols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(ncols_, K(0));
            v[f] = K(1);
            for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
            out.push_back(std::move(v));
        }
        return out;
    }

    const std::vector<std::vector<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int ncols_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> pivots_;
};

template <class K>
int rank_of(const std::vector<std::vector<K>>& rows, int ncols) {
    RowSpace<K> rs(ncols);
    for (auto& r : rows) rs.add(r);
    return rs.rank();
}

// value of a constant scalar; throws if parameters remain
template <class K>
K constant_of(const RatFun<K>& s) {
    if (!s.is_constant()) throw std::invalid_argument("expression still depends on parameters: " + s.str());
    return s.is_zero() ? K(0) : s.constant_value();
}

} // namespace ghl
