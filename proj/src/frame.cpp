#include "ghl/frame.hpp"

#include <cmath>
#include <vector>

namespace ghl {

namespace {

using Dense = std::vector<std::vector<double>>;

Dense to_dense(const Mat<Numeric>& M) {
    Dense d(M.dim(), std::vector<double>(M.dim()));
    for (int i = 0; i < M.dim(); ++i)
        for (int j = 0; j < M.dim(); ++j) d[i][j] = M(i, j).value();
    return d;
}

double det(Dense a) {
    int n = static_cast<int>(a.size());
    double d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
        if (a[p][c] == 0) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            double f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

double inner(const Dense& G, const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * G[i][j] * y[j];
    return s;
}

std::vector<double> mat_vec(const Dense& M, const std::vector<double>& v) {
    std::vector<double> r(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += M[i][j] * v[j];
    return r;
}

double max_abs(const Dense& a) {
    double m = 0;
    for (auto& row : a)
        for (double x : row) m = std::max(m, std::fabs(x));
    return m;
}

} // namespace

bool is_positive_definite(const Mat<Numeric>& G, double tol) {
    Dense g = to_dense(G);
    int n = G.dim();
    for (int k = 1; k <= n; ++k) {
        Dense minor(k, std::vector<double>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
        if (!(det(minor) > tol)) return false;
    }
    return true;
}

Mat<Numeric> gram_schmidt_unitary(const Mat<Numeric>& Gm, const Mat<Numeric>& Jm) {
    int n = Gm.dim();
    if (n % 2 != 0 || Jm.dim() != n) throw FrameError("frame construction needs an even dimension and matching J");
    double tol = default_tolerance();
    Dense G = to_dense(Gm), J = to_dense(Jm);
    double scale = std::max(1.0, max_abs(G));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!hybrid_close(G[i][j], G[j][i], tol)) throw FrameError("metric is not symmetric");
    Dense JJ(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) JJ[i][j] += J[i][k] * J[k][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!hybrid_close(JJ[i][j], i == j ? -1.0 : 0.0, tol)) throw FrameError("J does not square to -1");
    if (!is_positive_definite(Gm, tol * scale)) throw FrameError("metric is not positive definite");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<double> ei(n, 0.0), ej(n, 0.0);
            ei[i] = ej[j] = 1.0;
            if (!hybrid_close(inner(G, mat_vec(J, ei), mat_vec(J, ej)), G[i][j], tol * scale))
                throw FrameError("metric is not J-invariant");
        }

    std::vector<std::vector<double>> w;
    for (int i = 0; i < n && static_cast<int>(w.size()) < n; ++i) {
        std::vector<double> v(n, 0.0);
        v[i] = 1.0;
        // two passes of modified Gram-Schmidt for stability
        for (int pass = 0; pass < 2; ++pass)
            for (auto& u : w) {
                double c = inner(G, u, v);
                for (int j = 0; j < n; ++j) v[j] -= c * u[j];
            }
        double len2 = inner(G, v, v);
        if (len2 <= tol * scale) continue;
        double len = std::sqrt(len2);
        for (auto& x : v) x /= len;
        w.push_back(v);
        w.push_back(mat_vec(J, v));
    }
    if (static_cast<int>(w.size()) != n) throw FrameError("frame construction did not reach full rank");

    Mat<Numeric> out(n);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) out(a, b) = Numeric(w[b][a]);
    return out;
}

} // namespace ghl
