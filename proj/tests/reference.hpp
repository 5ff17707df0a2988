#pragma once
// Reference values for the worked examples, and independent oracles.
// Shared by the unit tests and the acceptance binary.

#include "ghl/geometry.hpp"
#include "support.hpp"

#include <map>

namespace testsupport {

using M = ghl::Mat<Exact>;

// Levi-Civita from the Koszul formula on a q = 0 algebra with orthonormal
// basis: <nabla_X Y, Z> = 1/2(<[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>)
inline std::vector<M> koszul(const ghl::BracketSpec<Rational>& s) {
    int n = s.dim();
    std::vector<M> nab(n, M(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                nab[x](z, y) = q(1, 2) * (s.mu.at(x, y)[z] - s.mu.at(y, z)[x] + s.mu.at(z, x)[y]);
    return nab;
}

// R(X,Y) = [nab_X, nab_Y] - nab_[X,Y] from the Koszul connection
inline M koszul_curvature(const ghl::BracketSpec<Rational>& s, const std::vector<M>& nab, int x, int y) {
    M R = ghl::commutator(nab[x], nab[y]);
    auto b = s.mu.at(x, y);
    for (int c = 0; c < s.dim(); ++c)
        if (!b[c].is_zero()) R -= b[c] * nab[c];
    return R;
}

struct IwasawaReference {
    std::vector<M> S, A;
    std::map<std::pair<int, int>, M> Omega; // nonzero pairs x < y
    M rho2;
    // F components on e0 e2 e4, e0 e3 e5, e1 e2 e5, e1 e3 e4
    std::vector<std::pair<std::vector<int>, Exact>> F;
};

inline IwasawaReference iwasawa_reference() {
    const Exact t = var("t"), alpha = var("alpha");
    const Exact h = alpha * q(1, 2);
    const Exact a1 = alpha * (t - q(1)) * q(1, 2);
    const Exact w2 = alpha * alpha * (t - q(1)) * (t - q(1)) * q(1, 2);
    const Exact w4 = w2 * q(1, 2);
    IwasawaReference r;
    r.F = {{{0, 2, 4}, -alpha}, {{0, 3, 5}, -alpha}, {{1, 2, 5}, -alpha}, {{1, 3, 4}, alpha}};
    r.S = {
        scaled(h, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}}),
        scaled(h, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, -1, 0, 0, 0}}),
        scaled(h, {{0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}),
        scaled(h, {{0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}}),
        scaled(h, {{0, 0, -1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}),
        scaled(h, {{0, 0, 0, -1, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}),
    };
    r.A = {
        scaled(a1, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}),
        scaled(a1, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0}}),
        scaled(a1, {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}}),
        scaled(a1, {{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}}),
        M(6),
        M(6),
    };
    r.Omega = {
        {{0, 1}, scaled(w2, {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -1, 0}})},
        {{0, 2}, scaled(w4, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}})},
        {{0, 3}, scaled(w4, {{0, 0, 0, 1, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}})},
        {{1, 2}, scaled(w4, {{0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}})},
        {{1, 3}, scaled(w4, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}})},
        {{2, 3}, scaled(w2, {{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, -1, 0}})},
    };
    r.rho2 = scaled(w2, {{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 2}, {0, 0, 0, 0, -2, 0}});
    return r;
}

struct KodairaReference {
    Exact scal;                                   // symbolic t
    std::vector<std::pair<std::vector<int>, Exact>> F;
    M rho2_t1;                                    // t = 1
    std::vector<M> A_t1;                          // t = 1
};

inline KodairaReference kodaira_reference() {
    const Exact t = var("t"), a = var("alpha"), b = var("beta"), r = var("r"), v = var("v");
    const Exact L1 = a * a * r * r + b * b * r * r + v * v;
    const Exact L2 = a * a * r * r + b * b * r * r - v * v;
    KodairaReference k;
    k.scal = -(t - q(1)) * L1.pow(3) / (r.pow(4) * v.pow(4));
    k.F = {{{0, 1, 3}, -(a * a / v + b * b / v + v / (r * r))},
           {{0, 2, 3}, (a * a + b * b) * a * r / (v * v) + a / r},
           {{1, 2, 3}, -((a * a + b * b) * b * r / (v * v) + b / r)}};

    const Exact p = L1 * L1 * L2 / (q(2) * r.pow(4) * v.pow(4));
    const Exact qa = L1 * L1 * a / (r.pow(3) * v.pow(3));
    const Exact qb = L1 * L1 * b / (r.pow(3) * v.pow(3));
    const Exact z = q(0);
    auto mat = [](std::vector<std::vector<Exact>> rows) {
        M m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) m(i, j) = rows[i][j];
        return m;
    };
    k.rho2_t1 = mat({{z, -p, -qa, -qb}, {p, z, qb, -qa}, {qa, -qb, z, p}, {qb, qa, -p, z}});

    const Exact P = ((a * a - b * b) * r * r - v * v) / (q(2) * r * r * v);
    const Exact Q = ((a * a - b * b) * r * r + v * v) / (q(2) * r * r * v);
    const Exact ab = a * b / v, ar = a / r, br = b / r;
    const Exact U = ((a * a + b * b) * r * r + v * v) / (q(2) * r * v * v);
    const Exact W = ((a * a + b * b) * r * r - v * v) / (q(2) * r * v * v);
    const Exact s2 = (a * a + b * b) / v;
    k.A_t1 = {
        mat({{z, -ar, P, ab}, {ar, z, -ab, P}, {-P, ab, z, ar}, {-ab, -P, -ar, z}}),
        mat({{z, br, -ab, Q}, {-br, z, -Q, -ab}, {ab, Q, z, -br}, {-Q, ab, br, z}}),
        mat({{z, z, U * b, -U * a}, {z, z, U * a, U * b}, {-U * b, -U * a, z, z}, {U * a, -U * b, z, z}}),
        mat({{z, -s2, W * a, W * b}, {s2, z, -W * b, W * a}, {-W * a, W * b, z, s2}, {-W * b, -W * a, -s2, z}}),
    };
    return k;
}

// Reference closed form for the Kodaira-Thurston scal.
inline double kodaira_thurston_closed_form(double r, double s, double x, double y) {
    double r2 = r * r, s2 = s * s;
    double den = r2 * r2 * s2 * s2 - 2 * r2 * s2 * x * x + x * x * x * x + y * y * y * y - 2 * (r2 * s2 - x * x) * y * y;
    return -r2 / den;
}

} // namespace testsupport
