#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghl/frame.hpp"

#include <cmath>
#include <random>

using namespace ghl;
using N = Mat<Numeric>;

namespace {

N from_rows(const std::vector<std::vector<double>>& r) {
    N m(static_cast<int>(r.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m(i, j) = Numeric(r[i][j]);
    return m;
}

// max |W^T G W - I| and max |J w_{2k} - w_{2k+1}|
std::pair<double, double> defects(const N& G, const N& J, const N& W) {
    N gram = W.transpose() * G * W;
    double og = 0, oj = 0;
    for (int a = 0; a < G.dim(); ++a)
        for (int b = 0; b < G.dim(); ++b) og = std::max(og, std::fabs(gram(a, b).value() - (a == b ? 1.0 : 0.0)));
    N JW = J * W;
    for (int k = 0; 2 * k + 1 < G.dim(); ++k)
        for (int a = 0; a < G.dim(); ++a) oj = std::max(oj, std::fabs(JW(a, 2 * k).value() - W(a, 2 * k + 1).value()));
    return {og, oj};
}

} // namespace

TEST_CASE("identity metric gives the standard frame") {
    N J = N::standard_J(4);
    N W = gram_schmidt_unitary(N::identity(4), J);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(W(a, b).value() == doctest::Approx(a == b ? 1.0 : 0.0));
}

TEST_CASE("four-parameter metric at r=1, sigma=2, x=y=0") {
    double r = 1, s = 2, x = 0, y = 0;
    N G = from_rows({{r * r, -y, 0, -x}, {-y, s * s, x, 0}, {0, x, r * r, -y}, {-x, 0, -y, s * s}});
    N J = from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    N W = gram_schmidt_unitary(G, J);
    auto [og, oj] = defects(G, J, W);
    CHECK(og < 1e-9);
    CHECK(oj < 1e-9);
    // off the axis as well
    x = 0.3, y = -0.4;
    G = from_rows({{r * r, -y, 0, -x}, {-y, s * s, x, 0}, {0, x, r * r, -y}, {-x, 0, -y, s * s}});
    W = gram_schmidt_unitary(G, J);
    std::tie(og, oj) = defects(G, J, W);
    CHECK(og < 1e-9);
    CHECK(oj < 1e-9);
}

TEST_CASE("random J-compatible positive definite metrics") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int it = 0; it < 20; ++it) {
        int n = 2 * (1 + it % 3);
        N J = N::standard_J(n);
        N P(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P(i, j) = Numeric(u(rng) + (i == j ? 2.0 : 0.0));
        N H = P.transpose() * P;
        N G = H + J.transpose() * H * J;
        N W = gram_schmidt_unitary(G, J);
        auto [og, oj] = defects(G, J, W);
        CHECK(og < 1e-9);
        CHECK(oj < 1e-9);
    }
}

TEST_CASE("rejections") {
    N J = N::standard_J(2);
    CHECK_THROWS_AS(gram_schmidt_unitary(from_rows({{1, 0}, {0, -1}}), J), FrameError);
    CHECK_THROWS_AS(gram_schmidt_unitary(from_rows({{1, 0}, {0, 2}}), J), FrameError);
    CHECK_THROWS_AS(gram_schmidt_unitary(N::identity(2), N::identity(2)), FrameError);
    CHECK(is_positive_definite(from_rows({{2, 1}, {1, 2}}), 1e-12));
    CHECK_FALSE(is_positive_definite(from_rows({{1, 2}, {2, 1}}), 1e-12));
}
