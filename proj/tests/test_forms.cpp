#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghl/forms.hpp"
#include "support.hpp"

using namespace ghl;
using namespace testsupport;

using F = KForm<Exact>;
using M = Mat<Exact>;
using T = MultiTensor<Exact>;

namespace {

Vec<Exact> e(int n, int i) { return unit_vector<Exact>(n, i); }

Exact small(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    return q(d(rng));
}

F random_form(std::mt19937& rng, int n, int k, int terms = 3) {
    F f(n, k);
    std::uniform_int_distribution<int> idx(0, n - 1);
    for (int i = 0; i < terms; ++i) {
        Index I(k);
        for (auto& x : I) x = idx(rng);
        f.add(I, small(rng));
    }
    return f;
}

M random_mat(std::mt19937& rng, int n) {
    M a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = small(rng);
    return a;
}

Vec<Exact> random_vec(std::mt19937& rng, int n) {
    Vec<Exact> v(n);
    for (auto& x : v) x = small(rng);
    return v;
}

int perm_sign(std::vector<int> p) { return sort_with_sign(p); }

// Iwasawa brackets in dimension 6 with symbolic alpha
Bracket<Exact> iwasawa() {
    Bracket<Exact> mu(6);
    Exact a = var("alpha");
    auto put = [&](int x, int y, int c, Exact s) {
        Vec<Exact> v(6);
        v[c] = s;
        mu.set(x, y, v);
    };
    put(0, 2, 4, a);
    put(0, 3, 5, a);
    put(1, 2, 5, a);
    put(1, 3, 4, -a);
    return mu;
}

} // namespace

TEST_CASE("wedge basics") {
    F w = wedge(F::basis(4, 0), F::basis(4, 1));
    CHECK(w.components().size() == 1);
    CHECK(are_equal(w.get({0, 1}), q(1)));
    CHECK(are_equal(w.get({1, 0}), q(-1)));
    CHECK(wedge(F::basis(4, 0), F::basis(4, 0)).is_zero());
    CHECK(wedge(w, wedge(w, w)).is_zero()); // degree 6 > 4
}

TEST_CASE("top form against brute-force antisymmetrization") {
    F a = wedge(F::basis(4, 0), F::basis(4, 1)), b = wedge(F::basis(4, 2), F::basis(4, 3));
    F top = wedge(a, b);
    std::vector<Vec<Exact>> vs{e(4, 0), e(4, 1), e(4, 2), e(4, 3)};
    CHECK(are_equal(evaluate(top, vs), q(1)));

    // oracle: (a^b)(v) = 1/(2!2!) sum_sigma sgn(sigma) a(v_s0, v_s1) b(v_s2, v_s3)
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it) {
        F x = random_form(rng, 4, 2), y = random_form(rng, 4, 2);
        std::vector<Vec<Exact>> v{random_vec(rng, 4), random_vec(rng, 4), random_vec(rng, 4), random_vec(rng, 4)};
        std::vector<int> p{0, 1, 2, 3};
        Exact sum;
        int count = 0;
        do {
            Exact term = evaluate(x, {v[p[0]], v[p[1]]}) * evaluate(y, {v[p[2]], v[p[3]]});
            sum += perm_sign(p) > 0 ? term : -term;
            ++count;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(count == 24);
        CHECK(are_equal(evaluate(wedge(x, y), v), sum / q(4)));
    }
}

TEST_CASE("wedge associative and graded commutative") {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        F a = random_form(rng, 6, 1), b = random_form(rng, 6, 2), c = random_form(rng, 6, 2);
        CHECK(form_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
        CHECK(form_equal(wedge(a, b), wedge(b, a)));
        F d = random_form(rng, 6, 1);
        CHECK(form_equal(wedge(a, d), -wedge(d, a)));
        F t3 = random_form(rng, 6, 3);
        CHECK(form_equal(wedge(t3, d), -wedge(d, t3)));
    }
}

TEST_CASE("interior product") {
    F f = wedge(wedge(F::basis(6, 0), F::basis(6, 2)), F::basis(6, 4));
    CHECK(are_equal(evaluate(f, {e(6, 0), e(6, 2), e(6, 4)}), q(1)));
    CHECK(are_equal(evaluate(f, {e(6, 2), e(6, 0), e(6, 4)}), q(-1)));
    F ip = interior_product(f, {e(6, 0)});
    CHECK(form_equal(ip, wedge(F::basis(6, 2), F::basis(6, 4))));
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        F g = random_form(rng, 5, 3, 5);
        auto x = random_vec(rng, 5), y = random_vec(rng, 5);
        CHECK(form_equal(interior_product(g, {x, y}), -interior_product(g, {y, x})));
        auto z = random_vec(rng, 5);
        CHECK(are_equal(evaluate(interior_product(g, {x, y}), {z}), evaluate(g, {x, y, z})));
    }
}

TEST_CASE("coboundary") {
    Bracket<Exact> zero(4);
    for (int k = 0; k <= 3; ++k)
        for (auto& I : increasing_tuples(4, k)) {
            F b(4, k);
            b.set(I, q(1));
            CHECK(coboundary(zero, b).is_zero());
        }

    // [e0,e1] = -e3 in the vector-field sense; mu stores the negative
    Bracket<Exact> kt(4);
    kt.set(0, 1, e(4, 3));
    CHECK(coboundary(kt, F::basis(4, 0)).is_zero());
    CHECK(coboundary(kt, F::basis(4, 1)).is_zero());
    CHECK(coboundary(kt, F::basis(4, 2)).is_zero());
    CHECK(form_equal(coboundary(kt, F::basis(4, 3)), -wedge(F::basis(4, 0), F::basis(4, 1))));

    auto mu = iwasawa();
    F w = fundamental_form<Exact>(6);
    CHECK(coboundary(mu, wedge(w, w)).is_zero());
    CHECK_FALSE(coboundary(mu, w).is_zero());
    // d o d = 0 on every basis form
    for (int k = 0; k <= 4; ++k)
        for (auto& I : increasing_tuples(6, k)) {
            F b(6, k);
            b.set(I, q(1));
            CHECK(coboundary(mu, coboundary(mu, b)).is_zero());
        }
    // general formula agrees with -phi(mu(X,Y)) on 1-forms
    for (int c = 0; c < 6; ++c) {
        F d = coboundary(mu, F::basis(6, c));
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y)
                CHECK(are_equal(evaluate(d, {e(6, x), e(6, y)}), -mu.at(x, y)[c]));
    }
}

TEST_CASE("pi11 projection") {
    M J4 = M::standard_J(4);
    F a = wedge(F::basis(4, 0), F::basis(4, 1));
    CHECK(form_equal(pi_11(a, J4), a));
    F b = wedge(F::basis(4, 0), F::basis(4, 2));
    F expect = q(1, 2) * (b + wedge(F::basis(4, 1), F::basis(4, 3)));
    CHECK(form_equal(pi_11(b, J4), expect));
    std::mt19937 rng(8);
    M J6 = M::standard_J(6);
    for (int it = 0; it < 20; ++it) {
        F x = random_form(rng, 6, 2, 5);
        F p = pi_11(x, J6);
        CHECK(form_equal(pi_11(p, J6), p));
        CHECK(is_J_invariant(p, J6));
    }
}

TEST_CASE("complex traces") {
    for (int n : {2, 4, 6, 8})
        CHECK(are_equal(complex_trace_form(fundamental_form<Exact>(n)), q(n / 2)));
    CHECK(are_equal(complex_trace_sym(M::identity(6)), q(3)));
    CHECK(are_equal(complex_trace(M::standard_J(6)), q(3)));
}

TEST_CASE("derivation action") {
    std::mt19937 rng(21);
    int n = 4;
    M J = M::standard_J(n);
    T g = T::from_bilinear(M::identity(n));
    for (int it = 0; it < 10; ++it) {
        M r = random_mat(rng, n);
        M skew = r - r.transpose();
        CHECK(derivation_action(skew, g).is_zero());
        // u(m) part: commutes with J
        M u = q(1, 2) * (skew - J * skew * J);
        CHECK(derivation_action(u, J).is_zero());
        CHECK(derivation_action(u, T::from_endomorphism(J)).is_zero());

        // Leibniz against the tensor product
        T a = T::from_form(random_form(rng, n, 2));
        T b = T::from_endomorphism(random_mat(rng, n));
        T c = T::from_form(random_form(rng, n, 1));
        M A = random_mat(rng, n);
        CHECK(tensor_equal(derivation_action(A, tensor_product(a, b)),
                           tensor_product(derivation_action(A, a), b) + tensor_product(a, derivation_action(A, b))));
        CHECK(tensor_equal(derivation_action(A, tensor_product(c, a)),
                           tensor_product(derivation_action(A, c), a) + tensor_product(c, derivation_action(A, a))));
        // forms: agrees with the tensor representation
        F f = random_form(rng, n, 2, 4);
        CHECK(tensor_equal(T::from_form(derivation_action(A, f)), derivation_action(A, T::from_form(f))));
        // on a 1-form: (A.phi)(X) = -phi(AX)
        F one = random_form(rng, n, 1);
        auto x = random_vec(rng, n);
        CHECK(are_equal(evaluate(derivation_action(A, one), {x}), -evaluate(one, {A.apply(x)})));
    }
}

TEST_CASE("covariant step builds the expected slots") {
    int n = 2;
    M C0(n), C1(n);
    C0(0, 1) = q(1);
    C0(1, 0) = q(-1);
    T J = T::from_endomorphism(M::standard_J(n));
    T d = covariant_step<Exact>({C0, C1}, J);
    CHECK(d.rank() == 1);
    CHECK(mat_equal(d.value({0}), -commutator(C0, M::standard_J(n))));
    CHECK(d.value({1}).is_zero());
    CHECK(tensor_equal(contract_first(e(n, 0), d), d.slice(0)));
}

TEST_CASE("row space") {
    RowSpace<Rational> rs(3);
    CHECK(rs.add({1, 2, 3}));
    CHECK_FALSE(rs.add({2, 4, 6}));
    CHECK(rs.add({0, 1, 1}));
    auto ns = rs.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + ns[0][1] * 2 + ns[0][2] * 3 == Rational(0));
    CHECK(ns[0][1] + ns[0][2] == Rational(0));
    RowSpace<Numeric> rn(2);
    CHECK(rn.add({Numeric(1.0), Numeric(1.0 / 3.0)}));
    CHECK_FALSE(rn.add({Numeric(3.0), Numeric(1.0)}));
}
