#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghl/invariants.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace ghl;
using namespace testsupport;

// Theorem-level identities, checked on every bundled spec. Bracket specs are
// symbolic in their parameters and in t; the frame-metric spec is checked at
// each of its samples in the floating backend, still symbolic in t.

namespace {

template <class K>
void check_all(const Geometry<K>& g, const std::string& label) {
    INFO(label);
    auto bad = property_failures(g);
    CHECK(bad.empty());
    for (auto& b : bad) MESSAGE(label << ": " << b);
}

} // namespace

TEST_CASE("bracket specs, symbolic") {
    for (const char* name : {"abelian2", "sphere", "iwasawa", "kodaira"}) {
        Geometry<Rational> g(load(name));
        CHECK(g.symbolic_t());
        check_all(g, name);
    }
}

TEST_CASE("bracket specs at fixed t") {
    for (const char* name : {"iwasawa", "kodaira"})
        for (long t : {-1L, 0L, 1L, 3L}) {
            Geometry<Rational> g(load(name), Rational(t));
            check_all(g, std::string(name) + " t=" + std::to_string(t));
        }
}

TEST_CASE("Kodaira-Thurston at its samples") {
    auto f = read_ghl(data_path("kodaira-thurston.ghl"));
    for (auto& [name, at] : f.samples) {
        Geometry<Numeric> g(build_frame_metric(f, at));
        check_all(g, "kodaira-thurston " + name);
    }
}

TEST_CASE("generic Iwasawa metric at its samples") {
    auto f = read_ghl(fixture_path("iwasawa-generic.ghl"));
    for (auto& [name, at] : f.samples) {
        Geometry<Numeric> g(build_frame_metric(f, at));
        check_all(g, "iwasawa-generic " + name);
    }
}

TEST_CASE("random instances of the Kodaira family, floating backend") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 9);
    for (int i = 0; i < 5; ++i) {
        std::map<std::string, Rational> at{{"alpha", Rational(d(rng), d(rng))},
                                           {"beta", Rational(-d(rng), d(rng))},
                                           {"r", Rational(d(rng), d(rng))},
                                           {"v", Rational(d(rng), d(rng))}};
        Geometry<Numeric> g(to_numeric(instantiate(load("kodaira"), at)));
        check_all(g, "kodaira random " + std::to_string(i));
    }
}
