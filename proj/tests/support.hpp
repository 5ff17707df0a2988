#pragma once
// Shared helpers for the test binaries.

#include "ghl/ratfun.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using ghl::Exact;
using ghl::Rational;

inline Exact var(const char* v) { return Exact::variable(v); }
inline Exact q(long n, long d = 1) { return Exact(Rational(n, d)); }

// Random polynomial with small integer coefficients in the given variables.
inline ghl::Polynomial<Rational> random_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                                             int max_terms = 3, int max_deg = 2) {
    std::uniform_int_distribution<int> nterm(1, max_terms), coef(-4, 4), deg(0, max_deg);
    ghl::Polynomial<Rational> p;
    int n = nterm(rng);
    for (int i = 0; i < n; ++i) {
        ghl::Polynomial<Rational> mono(static_cast<long>(coef(rng)));
        for (auto& v : vars) mono = mono * ghl::Polynomial<Rational>::variable(v).pow(deg(rng));
        p = p + mono;
    }
    return p;
}

inline Exact random_ratfun(std::mt19937& rng, const std::vector<std::string>& vars) {
    auto n = random_poly(rng, vars);
    ghl::Polynomial<Rational> d;
    do d = random_poly(rng, vars, 2, 1); while (d.is_zero());
    return Exact(n, d);
}

} // namespace testsupport

#include "ghl/ghlfile.hpp"

namespace testsupport {

inline std::string data_path(const std::string& file) { return std::string(GHL_DATA_DIR) + "/" + file; }

inline std::string fixture_path(const std::string& file) {
    return std::string(GHL_DATA_DIR) + "/../tests/fixtures/" + file;
}

template <class K = Rational>
ghl::BracketSpec<K> load(const std::string& name) {
    return ghl::build_spec<K>(ghl::read_ghl(data_path(name + ".ghl")));
}

// M given as integer rows, scaled by s
inline ghl::Mat<Exact> scaled(const Exact& s, std::vector<std::vector<long>> rows) {
    ghl::Mat<Exact> m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) m(i, j) = s * Exact(Rational(rows[i][j]));
    return m;
}

} // namespace testsupport
