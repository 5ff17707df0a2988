#include "ghl/report.hpp"

#include "ghl/expr.hpp"

#include <set>
#include <sstream>

namespace ghl {

namespace {

template <class S>
Json mat_json(const Mat<S>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.dim(); ++j) r.push_back(m(i, j).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class S>
Json vec_json(const Vec<S>& v) {
    Json r = Json::array();
    for (auto& x : v) r.push_back(x.str());
    return r;
}

// sparse form: "e0,e2,e4" -> value, increasing indices, nonzero only
template <class S>
Json form_json(const KForm<S>& f, int q) {
    Json o = Json::object();
    for (auto& [idx, v] : f.components()) {
        std::string key;
        for (std::size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + basis_label(q + idx[i]);
        o[key] = v.str();
    }
    return o;
}

// 2-form as a full antisymmetric matrix
template <class S>
Json form2_matrix(const KForm<S>& f, int n) {
    Mat<S> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(i, j) = f.get({i, j});
    return mat_json(m);
}

// per basis direction: label -> matrix
template <class S>
Json per_direction(const std::vector<Mat<S>>& ms, int q) {
    Json o = Json::object();
    for (std::size_t x = 0; x < ms.size(); ++x) o[basis_label(q + static_cast<int>(x))] = mat_json(ms[x]);
    return o;
}

// pair-indexed, x < y: "ex,ey" -> value
template <class T, class F>
Json per_pair(const std::vector<T>& items, int n, int q, F f) {
    Json o = Json::object();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) o[basis_label(q + x) + "," + basis_label(q + y)] = f(items[x * n + y]);
    return o;
}

bool is_blank_value(const Json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        return s == "0";
    }
    if (j.is_array() || j.is_object()) {
        for (auto& x : j)
            if (!is_blank_value(x)) return false;
        return true;
    }
    return false;
}

void text_walk(const Json& j, const std::string& path, std::ostringstream& o) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) text_walk(v, path.empty() ? k : path + "." + k, o);
    } else if (j.is_array()) {
        bool scalars = !j.empty() && j[0].is_string();
        if (scalars) {
            if (is_blank_value(j)) return;
            o << path << " = [";
            for (std::size_t i = 0; i < j.size(); ++i) o << (i ? ", " : "") << j[i].get<std::string>();
            o << "]\n";
            return;
        }
        if (!j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_string()) {
            // matrix: print nonzero entries
            if (is_blank_value(j)) return;
            o << path << ":\n";
            for (std::size_t r = 0; r < j.size(); ++r)
                for (std::size_t c = 0; c < j[r].size(); ++c)
                    if (j[r][c].get<std::string>() != "0") o << "  (" << r << "," << c << ") " << j[r][c].get<std::string>() << "\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) text_walk(j[i], path + "[" + std::to_string(i) + "]", o);
    } else if (j.is_string()) {
        if (j.get<std::string>() == "0" && path.find('.') != std::string::npos) return;
        o << path << " = " << j.get<std::string>() << "\n";
    } else if (j.is_boolean()) {
        o << path << " = " << (j.get<bool>() ? "yes" : "no") << "\n";
    } else {
        o << path << " = " << j.dump() << "\n";
    }
}

template <class K>
bool try_parse(const std::string& s, const std::set<std::string>& names, RatFun<K>& out) {
    try {
        out = parse_scalar<K>(s, &names);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void compare_walk(const Json& e, const Json& a, const std::string& path, bool numeric, double tol,
                  const std::set<std::string>& names, std::vector<Mismatch>& out) {
    auto fail = [&](std::string ev, std::string av) { out.push_back({path.empty() ? "<root>" : path, ev, av}); };
    if (e.is_object()) {
        if (!a.is_object()) return fail(e.dump(), a.dump());
        for (auto& [k, v] : e.items()) {
            std::string p = path.empty() ? k : path + "." + k;
            if (!a.contains(k)) {
                out.push_back({p, v.dump(), "<missing>"});
                continue;
            }
            compare_walk(v, a.at(k), p, numeric, tol, names, out);
        }
        return;
    }
    if (e.is_array()) {
        if (!a.is_array() || a.size() != e.size()) return fail(e.dump(), a.dump());
        for (std::size_t i = 0; i < e.size(); ++i)
            compare_walk(e[i], a[i], path + "[" + std::to_string(i) + "]", numeric, tol, names, out);
        return;
    }
    if (e.is_string() && a.is_string()) {
        auto es = e.get<std::string>(), as = a.get<std::string>();
        if (es == as) return;
        if (numeric) {
            RatFun<Numeric> x, y;
            if (try_parse(es, names, x) && try_parse(as, names, y)) {
                if (x.is_constant() && y.is_constant()) {
                    double xv = x.is_zero() ? 0.0 : x.constant_value().value();
                    double yv = y.is_zero() ? 0.0 : y.constant_value().value();
                    if (hybrid_close(xv, yv, tol)) return;
                } else if (are_equal(x, y)) {
                    return;
                }
            }
        } else {
            RatFun<Rational> x, y;
            if (try_parse(es, names, x) && try_parse(as, names, y) && are_equal(x, y)) return;
        }
        return fail(es, as);
    }
    if (e.is_number() && a.is_number() && !e.is_number_integer()) {
        // residuals: only their smallness matters
        if (hybrid_close(e.get<double>(), a.get<double>(), std::max(tol, 1e-9))) return;
        return fail(e.dump(), a.dump());
    }
    if (e != a) fail(e.dump(), a.dump());
}

} // namespace

Json validation_json(const ValidationReport& v) {
    Json o = Json::object();
    for (auto& c : v.conditions) o[c.name] = Json{{"pass", c.pass}, {"detail", c.detail}};
    o["ok"] = v.ok();
    o["integrable"] = v.integrable;
    return o;
}

template <class K>
Json geometry_report(const Geometry<K>& g, const ValidationReport& v, const ReportContext& ctx) {
    const int n = g.n(), q = g.q();
    const auto& spec = g.spec();
    Json r = Json::object();
    r["schema"] = 1;
    r["name"] = spec.name;
    r["q"] = spec.q;
    r["m"] = spec.m;
    r["params"] = spec.params;
    r["backend"] = ctx.backend;
    r["t"] = g.symbolic_t() ? std::string("symbolic") : g.t().str();
    Json as = Json::object();
    for (auto& [k, val] : ctx.assignment) as[k] = val.str();
    r["assignment"] = as;
    r["validation"] = validation_json(v);

    r["N"] = per_pair(g.nijenhuis(), n, q, [](const Vec<RatFun<K>>& x) { return vec_json(x); });
    r["F"] = form_json(g.F(), q);
    r["F_plus"] = form_json(g.F_plus(), q);
    r["F_minus"] = form_json(g.F_minus(), q);
    r["S"] = per_direction(g.levi_civita(), q);
    r["A"] = per_direction(g.gauduchon(), q);
    r["Rm"] = per_pair(g.Rm_all(), n, q, [](const Mat<RatFun<K>>& x) { return mat_json(x); });
    r["Omega"] = per_pair(g.Omega_all(), n, q, [](const Mat<RatFun<K>>& x) { return mat_json(x); });
    r["T"] = per_pair(g.T_all(), n, q, [](const Vec<RatFun<K>>& x) { return vec_json(x); });
    r["rho1"] = form2_matrix(g.rho1(), n);
    r["rho2"] = form2_matrix(g.rho2(), n);
    r["scal"] = g.scal().str();
    Json lee = Json::array();
    for (int x = 0; x < n; ++x) lee.push_back(g.lee().get({x}).str());
    r["lee"] = lee;
    const auto& f = g.flags();
    r["flags"] = Json{{"integrable", f.integrable}, {"almost_kahler", f.almost_kahler}, {"balanced", f.balanced}};
    auto a = g.audit();
    r["audit"] = Json{{"torsion_identity", a.torsion_identity},
                      {"curvature_identity", a.curvature_identity},
                      {"torsion_residual", a.torsion_residual},
                      {"curvature_residual", a.curvature_residual}};
    return r;
}

std::string report_text(const Json& report) {
    std::ostringstream o;
    text_walk(report, "", o);
    return o.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Mismatch> compare_reports(const Json& expected, const Json& actual, bool numeric, double tol,
                                      const std::vector<std::string>& names) {
    std::set<std::string> n(names.begin(), names.end());
    n.insert("t");
    std::vector<Mismatch> out;
    compare_walk(expected, actual, "", numeric, tol, n, out);
    return out;
}

template Json geometry_report(const Geometry<Rational>&, const ValidationReport&, const ReportContext&);
template Json geometry_report(const Geometry<Numeric>&, const ValidationReport&, const ReportContext&);

} // namespace ghl
