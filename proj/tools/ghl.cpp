// ghl: command-line front end.
// Exit codes: 0 success, 1 semantic failure, 2 usage / parse / I/O error.

#include "ghl/expr.hpp"
#include "ghl/ghlfile.hpp"
#include "ghl/invariants.hpp"
#include "ghl/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

using namespace ghl;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string expected;
    std::string t = "symbolic";
    std::string params;
    std::string format = "text";
    std::string output;
    std::string grid;
    std::string quantity = "scal";
    double tol = 1e-9;
    int max_degree = 64;
    int kmax = -1;
    bool t_given = false;
    bool params_given = false;
};

Rational parse_rational(std::string s) {
    std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; }); // canonical text is "p / q"
    try {
        if (s.find_first_of(".eE") != std::string::npos) return Rational::from_decimal(s);
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

std::optional<Rational> parse_t(const std::string& s) {
    if (s == "symbolic") return std::nullopt;
    return parse_rational(s);
}

template <class K>
std::optional<K> t_as(const std::optional<Rational>& t) {
    if (!t) return std::nullopt;
    if constexpr (std::is_same_v<K, Rational>) return *t;
    else return K(t->to_double());
}

// A loaded input: either an exact spec or a floating one.
struct Loaded {
    GhlFile file;
    bool numeric = false;
    BracketSpec<Rational> exact;
    BracketSpec<Numeric> num;
    ReportContext ctx;

    const std::vector<std::string>& free_params() const { return numeric ? num.params : exact.params; }
    int m() const { return file.m; }
};

void check_names(const GhlFile& f, const std::map<std::string, Rational>& at) {
    for (auto& [k, v] : at) {
        if (k == "t") throw UsageError("use --t for the Gauduchon parameter");
        if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
            throw UsageError("'" + k + "' is not a parameter of " + f.origin);
    }
}

Loaded instantiate_file(const GhlFile& f, const std::map<std::string, Rational>& at_in) {
    Loaded L;
    L.file = f;
    auto at = at_in;
    check_names(f, at);
    if (f.kind == GhlFile::FrameMetric) {
        if (at.empty()) at = f.samples.front().second;
        for (auto& p : f.params)
            if (!at.count(p)) throw UsageError("frame-metric input needs every parameter; missing '" + p + "'");
        L.numeric = true;
        L.num = build_frame_metric(f, at);
        L.ctx.backend = "numeric";
    } else {
        L.exact = build_spec<Rational>(f);
        if (!at.empty()) L.exact = instantiate(L.exact, at);
        if (f.backend == "numeric") {
            L.numeric = true;
            L.num = to_numeric(L.exact);
        }
        L.ctx.backend = f.backend;
    }
    L.ctx.assignment = at;
    return L;
}

Loaded load(const Options& o, const std::map<std::string, Rational>& at) { return instantiate_file(read_ghl(o.file), at); }

template <class F>
auto with_spec(const Loaded& L, F&& f) {
    if (L.numeric) return f(L.num);
    return f(L.exact);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw GhlError("cannot write '" + o.output + "'");
    out << text;
    if (!out) throw GhlError("write failed for '" + o.output + "'");
}

std::string validation_text(const ValidationReport& v) {
    std::ostringstream s;
    for (auto& c : v.conditions) {
        if (c.name == "h5") continue;
        s << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.pass) s << " (" << c.detail << ")";
        s << "\n";
    }
    s << "integrable: " << (v.integrable ? "yes" : "no") << "\n";
    for (auto& c : v.conditions)
        if (c.name == "h5" && !c.pass) s << "  " << c.detail << "\n";
    return s.str();
}

void require_valid(const ValidationReport& v) {
    if (!v.ok()) {
        std::cerr << validation_text(v);
        throw std::runtime_error("spec fails validation");
    }
}

// ---------------------------------------------------------------------------

int run_validate(const Options& o) {
    auto L = load(o, parse_assignment(o.params));
    auto v = with_spec(L, [](const auto& s) { return validate(s); });
    if (o.format == "json") {
        Json j = validation_json(v);
        j["schema"] = 1;
        j["name"] = L.file.name;
        emit(o, dump(j));
    } else {
        emit(o, validation_text(v));
    }
    return v.ok() ? 0 : 1;
}

template <class K>
Json build_report(const BracketSpec<K>& spec, const std::optional<Rational>& t, const ReportContext& ctx) {
    auto v = validate(spec);
    require_valid(v);
    Geometry<K> g(spec, t_as<K>(t));
    return geometry_report(g, v, ctx);
}

int run_report(const Options& o) {
    auto L = load(o, parse_assignment(o.params));
    auto t = parse_t(o.t);
    Json r = with_spec(L, [&](const auto& s) { return build_report(s, t, L.ctx); });
    emit(o, o.format == "json" ? dump(r) : report_text(r));
    return 0;
}

int run_check(const Options& o) {
    std::ifstream in(o.expected, std::ios::binary);
    if (!in) throw GhlError("cannot open '" + o.expected + "'");
    Json expected;
    try {
        expected = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw GhlError(o.expected + ": " + e.what());
    }
    if (!expected.is_object() || !expected.contains("schema") || expected["schema"] != 1)
        throw GhlError(o.expected + ": not a schema 1 report");

    std::map<std::string, Rational> at;
    if (o.params_given) {
        at = parse_assignment(o.params);
    } else if (expected.contains("assignment")) {
        for (auto& [k, v] : expected["assignment"].items()) at[k] = parse_rational(v.get<std::string>());
    }
    std::string tt = o.t;
    if (!o.t_given && expected.contains("t")) tt = expected["t"].get<std::string>();
    auto t = parse_t(tt);

    auto L = load(o, at);
    Json actual = with_spec(L, [&](const auto& s) { return build_report(s, t, L.ctx); });
    auto names = L.file.params;
    auto diffs = compare_reports(expected, actual, L.numeric, o.tol, names);
    if (diffs.empty()) {
        std::cout << "check: ok (" << o.expected << ")\n";
        return 0;
    }
    std::cout << "check: " << diffs.size() << " mismatch" << (diffs.size() == 1 ? "" : "es") << "\n";
    for (auto& d : diffs) std::cout << "  " << d.path << ": expected " << d.expected << ", got " << d.actual << "\n";
    return 1;
}

void require_instantiated(const Loaded& L) {
    auto& p = L.free_params();
    if (p.empty()) return;
    std::string s;
    for (auto& x : p) s += (s.empty() ? "" : ", ") + x;
    throw UsageError("parameters must be instantiated with --params: " + s);
}

int run_singer(const Options& o) {
    auto L = load(o, parse_assignment(o.params));
    require_instantiated(L);
    int kmax = o.kmax >= 0 ? o.kmax : L.m() * L.m() + 1;
    auto res = with_spec(L, [&](const auto& s) {
        require_valid(validate(s));
        using K = typename std::decay_t<decltype(s)>::S::Coeff;
        return singer(Geometry<K>(s), kmax);
    });
    if (o.format == "json") {
        emit(o, dump(Json{{"schema", 1}, {"name", L.file.name}, {"dims", res.dims}, {"k_Jg", res.k_Jg}, {"stabilized", res.stabilized()}}));
    } else {
        std::ostringstream s;
        s << "j(k) dims:";
        for (int d : res.dims) s << " " << d;
        s << "\n";
        if (res.stabilized()) s << "k_Jg: " << res.k_Jg << "\n";
        else s << "k_Jg: not reached within " << kmax << " steps\n";
        emit(o, s.str());
    }
    return res.stabilized() ? 0 : 1;
}

int run_killing(const Options& o) {
    auto L = load(o, parse_assignment(o.params));
    require_instantiated(L);
    int kmax = o.kmax >= 0 ? o.kmax : L.m() * L.m() + 2;
    Json j = with_spec(L, [&](const auto& s) {
        require_valid(validate(s));
        using K = typename std::decay_t<decltype(s)>::S::Coeff;
        auto a = killing_generators(Geometry<K>(s), kmax);
        Json basis = Json::array();
        for (auto& b : a.basis) {
            Json v = Json::array();
            for (auto& x : b.v) v.push_back(x.str());
            Json A = Json::array();
            for (int i = 0; i < b.A.dim(); ++i) {
                Json row = Json::array();
                for (int k = 0; k < b.A.dim(); ++k) row.push_back(b.A(i, k).str());
                A.push_back(row);
            }
            basis.push_back(Json{{"v", v}, {"A", A}});
        }
        return Json{{"schema", 1}, {"name", L.file.name}, {"dim", a.dim()}, {"dims", a.dims}, {"order", a.order},
                    {"closed", a.closed}, {"jacobi", a.jacobi}, {"transitive", a.transitive}, {"basis", basis}};
    });
    bool ok = j["order"].get<int>() >= 0 && j["closed"].get<bool>() && j["jacobi"].get<bool>() && j["transitive"].get<bool>();
    if (o.format == "json") {
        emit(o, dump(j));
    } else {
        std::ostringstream s;
        s << "dim kill: " << j["dim"].get<int>() << "\n";
        s << "solution dims by order:";
        for (auto& d : j["dims"]) s << " " << d.get<int>();
        s << "\n";
        s << "closed under bracket: " << (j["closed"].get<bool>() ? "yes" : "no") << "\n";
        s << "jacobi: " << (j["jacobi"].get<bool>() ? "yes" : "no") << "\n";
        s << "v-components span: " << (j["transitive"].get<bool>() ? "yes" : "no") << "\n";
        emit(o, s.str());
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

struct Axis {
    std::string name;
    std::vector<Rational> values;
};

// "p=start:stop:count" or "p=v1|v2|v3", comma separated
std::vector<Axis> parse_grid(const std::string& text) {
    std::vector<Axis> axes;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        part = trim(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw UsageError("grid entry '" + part + "' needs name=...");
        Axis a{trim(part.substr(0, eq)), {}};
        std::string rhs = trim(part.substr(eq + 1));
        for (auto& b : axes)
            if (b.name == a.name) throw UsageError("grid names '" + a.name + "' twice");
        if (rhs.find(':') != std::string::npos) {
            std::vector<std::string> f;
            std::stringstream rs(rhs);
            std::string x;
            while (std::getline(rs, x, ':')) f.push_back(trim(x));
            if (f.size() != 3) throw UsageError("grid range must be start:stop:count");
            Rational lo = parse_rational(f[0]), hi = parse_rational(f[1]);
            int count = 0;
            try {
                count = std::stoi(f[2]);
            } catch (...) {
                throw UsageError("grid count must be an integer");
            }
            if (count < 1) throw UsageError("grid count must be positive");
            for (int i = 0; i < count; ++i)
                a.values.push_back(count == 1 ? lo : lo + (hi - lo) * Rational(i, count - 1));
        } else {
            std::stringstream rs(rhs);
            std::string x;
            while (std::getline(rs, x, '|')) a.values.push_back(parse_rational(trim(x)));
        }
        if (a.values.empty()) throw UsageError("grid axis '" + a.name + "' is empty");
        axes.push_back(std::move(a));
    }
    if (axes.empty()) throw UsageError("--grid is required for sweep");
    return axes;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

template <class K>
std::string quantity_value(const BracketSpec<K>& spec, const std::optional<Rational>& t, const std::string& quantity) {
    if (!validate(spec).ok()) return "invalid";
    Geometry<K> g(spec, t_as<K>(t));
    if (quantity == "scal") return g.scal().str();
    if (!spec.params.empty()) throw UsageError(quantity + " needs every parameter instantiated");
    if (quantity == "sec_max_basis") {
        std::optional<K> best;
        for (int x = 0; x < g.n(); ++x)
            for (int y = x + 1; y < g.n(); ++y) {
                K s = constant_of(g.sectional(unit_vector<RatFun<K>>(g.n(), x), unit_vector<RatFun<K>>(g.n(), y)));
                if (!best || s.to_double() > best->to_double()) best = s;
            }
        return best ? best->str() : std::string("0");
    }
    auto s = singer(g, g.m() * g.m() + 1);
    return std::to_string(s.k_Jg);
}

int run_sweep(const Options& o) {
    static const std::set<std::string> quantities{"scal", "sec_max_basis", "singer_k"};
    if (!quantities.count(o.quantity)) throw UsageError("unknown quantity '" + o.quantity + "' (scal, sec_max_basis, singer_k)");
    auto f = read_ghl(o.file);
    auto axes = parse_grid(o.grid);
    auto fixed = parse_assignment(o.params);
    check_names(f, fixed);
    for (auto& a : axes) {
        if (a.name == "t") continue;
        if (std::find(f.params.begin(), f.params.end(), a.name) == f.params.end())
            throw UsageError("'" + a.name + "' is not a parameter of " + f.origin);
        if (fixed.count(a.name)) throw UsageError("'" + a.name + "' is both fixed and swept");
    }
    auto base_t = parse_t(o.t);

    // row-major over the axes, first axis slowest
    std::vector<std::vector<Rational>> points{{}};
    for (auto& a : axes) {
        std::vector<std::vector<Rational>> next;
        for (auto& p : points)
            for (auto& v : a.values) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }

    auto eval = [&](const std::vector<Rational>& p) -> std::string {
        auto at = fixed;
        auto t = base_t;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            if (axes[i].name == "t") t = p[i];
            else at[axes[i].name] = p[i];
        }
        try {
            Loaded L;
            try {
                L = instantiate_file(f, at);
            } catch (const GhlError&) {
                return "invalid"; // metric not positive definite here
            }
            return with_spec(L, [&](const auto& s) { return quantity_value(s, t, o.quantity); });
        } catch (const PoleError&) {
            return "pole";
        } catch (const std::domain_error&) {
            return "pole";
        }
    };

    std::vector<std::string> values(points.size());
    std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < points.size(); start += width) {
        std::vector<std::future<std::string>> jobs;
        std::size_t stop = std::min(points.size(), start + width);
        for (std::size_t i = start; i < stop; ++i) jobs.push_back(std::async(std::launch::async, eval, std::cref(points[i])));
        for (std::size_t i = start; i < stop; ++i) values[i] = jobs[i - start].get();
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < axes.size(); ++i) out << csv_field(axes[i].name) << ",";
    out << csv_field(o.quantity) << "\r\n";
    for (std::size_t r = 0; r < points.size(); ++r) {
        for (auto& v : points[r]) out << csv_field(v.str()) << ",";
        out << csv_field(values[r]) << "\r\n";
    }
    emit(o, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauduchon geometry of locally homogeneous almost-Hermitian spaces"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("file", o.file, "input .ghl file")->required();
        c->add_option("--params", o.params, "parameter values p=v,...")->each([&](const std::string&) { o.params_given = true; });
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--tol", o.tol, "tolerance of the floating backend")->check(CLI::PositiveNumber);
        c->add_option("--max-degree", o.max_degree, "total-degree cap for polynomial products")->check(CLI::PositiveNumber);
        c->add_option("--output", o.output, "write to this file instead of stdout");
    };
    auto with_t = [&](CLI::App* c) {
        c->add_option("--t", o.t, "Gauduchon parameter: rational or 'symbolic'")->each([&](const std::string&) { o.t_given = true; });
    };

    auto* v = app.add_subcommand("validate", "check conditions h1-h5");
    common(v);
    auto* r = app.add_subcommand("report", "full geometry report");
    common(r);
    with_t(r);
    auto* c = app.add_subcommand("check", "compare a report against an expected fixture");
    common(c);
    with_t(c);
    c->add_option("expected", o.expected, "expected report (JSON)")->required();
    auto* s = app.add_subcommand("singer", "Singer filtration and k_Jg");
    common(s);
    s->add_option("--kmax", o.kmax, "maximal order");
    auto* k = app.add_subcommand("killing", "algebra of holomorphic Killing generators");
    common(k);
    k->add_option("--kmax", o.kmax, "maximal truncation order");
    auto* w = app.add_subcommand("sweep", "evaluate a quantity over a parameter grid (CSV)");
    common(w);
    with_t(w);
    w->add_option("--grid", o.grid, "p=start:stop:count or p=v1|v2, comma separated")->required();
    w->add_option("--quantity", o.quantity, "scal, sec_max_basis or singer_k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_default_tolerance(o.tol);
        set_max_degree(o.max_degree);
        if (v->parsed()) return run_validate(o);
        if (r->parsed()) return run_report(o);
        if (c->parsed()) return run_check(o);
        if (s->parsed()) return run_singer(o);
        if (k->parsed()) return run_killing(o);
        if (w->parsed()) return run_sweep(o);
    } catch (const UsageError& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 2;
    } catch (const GhlError& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 2;
    } catch (const DegreeGuardError& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 2;
    } catch (const EngineError& e) {
        std::cerr << "ghl: internal identity violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ghl: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
