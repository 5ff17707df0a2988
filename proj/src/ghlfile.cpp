#include "ghl/ghlfile.hpp"

#include "ghl/expr.hpp"
#include "ghl/frame.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ghl {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

// drop a trailing comment that is not inside quotes
std::string strip_comment(const std::string& line) {
    bool inq = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') inq = !inq;
        else if (line[i] == '#' && !inq) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

int parse_int(const std::string& s, const std::string& ctx) {
    if (s.empty()) throw GhlError(ctx + ": expected an integer");
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (...) {
        throw GhlError(ctx + ": expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw GhlError(ctx + ": expected an integer, got '" + s + "'");
    return static_cast<int>(v);
}

std::pair<int, int> parse_key_pair(const std::string& key, const std::string& ctx, bool basis_tokens) {
    auto parts = split(key, ',');
    if (parts.size() != 2) throw GhlError(ctx + ": key must be a pair, got '" + key + "'");
    auto idx = [&](const std::string& p) {
        if (basis_tokens) {
            int k = -1;
            if (!is_basis_token(p, &k)) throw GhlError(ctx + ": expected a basis vector e<k>, got '" + p + "'");
            return k;
        }
        return parse_int(p, ctx);
    };
    return {idx(parts[0]), idx(parts[1])};
}

Rational parse_value(const std::string& v, const std::string& ctx) {
    try {
        if (v.find_first_of(".eE") != std::string::npos) return Rational::from_decimal(v);
        return Rational::parse(v);
    } catch (const std::exception&) {
        throw GhlError(ctx + ": not a rational value: '" + v + "'");
    }
}

} // namespace

std::map<std::string, Rational> parse_assignment(std::string_view text) {
    std::map<std::string, Rational> out;
    std::string s = trim(text);
    if (s.empty()) return out;
    for (auto& part : split(s, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw GhlError("assignment '" + part + "' is not of the form name=value");
        std::string k = trim(part.substr(0, eq)), v = trim(part.substr(eq + 1));
        if (!is_identifier(k)) throw GhlError("bad parameter name '" + k + "'");
        if (out.count(k)) throw GhlError("parameter '" + k + "' assigned twice");
        out.emplace(k, parse_value(v, "assignment"));
    }
    return out;
}

GhlFile parse_ghl(std::string_view text, const std::string& origin) {
    GhlFile f;
    f.origin = origin;
    std::istringstream in{std::string(text)};
    std::string raw, section;
    int lineno = 0;
    std::set<std::string> seen_sections;
    std::set<std::string> alg_keys;
    bool have_m = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string ctx = origin + ":" + std::to_string(lineno);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw GhlError(ctx + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known{"algebra", "brackets", "frame", "metric", "samples"};
            if (!known.count(section)) throw GhlError(ctx + ": unknown section [" + section + "]");
            if (!seen_sections.insert(section).second) throw GhlError(ctx + ": duplicate section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        // keys may be quoted and contain no '='
        if (eq == std::string::npos) throw GhlError(ctx + ": expected key = value");
        std::string key = unquote(trim(line.substr(0, eq)));
        std::string val = unquote(trim(line.substr(eq + 1)));
        if (section.empty()) throw GhlError(ctx + ": entry outside of a section");
        if (section == "algebra") {
            if (!alg_keys.insert(key).second) throw GhlError(ctx + ": duplicate key '" + key + "'");
            if (key == "name") f.name = val;
            else if (key == "q") f.q = parse_int(val, ctx);
            else if (key == "m") {
                f.m = parse_int(val, ctx);
                have_m = true;
            } else if (key == "params") {
                if (!trim(val).empty())
                    for (auto& p : split(val, ',')) {
                        if (!is_identifier(p)) throw GhlError(ctx + ": bad parameter name '" + p + "'");
                        if (is_basis_token(p)) throw GhlError(ctx + ": parameter '" + p + "' collides with a basis vector name");
                        if (p == "t") throw GhlError(ctx + ": 't' is reserved for the Gauduchon parameter");
                        if (std::find(f.params.begin(), f.params.end(), p) != f.params.end())
                            throw GhlError(ctx + ": parameter '" + p + "' declared twice");
                        f.params.push_back(p);
                    }
            } else if (key == "backend") {
                if (val != "exact" && val != "numeric") throw GhlError(ctx + ": backend must be exact or numeric");
                f.backend = val;
            } else if (key == "format") {
                if (val == "brackets") f.kind = GhlFile::Algebra;
                else if (val == "frame-metric") f.kind = GhlFile::FrameMetric;
                else throw GhlError(ctx + ": format must be brackets or frame-metric");
            } else {
                throw GhlError(ctx + ": unknown key '" + key + "' in [algebra]");
            }
        } else if (section == "brackets") {
            auto [a, b] = parse_key_pair(key, ctx, true);
            if (!(a < b)) throw GhlError(ctx + ": bracket keys need a < b");
            for (auto& e : f.brackets)
                if (e.a == a && e.b == b) throw GhlError(ctx + ": duplicate bracket " + key);
            f.brackets.push_back({a, b, val, lineno});
        } else if (section == "frame") {
            if (key != "J") throw GhlError(ctx + ": unknown key '" + key + "' in [frame]");
            for (auto& row : split(val, ';')) {
                std::vector<long> r;
                for (auto& x : split(row, ',')) r.push_back(parse_int(x, ctx));
                f.J.push_back(r);
            }
        } else if (section == "metric") {
            auto [a, b] = parse_key_pair(key, ctx, false);
            if (a > b) std::swap(a, b);
            for (auto& e : f.metric)
                if (e.a == a && e.b == b) throw GhlError(ctx + ": duplicate metric entry " + key);
            f.metric.push_back({a, b, val, lineno});
        } else if (section == "samples") {
            try {
                f.samples.push_back({key, parse_assignment(val)});
            } catch (const GhlError& e) {
                throw GhlError(ctx + ": " + e.what());
            }
        }
    }
    if (seen_sections.count("frame") || seen_sections.count("metric")) f.kind = GhlFile::FrameMetric;
    if (!seen_sections.count("algebra")) throw GhlError(origin + ": missing [algebra] section");
    if (!have_m) throw GhlError(origin + ": [algebra] needs m");
    if (f.q < 0 || f.m < 1) throw GhlError(origin + ": need q >= 0 and m >= 1");
    for (auto& e : f.brackets)
        if (e.b >= f.dim())
            throw GhlError(origin + ":" + std::to_string(e.line) + ": basis index out of range for dimension " + std::to_string(f.dim()));
    if (f.kind == GhlFile::FrameMetric) {
        int n = 2 * f.m;
        if (f.q != 0) throw GhlError(origin + ": frame-metric files need q = 0");
        if (static_cast<int>(f.J.size()) != n) throw GhlError(origin + ": [frame] J must have " + std::to_string(n) + " rows");
        for (auto& r : f.J)
            if (static_cast<int>(r.size()) != n) throw GhlError(origin + ": [frame] J rows must have " + std::to_string(n) + " entries");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long s = 0;
                for (int k = 0; k < n; ++k) s += f.J[i][k] * f.J[k][j];
                if (s != (i == j ? -1 : 0)) throw GhlError(origin + ": [frame] J does not square to -1");
            }
        for (auto& e : f.metric)
            if (e.a < 0 || e.b >= n) throw GhlError(origin + ":" + std::to_string(e.line) + ": metric index out of range");
        if (f.samples.empty()) throw GhlError(origin + ": frame-metric files need at least one [samples] entry");
        f.backend = "numeric";
    }
    return f;
}

GhlFile read_ghl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GhlError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ghl(ss.str(), path);
}

namespace {

template <class K>
Vec<RatFun<K>> parse_bracket_value(const GhlFile& f, const GhlFile::Entry& e, int dim) {
    std::set<std::string> declared(f.params.begin(), f.params.end());
    ParseOptions o;
    o.declared = &declared;
    o.allow_basis = true;
    try {
        return eval_vector<K>(parse_expression(e.expr, o), dim);
    } catch (const std::exception& ex) {
        throw GhlError(f.origin + ":" + std::to_string(e.line) + ": " + ex.what());
    }
}

} // namespace

template <class K>
BracketSpec<K> build_spec(const GhlFile& f) {
    if (f.kind != GhlFile::Algebra) throw GhlError(f.origin + ": not a bracket file");
    BracketSpec<K> spec(f.name, f.q, f.m, f.params);
    for (auto& e : f.brackets) spec.mu.set(e.a, e.b, parse_bracket_value<K>(f, e, f.dim()));
    return spec;
}

BracketSpec<Numeric> build_frame_metric(const GhlFile& f, const std::map<std::string, Rational>& at) {
    if (f.kind != GhlFile::FrameMetric) throw GhlError(f.origin + ": not a frame-metric file");
    int n = 2 * f.m;
    for (auto& p : f.params)
        if (!at.count(p)) throw GhlError(f.origin + ": parameter '" + p + "' needs a value");
    std::set<std::string> declared(f.params.begin(), f.params.end());
    auto value = [&](const std::string& text, int line) {
        try {
            return parse_scalar<Rational>(text, &declared).evaluate(at);
        } catch (const PoleError&) {
            throw;
        } catch (const std::exception& ex) {
            throw GhlError(f.origin + ":" + std::to_string(line) + ": " + ex.what());
        }
    };

    Mat<Numeric> G(n), J(n);
    for (auto& e : f.metric) {
        Numeric v(value(e.expr, e.line).to_double());
        G(e.a, e.b) = v;
        G(e.b, e.a) = v;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) J(i, j) = Numeric(f.J[i][j]);

    // frame brackets at the assignment, exact then converted
    std::vector<std::vector<double>> cf(static_cast<std::size_t>(n) * n, std::vector<double>(n, 0.0));
    for (auto& e : f.brackets) {
        Vec<Exact> v = parse_bracket_value<Rational>(f, e, n);
        for (int c = 0; c < n; ++c) {
            double x = v[c].is_zero() ? 0.0 : v[c].evaluate(at).to_double();
            cf[e.a * n + e.b][c] = x;
            cf[e.b * n + e.a][c] = -x;
        }
    }

    Mat<Numeric> W;
    try {
        W = gram_schmidt_unitary(G, J);
    } catch (const FrameError& ex) {
        throw GhlError(f.origin + ": " + ex.what() + " at the given assignment");
    }

    auto w = [&](int a, int i) { return W(i, a).value(); };
    BracketSpec<Numeric> spec(f.name, 0, f.m, {});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // mu(w_a, w_b) in frame coordinates
            std::vector<double> v(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = w(a, i) * w(b, j);
                    if (s == 0) continue;
                    for (int k = 0; k < n; ++k) v[k] += s * cf[i * n + j][k];
                }
            Vec<Approx> out(n);
            for (int c = 0; c < n; ++c) {
                double g = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) g += v[i] * G(i, j).value() * w(c, j);
                out[c] = Approx(Numeric(g));
            }
            spec.mu.set(a, b, out);
        }
    return spec;
}

template <class K>
std::string write_ghl(const BracketSpec<K>& spec, const std::string& backend) {
    std::ostringstream o;
    o << "[algebra]\n";
    o << "name = " << spec.name << "\n";
    o << "q = " << spec.q << "\n";
    o << "m = " << spec.m << "\n";
    o << "params = ";
    for (std::size_t i = 0; i < spec.params.size(); ++i) o << (i ? ", " : "") << spec.params[i];
    o << "\nbackend = " << backend << "\n\n[brackets]\n";
    int n = spec.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& v = spec.mu.at(a, b);
            std::string terms;
            for (int c = 0; c < n; ++c) {
                if (v[c].is_zero()) continue;
                if (!terms.empty()) terms += " + ";
                terms += "(" + v[c].str() + ")*" + basis_label(c);
            }
            if (terms.empty()) continue;
            o << "\"" << basis_label(a) << "," << basis_label(b) << "\" = \"" << terms << "\"\n";
        }
    return o.str();
}

template BracketSpec<Rational> build_spec(const GhlFile&);
template BracketSpec<Numeric> build_spec(const GhlFile&);
template std::string write_ghl(const BracketSpec<Rational>&, const std::string&);
template std::string write_ghl(const BracketSpec<Numeric>&, const std::string&);

} // namespace ghl
