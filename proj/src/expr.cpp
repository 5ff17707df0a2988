#include "ghl/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace ghl {

bool is_basis_token(std::string_view id, int* index) {
    if (id.size() < 2 || id[0] != 'e') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    if (index) {
        int v = 0;
        std::from_chars(id.data() + 1, id.data() + id.size(), v);
        *index = v;
    }
    return true;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, const ParseOptions& o) : s_(s), o_(o) {}

    ExprNode run() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        ExprNode e = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("syntax error at byte " + std::to_string(pos_) + ": " + msg, pos_);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    ExprNode binary(ExprNode::Kind k, ExprNode a, ExprNode b, std::size_t at) {
        ExprNode n;
        n.kind = k;
        n.offset = at;
        n.kids.push_back(std::move(a));
        n.kids.push_back(std::move(b));
        return n;
    }

    ExprNode expr() {
        ExprNode lhs = term();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('+')) lhs = binary(ExprNode::Add, std::move(lhs), term(), at);
            else if (eat('-')) lhs = binary(ExprNode::Sub, std::move(lhs), term(), at);
            else return lhs;
        }
    }
    ExprNode term() {
        ExprNode lhs = factor();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('*')) lhs = binary(ExprNode::Mul, std::move(lhs), factor(), at);
            else if (eat('/')) lhs = binary(ExprNode::Div, std::move(lhs), factor(), at);
            else return lhs;
        }
    }
    ExprNode factor() {
        ExprNode b = base();
        skip();
        std::size_t at = pos_;
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer literal");
            unsigned v = 0;
            auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
            if (ec != std::errc() || v > 4096) fail("exponent too large");
            ExprNode n;
            n.kind = ExprNode::Pow;
            n.exponent = v;
            n.offset = at;
            n.kids.push_back(std::move(b));
            return n;
        }
        return b;
    }
    ExprNode base() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of expression");
        std::size_t at = pos_;
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprNode e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            ExprNode n;
            n.kind = ExprNode::Neg;
            n.offset = at;
            // -x^2 is -(x^2)
            n.kids.push_back(factor());
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id(s_.substr(at, pos_ - at));
            ExprNode n;
            n.offset = at;
            n.text = id;
            int k;
            if (is_basis_token(id, &k)) {
                if (!o_.allow_basis) {
                    pos_ = at;
                    fail("basis vector '" + id + "' not allowed here");
                }
                n.kind = ExprNode::Basis;
                n.basis = k;
                return n;
            }
            if (o_.declared && !o_.declared->count(id)) {
                pos_ = at;
                throw ParseError("undeclared parameter '" + id + "' at byte " + std::to_string(at), at);
            }
            n.kind = ExprNode::Parameter;
            return n;
        }
        fail(std::string("unexpected '") + c + "'");
    }
    ExprNode number() {
        std::size_t at = pos_;
        bool decimal = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            decimal = true;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        // inside bracket values "2e4" would be ambiguous with basis tokens
        if (!o_.allow_basis && pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                decimal = true;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = save;
            }
        }
        std::string txt(s_.substr(at, pos_ - at));
        if (txt == ".") { pos_ = at; fail("malformed number"); }
        if (decimal && !o_.allow_decimal) { pos_ = at; fail("decimal literal not allowed"); }
        ExprNode n;
        n.kind = decimal ? ExprNode::Decimal : ExprNode::Integer;
        n.text = txt;
        n.offset = at;
        return n;
    }

    std::string_view s_;
    const ParseOptions& o_;
    std::size_t pos_ = 0;
};

template <class K>
K literal(const ExprNode& n) {
    if constexpr (K::exact) {
        return n.kind == ExprNode::Integer ? Rational::parse(n.text) : Rational::from_decimal(n.text);
    } else {
        return Numeric(Rational::from_decimal(n.text).to_double());
    }
}

} // namespace

ExprNode parse_expression(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).run();
}

template <class K>
RatFun<K> eval_scalar(const ExprNode& n) {
    using R = RatFun<K>;
    switch (n.kind) {
    case ExprNode::Integer:
    case ExprNode::Decimal: return R(literal<K>(n));
    case ExprNode::Parameter: return R::variable(n.text);
    case ExprNode::Basis:
        throw ParseError("basis vector '" + n.text + "' in scalar expression at byte " + std::to_string(n.offset), n.offset);
    case ExprNode::Add: return eval_scalar<K>(n.kids[0]) + eval_scalar<K>(n.kids[1]);
    case ExprNode::Sub: return eval_scalar<K>(n.kids[0]) - eval_scalar<K>(n.kids[1]);
    case ExprNode::Mul: return eval_scalar<K>(n.kids[0]) * eval_scalar<K>(n.kids[1]);
    case ExprNode::Div: {
        R d = eval_scalar<K>(n.kids[1]);
        if (d.is_zero()) throw ParseError("division by zero at byte " + std::to_string(n.offset), n.offset);
        return eval_scalar<K>(n.kids[0]) / d;
    }
    case ExprNode::Pow: return eval_scalar<K>(n.kids[0]).pow(static_cast<int>(n.exponent));
    case ExprNode::Neg: return -eval_scalar<K>(n.kids[0]);
    }
    throw std::logic_error("bad node");
}

template <class K>
RatFun<K> parse_scalar(std::string_view text, const std::set<std::string>* declared) {
    ParseOptions o;
    o.declared = declared;
    return eval_scalar<K>(parse_expression(text, o));
}

namespace {

// scalar or vector value during evaluation of bracket right-hand sides
template <class K>
struct LinVal {
    bool is_vec = false;
    RatFun<K> s;
    std::vector<RatFun<K>> v;
};

template <class K>
LinVal<K> eval_lin(const ExprNode& n, int dim) {
    using L = LinVal<K>;
    auto bad = [&](const std::string& m) -> ParseError {
        return ParseError(m + " at byte " + std::to_string(n.offset), n.offset);
    };
    auto vec_of = [&](const L& x) {
        return x.is_vec ? x.v : std::vector<RatFun<K>>(dim);
    };
    switch (n.kind) {
    case ExprNode::Basis: {
        if (n.basis < 0 || n.basis >= dim) throw bad("basis index " + n.text + " out of range");
        L r;
        r.is_vec = true;
        r.v.assign(dim, RatFun<K>());
        r.v[n.basis] = RatFun<K>(1L);
        return r;
    }
    case ExprNode::Add:
    case ExprNode::Sub: {
        L a = eval_lin<K>(n.kids[0], dim), b = eval_lin<K>(n.kids[1], dim);
        if (a.is_vec != b.is_vec) throw bad("mixing scalars and vectors in a sum");
        L r;
        r.is_vec = a.is_vec;
        if (a.is_vec) {
            r.v = a.v;
            for (int i = 0; i < dim; ++i) r.v[i] = n.kind == ExprNode::Add ? a.v[i] + b.v[i] : a.v[i] - b.v[i];
        } else {
            r.s = n.kind == ExprNode::Add ? a.s + b.s : a.s - b.s;
        }
        return r;
    }
    case ExprNode::Mul: {
        L a = eval_lin<K>(n.kids[0], dim), b = eval_lin<K>(n.kids[1], dim);
        if (a.is_vec && b.is_vec) throw bad("product of two basis vectors");
        L r;
        if (!a.is_vec && !b.is_vec) { r.s = a.s * b.s; return r; }
        const L& v = a.is_vec ? a : b;
        const L& s = a.is_vec ? b : a;
        r.is_vec = true;
        r.v = vec_of(v);
        for (auto& x : r.v) x = x * s.s;
        return r;
    }
    case ExprNode::Div: {
        L a = eval_lin<K>(n.kids[0], dim), b = eval_lin<K>(n.kids[1], dim);
        if (b.is_vec) throw bad("division by a basis vector");
        if (b.s.is_zero()) throw bad("division by zero");
        L r = a;
        if (a.is_vec) for (auto& x : r.v) x = x / b.s;
        else r.s = a.s / b.s;
        return r;
    }
    case ExprNode::Neg: {
        L a = eval_lin<K>(n.kids[0], dim);
        if (a.is_vec) for (auto& x : a.v) x = -x;
        else a.s = -a.s;
        return a;
    }
    case ExprNode::Pow: {
        L a = eval_lin<K>(n.kids[0], dim);
        if (a.is_vec && n.exponent != 1) throw bad("power of a basis vector");
        if (!a.is_vec) a.s = a.s.pow(static_cast<int>(n.exponent));
        return a;
    }
    default: {
        L r;
        r.s = eval_scalar<K>(n);
        return r;
    }
    }
}

} // namespace

template <class K>
std::vector<RatFun<K>> eval_vector(const ExprNode& n, int dim) {
    LinVal<K> r = eval_lin<K>(n, dim);
    if (!r.is_vec) {
        if (r.s.is_zero()) return std::vector<RatFun<K>>(dim);
        throw ParseError("expected a combination of basis vectors", n.offset);
    }
    return r.v;
}

template RatFun<Rational> eval_scalar<Rational>(const ExprNode&);
template RatFun<Numeric> eval_scalar<Numeric>(const ExprNode&);
template RatFun<Rational> parse_scalar<Rational>(std::string_view, const std::set<std::string>*);
template RatFun<Numeric> parse_scalar<Numeric>(std::string_view, const std::set<std::string>*);
template std::vector<RatFun<Rational>> eval_vector<Rational>(const ExprNode&, int);
template std::vector<RatFun<Numeric>> eval_vector<Numeric>(const ExprNode&, int);

} // namespace ghl
