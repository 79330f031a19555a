#include "fatou/expr.hpp"
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace fatou {

static NodePtr mk(Node n) { return std::make_shared<const Node>(std::move(n)); }

NodePtr nvar() {
    static NodePtr v = mk({Op::Var});
    return v;
}
NodePtr nconst(cplx v) { return mk({Op::Const, v}); }
NodePtr nadd(NodePtr a, NodePtr b) { return mk({Op::Add, {}, 0, std::move(a), std::move(b)}); }
NodePtr nsub(NodePtr a, NodePtr b) { return mk({Op::Sub, {}, 0, std::move(a), std::move(b)}); }
NodePtr nmul(NodePtr a, NodePtr b) { return mk({Op::Mul, {}, 0, std::move(a), std::move(b)}); }
NodePtr ndiv(NodePtr a, NodePtr b) { return mk({Op::Div, {}, 0, std::move(a), std::move(b)}); }
NodePtr npow(NodePtr a, long n) { return mk({Op::Pow, {}, n, std::move(a)}); }
NodePtr nexp(NodePtr a) { return mk({Op::Exp, {}, 0, std::move(a)}); }
NodePtr nsin(NodePtr a) { return mk({Op::Sin, {}, 0, std::move(a)}); }
NodePtr ncos(NodePtr a) { return mk({Op::Cos, {}, 0, std::move(a)}); }
NodePtr nref(const std::string& name) {
    Node n{Op::Ref};
    n.name = name;
    return mk(std::move(n));
}

static bool tree_has(const Node& n, const std::map<std::string, NodePtr>& defs,
                     const std::function<bool(const Node&)>& pred,
                     std::set<const Node*>& seen) {
    if (pred(n)) return true;
    if (n.op == Op::Ref) {
        auto it = defs.find(n.name);
        if (it == defs.end()) throw Error("unresolved sub-expression reference: " + n.name);
        if (!seen.insert(it->second.get()).second) return false;
        return tree_has(*it->second, defs, pred, seen);
    }
    if (n.a && tree_has(*n.a, defs, pred, seen)) return true;
    if (n.b && tree_has(*n.b, defs, pred, seen)) return true;
    return false;
}

static void check_acyclic(const std::map<std::string, NodePtr>& defs) {
    // depth-first over Ref edges with an on-stack set
    std::function<void(const Node&, std::set<std::string>&)> walk =
        [&](const Node& n, std::set<std::string>& stack) {
            if (n.op == Op::Ref) {
                if (stack.count(n.name)) throw Error("cyclic sub-expression reference: " + n.name);
                auto it = defs.find(n.name);
                if (it == defs.end()) throw Error("unresolved sub-expression reference: " + n.name);
                stack.insert(n.name);
                walk(*it->second, stack);
                stack.erase(n.name);
                return;
            }
            if (n.a) walk(*n.a, stack);
            if (n.b) walk(*n.b, stack);
        };
    for (auto& [name, node] : defs) {
        std::set<std::string> stack{name};
        walk(*node, stack);
    }
}

FunctionExpr FunctionExpr::make(NodePtr root, std::string tag) {
    FunctionExpr f;
    f.root = std::move(root);
    f.tag = std::move(tag);
    if (f.entire_by_structure()) f.poles_known = true;
    return f;
}

bool FunctionExpr::entire_by_structure() const {
    check_acyclic(defs);
    std::set<const Node*> seen;
    auto is_div = [](const Node& n) { return n.op == Op::Div || (n.op == Op::Pow && n.expo < 0); };
    return !tree_has(*root, defs, is_div, seen);
}

bool FunctionExpr::transcendental() const {
    std::set<const Node*> seen;
    auto is_tr = [](const Node& n) {
        return n.op == Op::Exp || n.op == Op::Sin || n.op == Op::Cos;
    };
    return tree_has(*root, defs, is_tr, seen);
}

const Node& FunctionExpr::resolve(const Node& n) const {
    if (n.op != Op::Ref) return n;
    auto it = defs.find(n.name);
    if (it == defs.end()) throw Error("unresolved sub-expression reference: " + n.name);
    return resolve(*it->second);
}

// ---------------------------------------------------------------- parser ---

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) bump();
    }
    void bump() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
        ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            bump();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) {
            out += s[pos];
            bump();
        }
        return out;
    }
    double number() {
        skip_ws();
        const char* start = s.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(start, &end);
        if (end == start) fail("expected a number");
        for (const char* p = start; p != end; ++p) bump();
        return v;
    }
    long integer() {
        skip_ws();
        bool negative = accept('-');
        if (!(pos < s.size() && std::isdigit((unsigned char)s[pos]))) fail("expected an integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 100000000L) fail("exponent too large");
            bump();
        }
        return negative ? -v : v;
    }
};

struct Parser {
    Lexer lx;
    explicit Parser(const std::string& text) : lx(text) {}

    NodePtr expr() {
        bool neg_head = lx.accept('-');
        NodePtr acc = term();
        if (neg_head) acc = nsub(nconst(0.0), acc);
        for (;;) {
            if (lx.accept('+'))
                acc = nadd(acc, term());
            else if (lx.accept('-'))
                acc = nsub(acc, term());
            else
                return acc;
        }
    }
    NodePtr term() {
        NodePtr acc = factor();
        for (;;) {
            if (lx.accept('*'))
                acc = nmul(acc, factor());
            else if (lx.accept('/'))
                acc = ndiv(acc, factor());
            else
                return acc;
        }
    }
    NodePtr factor() {
        NodePtr b = base();
        if (lx.accept('^')) {
            long n = lx.integer();
            return npow(b, n);
        }
        return b;
    }
    NodePtr base() {
        char c = lx.peek();
        if (c == '(') {
            lx.bump();
            NodePtr inner = expr();
            lx.expect(')');
            return inner;
        }
        if (std::isdigit((unsigned char)c) || c == '.') return nconst(lx.number());
        if (std::isalpha((unsigned char)c)) {
            int line = lx.line, col = lx.col;
            std::string id = lx.ident();
            if (id == "z") return nvar();
            if (id == "i") return nconst(cplx{0.0, 1.0});
            if (id == "pi") return nconst(PI);
            if (id == "e") return nconst(std::exp(1.0));
            if (id == "exp" || id == "sin" || id == "cos") {
                if (!lx.accept('(')) throw ParseError("function '" + id + "' needs an argument list", line, col);
                NodePtr arg = expr();
                lx.expect(')');
                if (id == "exp") return nexp(arg);
                if (id == "sin") return nsin(arg);
                return ncos(arg);
            }
            throw ParseError("unknown identifier '" + id + "'", line, col);
        }
        lx.fail("expected 'z', a number, a constant, a function call or '('");
    }
};

} // namespace

FunctionExpr parse_function(const std::string& text) {
    Parser p(text);
    NodePtr root = p.expr();
    if (!p.lx.eof()) p.lx.fail("trailing input after expression");
    FunctionExpr f = FunctionExpr::make(std::move(root), text);
    return f;
}

// ------------------------------------------------------------ serializer ---

namespace {

std::string fmt_real(double v) {
    char buf[40];
    if (v == (long long)v && std::fabs(v) < 1e15)
        std::snprintf(buf, sizeof buf, "%lld", (long long)v);
    else
        std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// precedence: 0 sum, 1 product, 2 power, 3 atom
void emit(const Node& n, std::ostringstream& out, int parent_prec) {
    auto paren = [&](int prec, auto&& body) {
        bool need = prec < parent_prec;
        if (need) out << '(';
        body();
        if (need) out << ')';
    };
    switch (n.op) {
    case Op::Var: out << 'z'; break;
    case Op::Const: {
        double re = n.k.real(), im = n.k.imag();
        if (im == 0.0) {
            if (re < 0.0)
                paren(0, [&] { out << "0-" << fmt_real(-re); });
            else
                out << fmt_real(re);
        } else if (re == 0.0 && im == 1.0)
            out << 'i';
        else
            paren(0, [&] {
                out << fmt_real(re) << (im >= 0 ? "+" : "-") << fmt_real(std::fabs(im)) << "*i";
            });
        break;
    }
    case Op::Add:
        paren(0, [&] {
            emit(*n.a, out, 0);
            out << '+';
            emit(*n.b, out, 1);
        });
        break;
    case Op::Sub:
        paren(0, [&] {
            emit(*n.a, out, 0);
            out << '-';
            emit(*n.b, out, 1);
        });
        break;
    case Op::Mul:
        paren(1, [&] {
            emit(*n.a, out, 1);
            out << '*';
            emit(*n.b, out, 2);
        });
        break;
    case Op::Div:
        paren(1, [&] {
            emit(*n.a, out, 1);
            out << '/';
            emit(*n.b, out, 3);
        });
        break;
    case Op::Pow:
        paren(2, [&] {
            emit(*n.a, out, 3);
            out << '^' << n.expo;
        });
        break;
    case Op::Exp:
        out << "exp(";
        emit(*n.a, out, 0);
        out << ')';
        break;
    case Op::Sin:
        out << "sin(";
        emit(*n.a, out, 0);
        out << ')';
        break;
    case Op::Cos:
        out << "cos(";
        emit(*n.a, out, 0);
        out << ')';
        break;
    case Op::Ref:
        throw Error("to_dsl: named references have no DSL form (serialize to JSON instead)");
    }
}

} // namespace

std::string to_dsl(const NodePtr& n) {
    std::ostringstream out;
    emit(*n, out, 0);
    return out.str();
}

std::string to_dsl(const FunctionExpr& f) { return to_dsl(f.root); }

} // namespace fatou
