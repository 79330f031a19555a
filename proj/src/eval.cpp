#include "fatou/eval.hpp"
#include <cmath>

namespace fatou {

namespace {

constexpr double EPS = 2.2e-16;

struct Tracked {
    cplx v;
    double rel; // forward relative error bound
};

struct ComplexEval {
    const FunctionExpr& f;
    const Config& cfg;
    bool pole = false;

    Tracked run(const Node& raw, cplx z) {
        const Node& n = f.resolve(raw);
        switch (n.op) {
        case Op::Var: return {z, EPS};
        case Op::Const: return {n.k, EPS};
        case Op::Add:
        case Op::Sub: {
            Tracked a = run(*n.a, z);
            if (pole) return a;
            Tracked b = run(*n.b, z);
            if (pole) return b;
            cplx v = n.op == Op::Add ? a.v + b.v : a.v - b.v;
            double num = a.rel * std::abs(a.v) + b.rel * std::abs(b.v);
            double den = std::abs(v);
            return {v, (den > 0 ? num / den : num) + EPS};
        }
        case Op::Mul: {
            Tracked a = run(*n.a, z), b = run(*n.b, z);
            return {a.v * b.v, a.rel + b.rel + EPS};
        }
        case Op::Div: {
            Tracked a = run(*n.a, z), b = run(*n.b, z);
            if (pole) return a;
            if (std::abs(b.v) < cfg.den_underflow) {
                pole = true;
                return a;
            }
            return {a.v / b.v, a.rel + b.rel + EPS};
        }
        case Op::Pow: {
            Tracked a = run(*n.a, z);
            if (pole) return a;
            if (n.expo < 0 && std::abs(a.v) < cfg.den_underflow) {
                pole = true;
                return a;
            }
            cplx acc{1.0, 0.0};
            cplx base = a.v;
            long e = n.expo < 0 ? -n.expo : n.expo;
            while (e > 0) { // exponentiation by squaring
                if (e & 1) acc *= base;
                base *= base;
                e >>= 1;
                if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) break;
            }
            if (n.expo < 0) acc = cplx{1.0, 0.0} / acc;
            return {acc, std::labs(n.expo) * a.rel + EPS};
        }
        case Op::Exp: {
            Tracked a = run(*n.a, z);
            return {std::exp(a.v), std::abs(a.v) * a.rel + EPS};
        }
        case Op::Sin: {
            Tracked a = run(*n.a, z);
            return {std::sin(a.v), (1.0 + std::abs(a.v)) * a.rel + EPS};
        }
        case Op::Cos: {
            Tracked a = run(*n.a, z);
            return {std::cos(a.v), (1.0 + std::abs(a.v)) * a.rel + EPS};
        }
        case Op::Ref: break; // resolved above
        }
        throw Error("evaluate: malformed expression node");
    }
};

} // namespace

EvalResult evaluate(const FunctionExpr& f, cplx z, const Config& cfg) {
    if (!f.poles.empty()) {
        double tol = cfg.pole_tolerance_rel * (1.0 + std::abs(z));
        if (f.poles.nearest_distance(z) <= tol) return {EvalKind::Pole};
    }
    ComplexEval ev{f, cfg};
    Tracked t = ev.run(*f.root, z);
    if (ev.pole) return {EvalKind::Pole};
    double mag = std::abs(t.v);
    if (!std::isfinite(t.v.real()) || !std::isfinite(t.v.imag()) || mag > cfg.overflow_sentinel)
        return {EvalKind::Overflow};
    return {EvalKind::Finite, t.v, t.rel};
}

namespace {

LogPolar lp_run(const FunctionExpr& f, const Node& raw, cplx z) {
    const Node& n = f.resolve(raw);
    switch (n.op) {
    case Op::Var: return LogPolar::from(z);
    case Op::Const: return LogPolar::from(n.k);
    case Op::Add: return add(lp_run(f, *n.a, z), lp_run(f, *n.b, z));
    case Op::Sub: return sub(lp_run(f, *n.a, z), lp_run(f, *n.b, z));
    case Op::Mul: return mul(lp_run(f, *n.a, z), lp_run(f, *n.b, z));
    case Op::Div: return div(lp_run(f, *n.a, z), lp_run(f, *n.b, z));
    case Op::Pow: return ipow(lp_run(f, *n.a, z), n.expo);
    case Op::Exp: return lp_exp(lp_run(f, *n.a, z));
    case Op::Sin: return lp_sin(lp_run(f, *n.a, z));
    case Op::Cos: return lp_cos(lp_run(f, *n.a, z));
    case Op::Ref: break;
    }
    throw Error("eval_logpolar: malformed expression node");
}

} // namespace

LogPolar eval_logpolar(const FunctionExpr& f, cplx z) { return lp_run(f, *f.root, z); }

double log_abs(const FunctionExpr& f, cplx z) { return eval_logpolar(f, z).lmag; }

} // namespace fatou
