#pragma once
#include "fatou/common.hpp"
#include "fatou/expr.hpp"
#include "fatou/logpolar.hpp"

namespace fatou {

enum class EvalKind { Finite, Pole, Overflow };

struct EvalResult {
    EvalKind kind = EvalKind::Finite;
    cplx value{};
    /// forward relative-error bound from a rough interval-style analysis
    double condition_estimate = 0.0;
};

/// Plain complex evaluation with pole and overflow tagging. A point is a pole
/// when it lies within pole_tolerance of a registered pole or a quotient
/// denominator underflows; magnitudes beyond the sentinel report overflow.
EvalResult evaluate(const FunctionExpr& f, cplx z, const Config& cfg = default_config());

/// Log-polar evaluation; never overflows for double-representable z.
/// A pole surfaces as lmag = +inf.
LogPolar eval_logpolar(const FunctionExpr& f, cplx z);

/// log|f(z)| computed without overflow (the log-magnitude evaluator).
double log_abs(const FunctionExpr& f, cplx z);

} // namespace fatou
