#pragma once
#include "fatou/common.hpp"
#include <cmath>

namespace fatou {

/// Complex value stored as (log magnitude, argument). Multiplicative ops are
/// exact in the log domain; addition routes through the dominant term. This is
/// what keeps log|f| quadrature and winding numbers usable when f takes values
/// like exp(1e200).
struct LogPolar {
    double lmag = -INFINITY; ///< log|v|; -inf encodes 0, +inf a pole
    double ang = 0.0;        ///< arg v in radians, not reduced mod 2pi

    static LogPolar zero() { return {}; }
    static LogPolar one() { return {0.0, 0.0}; }
    static LogPolar from(cplx v) {
        if (v.real() == 0.0 && v.imag() == 0.0) return {};
        return {std::log(std::hypot(v.real(), v.imag())),
                std::atan2(v.imag(), v.real())};
    }
    static LogPolar from_polar(double lmag, double ang) { return {lmag, ang}; }

    bool is_zero() const { return std::isinf(lmag) && lmag < 0; }
    bool is_pole() const { return std::isinf(lmag) && lmag > 0; }
    bool finite() const { return std::isfinite(lmag); }

    /// May overflow to inf components; callers gate on lmag first.
    cplx to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        double m = std::exp(lmag);
        return {m * std::cos(ang), m * std::sin(ang)};
    }
    double real() const { return is_zero() ? 0.0 : std::exp(lmag) * std::cos(ang); }
    double imag() const { return is_zero() ? 0.0 : std::exp(lmag) * std::sin(ang); }
};

inline LogPolar mul(LogPolar a, LogPolar b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.lmag + b.lmag, a.ang + b.ang};
}
inline LogPolar div(LogPolar a, LogPolar b) {
    if (a.is_zero() && !b.is_zero()) return {};
    return {a.lmag - b.lmag, a.ang - b.ang}; // b == 0 surfaces as lmag = +inf
}
inline LogPolar ipow(LogPolar a, long n) {
    if (a.is_zero()) return n == 0 ? LogPolar::one() : LogPolar{};
    return {a.lmag * double(n), a.ang * double(n)};
}
inline LogPolar neg(LogPolar a) {
    if (a.is_zero()) return a;
    return {a.lmag, a.ang + PI};
}

inline LogPolar add(LogPolar a, LogPolar b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogPolar& big = (a.lmag >= b.lmag) ? a : b;
    const LogPolar& sml = (a.lmag >= b.lmag) ? b : a;
    double d = sml.lmag - big.lmag; // <= 0
    if (d < -745.0) return big;     // exp(d) underflows
    cplx u = cplx{1.0, 0.0} + std::polar(std::exp(d), sml.ang - big.ang);
    if (u.real() == 0.0 && u.imag() == 0.0) return {};
    return {big.lmag + std::log(std::hypot(u.real(), u.imag())),
            big.ang + std::atan2(u.imag(), u.real())};
}
inline LogPolar sub(LogPolar a, LogPolar b) { return add(a, neg(b)); }

/// exp(w) with w itself in log-polar form: log|e^w| = Re w, arg = Im w.
inline LogPolar lp_exp(LogPolar w) {
    if (w.is_zero()) return LogPolar::one();
    double m = std::exp(w.lmag);
    return {m * std::cos(w.ang), m * std::sin(w.ang)};
}
inline LogPolar lp_sin(LogPolar z) { // (e^{iz} - e^{-iz}) / 2i
    if (z.is_zero()) return {};
    LogPolar iz{z.lmag, z.ang + PI / 2}, miz{z.lmag, z.ang - PI / 2};
    LogPolar d = sub(lp_exp(iz), lp_exp(miz));
    if (d.is_zero()) return d;
    return {d.lmag - std::log(2.0), d.ang - PI / 2};
}
inline LogPolar lp_cos(LogPolar z) {
    LogPolar iz{z.lmag, z.ang + PI / 2}, miz{z.lmag, z.ang - PI / 2};
    LogPolar s = add(lp_exp(iz), lp_exp(miz));
    if (s.is_zero()) return s;
    return {s.lmag - std::log(2.0), s.ang};
}

} // namespace fatou
