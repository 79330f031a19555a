#include "fatou/tower.hpp"
#include <cstdio>

namespace fatou {

Tower lin(const Tower& t, double alpha, double beta) {
    if (alpha <= 0.0) throw Error("tower: lin needs alpha > 0");
    if (t.level == 0) return Tower::of(alpha * t.mantissa + beta);
    // value = exp(inner); alpha*value + beta = exp(inner + log alpha + delta)
    Tower inner{t.level - 1, t.mantissa};
    double shift = std::log(alpha);
    if (inner.level == 0) {
        double e = inner.mantissa + shift;
        if (e < 700.0 && beta != 0.0) shift += std::log1p(beta * std::exp(-e));
    }
    // deeper levels: beta correction is below double resolution
    if (shift == 0.0) return t;
    return lin(inner, 1.0, shift).exp_();
}

Tower pow_(const Tower& t, double p) {
    if (p <= 0.0) throw Error("tower: pow needs p > 0");
    return lin(t.log_(), p, 0.0).exp_();
}

double top_level_margin(const Tower& a, const Tower& b) {
    int level = std::max(a.level, b.level);
    auto lift = [level](const Tower& t) {
        double m = t.mantissa;
        for (int l = t.level; l < level; ++l) {
            if (m <= 0.0) return -INFINITY;
            m = std::log(m);
        }
        return m;
    };
    return lift(a) - lift(b);
}

std::string Tower::str() const {
    char buf[64];
    if (level == 0)
        std::snprintf(buf, sizeof buf, "%.12g", mantissa);
    else if (level == 1)
        std::snprintf(buf, sizeof buf, "exp(%.12g)", mantissa);
    else
        std::snprintf(buf, sizeof buf, "exp^%d(%.12g)", level, mantissa);
    return buf;
}

} // namespace fatou
