#pragma once
#include "fatou/common.hpp"
#include <cmath>
#include <string>

namespace fatou {

/// Positive extended real stored as a finite exp-tower: value = exp^level(mantissa).
/// Normalized so mantissa <= CAP and, for level >= 1, mantissa > log(CAP); with
/// that comparison is lexicographic on (level, mantissa). This is what makes the
/// doubly-exponential threshold ladders comparable far beyond double range.
struct Tower {
    int level = 0;
    double mantissa = 0.0;

    static constexpr double CAP = 1e15;
    static double log_cap() { return std::log(CAP); }

    static Tower of(double v) {
        Tower t{0, v};
        t.normalize();
        return t;
    }

    Tower exp_() const {
        if (level == 0 && mantissa <= log_cap()) return Tower{0, std::exp(mantissa)};
        return Tower{level + 1, mantissa};
    }
    Tower log_() const {
        if (level == 0) {
            if (mantissa <= 0.0) throw Error("tower: log of non-positive value");
            return Tower::of(std::log(mantissa));
        }
        return Tower{level - 1, mantissa};
    }
    void normalize() {
        while (mantissa > CAP) {
            mantissa = std::log(mantissa);
            ++level;
        }
        while (level > 0 && mantissa <= log_cap()) {
            mantissa = std::exp(mantissa);
            --level;
        }
    }
    bool representable() const { return level == 0 || (level == 1 && mantissa <= 709.0); }
    double to_double() const {
        if (level == 0) return mantissa;
        if (level == 1 && mantissa <= 709.0) return std::exp(mantissa);
        return INFINITY;
    }
    std::string str() const;
};

inline int cmp(const Tower& a, const Tower& b) {
    if (a.level != b.level) return a.level < b.level ? -1 : 1;
    if (a.mantissa == b.mantissa) return 0;
    return a.mantissa < b.mantissa ? -1 : 1;
}
inline bool operator<(const Tower& a, const Tower& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Tower& a, const Tower& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Tower& a, const Tower& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Tower& a, const Tower& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Tower& a, const Tower& b) { return cmp(a, b) == 0; }

/// alpha * t + beta with scalar alpha > 0. Exact at level 0; above, the additive
/// term enters through a log1p correction that decays with the tower height.
Tower lin(const Tower& t, double alpha, double beta);
/// t^p for p > 0, via exp(p log t).
Tower pow_(const Tower& t, double p);
inline Tower scale(const Tower& t, double s) { return lin(t, s, 0.0); }
/// Mantissa difference after lifting both to the max of the two levels.
/// Positive means a > b; saturates to +-inf when a lift leaves log's domain.
double top_level_margin(const Tower& a, const Tower& b);

} // namespace fatou
