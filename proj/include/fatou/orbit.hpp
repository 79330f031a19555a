#pragma once
#include "fatou/common.hpp"
#include "fatou/eval.hpp"
#include <vector>

namespace fatou {

enum class OrbitStatus { Escaped, HitPole, BoundedHorizon, Overflow };

struct OrbitRecord {
    cplx start{};
    std::vector<cplx> points;       ///< points[0] == start; <= n_max+1 entries
    OrbitStatus status = OrbitStatus::BoundedHorizon;
    long step = -1;                 ///< step index for escaped / hit_pole / overflow
    double escape_radius = 0;

    bool escaped() const { return status == OrbitStatus::Escaped; }
};

/// Iterate f from z0 for at most n_max steps. Stops at the first point with
/// |z| > escape_radius (escaped), at a pole, or at the overflow sentinel.
OrbitRecord iterate_orbit(const FunctionExpr& f, cplx z0, long n_max, double escape_radius,
                          const Config& cfg = default_config());

} // namespace fatou
