#include "fatou/orbit.hpp"

namespace fatou {

OrbitRecord iterate_orbit(const FunctionExpr& f, cplx z0, long n_max, double escape_radius,
                          const Config& cfg) {
    if (n_max < 0 || n_max > cfg.orbit_cap) throw Error("iterate_orbit: n_max outside [0, cap]");
    if (escape_radius <= 0) throw Error("iterate_orbit: escape_radius must be positive");
    OrbitRecord rec;
    rec.start = z0;
    rec.escape_radius = escape_radius;
    rec.points.reserve(std::min<long>(n_max + 1, 4096));
    rec.points.push_back(z0);
    cplx z = z0;
    for (long n = 0; n <= n_max; ++n) {
        if (std::abs(z) > escape_radius) {
            rec.status = OrbitStatus::Escaped;
            rec.step = n;
            return rec;
        }
        if (n == n_max) break;
        EvalResult r = evaluate(f, z, cfg);
        if (r.kind == EvalKind::Pole) {
            rec.status = OrbitStatus::HitPole;
            rec.step = n;
            return rec;
        }
        if (r.kind == EvalKind::Overflow) {
            rec.status = OrbitStatus::Overflow;
            rec.step = n + 1;
            return rec;
        }
        z = r.value;
        rec.points.push_back(z);
    }
    rec.status = OrbitStatus::BoundedHorizon;
    return rec;
}

} // namespace fatou
