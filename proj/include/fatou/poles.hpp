#pragma once
#include "fatou/common.hpp"
#include <vector>
#include <utility>

namespace fatou {

/// count poles equally spaced on the circle |z| = radius, at angles
/// phase0 + 2*pi*k/count.
struct RingPoles {
    double radius = 0;
    long count = 0;
    double phase0 = 0;
    int multiplicity = 1;
};

/// Poles marching outward along a ray through the origin: moduli
/// start_modulus + k*step for k = 0,1,..., at a fixed angle.
/// count < 0 means the family is unbounded (valid to the registry's radius).
struct RadialRayPoles {
    double start_modulus = 0;
    double step = 0;
    double angle = 0;
    long count = -1;
    int multiplicity = 1;
};

/// Pole registry: explicit points plus closed-form families. Families keep
/// n(t) and N(r) exact for functions with millions of poles (pole clouds,
/// rational cutoff rings) where an explicit list is not an option.
struct PoleSet {
    std::vector<std::pair<cplx, int>> singles;
    std::vector<RingPoles> rings;
    std::vector<RadialRayPoles> rays;

    bool empty() const { return singles.empty() && rings.empty() && rays.empty(); }
    /// Euclidean distance from z to the nearest registered pole (inf if none).
    double nearest_distance(cplx z) const;
    /// n(t): poles with |z| < t, counted with multiplicity.
    long count_within(double t) const;
    /// N(r) = sum over poles 0<|p|<r of mult*log(r/|p|) + n(0)log r, exact.
    double integrated_counting(double r) const;
    /// Explicit list of poles with |z| < t. Throws if it would exceed cap.
    std::vector<std::pair<cplx, int>> enumerate_within(double t, long cap = 200000) const;
    /// Poles whose modulus lies within `band` of r (for quadrature hot windows).
    /// Throws if a ring with huge count sits in the band.
    std::vector<std::pair<cplx, int>> near_circle(double r, double band, long cap = 8192) const;
};

} // namespace fatou
