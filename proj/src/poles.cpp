#include "fatou/poles.hpp"
#include <algorithm>
#include <cmath>

namespace fatou {

namespace {

// distance from z (given in polar) to the nearest of the ring's poles
double ring_distance(const RingPoles& g, double zr, double zth) {
    if (g.count <= 0) return INFINITY;
    double step = 2 * PI / double(g.count);
    double rel = (zth - g.phase0) / step;
    double d = INFINITY;
    for (long k = (long)std::floor(rel) - 1; k <= (long)std::floor(rel) + 1; ++k) {
        double ang = g.phase0 + step * double(k);
        double dx = zr * std::cos(zth) - g.radius * std::cos(ang);
        double dy = zr * std::sin(zth) - g.radius * std::sin(ang);
        d = std::min(d, std::hypot(dx, dy));
    }
    return d;
}

double ray_distance(const RadialRayPoles& g, cplx z) {
    cplx u = std::polar(1.0, g.angle);
    // candidate indices around the projection of z on the ray
    double t = (z.real() * u.real() + z.imag() * u.imag() - g.start_modulus) / g.step;
    double d = INFINITY;
    long lo = (long)std::floor(t) - 1, hi = (long)std::floor(t) + 1;
    for (long k = lo; k <= hi; ++k) {
        if (k < 0) continue;
        if (g.count >= 0 && k >= g.count) continue;
        cplx p = u * (g.start_modulus + g.step * double(k));
        d = std::min(d, std::abs(z - p));
    }
    return d;
}

// sum of log(a + k*step) for k = 0..K-1, via lgamma
double log_arith_product(double a, double step, long K) {
    if (K <= 0) return 0.0;
    // prod(a + k d) = d^K * Gamma(K + a/d) / Gamma(a/d)
    double q = a / step;
    return double(K) * std::log(step) + std::lgamma(double(K) + q) - std::lgamma(q);
}

} // namespace

double PoleSet::nearest_distance(cplx z) const {
    double d = INFINITY;
    for (auto& [p, m] : singles) d = std::min(d, std::abs(z - p));
    double zr = std::abs(z), zth = std::atan2(z.imag(), z.real());
    for (auto& g : rings) d = std::min(d, ring_distance(g, zr, zth));
    for (auto& g : rays) d = std::min(d, ray_distance(g, z));
    return d;
}

long PoleSet::count_within(double t) const {
    long n = 0;
    for (auto& [p, m] : singles)
        if (std::abs(p) < t) n += m;
    for (auto& g : rings)
        if (g.radius < t) n += g.count * g.multiplicity;
    for (auto& g : rays) {
        if (g.start_modulus >= t) continue;
        long k = (long)std::ceil((t - g.start_modulus) / g.step - 1e-12); // k: start + k*step < t
        if (g.count >= 0) k = std::min(k, g.count);
        n += k * g.multiplicity;
    }
    return n;
}

double PoleSet::integrated_counting(double r) const {
    if (r <= 0) throw Error("integrated_counting: r must be positive");
    double N = 0;
    for (auto& [p, m] : singles) {
        double a = std::abs(p);
        if (a < r) N += m * (a == 0.0 ? std::log(r) : std::log(r / a));
    }
    for (auto& g : rings)
        if (g.radius < r) N += double(g.count) * g.multiplicity * std::log(r / g.radius);
    for (auto& g : rays) {
        if (g.start_modulus >= r) continue;
        long K = (long)std::ceil((r - g.start_modulus) / g.step - 1e-12);
        if (g.count >= 0) K = std::min(K, g.count);
        if (K <= 0) continue;
        N += g.multiplicity * (double(K) * std::log(r) - log_arith_product(g.start_modulus, g.step, K));
    }
    return N;
}

std::vector<std::pair<cplx, int>> PoleSet::enumerate_within(double t, long cap) const {
    if (count_within(t) > cap)
        throw Error("pole list within radius exceeds cap; counts remain available in closed form");
    std::vector<std::pair<cplx, int>> out;
    for (auto& [p, m] : singles)
        if (std::abs(p) < t) out.emplace_back(p, m);
    for (auto& g : rings) {
        if (g.radius >= t) continue;
        for (long k = 0; k < g.count; ++k)
            out.emplace_back(std::polar(g.radius, g.phase0 + 2 * PI * double(k) / double(g.count)),
                             g.multiplicity);
    }
    for (auto& g : rays) {
        for (long k = 0;; ++k) {
            if (g.count >= 0 && k >= g.count) break;
            double a = g.start_modulus + g.step * double(k);
            if (a >= t) break;
            out.emplace_back(std::polar(a, g.angle), g.multiplicity);
        }
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return std::abs(x.first) < std::abs(y.first); });
    return out;
}

std::vector<std::pair<cplx, int>> PoleSet::near_circle(double r, double band, long cap) const {
    std::vector<std::pair<cplx, int>> out;
    for (auto& [p, m] : singles)
        if (std::fabs(std::abs(p) - r) <= band) out.emplace_back(p, m);
    for (auto& g : rings) {
        if (std::fabs(g.radius - r) > band) continue;
        if (g.count > cap)
            throw Error("quadrature circle passes within the band of a large pole ring; "
                        "choose a radius away from ring radii");
        for (long k = 0; k < g.count; ++k)
            out.emplace_back(std::polar(g.radius, g.phase0 + 2 * PI * double(k) / double(g.count)),
                             g.multiplicity);
    }
    for (auto& g : rays) {
        double lo = r - band, hi = r + band;
        long k0 = std::max(0L, (long)std::floor((lo - g.start_modulus) / g.step));
        for (long k = k0; k <= k0 + 2 + (long)(2 * band / g.step); ++k) {
            if (g.count >= 0 && k >= g.count) break;
            double a = g.start_modulus + g.step * double(k);
            if (a > hi) break;
            if (a >= lo) out.emplace_back(std::polar(a, g.angle), g.multiplicity);
        }
    }
    if ((long)out.size() > cap) throw Error("too many poles near the quadrature circle");
    return out;
}

} // namespace fatou
