#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace fatou {

using cplx = std::complex<double>;

constexpr double PI = 3.141592653589793238462643383279502884;

/// Thrown on violated preconditions and unusable inputs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric knobs shared across the library. Routines take these explicitly
/// (or fall back to the defaults) so runs are reproducible from a config file.
struct Config {
    double pole_tolerance_rel = 1e-9;  ///< pole if within this * (1+|z|) of a registered pole
    double den_underflow = 1e-280;     ///< quotient denominator magnitude treated as a pole
    double overflow_sentinel = 1e300;  ///< finite values above this are reported as overflow
    double quad_rel_tol = 1e-7;        ///< circle quadrature successive-halving stop
    int quad_min_log2 = 8;             ///< initial 2^k circle samples
    int quad_max_log2 = 21;            ///< hard cap on 2^k circle samples
    double r0_convexity = 10.0;        ///< the r0 of the characteristic convexity bounds
    int minmax_coarse = 1024;          ///< coarse samples for modulus scans on circles
    long orbit_cap = 1000000;          ///< hard cap on orbit length
    double default_escape_radius = 1e8;
    long default_n_max = 10000;
    double h_target_cap = 1e5;         ///< largest |target| pinned on the gadget's H disks
};

inline const Config& default_config() {
    static Config c;
    return c;
}

} // namespace fatou
