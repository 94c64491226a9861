#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "crahlfors/geometry.hpp"

namespace cra::num {

using Point = std::vector<std::complex<double>>;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr double kChartGuard = 1e-3;

// Deterministic sphere sampler: normalized standard complex Gaussians.
struct Sampler {
    std::uint64_t seed = kDefaultSeed;
    int cr_dim = 1;

    // count points on S^{2n+1}; with chart_guard, points with |last| below the
    // guard are resampled (the tangential frame has rho_w in denominators).
    std::vector<Point> sample(int count, bool chart_guard = false) const;
};

// Evaluation guarding against near-zero denominators.
std::complex<double> eval_checked(const RatFun& f, const Point& p, double den_floor = 1e-9);

struct ScanResult {
    double min_real = 0.0;
    double max_abs_imag = 0.0;
    Point argmin;
};

// Minimum of Re f over seeded sphere samples.  The parallel version is the
// production path; the serial one is the reference kept for testing.
ScanResult positivity_scan_serial(const RatFun& f, int count, std::uint64_t seed);
ScanResult positivity_scan(const RatFun& f, int count, std::uint64_t seed);

// Max |f| over seeded samples (used for numeric zero checks).
double max_abs_on_sphere(const RatFun& f, int count, std::uint64_t seed);

// Min |den(f)| over seeded samples; backs the "checked" denominator cert.
double min_den_abs_on_sphere(const RatFun& f, int count, std::uint64_t seed);

// Central-difference oracle for the Hessian contraction D_{a bbar} log Q:
// compares the symbolic matrix against nested second differences of log Q
// contracted with the tangential frame at p.  Returns the max relative error.
double finite_diff_hessian_check(const Defining& d, const RatFun& Q,
                                 const RatMatrix& symbolic, const Point& p, double h);

// Convenience overload computing the symbolic matrix itself.
double finite_diff_hessian_check(const Defining& d, const RatFun& Q, const Point& p, double h);

}  // namespace cra::num
