#include "crahlfors/numeric.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cra::num {

std::vector<Point> Sampler::sample(int count, bool chart_guard) const {
    if (count < 1) throw std::invalid_argument("Sampler: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int nv = cr_dim + 1;
    std::vector<Point> pts;
    pts.reserve(count);
    while ((int)pts.size() < count) {
        Point p(nv);
        double norm2 = 0.0;
        for (int j = 0; j < nv; ++j) {
            p[j] = {gauss(rng), gauss(rng)};
            norm2 += std::norm(p[j]);
        }
        if (norm2 < 1e-12) continue;
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : p) z *= inv;
        if (chart_guard && std::abs(p[nv - 1]) < kChartGuard) continue;
        pts.push_back(std::move(p));
    }
    return pts;
}

std::complex<double> eval_checked(const RatFun& f, const Point& p, double den_floor) {
    std::complex<double> d = f.den().eval(p);
    if (std::abs(d) < den_floor)
        throw std::domain_error("eval_checked: near-zero denominator");
    return f.num().eval(p) / d;
}

static ScanResult scan_impl(const RatFun& raw, int count, std::uint64_t seed, bool parallel) {
    // Chart-guarded samples and monomial-content cancellation: representatives
    // produced by the tangential frame carry conj(z_N) powers in their
    // denominators that would otherwise underflow the floor.
    RatFun f = cancel_monomial_content(raw);
    Sampler s{seed, f.nvars() - 1};
    std::vector<Point> pts = s.sample(count, true);
    std::vector<double> re(count), im(count);
    double den_min = 1e300;
#pragma omp parallel for schedule(static) reduction(min : den_min) if (parallel)
    for (int i = 0; i < count; ++i) {
        std::complex<double> den = f.den().eval(pts[i]);
        den_min = std::min(den_min, std::abs(den));
        std::complex<double> v = f.num().eval(pts[i]) / den;
        re[i] = v.real();
        im[i] = std::abs(v.imag());
    }
    if (den_min < 1e-9) throw std::domain_error("positivity_scan: denominator hit");
    ScanResult res;
    res.min_real = re[0];
    res.argmin = pts[0];
    for (int i = 0; i < count; ++i) {
        if (re[i] < res.min_real) {
            res.min_real = re[i];
            res.argmin = pts[i];
        }
        res.max_abs_imag = std::max(res.max_abs_imag, im[i]);
    }
    return res;
}

ScanResult positivity_scan_serial(const RatFun& f, int count, std::uint64_t seed) {
    return scan_impl(f, count, seed, false);
}

ScanResult positivity_scan(const RatFun& f, int count, std::uint64_t seed) {
    return scan_impl(f, count, seed, true);
}

double max_abs_on_sphere(const RatFun& raw, int count, std::uint64_t seed) {
    RatFun f = cancel_monomial_content(raw);
    Sampler s{seed, f.nvars() - 1};
    std::vector<Point> pts = s.sample(count, true);
    double mx = 0.0;
#pragma omp parallel for schedule(static) reduction(max : mx)
    for (int i = 0; i < count; ++i)
        mx = std::max(mx, std::abs(f.num().eval(pts[i]) / f.den().eval(pts[i])));
    return mx;
}

double min_den_abs_on_sphere(const RatFun& f, int count, std::uint64_t seed) {
    Sampler s{seed, f.nvars() - 1};
    std::vector<Point> pts = s.sample(count);
    double mn = std::abs(f.den().eval(pts[0]));
#pragma omp parallel for schedule(static) reduction(min : mn)
    for (int i = 0; i < count; ++i) mn = std::min(mn, std::abs(f.den().eval(pts[i])));
    return mn;
}

namespace {

// log Q as a real function of the real/imaginary parts.
struct LogQ {
    const RatFun& Q;
    double operator()(const Point& p) const {
        std::complex<double> v = Q.num().eval(p) / Q.den().eval(p);
        return std::log(v.real());
    }
};

Point shifted(const Point& p, int var, double dre, double dim) {
    Point q = p;
    q[var] += std::complex<double>(dre, dim);
    return q;
}

// Wirtinger first difference: d_j (holo) or d_jbar (anti).
template <typename F>
std::complex<double> wirtinger_diff(const F& u, const Point& p, int j, bool bar, double h) {
    std::complex<double> dx = (u(shifted(p, j, h, 0)) - u(shifted(p, j, -h, 0))) / (2 * h);
    std::complex<double> dy = (u(shifted(p, j, 0, h)) - u(shifted(p, j, 0, -h))) / (2 * h);
    std::complex<double> i(0, 1);
    return bar ? 0.5 * (dx + i * dy) : 0.5 * (dx - i * dy);
}

}  // namespace

double finite_diff_hessian_check(const Defining& d, const RatFun& Q,
                                 const RatMatrix& symbolic, const Point& p, double h) {
    int N = d.nvars();
    int n = N - 1;
    if (std::abs(p[N - 1]) < kChartGuard)
        throw std::domain_error("finite_diff_hessian_check: chart degeneracy |w| too small");
    LogQ u{Q};
    // numeric ambient mixed Hessian of log Q
    std::vector<std::vector<std::complex<double>>> H(N,
                                                     std::vector<std::complex<double>>(N));
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
            auto inner = [&](const Point& q) { return wirtinger_diff(u, q, k, true, h); };
            H[j][k] = wirtinger_diff(inner, p, j, false, h);
        }
    }
    // frame coefficients at p
    std::vector<std::vector<std::complex<double>>> Z(n, std::vector<std::complex<double>>(N));
    std::complex<double> rw = d.rho.derivative(N - 1, DiffKind::Holo).eval(p);
    for (int a = 0; a < n; ++a) {
        for (int j = 0; j < N; ++j) Z[a][j] = 0.0;
        Z[a][a] = 1.0;
        Z[a][N - 1] -= d.rho.derivative(a, DiffKind::Holo).eval(p) / rw;
    }
    double max_rel = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::complex<double> numeric(0, 0);
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) numeric += Z[a][j] * std::conj(Z[b][k]) * H[j][k];
            std::complex<double> sym = eval_checked(symbolic[a][b], p);
            double scale = std::max(1.0, std::abs(sym));
            max_rel = std::max(max_rel, std::abs(numeric - sym) / scale);
        }
    }
    return max_rel;
}

double finite_diff_hessian_check(const Defining& d, const RatFun& Q, const Point& p, double h) {
    return finite_diff_hessian_check(d, Q, D_log_operator(d, Q), p, h);
}

}  // namespace cra::num
