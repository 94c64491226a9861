#include <cmath>
#include <complex>

#include <doctest.h>

#include "crahlfors/catalog.hpp"
#include "crahlfors/invariants.hpp"
#include "crahlfors/numeric.hpp"

using namespace cra;

TEST_CASE("sampler determinism and normalization") {
    num::Sampler s{123, 2};
    auto a = s.sample(50);
    auto b = s.sample(50);
    REQUIRE(a.size() == 50);
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < 3; ++j) CHECK(a[i][j] == b[i][j]);
    for (const auto& p : a) {
        double n2 = 0;
        for (const auto& z : p) n2 += std::norm(z);
        CHECK(std::abs(n2 - 1.0) < 1e-12);
    }
}

TEST_CASE("sampler moment matches the uniform measure") {
    // E |z_1|^2 = 1/(n+1); Var |z_1|^2 = n/((n+1)^2(n+2))
    for (int n : {1, 2}) {
        num::Sampler s{num::kDefaultSeed, n};
        auto pts = s.sample(10000);
        double mean = 0;
        for (const auto& p : pts) mean += std::norm(p[0]);
        mean /= (double)pts.size();
        double expect = 1.0 / (n + 1);
        double sigma = std::sqrt((double)n / ((n + 1.0) * (n + 1.0) * (n + 2.0)) /
                                 (double)pts.size());
        CHECK(std::abs(mean - expect) < 3 * sigma);
    }
}

TEST_CASE("chart guard keeps the last coordinate away from zero") {
    num::Sampler s{7, 1};
    for (const auto& p : s.sample(200, true)) CHECK(std::abs(p[1]) >= num::kChartGuard);
}

TEST_CASE("guarded evaluation") {
    num::Sampler s{5, 1};
    Poly rho = sphere_rho(2);
    for (const auto& p : s.sample(20))
        CHECK(std::abs(rho.eval(p)) < 1e-12);

    RatFun qw = std::get<RatFun>(quotient_Q(catalog_entry("whitney").map));
    num::Point p01{{0, 0}, {1, 0}};
    CHECK(std::abs(num::eval_checked(qw, p01) - std::complex<double>(2, 0)) < 1e-12);

    AhlforsData d3 = ahlfors_mixed(catalog_entry("table1/row3").map);
    for (const auto& p : s.sample(20, true))
        CHECK(std::abs(num::eval_checked(d3.trace, p) - std::complex<double>(0.5, 0)) <
              1e-9);
}

TEST_CASE("finite difference oracle") {
    Defining s3(sphere_rho(2));
    num::Sampler s{num::kDefaultSeed, 1};
    auto pts = s.sample(20, true);

    RatFun one = RatFun::constant(2, Radical(1));
    for (const auto& p : pts)
        CHECK(num::finite_diff_hessian_check(s3, one, p, 1e-4) < 1e-10);

    for (const char* id : {"table1/row2", "table1/row4"}) {
        AhlforsData d = ahlfors_mixed(catalog_entry(id).map);
        double worst = 0;
        for (const auto& p : pts)
            worst = std::max(worst,
                             num::finite_diff_hessian_check(s3, d.Q, d.mixed, p, 1e-4));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("positivity scans") {
    AhlforsData d1 = ahlfors_mixed(catalog_entry("table1/row1").map);
    auto s1 = num::positivity_scan(d1.trace, 2000, num::kDefaultSeed);
    CHECK(s1.min_real == 0.0);

    AhlforsData d4 = ahlfors_mixed(catalog_entry("table1/row4").map);
    auto s4 = num::positivity_scan(d4.trace, 2000, num::kDefaultSeed);
    CHECK(s4.min_real >= -1e-9);
    CHECK(s4.max_abs_imag < 1e-9);
}

TEST_CASE("serial and parallel scans agree exactly") {
    AhlforsData d = ahlfors_mixed(catalog_entry("table1/row7").map);
    auto serial = num::positivity_scan_serial(d.trace, 3000, 99);
    auto parallel = num::positivity_scan(d.trace, 3000, 99);
    CHECK(serial.min_real == parallel.min_real);
    CHECK(serial.max_abs_imag == parallel.max_abs_imag);
    for (int j = 0; j < 2; ++j) CHECK(serial.argmin[j] == parallel.argmin[j]);
}

TEST_CASE("exact identities also hold numerically") {
    // belt-and-suspenders gate: trace of row 2 equals s/(s-2)^2 at 100 points
    AhlforsData d = ahlfors_mixed(catalog_entry("table1/row2").map);
    num::Sampler s{num::kDefaultSeed, 1};
    for (const auto& p : s.sample(100, true)) {
        double sv = std::norm(p[0]);
        double expect = sv / ((sv - 2) * (sv - 2));
        CHECK(std::abs(num::eval_checked(d.trace, p).real() - expect) < 1e-8);
    }
}
