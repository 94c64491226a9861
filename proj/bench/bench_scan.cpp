// Benchmark: serial vs OpenMP positivity scans over catalog traces.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "crahlfors/catalog.hpp"
#include "crahlfors/invariants.hpp"
#include "crahlfors/numeric.hpp"

using namespace cra;

namespace {

double time_scan(const RatFun& f, int count, bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = parallel ? num::positivity_scan(f, count, num::kDefaultSeed)
                        : num::positivity_scan_serial(f, count, num::kDefaultSeed);
    (void)res;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 200000;
    std::printf("%-22s %10s %12s %12s %8s\n", "map", "points", "serial[s]", "openmp[s]",
                "speedup");
    for (const char* id : {"table1/row2", "table1/row11", "table1/row13", "faran-3-9",
                           "cubic-dangelo-1991"}) {
        CatalogEntry e = catalog_entry(id);
        AhlforsData d = ahlfors_mixed(e.map);
        // warm-up and correctness guard
        auto a = num::positivity_scan_serial(d.trace, 1000, 1);
        auto b = num::positivity_scan(d.trace, 1000, 1);
        if (a.min_real != b.min_real) {
            std::printf("MISMATCH between serial and parallel scan on %s\n", id);
            return 1;
        }
        double ts = time_scan(d.trace, count, false);
        double tp = time_scan(d.trace, count, true);
        std::printf("%-22s %10d %12.3f %12.3f %7.2fx\n", id, count, ts, tp, ts / tp);
    }
    return 0;
}
