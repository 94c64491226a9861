#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "crahlfors/catalog.hpp"
#include "crahlfors/invariants.hpp"

namespace cra {

struct Report {
    std::string map_id;
    RatFun Q;
    std::optional<RatFun> trace;  // absent for non-sphere sources
    RatMatrix tracefree;
    std::optional<RatFun> a1;
    std::optional<UmbilicDescription> umbilic;
    std::optional<ObstructionReport> obstructions;
    std::optional<double> positivity_min;
    std::optional<double> fd_max_rel_err;
};

Report build_report(const std::string& id, const SphereMap& F,
                    std::uint64_t seed, int scan_points);

std::string report_json(const Report& r);
std::string report_latex(const Report& r);

// Text form of f as a univariate rational function of s = z*conj(z) when
// possible, else the canonical two-variable form.
std::string trace_string(const RatFun& f);

// One map per file: '#' comments; directives `name`, `source_n`, `param`,
// `component` (one expression per line).
struct MapDocument {
    std::string name = "user-map";
    int source_n = 1;
    std::map<std::string, Rational> params;
    std::vector<std::string> components;

    SphereMap to_map() const;  // parses components; throws ParseError
};

MapDocument load_map_document(std::istream& in);

}  // namespace cra
