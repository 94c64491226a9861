#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crahlfors/invariants.hpp"
#include "crahlfors/sphere_map.hpp"

namespace cra {

// A catalog map together with its transcribed expected columns (golden data).
struct CatalogEntry {
    std::string id;
    SphereMap map;
    std::optional<RatFun> expected_trace;  // in the source variables, s = z*conj(z)
    std::optional<RatFun> expected_a1;
    std::optional<UmbilicKind> expected_umbilic;
};

// Stable ids: "table1/rowK" (K = 1..16), "faran-3-9", "cubic-dangelo-1991",
// "dangelo-family" (params n, c, s), "webster-quadric" (param n),
// "whitney" (param n), "homogeneous" (params n, d).
CatalogEntry catalog_entry(const std::string& id,
                           const std::map<std::string, Rational>& params = {});

std::vector<std::string> catalog_ids();

// sum_k coeffs[k] * (z*conj(z))^k as a two-variable polynomial.
Poly s_poly(const std::vector<Rational>& coeffs);

}  // namespace cra
