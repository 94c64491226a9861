#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crahlfors/geometry.hpp"

namespace cra {

// A (rational) CR map from a hypersurface in C^{n+1} into the unit sphere
// S^{2N+1} in C^{N+1}.  The source is the unit sphere unless source_rho is set.
struct SphereMap {
    std::string name;
    int source_n = 1;  // CR dimension of the source
    int target_N = 1;  // CR dimension of the target sphere
    std::vector<RatFun> components;
    std::map<std::string, Rational> params;
    std::optional<Poly> source_rho;  // defaults to |z|^2 - 1

    int source_vars() const { return source_n + 1; }
    Poly rho() const { return source_rho ? *source_rho : sphere_rho(source_n + 1); }
    bool has_sphere_source() const { return !source_rho.has_value(); }
    bool is_monomial() const;  // every component a single scalar-coefficient term
    bool is_polynomial() const;
};

// sum_A F_A conj(F_A) over the common real denominator.
RatFun hermitian_norm_sq(const SphereMap& F);

struct QuotientError {
    enum class Kind { NotASphereMap, SignAnomaly } kind;
    Poly remainder_witness;  // normal form of the undivided numerator (NotASphereMap)
    std::string message;
};

// The exact quotient Q with ||F||^2 - 1 = Q * rho.  Positivity on the
// hypersurface is checked numerically over seeded samples.
std::variant<RatFun, QuotientError> quotient_Q(const SphereMap& F);

bool is_sphere_map(const SphereMap& F);

// Moebius part of a ball automorphism with center a (|a| < 1), normalized so
// that a = 0 gives the identity, plus an optional exact unitary factor.
struct BallAutomorphism {
    std::vector<Gaussian> center;
    std::optional<std::vector<std::vector<Radical>>> unitary;  // applied after the Moebius part

    int nvars() const { return (int)center.size(); }
    Rational center_norm_sq() const;
    // components as rational functions of the ambient variables
    std::vector<RatFun> components() const;
};

SphereMap compose_target_automorphism(const SphereMap& F, const BallAutomorphism& phi);
SphereMap precompose_source_automorphism(const SphereMap& F, const BallAutomorphism& gamma);

// 1 - <F, a> as a rational function (used in conformal-factor identities).
RatFun one_minus_pairing(const std::vector<RatFun>& comps, const std::vector<Gaussian>& a);

}  // namespace cra
