#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crahlfors/numeric.hpp"
#include "crahlfors/sphere_map.hpp"
#include "crahlfors/sturm.hpp"

namespace cra {

struct NotSphereMapError : std::runtime_error {
    QuotientError detail;
    explicit NotSphereMapError(QuotientError e)
        : std::runtime_error(e.message), detail(std::move(e)) {}
};

// Mixed tensor A_{a bbar} in the frame Z_a, its trace and tracefree part, and
// the coefficient of the (1,0)-form A_1 when the source is S^3.  The
// holomorphic components vanish identically for sphere source and target and
// are recorded as the constant zero.
struct AhlforsData {
    RatFun Q;
    LeviData levi;
    RatMatrix mixed;
    RatFun trace;
    RatMatrix tracefree;
    std::optional<RatFun> a1;
    RatFun holomorphic_part;  // identically zero
};

AhlforsData ahlfors_mixed(const SphereMap& F);  // throws NotSphereMapError

// Tracefree part of D_{a bbar} log Q for a map of an arbitrary polynomial
// strictly pseudoconvex hypersurface into a sphere.
RatMatrix tracefree_general(const Defining& source, const SphereMap& F);

RatFun a1_invariant(const SphereMap& F);  // n = 1 only; reduced on the sphere

enum class UmbilicKind {
    Empty,
    WholeSphere,
    CircleS1,      // {(e^{it}, 0)}
    CircleS2,      // {(0, e^{it})}
    UnionS1S2,
    Torus,
    NotMonomialPointSet,
};

std::string to_string(UmbilicKind k);

struct UmbilicDescription {
    UmbilicKind kind;
    SturmResult roots;                 // s-roots of the trace numerator (monomial path)
    std::vector<std::vector<Gaussian>> exact_witnesses;  // confirmed zeros (witness path)
};

// Zero locus of the trace on S^3.  Monomial maps reduce to Sturm isolation in
// s = z*conj(z); other maps get a numeric witness scan with exact confirmation
// of lattice-snap candidates.
UmbilicDescription umbilic_locus(const SphereMap& F);
UmbilicDescription umbilic_locus(const SphereMap& F, const RatFun& trace);

struct EquivalenceVerdict {
    bool distinguished;
    std::string witness;  // "trace" | "tracefree" | "a1" | ""
};

EquivalenceVerdict equivalence_test(const SphereMap& F, const SphereMap& G);

struct ObstructionReport {
    bool moduli_only;       // trace depends on the moduli |z_j|^2 only
    bool circle_tracefree;  // tracefree entries vanish on each circle |z_j| = 1
    bool a1_shape;          // a1 numerator = conj(z) conj(w) * moduli-balanced
};

ObstructionReport monomial_obstruction(const SphereMap& F);
ObstructionReport monomial_obstruction(const SphereMap& F, const AhlforsData& data);

// |H|^2 of the image hypersurface pulled back: r[||F||^2 - 1] - 1.
RatFun mean_curvature_sq(const SphereMap& F);

// |II^{2,0}|^2 = 2(n+1) * trace / Q_F.
RatFun ii_norm_sq(const SphereMap& F);

// Trace of the mixed tensor for a monomial map via the moduli-polynomial path:
// g(t) (sum t_j - 1) = ||F||^2(t) - 1, log-derivatives of g in t, then
// t_j := z_j conj(z_j).  Independent cross-check of the general path.
RatFun monomial_trace(const SphereMap& F);

// Exact evaluation at a Gaussian-rational point (z and conj(z) honest conjugates).
Radical eval_exact(const Poly& p, const std::vector<Gaussian>& pt);

// Reduce f on the sphere and extract it as a univariate rational function of
// s = z1*conj(z1) (CR dimension 1).  False when f is not a function of s alone.
bool as_function_of_s(const RatFun& f, UniPoly& num_s, UniPoly& den_s);

}  // namespace cra
