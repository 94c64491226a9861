#include "crahlfors/sphere_map.hpp"

#include <stdexcept>

#include "crahlfors/numeric.hpp"

namespace cra {

bool SphereMap::is_monomial() const {
    for (const auto& c : components) {
        if (!c.den().is_constant()) return false;
        if (c.num().terms().size() > 1) return false;
        for (const auto& [m, coef] : c.num().terms())
            for (int e : m.anti)
                if (e != 0) return false;
    }
    return true;
}

bool SphereMap::is_polynomial() const {
    for (const auto& c : components)
        if (!c.den().is_constant()) return false;
    return true;
}

RatFun hermitian_norm_sq(const SphereMap& F) {
    RatFun acc = RatFun::zero(F.source_vars());
    for (const auto& c : F.components) acc = acc + c * c.conj();
    return acc;
}

std::variant<RatFun, QuotientError> quotient_Q(const SphereMap& F) {
    Poly rho = F.rho();
    RatFun norm = hermitian_norm_sq(F);
    Poly cleared = norm.num() - norm.den();  // numerator of ||F||^2 - 1
    auto q = Poly::exact_divide(cleared, rho);
    if (!q) {
        Poly witness = cleared;  // remainder witness: the undivided numerator
        return QuotientError{QuotientError::Kind::NotASphereMap, witness,
                             "||F||^2 - 1 is not divisible by rho"};
    }
    RatFun Q(*q, norm.den());
    if (F.has_sphere_source()) {
        auto scan = num::positivity_scan(Q, 4096, num::kDefaultSeed);
        if (scan.min_real <= 0)
            return QuotientError{QuotientError::Kind::SignAnomaly, Poly(F.source_vars()),
                                 "Q is nonpositive at a sampled sphere point"};
        double den_min = num::min_den_abs_on_sphere(Q, 4096, num::kDefaultSeed);
        Q.set_cert(den_min > 1e-6 ? DenCert::Checked : DenCert::Asserted);
    }
    return Q;
}

bool is_sphere_map(const SphereMap& F) {
    return std::holds_alternative<RatFun>(quotient_Q(F));
}

Rational BallAutomorphism::center_norm_sq() const {
    Rational s(0);
    for (const auto& a : center) s += a.re * a.re + a.im * a.im;
    return s;
}

std::vector<RatFun> BallAutomorphism::components() const {
    int N = nvars();
    Rational na = center_norm_sq();
    if (na >= 1) throw std::domain_error("BallAutomorphism: center not inside the ball");
    std::vector<RatFun> comps;
    comps.reserve(N);
    if (na == 0) {
        for (int j = 0; j < N; ++j) comps.push_back(RatFun(Poly::variable(N, j)));
    } else {
        Radical sa = Radical::sqrt_of(Rational(1) - na);
        // <z, a> = sum z_j conj(a_j)
        Poly pairing(N);
        for (int j = 0; j < N; ++j)
            pairing = pairing + Poly::variable(N, j) * Radical(center[j].conj());
        Poly den = Poly::constant(N, Radical(1)) - pairing;
        // Moebius part normalized so the identity sits at a = 0:
        //   (P_a z + s_a (z - P_a z) - a) / (1 - <z,a>)
        Radical coef = (Radical(1) - sa) * Radical(Gaussian(Rational(1) / na));
        for (int j = 0; j < N; ++j) {
            Poly num = pairing * (coef * Radical(center[j])) +
                       Poly::variable(N, j) * sa - Poly::constant(N, Radical(center[j]));
            comps.push_back(RatFun(num, den, DenCert::Checked));
        }
    }
    if (unitary) {
        const auto& U = *unitary;
        std::vector<RatFun> rotated(N, RatFun::zero(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) rotated[i] = rotated[i] + comps[j] * U[i][j];
        comps = std::move(rotated);
    }
    return comps;
}

RatFun one_minus_pairing(const std::vector<RatFun>& comps, const std::vector<Gaussian>& a) {
    int nv = comps[0].nvars();
    RatFun acc = RatFun::constant(nv, Radical(1));
    for (size_t j = 0; j < a.size(); ++j)
        acc = acc - comps[j] * Radical(a[j].conj());
    return acc;
}

SphereMap compose_target_automorphism(const SphereMap& F, const BallAutomorphism& phi) {
    int T = F.target_N + 1;
    if (phi.nvars() != T)
        throw std::invalid_argument("compose_target_automorphism: dimension mismatch");
    SphereMap out = F;
    out.name = F.name + "+target-aut";
    Rational na = phi.center_norm_sq();
    if (na >= 1) throw std::domain_error("automorphism center on/outside the sphere");
    std::vector<RatFun> comps;
    if (na == 0) {
        comps = F.components;
    } else {
        Radical sa = Radical::sqrt_of(Rational(1) - na);
        int nv = F.source_vars();
        RatFun t = RatFun::zero(nv);
        for (int j = 0; j < T; ++j) t = t + F.components[j] * Radical(phi.center[j].conj());
        RatFun den = RatFun::constant(nv, Radical(1)) - t;
        Radical coef = (Radical(1) - sa) * Radical(Gaussian(Rational(1) / na));
        for (int j = 0; j < T; ++j) {
            RatFun num = t * (coef * Radical(phi.center[j])) + F.components[j] * sa -
                         RatFun::constant(nv, Radical(phi.center[j]));
            comps.push_back(num / den);
        }
    }
    if (phi.unitary) {
        const auto& U = *phi.unitary;
        std::vector<RatFun> rotated(T, RatFun::zero(F.source_vars()));
        for (int i = 0; i < T; ++i)
            for (int j = 0; j < T; ++j) rotated[i] = rotated[i] + comps[j] * U[i][j];
        comps = std::move(rotated);
    }
    out.components = std::move(comps);
    return out;
}

SphereMap precompose_source_automorphism(const SphereMap& F, const BallAutomorphism& gamma) {
    int nv = F.source_vars();
    if (gamma.nvars() != nv)
        throw std::invalid_argument("precompose_source_automorphism: dimension mismatch");
    if (!F.has_sphere_source())
        throw std::invalid_argument("precompose_source_automorphism: source must be a sphere");
    std::vector<RatFun> g = gamma.components();
    std::vector<RatFun> gbar;
    gbar.reserve(nv);
    for (const auto& c : g) gbar.push_back(c.conj());
    std::function<RatFun(const Radical&)> lift = [nv](const Radical& c) {
        return RatFun::constant(nv, c);
    };
    SphereMap out = F;
    out.name = F.name + "+source-aut";
    out.components.clear();
    for (const auto& c : F.components) {
        RatFun num = c.num().substitute<RatFun>(g, gbar, lift);
        RatFun den = c.den().substitute<RatFun>(g, gbar, lift);
        out.components.push_back(num / den);
    }
    return out;
}

}  // namespace cra
