#include "crahlfors/invariants.hpp"

#include <cmath>
#include <functional>
#include <set>

namespace cra {

namespace {

RatFun quotient_or_throw(const SphereMap& F) {
    auto q = quotient_Q(F);
    if (auto* err = std::get_if<QuotientError>(&q)) throw NotSphereMapError(*err);
    return std::get<RatFun>(q);
}

bool moduli_balanced(const Poly& p) {
    for (const auto& [m, c] : p.terms())
        if (m.holo != m.anti) return false;
    return true;
}

}  // namespace

Radical eval_exact(const Poly& p, const std::vector<Gaussian>& pt) {
    std::vector<Radical> args, conj_args;
    for (const auto& g : pt) {
        args.push_back(Radical(g));
        conj_args.push_back(Radical(g.conj()));
    }
    std::function<Radical(const Radical&)> lift = [](const Radical& c) { return c; };
    return p.substitute<Radical>(args, conj_args, lift);
}

AhlforsData ahlfors_mixed(const SphereMap& F) {
    if (!F.has_sphere_source())
        throw std::invalid_argument("ahlfors_mixed: source must be the standard sphere");
    int n = F.source_n;
    AhlforsData out;
    out.Q = quotient_or_throw(F);
    Defining d(sphere_rho(F.source_vars()));
    out.levi = levi_data(d);
    out.mixed = D_log_operator(d, out.Q);
    out.trace = trace_against_levi(out.levi, out.mixed);
    RatFun share = out.trace * Radical(Rational(1, n));
    out.tracefree.assign(n, std::vector<RatFun>(n, RatFun::zero(F.source_vars())));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.tracefree[a][b] = out.mixed[a][b] - share * out.levi.levi[a][b];
    if (n == 1) out.a1 = a1_coefficient(out.Q);
    out.holomorphic_part = RatFun::zero(F.source_vars());
    return out;
}

RatMatrix tracefree_general(const Defining& source, const SphereMap& F) {
    RatFun norm = hermitian_norm_sq(F);
    Poly cleared = norm.num() - norm.den();
    auto q = Poly::exact_divide(cleared, source.rho);
    if (!q)
        throw NotSphereMapError(QuotientError{QuotientError::Kind::NotASphereMap, cleared,
                                              "||F||^2 - 1 is not divisible by rho"});
    RatFun Q(*q, norm.den());
    int n = source.cr_dim();
    LeviData L = levi_data(source);
    RatMatrix mixed = D_log_operator(source, Q);
    RatFun trace = trace_against_levi(L, mixed);
    RatFun share = trace * Radical(Rational(1, n));
    RatMatrix tf(n, std::vector<RatFun>(n, RatFun::zero(source.nvars())));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tf[a][b] = mixed[a][b] - share * L.levi[a][b];
    return tf;
}

RatFun a1_invariant(const SphereMap& F) {
    if (F.source_n != 1)
        throw std::invalid_argument("a1_invariant: source must be S^3 (n = 1)");
    return a1_coefficient(quotient_or_throw(F)).reduced_on_sphere();
}

std::string to_string(UmbilicKind k) {
    switch (k) {
        case UmbilicKind::Empty: return "empty";
        case UmbilicKind::WholeSphere: return "whole-sphere";
        case UmbilicKind::CircleS1: return "circle-S1";
        case UmbilicKind::CircleS2: return "circle-S2";
        case UmbilicKind::UnionS1S2: return "union-S1-S2";
        case UmbilicKind::Torus: return "torus";
        case UmbilicKind::NotMonomialPointSet: return "point-set";
    }
    return "?";
}

bool as_function_of_s(const RatFun& f, UniPoly& num_s, UniPoly& den_s) {
    if (f.nvars() != 2) return false;
    RatFun r = f.reduced_on_sphere();
    auto extract = [](const Poly& p, UniPoly& out) {
        std::vector<Rational> coeffs;
        for (const auto& [m, c] : p.terms()) {
            if (m.holo != m.anti) return false;
            if (m.holo[1] != 0) return false;
            if (!c.is_rational()) return false;
            size_t deg = (size_t)m.holo[0];
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] = c.rational_value();
        }
        out = UniPoly::from_coeffs(std::move(coeffs));
        return true;
    };
    if (!extract(r.num(), num_s) || !extract(r.den(), den_s)) return false;
    reduce_fraction(num_s, den_s);
    return true;
}

namespace {

UmbilicDescription umbilic_monomial(const RatFun& trace) {
    UmbilicDescription out;
    UniPoly num_s, den_s;
    if (!as_function_of_s(trace, num_s, den_s))
        throw std::logic_error("umbilic_monomial: trace not a function of s");
    if (num_s.is_zero()) {
        out.kind = UmbilicKind::WholeSphere;
        return out;
    }
    out.roots = sturm_roots_unit_interval(num_s);
    if (!out.roots.interior_roots.empty())
        out.kind = UmbilicKind::Torus;
    else if (out.roots.root_at_zero && out.roots.root_at_one)
        out.kind = UmbilicKind::UnionS1S2;
    else if (out.roots.root_at_one)
        out.kind = UmbilicKind::CircleS1;
    else if (out.roots.root_at_zero)
        out.kind = UmbilicKind::CircleS2;
    else
        out.kind = UmbilicKind::Empty;
    return out;
}

// Snap a double coordinate to the nearest half-integer Gaussian rational.
Gaussian snap_coord(std::complex<double> v, bool& ok) {
    double re2 = std::round(2.0 * v.real()), im2 = std::round(2.0 * v.imag());
    if (std::abs(v.real() - re2 / 2) > 1e-3 || std::abs(v.imag() - im2 / 2) > 1e-3)
        ok = false;
    return Gaussian(Rational((long)re2) / 2, Rational((long)im2) / 2);
}

UmbilicDescription umbilic_witness_scan(const RatFun& trace) {
    UmbilicDescription out;
    out.kind = UmbilicKind::NotMonomialPointSet;
    RatFun red = trace.reduced_on_sphere();
    std::set<std::pair<std::pair<Rational, Rational>, std::pair<Rational, Rational>>> seen;
    auto consider = [&](const num::Point& p) {
        std::complex<double> denv = red.den().eval(p);
        if (std::abs(denv) < 1e-7) return;
        if (std::abs(red.num().eval(p)) / std::abs(denv) > 1e-6) return;
        bool ok = true;
        Gaussian gz = snap_coord(p[0], ok), gw = snap_coord(p[1], ok);
        if (!ok) return;
        Rational nrm = gz.re * gz.re + gz.im * gz.im + gw.re * gw.re + gw.im * gw.im;
        if (nrm != 1) return;
        std::vector<Gaussian> pt{gz, gw};
        if (!eval_exact(red.num(), pt).is_zero()) return;
        if (eval_exact(red.den(), pt).is_zero()) return;
        auto key = std::make_pair(std::make_pair(gz.re, gz.im), std::make_pair(gw.re, gw.im));
        if (seen.insert(key).second) out.exact_witnesses.push_back(pt);
    };
    const int G = 200;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < G; ++k) {
        double s = (double)k / (G - 1);
        double a = std::sqrt(s), b = std::sqrt(1.0 - s);
        for (int j = 0; j < G; ++j) {
            double th = 2 * pi * j / G;
            std::complex<double> ph(std::cos(th), std::sin(th));
            consider({a, b * ph});
            consider({a * ph, b});
        }
    }
    return out;
}

}  // namespace

UmbilicDescription umbilic_locus(const SphereMap& F, const RatFun& trace) {
    if (F.source_n != 1)
        throw std::invalid_argument("umbilic_locus: source must be S^3 (n = 1)");
    UniPoly num_s, den_s;
    if (F.is_monomial() && as_function_of_s(trace, num_s, den_s))
        return umbilic_monomial(trace);
    return umbilic_witness_scan(trace);
}

UmbilicDescription umbilic_locus(const SphereMap& F) {
    return umbilic_locus(F, ahlfors_mixed(F).trace);
}

EquivalenceVerdict equivalence_test(const SphereMap& F, const SphereMap& G) {
    if (F.source_n != G.source_n || !F.has_sphere_source() || !G.has_sphere_source())
        throw std::invalid_argument("equivalence_test: sources must be the same sphere");
    AhlforsData a = ahlfors_mixed(F), b = ahlfors_mixed(G);
    if (!eq_on_sphere(a.trace, b.trace)) return {true, "trace"};
    int n = F.source_n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!eq_on_sphere(a.tracefree[i][j], b.tracefree[i][j]))
                return {true, "tracefree"};
    if (n == 1 && !eq_on_sphere(*a.a1, *b.a1)) return {true, "a1"};
    return {false, ""};
}

namespace {

// Value of p restricted to the circle |z_j| = 1 (all other variables 0),
// written in the circle variable; zero iff p vanishes there.
bool vanishes_on_circle(const Poly& p, int j) {
    std::map<int, Radical> net;  // exponent of z_j (negative = conj power)
    for (const auto& [m, c] : p.terms()) {
        bool other = false;
        for (int k = 0; k < p.nvars(); ++k)
            if (k != j && (m.holo[k] != 0 || m.anti[k] != 0)) other = true;
        if (other) continue;
        int e = m.holo[j] - m.anti[j];
        auto [it, fresh] = net.emplace(e, c);
        if (!fresh) it->second = it->second + c;
    }
    for (const auto& [e, c] : net)
        if (!c.is_zero()) return false;
    return true;
}

bool a1_shape_ok(const RatFun& a1) {
    RatFun r = a1.reduced_on_sphere();
    if (!moduli_balanced(r.den())) return false;
    for (const auto& [m, c] : r.num().terms()) {
        if (m.anti[1] != 1 || m.holo[1] != 0) return false;
        if (m.anti[0] != m.holo[0] + 1) return false;
    }
    return true;
}

}  // namespace

ObstructionReport monomial_obstruction(const SphereMap& F, const AhlforsData& data) {
    ObstructionReport rep{};
    RatFun tr = data.trace.reduced_on_sphere();
    rep.moduli_only = moduli_balanced(tr.num()) && moduli_balanced(tr.den());
    rep.circle_tracefree = true;
    for (int j = 0; j < F.source_vars() && rep.circle_tracefree; ++j)
        for (const auto& row : data.tracefree)
            for (const auto& entry : row)
                if (!vanishes_on_circle(entry.num().reduce_mod_sphere(), j)) {
                    rep.circle_tracefree = false;
                    break;
                }
    rep.a1_shape = data.a1 ? a1_shape_ok(*data.a1) : true;
    return rep;
}

ObstructionReport monomial_obstruction(const SphereMap& F) {
    return monomial_obstruction(F, ahlfors_mixed(F));
}

RatFun mean_curvature_sq(const SphereMap& F) {
    if (!F.is_polynomial())
        throw std::invalid_argument("mean_curvature_sq: map must be polynomial");
    RatFun norm = hermitian_norm_sq(F);
    Poly pullback = norm.num() - Poly::constant(F.source_vars(), Radical(1));
    Defining d(pullback);
    return transverse_curvature(d) - RatFun::constant(F.source_vars(), Radical(1));
}

RatFun ii_norm_sq(const SphereMap& F) {
    AhlforsData data = ahlfors_mixed(F);
    return data.trace * Radical(Rational(2 * (F.source_n + 1))) / data.Q;
}

namespace {

// Polynomial in the formal moduli variables t_1..t_m mapped to the source
// variables via t_j := z_j conj(z_j).
Poly moduli_to_vars(const Poly& p) {
    int m = p.nvars();
    Poly out(m);
    for (const auto& [mon, c] : p.terms()) {
        Monomial target(m);
        target.holo = mon.holo;
        target.anti = mon.holo;
        out.add_term(target, c);
    }
    return out;
}

}  // namespace

RatFun monomial_trace(const SphereMap& F) {
    if (!F.is_monomial() || !F.has_sphere_source())
        throw std::invalid_argument("monomial_trace: map must be monomial, sphere source");
    int m = F.source_vars();  // number of moduli variables
    int n = F.source_n;
    Poly normt(m);
    for (const auto& comp : F.components) {
        if (comp.is_zero()) continue;
        const auto& [mon, c] = *comp.num().terms().begin();
        Radical sq = c * c.conj();
        Monomial tm(m);
        tm.holo = mon.holo;
        normt.add_term(tm, sq);
    }
    Poly linear(m);
    for (int j = 0; j < m; ++j) linear = linear + Poly::variable(m, j);
    linear = linear - Poly::constant(m, Radical(1));
    auto g = Poly::exact_divide(normt - Poly::constant(m, Radical(1)), linear);
    if (!g) throw std::logic_error("monomial_trace: moduli norm not divisible");

    std::vector<Poly> dg(m, Poly(m));
    for (int j = 0; j < m; ++j) dg[j] = g->derivative(j, DiffKind::Holo);
    RatFun gf(*g);
    auto loghess = [&](int j, int k) {
        Poly djk = dg[j].derivative(k, DiffKind::Holo);
        return RatFun(*g * djk - dg[j] * dg[k], *g * *g);
    };
    auto phi = [&](int a) { return RatFun(dg[a], *g); };
    auto phi2 = [&](int a, int b) {
        return loghess(a, b) - loghess(b, m - 1) - loghess(a, m - 1) + loghess(m - 1, m - 1);
    };

    RatFun tr = RatFun::zero(m);
    for (int a = 0; a < n; ++a) {
        RatFun ta(Poly::variable(m, a));
        tr = tr + phi(a) + (phi2(a, a) - phi(a)) * ta;
        for (int b = 0; b < n; ++b)
            tr = tr - phi2(a, b) * ta * RatFun(Poly::variable(m, b));
    }
    // Cross-term of the frame contraction: contracting the (z, w)-mixed block
    // contributes phi_{n+1} * S(1-S)/t_{n+1} with S = t_1 + ... + t_n.
    RatFun S = RatFun::zero(m);
    for (int a = 0; a < n; ++a) S = S + RatFun(Poly::variable(m, a));
    RatFun one = RatFun::constant(m, Radical(1));
    tr = tr + phi(m - 1) * S * (one - S) / RatFun(Poly::variable(m, m - 1));
    return RatFun(moduli_to_vars(tr.num()), moduli_to_vars(tr.den()));
}

}  // namespace cra
