#pragma once

#include "crahlfors/ratfun.hpp"

namespace cra {

// Real polynomial defining function rho = 0 for a hypersurface in C^nvars.
struct Defining {
    Poly rho;
    explicit Defining(Poly r);
    int nvars() const { return rho.nvars(); }
    int cr_dim() const { return rho.nvars() - 1; }
};

// Coefficients of the tangential frame Z_alpha = d_alpha - (rho_alpha/rho_w) d_w
// in the ambient basis (d_1, ..., d_{n+1}).
std::vector<RatFun> frame_coefficients(const Defining& d, int alpha);

// Complex Hessian rho_{j kbar}.
PolyMatrix complex_hessian(const Poly& rho);

// Levi-Fefferman determinant: negated bordered Hessian determinant.
Poly fefferman_J(const Defining& d);

// r[rho] = det[rho_{j kbar}] / J(rho).
RatFun transverse_curvature(const Defining& d);

// The unique (1,0) field with  xi -| i ddbar rho = i r dbar rho,  drho(xi) = 1.
std::vector<RatFun> transverse_vector(const Defining& d);

// Both defining identities of the transverse vector, verified exactly
// (as rational functions, no ideal reduction).
bool transverse_vector_identities_hold(const Defining& d);

struct LeviData {
    RatMatrix levi;          // levi[a][b] = h_{a bbar}
    RatMatrix levi_inverse;  // matrix inverse of levi
};

LeviData levi_data(const Defining& d);

// Paper-index inverse Levi h^{a bbar} from the matrix inverse.
inline RatFun levi_upper(const LeviData& L, int a, int b) { return L.levi_inverse[b][a]; }

// Hessian contraction of log Q along the tangential frame:
//   D_{a bbar} = Z_a^j conj(Z_b)^k d_j d_kbar (log Q),
// with every log-derivative computed rationally.
RatMatrix D_log_operator(const Defining& d, const RatFun& Q);

// Ambient matrix d_j d_kbar log Q as rational functions.
RatMatrix hessian_log(const RatFun& Q);

// trace = h^{a bbar} M_{a bbar} = tr(levi_inverse * M).
RatFun trace_against_levi(const LeviData& L, const RatMatrix& M);

// |dbar_b log h|^2 = h^{a bbar} (Z_a log h)(conj(Z_b log h)) for real h.
RatFun dbar_b_log_norm_sq(const Defining& d, const LeviData& L, const Poly& h);

// Dimension three: the coefficient of (L L Lbar log Q) relative to
// theta^1 = w dz - z dw, with L = conj(w) d_z - conj(z) d_w.
RatFun a1_coefficient(const RatFun& Q);

// Prop-style rescaling identity on the standard sphere: for rho_hat = h*rho,
//   h * r[h*rho] = r[rho] + 2 Re(xi(log h)) - |dbar_b log h|^2
// modulo the sphere ideal.  h must be real and nonvanishing on the sphere.
bool rescale_identity_check(const Defining& d, const Poly& h);

// f == g identically as rational functions (no ideal reduction).
bool eq_identically(const RatFun& f, const RatFun& g);

}  // namespace cra
