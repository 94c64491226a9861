#include "crahlfors/geometry.hpp"

#include <stdexcept>

namespace cra {

Defining::Defining(Poly r) : rho(std::move(r)) {
    if (!rho.is_real()) throw std::invalid_argument("Defining: rho must be real");
    if (rho.nvars() < 1) throw std::invalid_argument("Defining: needs at least one variable");
}

std::vector<RatFun> frame_coefficients(const Defining& d, int alpha) {
    int N = d.nvars();
    Poly rho_a = d.rho.derivative(alpha, DiffKind::Holo);
    Poly rho_w = d.rho.derivative(N - 1, DiffKind::Holo);
    std::vector<RatFun> z(N, RatFun::zero(N));
    z[alpha] = RatFun::constant(N, Radical(1));
    z[N - 1] = z[N - 1] - RatFun(rho_a, rho_w);
    return z;
}

PolyMatrix complex_hessian(const Poly& rho) {
    int N = rho.nvars();
    PolyMatrix H(N, std::vector<Poly>(N, Poly(N)));
    for (int j = 0; j < N; ++j) {
        Poly rj = rho.derivative(j, DiffKind::Holo);
        for (int k = 0; k < N; ++k) H[j][k] = rj.derivative(k, DiffKind::Anti);
    }
    return H;
}

Poly fefferman_J(const Defining& d) {
    int N = d.nvars();
    PolyMatrix B(N + 1, std::vector<Poly>(N + 1, Poly(N)));
    B[0][0] = d.rho;
    for (int k = 0; k < N; ++k) B[0][k + 1] = d.rho.derivative(k, DiffKind::Anti);
    PolyMatrix H = complex_hessian(d.rho);
    for (int j = 0; j < N; ++j) {
        B[j + 1][0] = d.rho.derivative(j, DiffKind::Holo);
        for (int k = 0; k < N; ++k) B[j + 1][k + 1] = H[j][k];
    }
    return -poly_matrix_det(B);
}

// Polynomial adjugate via cofactors.
static PolyMatrix poly_adjugate(const PolyMatrix& m) {
    size_t n = m.size();
    int nv = m[0][0].nvars();
    PolyMatrix adj(n, std::vector<Poly>(n, Poly(nv)));
    if (n == 1) {
        adj[0][0] = Poly::constant(nv, Radical(1));
        return adj;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Poly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cof = poly_matrix_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;
        }
    }
    return adj;
}

// B = det(H) * rho^{j kbar} rho_j rho_kbar = sum_{j,k} rho_j adj(H)[k][j] rho_kbar.
// The normalization drho(xi) = 1 forces r = det(H)/B identically; on the
// hypersurface this agrees with det(H)/J(rho) since J = B - rho*det(H).
static Poly transverse_denominator(const Defining& d, const PolyMatrix& adj) {
    int N = d.nvars();
    Poly B(N);
    for (int j = 0; j < N; ++j) {
        Poly rj = d.rho.derivative(j, DiffKind::Holo);
        if (rj.is_zero()) continue;
        for (int k = 0; k < N; ++k)
            B = B + rj * adj[k][j] * d.rho.derivative(k, DiffKind::Anti);
    }
    return B;
}

RatFun transverse_curvature(const Defining& d) {
    PolyMatrix H = complex_hessian(d.rho);
    Poly det = poly_matrix_det(H);
    if (det.is_zero()) throw std::domain_error("transverse_curvature: degenerate Hessian");
    return RatFun(det, transverse_denominator(d, poly_adjugate(H)));
}

std::vector<RatFun> transverse_vector(const Defining& d) {
    int N = d.nvars();
    PolyMatrix H = complex_hessian(d.rho);
    if (poly_matrix_det(H).is_zero())
        throw std::domain_error("transverse_vector: degenerate Hessian");
    PolyMatrix adj = poly_adjugate(H);
    Poly B = transverse_denominator(d, adj);
    // xi^j = r * rho^{j kbar} rho_kbar = (1/B) sum_k adj[k][j] rho_kbar
    std::vector<RatFun> xi(N, RatFun::zero(N));
    for (int j = 0; j < N; ++j) {
        Poly num(N);
        for (int k = 0; k < N; ++k)
            num = num + adj[k][j] * d.rho.derivative(k, DiffKind::Anti);
        xi[j] = RatFun(num, B);
    }
    return xi;
}

bool eq_identically(const RatFun& f, const RatFun& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

bool transverse_vector_identities_hold(const Defining& d) {
    int N = d.nvars();
    std::vector<RatFun> xi = transverse_vector(d);
    RatFun r = transverse_curvature(d);
    PolyMatrix H = complex_hessian(d.rho);
    // sum_j xi^j rho_{j kbar} = r * rho_kbar for every k
    for (int k = 0; k < N; ++k) {
        RatFun lhs = RatFun::zero(N);
        for (int j = 0; j < N; ++j) lhs = lhs + xi[j] * RatFun(H[j][k]);
        RatFun rhs = r * RatFun(d.rho.derivative(k, DiffKind::Anti));
        if (!eq_identically(lhs, rhs)) return false;
    }
    // drho(xi) = sum_j rho_j xi^j = 1
    RatFun pairing = RatFun::zero(N);
    for (int j = 0; j < N; ++j)
        pairing = pairing + RatFun(d.rho.derivative(j, DiffKind::Holo)) * xi[j];
    return eq_identically(pairing, RatFun::constant(N, Radical(1)));
}

LeviData levi_data(const Defining& d) {
    int N = d.nvars();
    int n = N - 1;
    if (n < 1) throw std::domain_error("levi_data: needs CR dimension >= 1");
    PolyMatrix H = complex_hessian(d.rho);
    RatMatrix levi(n, std::vector<RatFun>(n, RatFun::zero(N)));
    for (int a = 0; a < n; ++a) {
        std::vector<RatFun> Za = frame_coefficients(d, a);
        for (int b = 0; b < n; ++b) {
            std::vector<RatFun> Zb = frame_coefficients(d, b);
            RatFun acc = RatFun::zero(N);
            for (int j = 0; j < N; ++j) {
                if (Za[j].is_zero()) continue;
                for (int k = 0; k < N; ++k) {
                    if (Zb[k].is_zero() || H[j][k].is_zero()) continue;
                    acc = acc + Za[j] * Zb[k].conj() * RatFun(H[j][k]);
                }
            }
            levi[a][b] = acc;
        }
    }
    return LeviData{levi, ratfun_matrix_inverse(levi)};
}

// Ambient d_j d_kbar log p for a polynomial: (p p_{j kbar} - p_j p_kbar)/p^2.
static RatMatrix hessian_log_poly(const Poly& p) {
    int N = p.nvars();
    Poly p2 = p * p;
    RatMatrix H(N, std::vector<RatFun>(N, RatFun::zero(N)));
    for (int j = 0; j < N; ++j) {
        Poly pj = p.derivative(j, DiffKind::Holo);
        for (int k = 0; k < N; ++k) {
            Poly num = p * pj.derivative(k, DiffKind::Anti) - pj * p.derivative(k, DiffKind::Anti);
            if (!num.is_zero()) H[j][k] = RatFun(num, p2);
        }
    }
    return H;
}

RatMatrix hessian_log(const RatFun& Q) {
    if (Q.num().is_zero()) throw std::domain_error("hessian_log: Q vanishes");
    RatMatrix Hn = hessian_log_poly(Q.num());
    RatMatrix Hd = hessian_log_poly(Q.den());
    int N = Q.nvars();
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) Hn[j][k] = Hn[j][k] - Hd[j][k];
    return Hn;
}

RatMatrix D_log_operator(const Defining& d, const RatFun& Q) {
    int N = d.nvars();
    int n = N - 1;
    RatMatrix H = hessian_log(Q);
    RatMatrix out(n, std::vector<RatFun>(n, RatFun::zero(N)));
    for (int a = 0; a < n; ++a) {
        std::vector<RatFun> Za = frame_coefficients(d, a);
        for (int b = 0; b < n; ++b) {
            std::vector<RatFun> Zb = frame_coefficients(d, b);
            RatFun acc = RatFun::zero(N);
            for (int j = 0; j < N; ++j) {
                if (Za[j].is_zero()) continue;
                for (int k = 0; k < N; ++k) {
                    if (Zb[k].is_zero() || H[j][k].is_zero()) continue;
                    acc = acc + Za[j] * Zb[k].conj() * H[j][k];
                }
            }
            out[a][b] = acc;
        }
    }
    return out;
}

RatFun trace_against_levi(const LeviData& L, const RatMatrix& M) {
    size_t n = M.size();
    RatFun acc = RatFun::zero(M[0][0].nvars());
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) acc = acc + L.levi_inverse[b][a] * M[a][b];
    return acc;
}

// Z_a applied to log h, rationally: sum_j Za^j (d_j h)/h.
static RatFun frame_log_derivative(const Defining& d, int alpha, const Poly& h) {
    int N = d.nvars();
    std::vector<RatFun> Za = frame_coefficients(d, alpha);
    RatFun acc = RatFun::zero(N);
    for (int j = 0; j < N; ++j) {
        if (Za[j].is_zero()) continue;
        Poly hj = h.derivative(j, DiffKind::Holo);
        if (hj.is_zero()) continue;
        acc = acc + Za[j] * RatFun(hj, h);
    }
    return acc;
}

RatFun dbar_b_log_norm_sq(const Defining& d, const LeviData& L, const Poly& h) {
    int n = d.cr_dim();
    RatFun acc = RatFun::zero(d.nvars());
    for (int a = 0; a < n; ++a) {
        RatFun ua = frame_log_derivative(d, a, h);
        if (ua.is_zero()) continue;
        for (int b = 0; b < n; ++b) {
            RatFun ub = frame_log_derivative(d, b, h);
            if (ub.is_zero()) continue;
            acc = acc + levi_upper(L, a, b) * ua * ub.conj();
        }
    }
    return acc;
}

RatFun a1_coefficient(const RatFun& Q) {
    if (Q.nvars() != 2)
        throw std::invalid_argument("a1_coefficient: source must be the 3-sphere (2 variables)");
    if (Q.num().is_zero()) throw std::domain_error("a1_coefficient: Q vanishes");
    const Poly z = Poly::variable(2, 0), w = Poly::variable(2, 1);
    const Poly zb = Poly::conj_variable(2, 0), wb = Poly::conj_variable(2, 1);
    // L and Lbar on polynomials
    auto L = [&](const Poly& p) {
        return wb * p.derivative(0, DiffKind::Holo) - zb * p.derivative(1, DiffKind::Holo);
    };
    auto Lbar = [&](const Poly& p) {
        return w * p.derivative(0, DiffKind::Anti) - z * p.derivative(1, DiffKind::Anti);
    };
    // LL Lbar log P for a single polynomial P, keeping the denominator as an
    // explicit power of P so the degree grows linearly:
    //   Lbar log P = (Lbar P)/P
    //   L of that  = A/P^2 with A = L(Lbar P) P - (Lbar P)(L P)
    //   L of that  = (L(A) P - 2 A L(P)) / P^3
    auto lll_log = [&](const Poly& P) {
        Poly LbP = Lbar(P), LP = L(P);
        Poly A = L(LbP) * P - LbP * LP;
        return RatFun(L(A) * P - A * LP * Radical(2), P * P * P);
    };
    // log Q = log num - log den and LL Lbar log is additive
    RatFun res = lll_log(Q.num());
    if (!Q.den().is_constant()) res = res - lll_log(Q.den());
    return res;
}

bool rescale_identity_check(const Defining& d, const Poly& h) {
    if (!h.is_real()) throw std::invalid_argument("rescale_identity_check: h must be real");
    if (h.reduce_mod_sphere().is_zero())
        throw std::domain_error("rescale_identity_check: h vanishes on the sphere");
    Defining dhat(h * d.rho);
    RatFun lhs = RatFun(h) * transverse_curvature(dhat);

    std::vector<RatFun> xi = transverse_vector(d);
    int N = d.nvars();
    RatFun xilogh = RatFun::zero(N);
    for (int j = 0; j < N; ++j) {
        Poly hj = h.derivative(j, DiffKind::Holo);
        if (hj.is_zero() || xi[j].is_zero()) continue;
        xilogh = xilogh + xi[j] * RatFun(hj, h);
    }
    LeviData L = levi_data(d);
    RatFun rhs = transverse_curvature(d) + xilogh + xilogh.conj() - dbar_b_log_norm_sq(d, L, h);
    return eq_on_sphere(lhs, rhs);
}

}  // namespace cra
