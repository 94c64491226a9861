#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "crahlfors/radical.hpp"

namespace cra {

// Exponent data for z_1..z_n and their formal conjugates.
struct Monomial {
    std::vector<int> holo;
    std::vector<int> anti;

    explicit Monomial(int nvars = 0) : holo(nvars, 0), anti(nvars, 0) {}

    int nvars() const { return (int)holo.size(); }
    int degree() const {
        int d = 0;
        for (int e : holo) d += e;
        for (int e : anti) d += e;
        return d;
    }
    Monomial conj() const {
        Monomial m(nvars());
        m.holo = anti;
        m.anti = holo;
        return m;
    }
    Monomial operator*(const Monomial& o) const;
    // Componentwise divisibility / quotient.
    bool divides(const Monomial& o) const;
    Monomial quotient_into(const Monomial& o) const;  // o / *this
    bool operator==(const Monomial& o) const { return holo == o.holo && anti == o.anti; }
};

// Graded lex: higher total degree first, then lex on (holo, anti).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class DiffKind { Holo, Anti };

// Polynomial in z_1..z_n, conj(z_1)..conj(z_n) over the radical field.
class Poly {
  public:
    using TermMap = std::map<Monomial, Radical, MonomialOrder>;

    explicit Poly(int nvars = 1) : nvars_(nvars) {}
    static Poly constant(int nvars, Radical c);
    static Poly variable(int nvars, int idx);       // z_{idx}, 0-based
    static Poly conj_variable(int nvars, int idx);  // conj(z_{idx})
    static Poly monomial(Monomial m, Radical c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Radical constant_value() const;  // coefficient of 1 (poly must be constant or zero)
    bool is_real() const;            // conj(p) == p
    int degree() const;

    void add_term(const Monomial& m, const Radical& c);

    Poly conj() const;
    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Radical& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly derivative(int var, DiffKind kind) const;
    Poly pow(int e) const;

    // Exact multivariate division: returns p/d when the remainder vanishes.
    static std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

    // Canonical representative modulo the sphere relation
    //   z_n*conj(z_n) = 1 - sum_{j<n} z_j*conj(z_j).
    Poly reduce_mod_sphere() const;

    std::complex<double> eval(const std::vector<std::complex<double>>& pt) const;

    // Substitute each variable by a value in an arbitrary commutative ring R
    // (used for composition with rational-function arguments).
    template <typename R>
    R substitute(const std::vector<R>& args, const std::vector<R>& conj_args,
                 const std::function<R(const Radical&)>& lift) const {
        R acc = lift(Radical(0));
        for (const auto& [m, c] : terms_) {
            R t = lift(c);
            for (int j = 0; j < nvars_; ++j) {
                for (int e = 0; e < m.holo[j]; ++e) t = t * args[j];
                for (int e = 0; e < m.anti[j]; ++e) t = t * conj_args[j];
            }
            acc = acc + t;
        }
        return acc;
    }

  private:
    int nvars_;
    TermMap terms_;
};

inline Poly operator*(const Radical& c, const Poly& p) { return p * c; }

// rho = |z|^2 - 1 for the sphere in C^nvars.
Poly sphere_rho(int nvars);

}  // namespace cra
