#pragma once

#include "crahlfors/poly.hpp"

namespace cra {

// Certification state of the denominator's nonvanishing on the sphere.
enum class DenCert { Checked, Asserted };

// Quotient of Hermitian polynomials.  No gcd normalization; equality on the
// sphere is decided by cross-multiplication and normal forms.
class RatFun {
  public:
    RatFun() : num_(1), den_(Poly::constant(1, Radical(1))) {}
    RatFun(Poly num)
        : num_(std::move(num)), den_(Poly::constant(num_.nvars(), Radical(1))) {}
    RatFun(Poly num, Poly den, DenCert cert = DenCert::Asserted);

    static RatFun constant(int nvars, Radical c) { return RatFun(Poly::constant(nvars, c)); }
    static RatFun zero(int nvars) { return RatFun(Poly(nvars)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    DenCert cert() const { return cert_; }
    void set_cert(DenCert c) { cert_ = c; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun conj() const;
    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator*(const Radical& c) const { return RatFun(num_ * c, den_, cert_); }

    RatFun derivative(int var, DiffKind kind) const;

    // Zero as a function on the sphere: normal form of the numerator vanishes.
    bool is_zero_on_sphere() const { return num_.reduce_mod_sphere().is_zero(); }

    // Representative with numerator and denominator in sphere normal form.
    RatFun reduced_on_sphere() const;

    std::complex<double> eval(const std::vector<std::complex<double>>& pt) const;

  private:
    Poly num_, den_;
    DenCert cert_ = DenCert::Asserted;
};

// Cancel the common monomial factor of numerator and denominator (exact);
// tames chart-monomial denominators before numeric evaluation.
RatFun cancel_monomial_content(const RatFun& f);

// f == g as functions on the unit sphere.
bool eq_on_sphere(const RatFun& f, const RatFun& g);

using RatMatrix = std::vector<std::vector<RatFun>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

Poly poly_matrix_det(const PolyMatrix& m);          // cofactor expansion
RatFun ratfun_matrix_det(const RatMatrix& m);
RatMatrix ratfun_matrix_inverse(const RatMatrix& m);  // adjugate / det

}  // namespace cra
