#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cra {

using Rational = mpq_class;
using Integer = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// Gaussian rational a + b*i.
struct Gaussian {
    Rational re{0};
    Rational im{0};

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return {re, -im}; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("Gaussian: division by zero");
        return {re / n, -im / n};
    }
    Gaussian operator/(const Gaussian& o) const { return *this * o.inverse(); }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// Squarefree decomposition n = s^2 * f, f squarefree.  Trial division; the
// radicands in play are small (products of the surds in the map catalog).
void squarefree_split(const Integer& n, Integer& square_part, Integer& free_part);

// Finite sum  sum_m q_m * sqrt(m)  with m squarefree positive integers and
// q_m Gaussian rationals.  Closed under +, *, conjugation and inversion.
class Radical {
  public:
    using TermMap = std::map<unsigned long, Gaussian>;

    Radical() = default;
    Radical(Rational q) {
        if (q != 0) terms_[1] = Gaussian(std::move(q));
    }
    Radical(int v) : Radical(Rational(v)) {}
    Radical(Gaussian g) {
        if (!g.is_zero()) terms_[1] = std::move(g);
    }

    // q * sqrt(m); m need not be squarefree.
    static Radical sqrt_of(const Rational& radicand);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_real() const;
    Rational rational_value() const;  // throws unless is_rational()

    Radical conj() const;
    Radical operator-() const;
    Radical operator+(const Radical& o) const;
    Radical operator-(const Radical& o) const;
    Radical operator*(const Radical& o) const;
    Radical inverse() const;
    Radical operator/(const Radical& o) const { return *this * o.inverse(); }
    bool operator==(const Radical& o) const { return terms_ == o.terms_; }

    std::complex<double> to_complex() const;

  private:
    void add_term(unsigned long m, const Gaussian& g);
    TermMap terms_;
};

}  // namespace cra
