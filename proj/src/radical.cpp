#include "crahlfors/radical.hpp"

#include <cmath>

namespace cra {

void squarefree_split(const Integer& n, Integer& square_part, Integer& free_part) {
    if (n <= 0) throw std::domain_error("squarefree_split: nonpositive radicand");
    square_part = 1;
    free_part = 1;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (unsigned k = 0; k + 1 < e; k += 2) square_part *= p;
        if (e % 2 == 1) free_part *= p;
    }
    free_part *= m;
}

Radical Radical::sqrt_of(const Rational& radicand) {
    if (radicand < 0) throw std::domain_error("sqrt of negative rational");
    if (radicand == 0) return Radical();
    // sqrt(a/b) = sqrt(a*b)/b
    Integer ab = radicand.get_num() * radicand.get_den();
    Integer sq, fr;
    squarefree_split(ab, sq, fr);
    Radical r;
    r.terms_[fr.get_ui()] = Gaussian(Rational(sq) / Rational(radicand.get_den()));
    return r;
}

bool Radical::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second.is_real();
}

bool Radical::is_real() const {
    for (const auto& [m, g] : terms_)
        if (!g.is_real()) return false;
    return true;
}

Rational Radical::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("Radical: not rational");
    return terms_.begin()->second.re;
}

Radical Radical::conj() const {
    Radical r;
    for (const auto& [m, g] : terms_) r.terms_[m] = g.conj();
    return r;
}

Radical Radical::operator-() const {
    Radical r;
    for (const auto& [m, g] : terms_) r.terms_[m] = -g;
    return r;
}

void Radical::add_term(unsigned long m, const Gaussian& g) {
    if (g.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = g;
    } else {
        it->second = it->second + g;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Radical Radical::operator+(const Radical& o) const {
    Radical r = *this;
    for (const auto& [m, g] : o.terms_) r.add_term(m, g);
    return r;
}

Radical Radical::operator-(const Radical& o) const {
    Radical r = *this;
    for (const auto& [m, g] : o.terms_) r.add_term(m, -g);
    return r;
}

Radical Radical::operator*(const Radical& o) const {
    Radical r;
    for (const auto& [m1, g1] : terms_) {
        for (const auto& [m2, g2] : o.terms_) {
            // sqrt(m1)*sqrt(m2) = d*sqrt(m1*m2/d^2) with d = gcd(m1,m2);
            // the keys are already squarefree so the quotient is squarefree.
            Integer a(m1), b(m2);
            Integer d;
            mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer m = (a / d) * (b / d);
            Gaussian coef = g1 * g2 * Gaussian(Rational(d));
            r.add_term(m.get_ui(), coef);
        }
    }
    return r;
}

Radical Radical::inverse() const {
    if (terms_.empty()) throw std::domain_error("Radical: division by zero");
    if (terms_.size() == 1) {
        auto [m, g] = *terms_.begin();
        // 1/(g*sqrt(m)) = (1/(g*m)) * sqrt(m)
        Radical r;
        r.terms_[m] = (g * Gaussian(Rational((long)m))).inverse();
        return r;
    }
    // Pick a prime p dividing some key; split x = a + sqrt(p)*b with a, b in
    // the subfield avoiding p, then 1/x = (a - sqrt(p)*b) / (a^2 - p*b^2).
    unsigned long key = 0;
    for (const auto& [m, g] : terms_)
        if (m > 1) key = m;
    Integer p = 2;
    while (Integer(key) % p != 0) ++p;
    unsigned long pu = p.get_ui();
    Radical a, b;
    for (const auto& [m, g] : terms_) {
        if (m % pu == 0)
            b.terms_[m / pu] = g;
        else
            a.terms_[m] = g;
    }
    Radical sp;
    sp.terms_[pu] = Gaussian(Rational(1));
    Radical denom = a * a - Radical(Rational((long)pu)) * b * b;
    if (denom.is_zero()) throw std::logic_error("Radical: degenerate inversion");
    return (a - sp * b) * denom.inverse();
}

std::complex<double> Radical::to_complex() const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [m, g] : terms_) s += g.to_complex() * std::sqrt((double)m);
    return s;
}

}  // namespace cra
