#include "crahlfors/poly.hpp"

#include <stdexcept>

namespace cra {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m(nvars());
    for (int j = 0; j < nvars(); ++j) {
        m.holo[j] = holo[j] + o.holo[j];
        m.anti[j] = anti[j] + o.anti[j];
    }
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (int j = 0; j < nvars(); ++j)
        if (holo[j] > o.holo[j] || anti[j] > o.anti[j]) return false;
    return true;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
    Monomial m(nvars());
    for (int j = 0; j < nvars(); ++j) {
        m.holo[j] = o.holo[j] - holo[j];
        m.anti[j] = o.anti[j] - anti[j];
    }
    return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.holo != b.holo) return a.holo < b.holo;
    return a.anti < b.anti;
}

Poly Poly::constant(int nvars, Radical c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int idx) {
    Poly p(nvars);
    Monomial m(nvars);
    m.holo[idx] = 1;
    p.add_term(m, Radical(1));
    return p;
}

Poly Poly::conj_variable(int nvars, int idx) {
    Poly p(nvars);
    Monomial m(nvars);
    m.anti[idx] = 1;
    p.add_term(m, Radical(1));
    return p;
}

Poly Poly::monomial(Monomial m, Radical c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0;
}

Radical Poly::constant_value() const {
    if (terms_.empty()) return Radical(0);
    if (!is_constant()) throw std::domain_error("Poly: not constant");
    return terms_.begin()->second;
}

bool Poly::is_real() const { return conj() == *this; }

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Radical& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::conj() const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) p.add_term(m.conj(), c.conj());
    return p;
}

Poly Poly::operator-() const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
    Poly p(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) p.add_term(m1 * m2, c1 * c2);
    return p;
}

Poly Poly::operator*(const Radical& c) const {
    Poly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.add_term(m, k * c);
    return p;
}

Poly Poly::derivative(int var, DiffKind kind) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = (kind == DiffKind::Holo) ? m.holo[var] : m.anti[var];
        if (e == 0) continue;
        Monomial d = m;
        if (kind == DiffKind::Holo)
            --d.holo[var];
        else
            --d.anti[var];
        p.add_term(d, c * Radical(e));
    }
    return p;
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(nvars_, Radical(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<Poly> Poly::exact_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (p.nvars() != d.nvars()) throw std::invalid_argument("exact_divide: nvars mismatch");
    Poly q(p.nvars());
    Poly r = p;
    const auto& [dm, dc] = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        if (!dm.divides(rm)) return std::nullopt;
        Monomial qm = dm.quotient_into(rm);
        Radical qc = rc / dc;
        q.add_term(qm, qc);
        r = r - Poly::monomial(qm, qc) * d;
    }
    return q;
}

Poly Poly::reduce_mod_sphere() const {
    int n = nvars_;
    if (n < 1) return *this;
    // 1 - sum_{j<n-1} z_j conj(z_j)
    Poly subst = Poly::constant(n, Radical(1));
    for (int j = 0; j + 1 < n; ++j) {
        Monomial m(n);
        m.holo[j] = 1;
        m.anti[j] = 1;
        subst.add_term(m, Radical(-1));
    }
    Poly out(n);
    std::vector<Poly> subst_pows{Poly::constant(n, Radical(1))};
    for (const auto& [m, c] : terms_) {
        int k = std::min(m.holo[n - 1], m.anti[n - 1]);
        if (k == 0) {
            out.add_term(m, c);
            continue;
        }
        while ((int)subst_pows.size() <= k) subst_pows.push_back(subst_pows.back() * subst);
        Monomial stripped = m;
        stripped.holo[n - 1] -= k;
        stripped.anti[n - 1] -= k;
        out = out + Poly::monomial(stripped, c) * subst_pows[k];
    }
    return out;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& pt) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int j = 0; j < nvars_; ++j) {
            for (int e = 0; e < m.holo[j]; ++e) t *= pt[j];
            for (int e = 0; e < m.anti[j]; ++e) t *= std::conj(pt[j]);
        }
        acc += t;
    }
    return acc;
}

Poly sphere_rho(int nvars) {
    Poly p = Poly::constant(nvars, Radical(-1));
    for (int j = 0; j < nvars; ++j) {
        Monomial m(nvars);
        m.holo[j] = 1;
        m.anti[j] = 1;
        p.add_term(m, Radical(1));
    }
    return p;
}

}  // namespace cra
