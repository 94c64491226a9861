#include "crahlfors/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace cra {

UniPoly UniPoly::from_coeffs(std::vector<Rational> v) {
    UniPoly p{std::move(v)};
    p.normalize();
    return p;
}

void UniPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational((long)i));
    d.normalize();
    return d;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
}

UniPoly UniPoly::remainder(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: remainder by zero");
    UniPoly r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational q = r.c.back() / d.c.back();
        int shift = r.degree() - d.degree();
        for (size_t i = 0; i < d.c.size(); ++i) r.c[i + shift] -= q * d.c[i];
        r.normalize();
    }
    return r;
}

UniPoly UniPoly::quotient(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: quotient by zero");
    UniPoly q, r = *this;
    if (is_zero() || degree() < d.degree()) return q;
    q.c.assign(degree() - d.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational qc = r.c.back() / d.c.back();
        int shift = r.degree() - d.degree();
        q.c[shift] = qc;
        for (size_t i = 0; i < d.c.size(); ++i) r.c[i + shift] -= qc * d.c[i];
        r.normalize();
    }
    q.normalize();
    return q;
}

void reduce_fraction(UniPoly& num, UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("reduce_fraction: zero denominator");
    if (num.is_zero()) {
        den = UniPoly::from_coeffs({Rational(1)});
        return;
    }
    UniPoly g = UniPoly::gcd(num, den);
    if (g.degree() > 0) {
        num = num.quotient(g);
        den = den.quotient(g);
    }
    Rational lead = den.c.back();
    for (auto& x : num.c) x /= lead;
    for (auto& x : den.c) x /= lead;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.remainder(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    // exact division
    UniPoly q, r = *this;
    q.c.assign(degree() - g.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rational qc = r.c.back() / g.c.back();
        int shift = r.degree() - g.degree();
        q.c[shift] = qc;
        for (size_t i = 0; i < g.c.size(); ++i) r.c[i + shift] -= qc * g.c[i];
        r.normalize();
    }
    q.normalize();
    return q;
}

static int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

static std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].remainder(chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

static int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : sign(p.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int sturm_count_open(const UniPoly& squarefree, const Rational& a, const Rational& b) {
    if (squarefree.is_zero()) throw std::domain_error("sturm: zero polynomial");
    auto chain = sturm_chain(squarefree);
    int count = sign_changes(chain, a) - sign_changes(chain, b);
    // Sturm counts roots in (a, b]; a squarefree input has simple roots, and
    // we subtract a root exactly at b.
    if (squarefree.eval(b) == 0) --count;
    return count;
}

SturmResult sturm_roots_unit_interval(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_roots_unit_interval: zero polynomial");
    SturmResult res;
    UniPoly sf = p.squarefree_part();
    res.root_at_zero = (p.eval(Rational(0)) == 0);
    res.root_at_one = (p.eval(Rational(1)) == 0);

    // Bisect until each subinterval of (0,1) holds exactly one root.
    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> work{{Rational(0), Rational(1),
                           sturm_count_open(sf, Rational(0), Rational(1))}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            res.interior_roots.push_back({s.a, s.b});
            continue;
        }
        Rational mid = (s.a + s.b) / 2;
        int left = sturm_count_open(sf, s.a, mid);
        int at_mid = (sf.eval(mid) == 0) ? 1 : 0;
        int right = s.count - left - at_mid;
        if (at_mid) {
            // shrink a tiny isolating interval around the midpoint
            Rational h = (s.b - s.a) / 1024;
            Rational lo = mid - h, hi = mid + h;
            while (sturm_count_open(sf, lo, hi) > 1) {
                h /= 2;
                lo = mid - h;
                hi = mid + h;
            }
            res.interior_roots.push_back({lo, hi});
            left = sturm_count_open(sf, s.a, lo);
            right = s.count - 1 - left;
            if (left > 0) work.push_back({s.a, lo, left});
            if (right > 0) work.push_back({hi, s.b, right});
        } else {
            work.push_back({s.a, mid, left});
            work.push_back({mid, s.b, right});
        }
    }
    std::sort(res.interior_roots.begin(), res.interior_roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return res;
}

}  // namespace cra
