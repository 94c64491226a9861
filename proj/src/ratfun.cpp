#include "crahlfors/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace cra {

RatFun::RatFun(Poly num, Poly den, DenCert cert)
    : num_(std::move(num)), den_(std::move(den)), cert_(cert) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("RatFun: nvars mismatch");
    if (num_.is_zero()) den_ = Poly::constant(den_.nvars(), Radical(1));
    // Fold constant denominators into the numerator.
    if (den_.is_constant()) {
        Radical c = den_.constant_value();
        if (!(c == Radical(1))) {
            num_ = num_ * c.inverse();
            den_ = Poly::constant(den_.nvars(), Radical(1));
        }
        cert_ = DenCert::Checked;
    }
}

RatFun RatFun::conj() const { return RatFun(num_.conj(), den_.conj(), cert_); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_, cert_); }

static DenCert join(DenCert a, DenCert b) {
    return (a == DenCert::Checked && b == DenCert::Checked) ? DenCert::Checked
                                                            : DenCert::Asserted;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_, join(cert_, o.cert_));
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_, join(cert_, o.cert_));
}

RatFun RatFun::operator-(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ - o.num_, den_, join(cert_, o.cert_));
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_, join(cert_, o.cert_));
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_, join(cert_, o.cert_));
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.num_.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_, DenCert::Asserted);
}

RatFun RatFun::derivative(int var, DiffKind kind) const {
    Poly dn = num_.derivative(var, kind);
    Poly dd = den_.derivative(var, kind);
    if (dd.is_zero()) return RatFun(dn, den_, cert_);
    return RatFun(dn * den_ - num_ * dd, den_ * den_, cert_);
}

static Monomial content_monomial(const Poly& p) {
    Monomial c(p.nvars());
    bool first = true;
    for (const auto& [m, coeff] : p.terms()) {
        if (first) {
            c = m;
            first = false;
            continue;
        }
        for (int j = 0; j < p.nvars(); ++j) {
            c.holo[j] = std::min(c.holo[j], m.holo[j]);
            c.anti[j] = std::min(c.anti[j], m.anti[j]);
        }
    }
    return c;
}

RatFun cancel_monomial_content(const RatFun& f) {
    if (f.num().is_zero()) return f;
    Monomial cn = content_monomial(f.num());
    Monomial cd = content_monomial(f.den());
    Monomial common(f.nvars());
    int total = 0;
    for (int j = 0; j < f.nvars(); ++j) {
        common.holo[j] = std::min(cn.holo[j], cd.holo[j]);
        common.anti[j] = std::min(cn.anti[j], cd.anti[j]);
        total += common.holo[j] + common.anti[j];
    }
    if (total == 0) return f;
    Poly div = Poly::monomial(common, Radical(1));
    auto n = Poly::exact_divide(f.num(), div);
    auto d = Poly::exact_divide(f.den(), div);
    return RatFun(std::move(*n), std::move(*d), f.cert());
}

RatFun RatFun::reduced_on_sphere() const {
    Poly n = num_.reduce_mod_sphere();
    Poly d = den_.reduce_mod_sphere();
    if (d.is_zero())
        throw std::domain_error("RatFun: denominator vanishes identically on sphere");
    return RatFun(n, d, cert_);
}

std::complex<double> RatFun::eval(const std::vector<std::complex<double>>& pt) const {
    return num_.eval(pt) / den_.eval(pt);
}

bool eq_on_sphere(const RatFun& f, const RatFun& g) {
    Poly diff = f.num() * g.den() - g.num() * f.den();
    return diff.reduce_mod_sphere().is_zero();
}

Poly poly_matrix_det(const PolyMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_matrix_det: not square");
    if (n == 0) throw std::invalid_argument("poly_matrix_det: empty");
    if (n == 1) return m[0][0];
    int nv = m[0][0].nvars();
    Poly det(nv);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_matrix_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

RatFun ratfun_matrix_det(const RatMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    int nv = m[0][0].nvars();
    RatFun det = RatFun::zero(nv);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        RatMatrix minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<RatFun> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        RatFun term = m[0][j] * ratfun_matrix_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

RatMatrix ratfun_matrix_inverse(const RatMatrix& m) {
    size_t n = m.size();
    RatFun det = ratfun_matrix_det(m);
    if (det.is_zero()) throw std::domain_error("ratfun_matrix_inverse: singular matrix");
    int nv = m[0][0].nvars();
    RatMatrix inv(n, std::vector<RatFun>(n, RatFun::zero(nv)));
    if (n == 1) {
        inv[0][0] = RatFun::constant(nv, Radical(1)) / det;
        return inv;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            RatMatrix minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<RatFun> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            RatFun cof = ratfun_matrix_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[j][i] = cof / det;  // adjugate transpose
        }
    }
    return inv;
}

}  // namespace cra
