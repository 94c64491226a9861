#include "crahlfors/catalog.hpp"

#include <stdexcept>

#include "crahlfors/parser.hpp"

namespace cra {

Poly s_poly(const std::vector<Rational>& coeffs) {
    Poly p(2);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Monomial m(2);
        m.holo[0] = m.anti[0] = (int)k;
        p.add_term(m, Radical(coeffs[k]));
    }
    return p;
}

namespace {

using Coeffs = std::vector<Rational>;

struct Table1Row {
    std::vector<std::string> components;
    Coeffs trace_num;  // trace = num(s) / (scale * base(s)^2)
    Coeffs trace_base;
    Rational trace_scale{1};
    Coeffs a1_num;  // a1 = conj(z)conj(w) * num(s) / base(s)^3; empty num = 0
    Coeffs a1_base;
    UmbilicKind umbilic;
};

Rational param_or(const std::map<std::string, Rational>& params, const std::string& key,
                  const Rational& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, Rational>& params, const std::string& key,
              int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    Rational v = it->second;
    if (v.get_den() != 1 || v < 1)
        throw std::invalid_argument("catalog: parameter '" + key + "' must be a positive integer");
    return (int)v.get_num().get_si();
}

Table1Row table1_row(int k, const Rational& t) {
    Rational t2 = t * t, t4 = t2 * t2;
    switch (k) {
        case 1:
            return {{"z", "w", "0", "0"}, {}, {1}, 1, {}, {}, UmbilicKind::WholeSphere};
        case 2:
            return {{"z", "z*w", "w^2", "0"},
                    {0, 1}, {-2, 1}, 1,
                    {-4}, {-2, 1}, UmbilicKind::CircleS2};
        case 3:
            return {{"z^2", "sqrt(2)*z*w", "w^2", "0"},
                    {Rational(1, 2)}, {1}, 1,
                    {}, {}, UmbilicKind::Empty};
        case 4:
            return {{"z^3", "sqrt(3)*z*w", "w^3", "0"},
                    {0, 3, -3}, {1, -1, 1}, 1,
                    {4, -6, -6, 4}, {1, -1, 1}, UmbilicKind::UnionS1S2};
        case 5:
            return {{"z^3", "sqrt(3)*z^2*w", "sqrt(3)*z*w^2", "w^3"},
                    {1}, {1}, 1,
                    {}, {}, UmbilicKind::Empty};
        case 6:
            return {{"z^3", "z^2*w", "z*w", "w"},
                    {1, 3, -3, -1}, {1, 1, 1}, 1,
                    {0, -18, -18}, {1, 1, 1}, UmbilicKind::CircleS1};
        case 7:
            return {{"z^2", "z^2*w", "z*w^2", "w"},
                    {2, -5, 4, 1}, {1, 2, -1}, 1,
                    {16, -24, 0, -8}, {-1, -2, 1}, UmbilicKind::Empty};
        case 8:
            return {{"z^2", "sqrt(2)*z^2*w", "sqrt(2)*z*w^2", "w^2"},
                    {3, -7, 7}, {1, 1, -1}, 2,
                    {8, -18, 6, -4}, {-1, -1, 1}, UmbilicKind::Empty};
        case 9:
            return {{"z^3", "sqrt(3)*z^2*w", "sqrt(2)*z*w^2", "w^2"},
                    {6, -6, 9}, {2, 2, -1}, 1,
                    {48, -72, 0, -12}, {-2, -2, 1}, UmbilicKind::Empty};
        case 10:
            return {{"z", "z^2*w", "sqrt(2)*z*w^2", "w^3"},
                    {3, -3, 2}, {3, -2}, 1,
                    {-12}, {-3, 2}, UmbilicKind::Empty};
        case 11:
            return {{"z^4", "z^3*w", "sqrt(3)*z*w", "w^3"},
                    {0, 27, 0, -36, 12, -3}, {3, -3, 3, 1}, 1,
                    {108, 0, -540, 144, -108, 144, -36}, {3, -3, 3, 1},
                    UmbilicKind::UnionS1S2};
        case 12:
            return {{"z^4", "sqrt(3)*z^2*w", "z*w^3", "w"},
                    {3, -12, 36, 0, -27}, {1, 3, -3, 3}, 1,
                    {-36, 144, -108, 144, -540, 0, 108}, {1, 3, -3, 3},
                    UmbilicKind::CircleS1};
        case 13:
            return {{"z^5", "sqrt(5)*z^3*w", "sqrt(5)*z*w^2", "w^5"},
                    {0, 9, -27, 35, -25, 15, -7, 1}, {1, -2, 4, -3, 1}, 1,
                    {12, -54, 48, 84, -228, 234, -128, 36, -12, 4}, {1, -2, 4, -3, 1},
                    UmbilicKind::CircleS2};
        case 14:
            return {{"z", "t*w", "sqrt(1-t^2)*z*w", "sqrt(1-t^2)*w^2"},
                    {0, 1 - t2}, {t2 - 2, 1 - t2}, 1,
                    {2 * (t4 - 3 * t2 + 2)}, {2 - t2, t2 - 1}, UmbilicKind::CircleS2};
        case 15:
            return {{"z^2", "sqrt(1+t^2)*z*w", "t*w^2", "sqrt(1-t^2)*w"},
                    {t2 + 1, t2 - 1}, {t2 + 1, 1 - t2}, 1,
                    {4 * (1 - t4)}, {-1 - t2, t2 - 1}, UmbilicKind::Empty};
        case 16:
            return {{"z^2", "sqrt(2)*z*w", "z*w^2", "w^3"},
                    {3, 6, -7}, {3, -2, 1}, 1,
                    {48, -72, 0, 8}, {3, -2, 1}, UmbilicKind::Empty};
        default:
            throw std::invalid_argument("catalog: table1 row out of range");
    }
}

Poly conj_zw() {
    Monomial m(2);
    m.anti[0] = m.anti[1] = 1;
    return Poly::monomial(m, Radical(1));
}

CatalogEntry make_table1(int k, const std::map<std::string, Rational>& params) {
    Rational t = param_or(params, "t", Rational(4, 5));
    if (t * t > 1) throw std::invalid_argument("catalog: need t^2 <= 1");
    Table1Row row = table1_row(k, t);
    CatalogEntry e;
    e.id = "table1/row" + std::to_string(k);
    e.map.name = e.id;
    e.map.source_n = 1;
    e.map.target_N = 3;
    std::map<std::string, Rational> p{{"t", t}};
    for (const auto& c : row.components)
        e.map.components.push_back(parse_expression(c, 2, p));
    if (k == 14 || k == 15) e.map.params = p;
    Poly base2 = s_poly(row.trace_base);
    e.expected_trace = RatFun(s_poly(row.trace_num),
                              base2 * base2 * Radical(row.trace_scale));
    if (row.a1_num.empty()) {
        e.expected_a1 = RatFun::zero(2);
    } else {
        Poly b = s_poly(row.a1_base);
        e.expected_a1 = RatFun(conj_zw() * s_poly(row.a1_num), b * b * b);
    }
    e.expected_umbilic = row.umbilic;
    return e;
}

CatalogEntry make_faran() {
    CatalogEntry e;
    e.id = "faran-3-9";
    e.map.name = e.id;
    e.map.source_n = 1;
    e.map.target_N = 4;
    for (const char* c : {"sqrt(3)/9*(z^2 + 4*z - 2)", "sqrt(6)/9*(z^2 + z + 1)",
                          "sqrt(3)/12*w*(3*z + 5)", "sqrt(6)/6*w^2",
                          "sqrt(13)/12*w*(z - 1)"})
        e.map.components.push_back(parse_expression(c, 2));
    RatFun z(Poly::variable(2, 0)), w(Poly::variable(2, 1));
    RatFun zb = z.conj(), wb = w.conj();
    RatFun re_z = z + zb, s = z * zb;
    auto k = [](long v) { return RatFun::constant(2, Radical(Rational(v))); };
    RatFun abase = k(17) + re_z * k(4) - s;  // = 18 * Q_F on the sphere
    RatFun tnum = s * k(30) + re_z * k(12) + k(18);
    e.expected_trace = tnum / (abase * abase);
    RatFun anum = wb * (k(1) + zb * k(4) + zb * zb) * k(264);
    e.expected_a1 = anum / (abase * abase * abase);
    return e;
}

CatalogEntry make_cubic() {
    CatalogEntry e;
    e.id = "cubic-dangelo-1991";
    e.map.name = e.id;
    e.map.source_n = 1;
    e.map.target_N = 3;
    for (const char* c : {"(z^2 - z^2*w)/sqrt(2)", "(z*w - z*w^2)/sqrt(2)",
                          "(z + z*w)/sqrt(2)", "w^2"})
        e.map.components.push_back(parse_expression(c, 2));
    return e;
}

// c and s with c^2 + s^2 = 1: rational pair, or s rational with c = sqrt(1-s^2).
void cos_sin(const std::map<std::string, Rational>& params, Radical& c, Radical& s) {
    Rational sv = param_or(params, "s", Rational(3, 5));
    s = Radical(sv);
    if (auto it = params.find("c"); it != params.end()) {
        if (it->second * it->second + sv * sv != 1)
            throw std::invalid_argument("catalog: need c^2 + s^2 = 1");
        c = Radical(it->second);
    } else if (params.count("s")) {
        c = Radical::sqrt_of(1 - sv * sv);
    } else {
        c = Radical(Rational(4, 5));
    }
}

CatalogEntry make_dangelo(const std::map<std::string, Rational>& params) {
    int n = int_param(params, "n", 1);
    Radical c, s;
    cos_sin(params, c, s);
    int m = n + 1;
    CatalogEntry e;
    e.id = "dangelo-family";
    e.map.name = e.id;
    e.map.source_n = n;
    e.map.target_N = 2 * n + 1;
    e.map.params = params;
    Poly w = Poly::variable(m, m - 1);
    for (int j = 0; j < n; ++j) e.map.components.push_back(RatFun(Poly::variable(m, j)));
    e.map.components.push_back(RatFun(w * c));
    for (int j = 0; j < n; ++j)
        e.map.components.push_back(RatFun(Poly::variable(m, j) * w * s));
    e.map.components.push_back(RatFun(w * w * s));
    // trace = s^2 (1 - w conj(w)) / (1 + s^2 w conj(w))^2
    Radical s2 = s * s;
    if (!s2.is_rational())
        throw std::logic_error("catalog: s^2 should be rational");
    Poly ww = w * w.conj();
    Poly one = Poly::constant(m, Radical(1));
    Poly den = one + ww * s2;
    e.expected_trace = RatFun((one - ww) * s2, den * den);
    return e;
}

CatalogEntry make_whitney(const std::map<std::string, Rational>& params) {
    int n = int_param(params, "n", 1);
    int m = n + 1;
    CatalogEntry e;
    e.id = "whitney";
    e.map.name = e.id;
    e.map.source_n = n;
    e.map.target_N = 2 * n;
    e.map.params = params;
    Poly w = Poly::variable(m, m - 1);
    for (int j = 0; j < n; ++j) e.map.components.push_back(RatFun(Poly::variable(m, j)));
    for (int j = 0; j < n; ++j)
        e.map.components.push_back(RatFun(Poly::variable(m, j) * w));
    e.map.components.push_back(RatFun(w * w));
    return e;
}

CatalogEntry make_webster(const std::map<std::string, Rational>& params) {
    int n = int_param(params, "n", 2);  // CR dimension of the source
    int m = n + 1;                      // ambient variables
    CatalogEntry e;
    e.id = "webster-quadric";
    e.map.name = e.id;
    e.map.source_n = n;
    e.map.target_N = m;
    e.map.params = params;
    Poly b(m);
    Poly rho(m);
    for (int j = 0; j < m; ++j) {
        Poly zj = Poly::variable(m, j);
        b = b + zj * zj * Radical(Rational(1, 2));
        rho = rho + zj * zj.conj();
    }
    rho = rho + b + b.conj() - Poly::constant(m, Radical(1));
    e.map.source_rho = rho;
    Poly den = Poly::constant(m, Radical(1)) - b;
    for (int j = 0; j < m; ++j)
        e.map.components.push_back(RatFun(Poly::variable(m, j), den, DenCert::Asserted));
    e.map.components.push_back(RatFun(b, den, DenCert::Asserted));
    return e;
}

void enumerate_exponents(int vars, int degree, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == vars - 1) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exponents(vars, degree - e, cur, out);
        cur.pop_back();
    }
}

CatalogEntry make_homogeneous(const std::map<std::string, Rational>& params) {
    int n = int_param(params, "n", 1);
    int d = int_param(params, "d", 2);
    int m = n + 1;
    CatalogEntry e;
    e.id = "homogeneous";
    e.map.name = e.id;
    e.map.source_n = n;
    e.map.params = params;
    std::vector<std::vector<int>> exps;
    std::vector<int> cur;
    enumerate_exponents(m, d, cur, exps);
    for (const auto& a : exps) {
        Rational multinomial(1);
        int used = 0;
        for (int aj : a)
            for (int i = 1; i <= aj; ++i) multinomial = multinomial * (++used) / i;
        Monomial mono(m);
        mono.holo = a;
        e.map.components.push_back(RatFun(Poly::monomial(mono, Radical::sqrt_of(multinomial))));
    }
    e.map.target_N = (int)exps.size() - 1;
    return e;
}

}  // namespace

CatalogEntry catalog_entry(const std::string& id,
                           const std::map<std::string, Rational>& params) {
    if (id.rfind("table1/row", 0) == 0) {
        int k;
        try {
            k = std::stoi(id.substr(10));
        } catch (...) {
            throw std::invalid_argument("catalog: unknown id " + id);
        }
        if (k < 1 || k > 16) throw std::invalid_argument("catalog: unknown id " + id);
        return make_table1(k, params);
    }
    if (id == "faran-3-9") return make_faran();
    if (id == "cubic-dangelo-1991") return make_cubic();
    if (id == "dangelo-family") return make_dangelo(params);
    if (id == "whitney") return make_whitney(params);
    if (id == "webster-quadric") return make_webster(params);
    if (id == "homogeneous") return make_homogeneous(params);
    throw std::invalid_argument("catalog: unknown id " + id);
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (int k = 1; k <= 16; ++k) ids.push_back("table1/row" + std::to_string(k));
    ids.insert(ids.end(), {"faran-3-9", "cubic-dangelo-1991", "dangelo-family",
                           "whitney", "webster-quadric", "homogeneous"});
    return ids;
}

}  // namespace cra
