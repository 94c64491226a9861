#include <doctest.h>

#include "crahlfors/catalog.hpp"
#include "crahlfors/parser.hpp"
#include "crahlfors/sphere_map.hpp"

using namespace cra;

namespace {

SphereMap from_strings(int n, std::initializer_list<const char*> comps) {
    SphereMap F;
    F.source_n = n;
    F.target_N = (int)comps.size() - 1;
    for (const char* c : comps) F.components.push_back(parse_expression(c, n + 1));
    return F;
}

BallAutomorphism center(std::initializer_list<Rational> a) {
    BallAutomorphism phi;
    for (const Rational& q : a) phi.center.push_back(Gaussian(q));
    return phi;
}

}  // namespace

TEST_CASE("hermitian squared norm") {
    SphereMap id = from_strings(1, {"z", "w"});
    Poly z = Poly::variable(2, 0), w = Poly::variable(2, 1);
    CHECK(eq_identically(hermitian_norm_sq(id), RatFun(z * z.conj() + w * w.conj())));

    SphereMap row3 = from_strings(1, {"z^2", "sqrt(2)*z*w", "w^2"});
    Poly norm2 = z * z.conj() + w * w.conj();
    CHECK(eq_identically(hermitian_norm_sq(row3), RatFun(norm2 * norm2)));
}

TEST_CASE("exact quotient") {
    SphereMap id = from_strings(1, {"z", "w"});
    CHECK(eq_identically(std::get<RatFun>(quotient_Q(id)),
                         RatFun::constant(2, Radical(1))));

    CatalogEntry ft = catalog_entry("dangelo-family",
                                    {{"c", Rational(4, 5)}, {"s", Rational(3, 5)}});
    Poly w = Poly::variable(2, 1);
    RatFun expect(Poly::constant(2, Radical(1)) +
                  w * w.conj() * Radical(Rational(9, 25)));
    CHECK(eq_identically(std::get<RatFun>(quotient_Q(ft.map)), expect));

    SphereMap whitney = from_strings(1, {"z", "z*w", "w^2"});
    RatFun qw(Poly::constant(2, Radical(1)) + w * w.conj());
    CHECK(eq_identically(std::get<RatFun>(quotient_Q(whitney)), qw));
}

TEST_CASE("sphere map verification") {
    CHECK(is_sphere_map(catalog_entry("table1/row1").map));
    CHECK(!is_sphere_map(from_strings(1, {"z^2", "w^2"})));
    CHECK(!is_sphere_map(from_strings(1, {"2*z", "w"})));
    auto q = quotient_Q(from_strings(1, {"z^2", "w^2"}));
    auto* err = std::get_if<QuotientError>(&q);
    REQUIRE(err);
    CHECK(err->kind == QuotientError::Kind::NotASphereMap);
    CHECK(!err->remainder_witness.is_zero());
}

TEST_CASE("target automorphism composition") {
    SphereMap id = from_strings(1, {"z", "w"});
    // a = 0: F unchanged
    SphereMap same = compose_target_automorphism(id, center({Rational(0), Rational(0)}));
    for (int j = 0; j < 2; ++j) CHECK(eq_identically(same.components[j], id.components[j]));

    // a = (1/2, 0): Q = (3/4)/|1 - z/2|^2
    SphereMap moved = compose_target_automorphism(id, center({Rational(1, 2), Rational(0)}));
    RatFun q = std::get<RatFun>(quotient_Q(moved));
    Poly z = Poly::variable(2, 0);
    Poly d = Poly::constant(2, Radical(1)) - z * Radical(Rational(1, 2));
    RatFun expect(Poly::constant(2, Radical(Rational(3, 4))), d * d.conj());
    CHECK(eq_on_sphere(q, expect));

    // Whitney composed with a = (1/3, 1/3, 0) stays a sphere map
    SphereMap whitney = from_strings(1, {"z", "z*w", "w^2"});
    SphereMap wmoved = compose_target_automorphism(
        whitney, center({Rational(1, 3), Rational(1, 3), Rational(0)}));
    CHECK(is_sphere_map(wmoved));
}

TEST_CASE("source automorphism composition") {
    SphereMap row3 = catalog_entry("table1/row3").map;
    SphereMap same = precompose_source_automorphism(row3, center({Rational(0), Rational(0)}));
    for (size_t j = 0; j < row3.components.size(); ++j)
        CHECK(eq_on_sphere(same.components[j], row3.components[j]));

    SphereMap moved =
        precompose_source_automorphism(row3, center({Rational(1, 4), Rational(-1, 5)}));
    CHECK(is_sphere_map(moved));
}

TEST_CASE("conformal factor identity") {
    // Q_{phi o F} * |1 - <F, a>|^2 = (1 - |a|^2) * Q_F mod ideal
    std::vector<std::vector<Gaussian>> centers{
        {Gaussian(Rational(1, 3)), Gaussian(Rational(0)), Gaussian(Rational(1, 4))},
        {Gaussian(Rational(0), Rational(1, 5)), Gaussian(Rational(1, 2)),
         Gaussian(Rational(0))},
        {Gaussian(Rational(-1, 4)), Gaussian(Rational(1, 6), Rational(1, 6)),
         Gaussian(Rational(1, 3))},
    };
    SphereMap F = from_strings(1, {"z", "z*w", "w^2"});
    RatFun QF = std::get<RatFun>(quotient_Q(F));
    for (const auto& a : centers) {
        BallAutomorphism phi;
        phi.center = a;
        SphereMap G = compose_target_automorphism(F, phi);
        RatFun QG = std::get<RatFun>(quotient_Q(G));
        RatFun pairing = one_minus_pairing(F.components, a);
        RatFun lhs = QG * pairing * pairing.conj();
        RatFun rhs = QF * RatFun::constant(2, Radical(1 - phi.center_norm_sq()));
        CHECK(eq_on_sphere(lhs, rhs));
    }
}

TEST_CASE("parametric rows accept every pythagorean pair") {
    for (auto [num, den] : std::vector<std::pair<long, long>>{{3, 5}, {5, 13}, {8, 17}}) {
        std::map<std::string, Rational> p{{"t", Rational(num, den)}};
        CHECK(is_sphere_map(catalog_entry("table1/row14", p).map));
        CHECK(is_sphere_map(catalog_entry("table1/row15", p).map));
    }
    // radical parameter: t = 1/2, sqrt(1 - t^2) = sqrt(3)/2
    std::map<std::string, Rational> half{{"t", Rational(1, 2)}};
    CHECK(is_sphere_map(catalog_entry("table1/row14", half).map));
    CHECK(is_sphere_map(catalog_entry("table1/row15", half).map));
}

TEST_CASE("catalog construction") {
    CatalogEntry r5 = catalog_entry("table1/row5");
    REQUIRE(r5.map.components.size() == 4);
    CHECK(eq_identically(r5.map.components[0], parse_expression("z^3", 2)));
    CHECK(eq_identically(r5.map.components[1], parse_expression("sqrt(3)*z^2*w", 2)));

    CatalogEntry r14 = catalog_entry("table1/row14", {{"t", Rational(3, 5)}});
    CHECK(eq_identically(r14.map.components[1], parse_expression("3/5*w", 2)));
    CHECK(eq_identically(r14.map.components[2], parse_expression("4/5*z*w", 2)));

    CatalogEntry wh = catalog_entry("whitney", {{"n", Rational(2)}});
    REQUIRE(wh.map.components.size() == 5);
    CHECK(eq_identically(wh.map.components[4], RatFun(Poly::variable(3, 2).pow(2))));

    CHECK_THROWS_AS(catalog_entry("table1/row17"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_entry("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_entry("table1/row14", {{"t", Rational(3, 2)}}),
                    std::invalid_argument);
}

TEST_CASE("catalog polynomial maps have rational-coefficient quotients") {
    for (int k = 1; k <= 16; ++k) {
        CatalogEntry e = catalog_entry("table1/row" + std::to_string(k));
        RatFun q = std::get<RatFun>(quotient_Q(e.map));
        CHECK(q.den().is_constant());
        for (const auto& [m, c] : q.num().terms()) CHECK(c.is_rational());
    }
}
