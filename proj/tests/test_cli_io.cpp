#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "crahlfors/catalog.hpp"
#include "crahlfors/parser.hpp"
#include "crahlfors/printer.hpp"
#include "crahlfors/report.hpp"

using namespace cra;

TEST_CASE("expression grammar") {
    RatFun a = parse_expression("sqrt(2)*z*w", 2);
    Poly z = Poly::variable(2, 0), w = Poly::variable(2, 1);
    CHECK(eq_identically(a, RatFun(z * w * Radical::sqrt_of(Rational(2)))));

    RatFun b = parse_expression("(z^2 - z^2*w)/sqrt(2)", 2);
    Radical half_r2 = Radical::sqrt_of(Rational(2)) * Radical(Rational(1, 2));
    CHECK(eq_identically(b, RatFun((z * z - z * z * w) * half_r2)));

    RatFun c = parse_expression("z/(1 - w/2)", 2);
    CHECK(eq_identically(c, RatFun(z, Poly::constant(2, Radical(1)) -
                                          w * Radical(Rational(1, 2)))));
}

TEST_CASE("precedence and unary minus") {
    // ^ binds tighter than unary minus: -z^2 = -(z^2)
    Poly z = Poly::variable(2, 0), w = Poly::variable(2, 1);
    CHECK(eq_identically(parse_expression("-z^2", 2), RatFun(-(z * z))));
    CHECK(eq_identically(parse_expression("1 - 2*z", 2),
                         RatFun(Poly::constant(2, Radical(1)) - z * Radical(2))));
    CHECK(eq_identically(parse_expression("z + w*w", 2), RatFun(z + w * w)));
    CHECK(eq_identically(parse_expression("i*i", 2),
                         RatFun(Poly::constant(2, Radical(Rational(-1))))));
    // parameters
    CHECK(eq_identically(parse_expression("t*z", 2, {{"t", Rational(3, 5)}}),
                         RatFun(z * Radical(Rational(3, 5)))));
    // z1/z2 aliases
    CHECK(eq_identically(parse_expression("z1*z2", 2), RatFun(z * w)));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_expression("z +* w", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("sqrt(-2)", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("z/(w - w)", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("q*z", 2), ParseError);  // unknown name
    try {
        parse_expression("z + ", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position >= 3);
    }
}

TEST_CASE("canonical printing round-trips catalog data") {
    for (const char* id : {"table1/row4", "table1/row13", "faran-3-9"}) {
        CatalogEntry e = catalog_entry(id);
        for (const RatFun& comp : e.map.components) {
            RatFun back = parse_expression(to_string(comp), 2);
            CHECK(eq_identically(back, comp));
        }
    }
}

TEST_CASE("map documents") {
    std::istringstream in(
        "# comment line\n"
        "name demo\n"
        "source_n 1\n"
        "param t 3/5\n"
        "component z\n"
        "component t*w\n"
        "component sqrt(1-t^2)*z*w # trailing comment\n"
        "component sqrt(1-t^2)*w^2\n");
    MapDocument doc = load_map_document(in);
    CHECK(doc.name == "demo");
    CHECK(doc.source_n == 1);
    CHECK(doc.params.at("t") == Rational(3, 5));
    REQUIRE(doc.components.size() == 4);
    SphereMap F = doc.to_map();
    CHECK(is_sphere_map(F));

    std::ifstream file(std::string(TEST_DATA_DIR) + "/whitney.map");
    REQUIRE(file.good());
    SphereMap W = load_map_document(file).to_map();
    CHECK(is_sphere_map(W));
    CHECK(W.name == "whitney-doc");
}

TEST_CASE("reports are deterministic and schema-complete") {
    CatalogEntry e = catalog_entry("table1/row2");
    Report r1 = build_report(e.id, e.map, 42, 500);
    Report r2 = build_report(e.id, e.map, 42, 500);
    std::string j1 = report_json(r1), j2 = report_json(r2);
    CHECK(j1 == j2);  // byte-identical for identical seeds

    auto parsed = nlohmann::json::parse(j1);
    for (const char* key :
         {"map", "Q", "trace", "tracefree", "a1", "umbilic", "obstructions", "checks"})
        CHECK(parsed.contains(key));
    CHECK(parsed["umbilic"].contains("kind"));
    CHECK(parsed["umbilic"].contains("roots"));
    CHECK(parsed["obstructions"].contains("moduli_only"));
    CHECK(parsed["checks"].contains("positivity_min"));
    CHECK(parsed["map"] == "table1/row2");
    CHECK(parsed["trace"] == "(s)/(s^2 - 4*s + 4)");
    CHECK(parsed["umbilic"]["kind"] == "circle-S2");

    // different seed changes only the numeric checks, not the symbolic fields
    Report r3 = build_report(e.id, e.map, 43, 500);
    auto parsed3 = nlohmann::json::parse(report_json(r3));
    CHECK(parsed3["Q"] == parsed["Q"]);
    CHECK(parsed3["trace"] == parsed["trace"]);
}

TEST_CASE("latex report mentions the four table columns") {
    CatalogEntry e = catalog_entry("table1/row2");
    Report r = build_report(e.id, e.map, 42, 200);
    std::string tex = report_latex(r);
    CHECK(tex.find("tabular") != std::string::npos);
    CHECK(tex.find("trace") != std::string::npos);
    CHECK(tex.find("A_1") != std::string::npos);
    CHECK(tex.find("umbilic") != std::string::npos);
}

TEST_CASE("non-sphere sources get the restricted report") {
    CatalogEntry e = catalog_entry("webster-quadric", {{"n", Rational(2)}});
    Report r = build_report(e.id, e.map, 42, 200);
    CHECK(!r.trace.has_value());
    CHECK(!r.a1.has_value());
    auto parsed = nlohmann::json::parse(report_json(r));
    CHECK(parsed["trace"].is_null());
    CHECK(parsed["umbilic"]["kind"] == "not-computed");
    // tracefree of the Webster map is identically zero
    for (const auto& row : parsed["tracefree"])
        for (const auto& entry : row) CHECK(entry == "0");
}
