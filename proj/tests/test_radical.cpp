#include <cmath>
#include <random>

#include <doctest.h>

#include "crahlfors/radical.hpp"
#include "test_util.hpp"

using namespace cra;

TEST_CASE("gaussian rational arithmetic") {
    Gaussian i(Rational(0), Rational(1));
    CHECK(i * i == Gaussian(Rational(-1)));
    Gaussian a(Rational(1, 2), Rational(-1, 3));
    CHECK(a * a.inverse() == Gaussian(Rational(1)));
    CHECK(a.conj().conj() == a);
    CHECK((a + a.conj()).is_real());
}

TEST_CASE("squarefree split") {
    Integer s, f;
    squarefree_split(Integer(12), s, f);
    CHECK(s == 2);
    CHECK(f == 3);
    squarefree_split(Integer(1), s, f);
    CHECK(s == 1);
    CHECK(f == 1);
    squarefree_split(Integer(49), s, f);
    CHECK(s == 7);
    CHECK(f == 1);
}

TEST_CASE("radical products of surds") {
    Radical r2 = Radical::sqrt_of(Rational(2));
    Radical r3 = Radical::sqrt_of(Rational(3));
    CHECK(r2 * r2 == Radical(Rational(2)));
    CHECK(r2 * r3 == Radical::sqrt_of(Rational(6)));

    // (sqrt(3)/9)^2 = 1/27, with a floating-point cross-check
    Radical x = r3 * Radical(Rational(1, 9));
    Radical sq = x * x;
    CHECK(sq == Radical(Rational(1, 27)));
    double numeric = (std::sqrt(3.0) / 9.0) * (std::sqrt(3.0) / 9.0);
    CHECK(std::abs(sq.to_complex().real() - numeric) < 1e-12);
}

TEST_CASE("radical inverse and conjugation involution") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (int k = 0; k < 40; ++k) {
        Radical r = testutil::random_radical(rng);
        CHECK(r.conj().conj() == r);
        if (!r.is_zero()) {
            CHECK(r * r.inverse() == Radical(1));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("radical keys stay squarefree under multiplication") {
    Radical r8 = Radical::sqrt_of(Rational(8));  // = 2 sqrt(2)
    CHECK(r8 == Radical::sqrt_of(Rational(2)) * Radical(Rational(2)));
    Radical r12 = Radical::sqrt_of(Rational(12));
    for (const auto& [m, c] : r12.terms()) {
        Integer s, f;
        squarefree_split(Integer((long)m), s, f);
        CHECK(s == 1);
    }
}
