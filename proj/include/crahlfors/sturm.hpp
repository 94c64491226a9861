#pragma once

#include <utility>
#include <vector>

#include "crahlfors/radical.hpp"

namespace cra {

// Dense univariate polynomial over Q, low-degree coefficient first.
struct UniPoly {
    std::vector<Rational> c;

    static UniPoly from_coeffs(std::vector<Rational> v);
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly remainder(const UniPoly& d) const;
    UniPoly quotient(const UniPoly& d) const;  // exact division (remainder discarded)
    static UniPoly gcd(UniPoly a, UniPoly b);
    UniPoly squarefree_part() const;
    void normalize();  // strip leading zeros
};

struct SturmResult {
    // Disjoint isolating rational intervals for the distinct real roots in
    // the open interval (0,1); each interval contains exactly one root.
    std::vector<std::pair<Rational, Rational>> interior_roots;
    bool root_at_zero = false;
    bool root_at_one = false;
    int count_in_closed_unit_interval() const {
        return (int)interior_roots.size() + (root_at_zero ? 1 : 0) + (root_at_one ? 1 : 0);
    }
};

// Exact isolation of the distinct real roots of p in [0,1] via Sturm chains.
SturmResult sturm_roots_unit_interval(const UniPoly& p);

// Distinct real roots of p in the open interval (a, b).
int sturm_count_open(const UniPoly& squarefree, const Rational& a, const Rational& b);

// Cancel the gcd of num and den and make den monic.
void reduce_fraction(UniPoly& num, UniPoly& den);

}  // namespace cra
