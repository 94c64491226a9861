#pragma once

#include <string>

#include "crahlfors/ratfun.hpp"

namespace cra {

// Canonical textual forms: terms in descending graded lex order, numeric atoms
// printed as a/b, a/b*i, a/b*sqrt(m); variables z1..zN with aliases z, w when
// N = 2.  Output round-trips through parse_expression.
std::string to_string(const Radical& c);
std::string to_string(const Monomial& m, int nvars);
std::string to_string(const Poly& p);
std::string to_string(const RatFun& f);

// LaTeX forms for report output.
std::string to_latex(const Radical& c);
std::string to_latex(const Poly& p);
std::string to_latex(const RatFun& f);

}  // namespace cra
