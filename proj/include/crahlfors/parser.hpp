#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "crahlfors/ratfun.hpp"

namespace cra {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Expression grammar: rationals (`3/5`), `i`, `sqrt(q)` for a nonnegative
// rational q, `conj(...)`, variables z1..zN (aliases z, w when N = 2),
// named parameters, operators + - * / ^ with integer exponents, parentheses.
// Precedence: ^  >  unary minus  >  * /  >  + -.
RatFun parse_expression(const std::string& src, int nvars,
                        const std::map<std::string, Rational>& params = {});

}  // namespace cra
