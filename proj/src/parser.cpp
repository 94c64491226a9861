#include "crahlfors/parser.hpp"

#include <cctype>

namespace cra {

namespace {

struct Parser {
    const std::string& src;
    int nvars;
    const std::map<std::string, Rational>& params;
    size_t pos = 0;

    Parser(const std::string& s, int nv, const std::map<std::string, Rational>& p)
        : src(s), nvars(nv), params(p) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Integer read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
        if (pos == start) fail("expected an integer");
        return Integer(src.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }

    RatFun constant(const Radical& c) { return RatFun::constant(nvars, c); }

    RatFun parse_primary() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            RatFun e = parse_sum();
            expect(')');
            return e;
        }
        if (std::isdigit((unsigned char)c)) {
            Integer n = read_integer();
            return constant(Radical(Rational(n)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            std::string id = read_ident();
            if (id == "i") return constant(Radical(Gaussian(Rational(0), Rational(1))));
            if (id == "sqrt") {
                expect('(');
                RatFun arg = parse_sum();
                expect(')');
                if (!arg.den().is_constant() || !arg.num().is_constant())
                    throw ParseError("sqrt argument must be a constant", start);
                Radical v = arg.num().constant_value() / arg.den().constant_value();
                if (!v.is_rational())
                    throw ParseError("sqrt argument must be rational", start);
                Rational q = v.rational_value();
                if (q < 0) throw ParseError("sqrt argument must be nonnegative", start);
                return constant(Radical::sqrt_of(q));
            }
            if (id == "conj") {
                expect('(');
                RatFun arg = parse_sum();
                expect(')');
                return arg.conj();
            }
            if (nvars == 2) {
                if (id == "z") return RatFun(Poly::variable(2, 0));
                if (id == "w") return RatFun(Poly::variable(2, 1));
            }
            if (id.size() >= 2 && id[0] == 'z') {
                bool digits = true;
                for (size_t k = 1; k < id.size(); ++k)
                    if (!std::isdigit((unsigned char)id[k])) digits = false;
                if (digits) {
                    int idx = std::stoi(id.substr(1));
                    if (idx < 1 || idx > nvars)
                        throw ParseError("variable index out of range: " + id, start);
                    return RatFun(Poly::variable(nvars, idx - 1));
                }
            }
            auto it = params.find(id);
            if (it != params.end()) return constant(Radical(it->second));
            throw ParseError("unknown identifier: " + id, start);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RatFun parse_power() {
        RatFun base = parse_primary();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            Integer e = read_integer();
            if (!e.fits_sint_p()) fail("exponent too large");
            int ei = (int)e.get_si();
            RatFun p = RatFun::constant(nvars, Radical(1));
            RatFun b = neg ? RatFun::constant(nvars, Radical(1)) / base : base;
            for (int k = 0; k < ei; ++k) p = p * b;
            return p;
        }
        return base;
    }

    RatFun parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    RatFun parse_product() {
        RatFun acc = parse_unary();
        for (;;) {
            if (accept('*'))
                acc = acc * parse_unary();
            else if (accept('/')) {
                size_t at = pos;
                RatFun d = parse_unary();
                if (d.is_zero()) throw ParseError("division by zero polynomial", at);
                acc = acc / d;
            }
            else
                return acc;
        }
    }

    RatFun parse_sum() {
        RatFun acc = parse_product();
        for (;;) {
            if (accept('+'))
                acc = acc + parse_product();
            else if (peek('-')) {
                acc = acc - (++pos, parse_product());
            } else
                return acc;
        }
    }
};

}  // namespace

RatFun parse_expression(const std::string& src, int nvars,
                        const std::map<std::string, Rational>& params) {
    Parser p(src, nvars, params);
    RatFun e = p.parse_sum();
    p.skip_ws();
    if (p.pos != src.size())
        throw ParseError("trailing input", p.pos);
    return e;
}

}  // namespace cra
