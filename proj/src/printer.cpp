#include "crahlfors/printer.hpp"

#include <vector>

namespace cra {

namespace {

struct Atom {
    bool negative;
    std::string text;  // magnitude, e.g. "3/5*i*sqrt(2)"
};

std::string atom_text(const Rational& mag, unsigned long m, bool imag, bool latex) {
    std::vector<std::string> parts;
    bool has_factor = imag || m != 1;
    if (!(mag == 1 && has_factor)) parts.push_back(mag.get_str());
    if (imag) parts.push_back("i");
    if (m != 1) {
        if (latex)
            parts.push_back("\\sqrt{" + std::to_string(m) + "}");
        else
            parts.push_back("sqrt(" + std::to_string(m) + ")");
    }
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) s += latex ? " " : "*";
        s += parts[k];
    }
    return s;
}

std::vector<Atom> radical_atoms(const Radical& c, bool latex) {
    std::vector<Atom> atoms;
    for (const auto& [m, g] : c.terms()) {
        if (g.re != 0) atoms.push_back({g.re < 0, atom_text(abs(g.re), m, false, latex)});
        if (g.im != 0) atoms.push_back({g.im < 0, atom_text(abs(g.im), m, true, latex)});
    }
    return atoms;
}

std::string join_atoms(const std::vector<Atom>& atoms) {
    if (atoms.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < atoms.size(); ++k) {
        if (k == 0)
            s += atoms[k].negative ? "-" : "";
        else
            s += atoms[k].negative ? " - " : " + ";
        s += atoms[k].text;
    }
    return s;
}

std::string var_name(int idx, int nvars, bool latex) {
    if (nvars == 2) return idx == 0 ? "z" : "w";
    if (latex) return "z_{" + std::to_string(idx + 1) + "}";
    return "z" + std::to_string(idx + 1);
}

std::string monomial_text(const Monomial& m, int nvars, bool latex) {
    std::vector<std::string> parts;
    for (int j = 0; j < nvars; ++j) {
        if (m.holo[j] > 0) {
            std::string v = var_name(j, nvars, latex);
            if (m.holo[j] > 1)
                v += latex ? ("^{" + std::to_string(m.holo[j]) + "}")
                           : ("^" + std::to_string(m.holo[j]));
            parts.push_back(v);
        }
    }
    for (int j = 0; j < nvars; ++j) {
        if (m.anti[j] > 0) {
            std::string v = var_name(j, nvars, latex);
            std::string w = latex ? ("\\bar{" + v + "}") : ("conj(" + v + ")");
            if (m.anti[j] > 1)
                w += latex ? ("^{" + std::to_string(m.anti[j]) + "}")
                           : ("^" + std::to_string(m.anti[j]));
            parts.push_back(w);
        }
    }
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) s += latex ? " " : "*";
        s += parts[k];
    }
    return s;
}

// One polynomial term as a signed atom.
Atom term_atom(const Monomial& m, const Radical& c, int nvars, bool latex) {
    std::string mon = monomial_text(m, nvars, latex);
    std::vector<Atom> atoms = radical_atoms(c, latex);
    if (mon.empty()) {
        if (atoms.size() == 1) return atoms[0];
        return {false, "(" + join_atoms(atoms) + ")"};
    }
    if (atoms.size() == 1) {
        Atom a = atoms[0];
        if (a.text == "1")
            a.text = mon;
        else
            a.text += (latex ? " " : "*") + mon;
        return a;
    }
    return {false, "(" + join_atoms(atoms) + ")" + (latex ? " " : "*") + mon};
}

std::string poly_text(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::vector<Atom> atoms;
    for (const auto& [m, c] : p.terms()) atoms.push_back(term_atom(m, c, p.nvars(), latex));
    return join_atoms(atoms);
}

std::string ratfun_text(const RatFun& f, bool latex) {
    if (f.den().is_constant()) return poly_text(f.num(), latex);
    if (latex)
        return "\\frac{" + poly_text(f.num(), true) + "}{" + poly_text(f.den(), true) + "}";
    return "(" + poly_text(f.num(), false) + ")/(" + poly_text(f.den(), false) + ")";
}

}  // namespace

std::string to_string(const Radical& c) { return join_atoms(radical_atoms(c, false)); }
std::string to_string(const Monomial& m, int nvars) {
    std::string s = monomial_text(m, nvars, false);
    return s.empty() ? "1" : s;
}
std::string to_string(const Poly& p) { return poly_text(p, false); }
std::string to_string(const RatFun& f) { return ratfun_text(f, false); }

std::string to_latex(const Radical& c) { return join_atoms(radical_atoms(c, true)); }
std::string to_latex(const Poly& p) { return poly_text(p, true); }
std::string to_latex(const RatFun& f) { return ratfun_text(f, true); }

}  // namespace cra
