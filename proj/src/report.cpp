#include "crahlfors/report.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "crahlfors/parser.hpp"
#include "crahlfors/printer.hpp"

namespace cra {

namespace {

std::string unipoly_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.c[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        bool unit = (mag == 1) && k > 0;
        if (!unit) s += mag.get_str();
        if (k > 0) {
            if (!unit) s += "*";
            s += "s";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace

std::string trace_string(const RatFun& f) {
    UniPoly num_s, den_s;
    if (as_function_of_s(f, num_s, den_s)) {
        if (num_s.is_zero()) return "0";
        std::string d = unipoly_string(den_s);
        if (d == "1") return unipoly_string(num_s);
        return "(" + unipoly_string(num_s) + ")/(" + d + ")";
    }
    return to_string(f.reduced_on_sphere());
}

Report build_report(const std::string& id, const SphereMap& F,
                    std::uint64_t seed, int scan_points) {
    Report r;
    r.map_id = id;
    if (F.has_sphere_source()) {
        AhlforsData data = ahlfors_mixed(F);
        r.Q = data.Q;
        r.trace = data.trace;
        r.tracefree = data.tracefree;
        r.a1 = data.a1;
        if (F.source_n == 1) r.umbilic = umbilic_locus(F, data.trace);
        r.obstructions = monomial_obstruction(F, data);
        auto scan = num::positivity_scan(data.trace, scan_points, seed);
        r.positivity_min = scan.min_real;
        Defining d(sphere_rho(F.source_vars()));
        double fd = 0;
        num::Sampler sampler{seed + 1, F.source_n};
        for (const auto& p : sampler.sample(5, true))
            fd = std::max(fd, num::finite_diff_hessian_check(d, data.Q, data.mixed, p, 1e-4));
        r.fd_max_rel_err = fd;
    } else {
        Defining d(F.rho());
        auto q = quotient_Q(F);
        if (auto* err = std::get_if<QuotientError>(&q)) throw NotSphereMapError(*err);
        r.Q = std::get<RatFun>(q);
        r.tracefree = tracefree_general(d, F);
    }
    return r;
}

namespace {

using nlohmann::ordered_json;

std::string interval_string(const std::pair<Rational, Rational>& iv) {
    if (iv.first == iv.second) return iv.first.get_str();
    return "(" + iv.first.get_str() + ", " + iv.second.get_str() + ")";
}

ordered_json umbilic_json(const std::optional<UmbilicDescription>& u) {
    ordered_json j;
    if (!u) {
        j["kind"] = "not-computed";
        j["roots"] = ordered_json::array();
        return j;
    }
    j["kind"] = to_string(u->kind);
    ordered_json roots = ordered_json::array();
    if (u->roots.root_at_zero) roots.push_back("0");
    for (const auto& iv : u->roots.interior_roots) roots.push_back(interval_string(iv));
    if (u->roots.root_at_one) roots.push_back("1");
    for (const auto& wit : u->exact_witnesses) {
        std::string s = "(";
        for (size_t k = 0; k < wit.size(); ++k) {
            if (k) s += ", ";
            s += to_string(Radical(wit[k]));
        }
        roots.push_back(s + ")");
    }
    j["roots"] = roots;
    return j;
}

}  // namespace

std::string report_json(const Report& r) {
    ordered_json j;
    j["map"] = r.map_id;
    j["Q"] = to_string(r.Q.reduced_on_sphere());
    j["trace"] = r.trace ? ordered_json(trace_string(*r.trace)) : ordered_json(nullptr);
    ordered_json tf = ordered_json::array();
    for (const auto& row : r.tracefree) {
        ordered_json jr = ordered_json::array();
        for (const auto& entry : row) jr.push_back(to_string(entry));
        tf.push_back(jr);
    }
    j["tracefree"] = tf;
    j["a1"] = r.a1 ? ordered_json(to_string(r.a1->reduced_on_sphere())) : ordered_json(nullptr);
    j["umbilic"] = umbilic_json(r.umbilic);
    ordered_json obs;
    obs["moduli_only"] = r.obstructions ? r.obstructions->moduli_only : false;
    obs["circle_tracefree"] = r.obstructions ? r.obstructions->circle_tracefree : false;
    obs["a1_shape"] = r.obstructions ? r.obstructions->a1_shape : false;
    j["obstructions"] = obs;
    ordered_json checks;
    checks["positivity_min"] =
        r.positivity_min ? ordered_json(*r.positivity_min) : ordered_json(nullptr);
    checks["fd_max_rel_err"] =
        r.fd_max_rel_err ? ordered_json(*r.fd_max_rel_err) : ordered_json(nullptr);
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string report_latex(const Report& r) {
    std::ostringstream out;
    out << "\\begin{tabular}{|l|l|l|l|}\n\\hline\n";
    out << "map & trace & $A_1$ & umbilic \\\\\n\\hline\n";
    out << r.map_id << " & $" << (r.trace ? to_latex(r.trace->reduced_on_sphere()) : "-")
        << "$ & $" << (r.a1 ? to_latex(r.a1->reduced_on_sphere()) : "-") << "$ & "
        << (r.umbilic ? to_string(r.umbilic->kind) : "-") << " \\\\\n\\hline\n";
    out << "\\end{tabular}\n";
    return out.str();
}

SphereMap MapDocument::to_map() const {
    SphereMap F;
    F.name = name;
    F.source_n = source_n;
    F.target_N = (int)components.size() - 1;
    F.params = params;
    for (const auto& src : components)
        F.components.push_back(parse_expression(src, source_n + 1, params));
    return F;
}

MapDocument load_map_document(std::istream& in) {
    MapDocument doc;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "name") {
            std::string rest;
            std::getline(ls, rest);
            size_t a = rest.find_first_not_of(" \t");
            doc.name = (a == std::string::npos) ? "" : rest.substr(a);
        } else if (key == "source_n") {
            ls >> doc.source_n;
        } else if (key == "param") {
            std::string pname, value;
            ls >> pname >> value;
            Rational q(value);
            q.canonicalize();
            doc.params[pname] = q;
        } else if (key == "component") {
            std::string rest;
            std::getline(ls, rest);
            doc.components.push_back(rest);
        } else {
            throw std::runtime_error("map document: unknown directive '" + key + "'");
        }
    }
    return doc;
}

}  // namespace cra
