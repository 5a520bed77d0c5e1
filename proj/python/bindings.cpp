// Python surface for the exact planar-number library. Every rational crosses
// the boundary as its exact "p/q" string; sizes and counts cross as integers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar/elekes.hpp"
#include "planar/errors.hpp"
#include "planar/exponents.hpp"
#include "planar/family.hpp"
#include "planar/intersect.hpp"
#include "planar/io.hpp"
#include "planar/line.hpp"
#include "planar/number.hpp"
#include "planar/number_set.hpp"
#include "planar/solymosi.hpp"

namespace py = pybind11;
using namespace planar;

namespace {

PlanarNumber P(const std::string& s) { return parse_planar(s); }

NumberSet set_of(const std::vector<std::string>& elems) {
    if (elems.empty()) throw UsageError("element list is empty");
    std::vector<PlanarNumber> v;
    v.reserve(elems.size());
    for (const std::string& s : elems) v.push_back(parse_planar(s));
    const System sys = v.front().system; // read before the move below
    return NumberSet(sys, std::move(v));
}

std::vector<std::string> strings_of(const NumberSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const PlanarNumber& x : s.elements()) out.push_back(to_string(x));
    return out;
}

Line2 slope_of(const std::pair<std::string, std::string>& ab) {
    return Line2::slope_form(P(ab.first), P(ab.second));
}

py::dict intersection_dict(const Intersection& r) {
    py::dict d;
    d["kind"] = intersect_kind_name(r.kind);
    if (r.point)
        d["point"] = py::make_tuple(to_string(r.point->x), to_string(r.point->y));
    else
        d["point"] = py::none();
    return d;
}

py::object pair_or_none(const std::optional<std::pair<Rational, Rational>>& p) {
    if (!p) return py::none();
    return py::make_tuple(p->first.str(), p->second.str());
}

std::optional<Rational> parse_alpha(const std::optional<std::string>& alpha) {
    if (!alpha) return std::nullopt;
    return parse_rational(*alpha);
}

} // namespace

PYBIND11_MODULE(_planarnum, m) {
    m.doc() = "exact sum-product and incidence experiments over dual and double numbers";
    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<NonInvertibleError>(m, "NonInvertibleError", PyExc_ArithmeticError);

    // element arithmetic; numbers are strings like "1+2e", "3/2-1/2j"
    m.def("add", [](const std::string& a, const std::string& b) { return to_string(add(P(a), P(b))); });
    m.def("sub", [](const std::string& a, const std::string& b) { return to_string(sub(P(a), P(b))); });
    m.def("mul", [](const std::string& a, const std::string& b) { return to_string(mul(P(a), P(b))); });
    m.def("div", [](const std::string& a, const std::string& b) { return to_string(div(P(a), P(b))); });
    m.def("neg", [](const std::string& a) { return to_string(neg(P(a))); });
    m.def("inverse", [](const std::string& a) { return to_string(inverse(P(a))); });
    m.def("is_invertible", [](const std::string& a) { return is_invertible(P(a)); });
    m.def("primary_functional", [](const std::string& a) { return primary_functional(P(a)).str(); });
    m.def("parts", [](const std::string& a) {
        const PlanarNumber x = P(a);
        return py::make_tuple(system_name(x.system), x.re.str(), x.im.str());
    });

    // set statistics
    m.def("sumset", [](const std::vector<std::string>& a) { return strings_of(sumset(set_of(a))); });
    m.def("productset",
          [](const std::vector<std::string>& a) { return strings_of(productset(set_of(a))); });
    m.def("cross_sumset", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return strings_of(cross_sumset(set_of(a), set_of(b)));
    });
    m.def("cross_productset",
          [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return strings_of(cross_productset(set_of(a), set_of(b)));
          });
    m.def("prune_noninvertible",
          [](const std::vector<std::string>& a) { return strings_of(prune_noninvertible(set_of(a))); });
    m.def(
        "prune_to_multiplicity",
        [](const std::vector<std::string>& a, std::uint64_t k) {
            return strings_of(prune_to_multiplicity(set_of(a), k));
        },
        py::arg("elements"), py::arg("k"));
    m.def("multiplicity", [](const std::vector<std::string>& a) {
        const MultiplicityProfile p = multiplicity(set_of(a));
        py::dict d;
        d["k"] = p.k;
        d["alpha"] = p.alpha ? py::cast(*p.alpha) : py::none();
        return d;
    });
    m.def(
        "energy",
        [](const std::vector<std::string>& a, std::size_t quad_cutoff) {
            const EnergyReport e = energy_report(set_of(a), quad_cutoff);
            py::dict d;
            d["energy"] = e.energy;
            d["energy_quadruple"] = e.energy_quadruple ? py::cast(*e.energy_quadruple) : py::none();
            d["dyadic_class_m"] = e.dyadic_class_m;
            std::vector<std::string> lambdas;
            for (const Rational& l : e.lambda) lambdas.push_back(l.str());
            d["lambdas"] = lambdas;
            return d;
        },
        py::arg("elements"), py::arg("quad_cutoff") = 64);

    // constructions
    m.def(
        "generate",
        [](const std::string& kind, std::uint64_t n, const std::optional<std::string>& alpha) {
            const Generated g = generate(parse_construction(kind), n, parse_alpha(alpha));
            py::dict d;
            d["a"] = strings_of(g.a);
            d["b"] = g.b ? py::cast(strings_of(*g.b)) : py::none();
            return d;
        },
        py::arg("kind"), py::arg("n"), py::arg("alpha") = py::none());

    // intersection classification, closed-form route and rank-oracle route
    m.def("intersect", [](const std::pair<std::string, std::string>& l1,
                          const std::pair<std::string, std::string>& l2) {
        return intersection_dict(classify_intersection(slope_of(l1), slope_of(l2)));
    });
    m.def("intersect_oracle", [](const std::pair<std::string, std::string>& l1,
                                 const std::pair<std::string, std::string>& l2) {
        return intersection_dict(r4_oracle(slope_of(l1), slope_of(l2)));
    });
    m.def(
        "detect_families",
        [](const std::vector<std::pair<std::string, std::string>>& lines, std::size_t min_size) {
            std::vector<Line2> ls;
            ls.reserve(lines.size());
            for (const auto& ab : lines) ls.push_back(slope_of(ab));
            py::list out;
            for (const LineFamily& f : detect_families(ls, min_size)) {
                py::dict d;
                d["system"] = system_name(f.system);
                d["members"] = f.member_line_ids;
                d["special_point"] = pair_or_none(f.special_point);
                d["point_parameter"] = pair_or_none(f.point_parameter);
                d["line_parameter"] = pair_or_none(f.line_parameter);
                d["sign"] = f.sign ? py::cast(family_sign_name(*f.sign)) : py::none();
                out.append(d);
            }
            return out;
        },
        py::arg("lines"), py::arg("min_size") = 2);

    // Elekes configuration with the special/standard incidence split
    m.def(
        "elekes",
        [](const std::vector<std::string>& a, const std::string& sign, std::size_t cap) {
            const ElekesConfig cfg = build_elekes(set_of(a));
            const FamilySign s =
                sign == "negative" ? FamilySign::Negative : FamilySign::Positive;
            const SpecialIncidenceStats st = classify_incidences(cfg, s, cap);
            py::dict d;
            d["n"] = st.n;
            d["points"] = cfg.points.size();
            d["lines"] = cfg.lines.size();
            d["incidences"] = cfg.total_incidences;
            d["families"] = st.families.size();
            d["special"] = st.n_special;
            d["standard"] = st.n_standard;
            d["bound_violations"] = st.bound_violations;
            return d;
        },
        py::arg("elements"), py::arg("sign") = "positive", py::arg("cap") = 32);

    // positivity normalization, dyadic class, wedges, closing inequalities
    m.def("solymosi", [](const std::vector<std::string>& a) {
        const SolymosiResult r = solymosi_pipeline(set_of(a));
        py::dict d;
        d["normalized"] = strings_of(r.normalized);
        d["n"] = r.wedge.n;
        d["dyadic_class_m"] = r.wedge.dyadic_class_m;
        d["lambda_count"] = r.wedge.lambda.size();
        d["sumset_size"] = r.wedge.sumset_size;
        d["productset_size"] = r.wedge.productset_size;
        d["multiplicity_k"] = r.wedge.multiplicity_k;
        d["chain_ratio"] = r.wedge.chain_ratio.str();
        py::dict flags;
        flags["fibers_in_class"] = r.wedge.fibers_in_class;
        flags["expansion_exact"] = r.wedge.expansion_exact;
        flags["reps_cover"] = r.wedge.reps_cover;
        flags["wedges_disjoint"] = r.wedge.wedges_disjoint;
        flags["pigeonhole_ok"] = r.wedge.pigeonhole_ok;
        flags["energy_lower_ok"] = r.wedge.energy_lower_ok;
        flags["chain_sum_ok"] = r.wedge.chain_sum_ok;
        d["flags"] = flags;
        return d;
    });

    // exact lower-bound exponents and the sweep harness
    m.def("below_kappa", [](const std::string& alpha) { return below_kappa(parse_rational(alpha)); });
    m.def("theorem_exponent", [](const std::string& system, const std::string& alpha) {
        const TheoremExponent t = theorem_exponent(parse_system(system), parse_rational(alpha));
        py::dict d;
        d["exponent"] = t.exponent.str();
        d["case"] = t.case_label;
        return d;
    });
    m.def(
        "exponent_sweep",
        [](const std::string& kind, const std::vector<std::uint64_t>& sizes,
           const std::optional<std::string>& alpha) {
            const ExponentEstimate e =
                exponent_sweep(parse_construction(kind), parse_alpha(alpha), sizes);
            py::dict d;
            d["measurements"] = e.measurements;
            d["sumset_sizes"] = e.sumset_sizes;
            d["productset_sizes"] = e.productset_sizes;
            d["slope"] = e.slope;
            d["envelope"] = e.envelope;
            d["theorem_reference"] =
                e.theorem_reference ? py::cast(e.theorem_reference->str()) : py::none();
            return d;
        },
        py::arg("kind"), py::arg("sizes"), py::arg("alpha") = py::none());
}
