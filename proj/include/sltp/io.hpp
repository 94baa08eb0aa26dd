#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sltp/construction.hpp"
#include "sltp/errors.hpp"
#include "sltp/metric_space.hpp"
#include "sltp/molecule.hpp"
#include "sltp/slice.hpp"
#include "sltp/transport.hpp"
#include "sltp/trapezoid.hpp"

// Document formats. One JSON document per object; rationals travel as
// canonical "p/q" strings (integers also accepted on input, never floats,
// so values stay exact). Every *_to_json here has a *_from_json inverse and
// the pair round-trips to an equal value.

namespace sltp {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const io_error& e) {
            throw io_error(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
    if (j.is_number())
        throw io_error(where + ": write non-integer numbers as strings to keep them exact");
    throw io_error(where + ": expected a rational");
}

namespace detail {

inline const Json& json_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw io_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw io_error(where + ": missing field '" + key + "'");
    return *it;
}

inline std::string json_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw io_error(where + ": expected a string");
    return j.get<std::string>();
}

inline bool json_bool(const Json& j, const std::string& where) {
    if (!j.is_boolean()) throw io_error(where + ": expected a boolean");
    return j.get<bool>();
}

inline const Json& json_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw io_error(where + ": expected an array");
    return j;
}

inline PointId json_point(const Json& j, const PointedMetricSpace& s, const std::string& where) {
    std::string name = json_string(j, where);
    if (auto p = s.find(name)) return *p;
    throw io_error(where + ": unknown point '" + name + "'");
}

}  // namespace detail

// ---- spaces ----------------------------------------------------------

inline Json space_to_json(const PointedMetricSpace& s) {
    Json points = Json::array();
    for (PointId p : s.points()) points.push_back(s.name(p));
    Json matrix = Json::array();
    for (PointId p : s.points()) {
        Json row = Json::array();
        for (PointId q : s.points()) row.push_back(rational_to_json(s.dist(p, q)));
        matrix.push_back(std::move(row));
    }
    return Json{{"points", std::move(points)}, {"base", s.name(s.base())},
                {"matrix", std::move(matrix)}};
}

// Accepts exactly one distance block: "matrix" (row-major), "edges" (one
// entry per unordered pair, all pairs required), or "l1" (name -> coordinate
// list). Axioms are not checked here; use validate_metric.
inline PointedMetricSpace space_from_json(const Json& j) {
    if (!j.is_object()) throw io_error("space: expected an object");
    std::vector<std::string> names;
    for (const auto& p : detail::json_array(detail::json_field(j, "points", "space"), "space.points"))
        names.push_back(detail::json_string(p, "space.points"));
    if (names.empty()) throw io_error("space: needs at least one point");
    std::string base = detail::json_string(detail::json_field(j, "base", "space"), "space.base");

    int blocks = int(j.contains("matrix")) + int(j.contains("edges")) + int(j.contains("l1"));
    if (blocks != 1)
        throw io_error("space: give exactly one of 'matrix', 'edges', 'l1'");

    const std::size_t n = names.size();
    try {
        if (j.contains("matrix")) {
            const Json& m = detail::json_array(j.at("matrix"), "space.matrix");
            if (m.size() != n) throw io_error("space.matrix: wrong number of rows");
            std::vector<std::vector<Rational>> matrix;
            for (std::size_t i = 0; i < n; ++i) {
                const Json& row = detail::json_array(m.at(i), "space.matrix row");
                if (row.size() != n) throw io_error("space.matrix: row " + std::to_string(i) +
                                                    " has wrong length");
                std::vector<Rational> out;
                for (const auto& cell : row)
                    out.push_back(rational_from_json(cell, "space.matrix entry"));
                matrix.push_back(std::move(out));
            }
            return PointedMetricSpace::from_matrix(std::move(names), base, std::move(matrix));
        }
        if (j.contains("edges")) {
            std::map<std::string, std::size_t> index;
            for (std::size_t i = 0; i < n; ++i) {
                if (!index.emplace(names[i], i).second)
                    throw io_error("space: duplicate point name '" + names[i] + "'");
            }
            auto lookup = [&](const Json& cell) {
                std::string name = detail::json_string(cell, "space.edges endpoint");
                auto it = index.find(name);
                if (it == index.end())
                    throw io_error("space.edges: unknown point '" + name + "'");
                return it->second;
            };
            std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
            std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
            for (const auto& e : detail::json_array(j.at("edges"), "space.edges")) {
                std::size_t a = lookup(detail::json_field(e, "a", "space.edges entry"));
                std::size_t b = lookup(detail::json_field(e, "b", "space.edges entry"));
                if (a == b) throw io_error("space.edges: '" + names[a] + "' paired with itself");
                if (seen[a][b])
                    throw io_error("space.edges: pair '" + names[a] + "','" + names[b] +
                                   "' given twice");
                seen[a][b] = seen[b][a] = true;
                Rational d =
                    rational_from_json(detail::json_field(e, "d", "space.edges entry"), "space.edges d");
                matrix[a][b] = d;
                matrix[b][a] = std::move(d);
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (!seen[a][b])
                        throw io_error("space.edges: missing pair '" + names[a] + "','" +
                                       names[b] + "'");
                }
            }
            return PointedMetricSpace::from_matrix(std::move(names), base, std::move(matrix));
        }
        const Json& table = detail::json_field(j, "l1", "space");
        if (!table.is_object()) throw io_error("space.l1: expected an object");
        if (table.size() != n) throw io_error("space.l1: must list every point exactly once");
        std::vector<L1Point> vectors;
        for (const auto& name : names) {
            auto it = table.find(name);
            if (it == table.end()) throw io_error("space.l1: missing point '" + name + "'");
            L1Point p{name, {}};
            for (const auto& c : detail::json_array(*it, "space.l1 coordinates"))
                p.coords.push_back(rational_from_json(c, "space.l1 coordinate"));
            vectors.push_back(std::move(p));
        }
        return PointedMetricSpace::from_l1_vectors(vectors, base);
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("space: ") + e.what());
    }
}

// ---- molecules, slices, functions ------------------------------------

inline Json molecule_to_json(const PointedMetricSpace& s, const Molecule& mu) {
    Json terms = Json::array();
    for (const auto& t : mu.terms)
        terms.push_back(Json{{"point", s.name(t.point)}, {"coeff", rational_to_json(t.coeff)}});
    return Json{{"terms", std::move(terms)}};
}

inline Molecule molecule_from_json(const PointedMetricSpace& s, const Json& j) {
    std::vector<MoleculeTerm> terms;
    for (const auto& t :
         detail::json_array(detail::json_field(j, "terms", "molecule"), "molecule.terms")) {
        terms.push_back(
            {detail::json_point(detail::json_field(t, "point", "molecule term"), s, "molecule term"),
             rational_from_json(detail::json_field(t, "coeff", "molecule term"), "molecule coeff")});
    }
    return Molecule::from_terms(s, std::move(terms));
}

inline Json slices_to_json(const PointedMetricSpace& s, const std::vector<WeakStarSlice>& slices) {
    Json out = Json::array();
    for (const auto& slice : slices) {
        Json entry = molecule_to_json(s, slice.functional);
        entry["alpha"] = rational_to_json(slice.alpha);
        out.push_back(std::move(entry));
    }
    return Json{{"slices", std::move(out)}};
}

inline std::vector<WeakStarSlice> slices_from_json(const PointedMetricSpace& s, const Json& j) {
    std::vector<WeakStarSlice> out;
    for (const auto& entry :
         detail::json_array(detail::json_field(j, "slices", "slices"), "slices")) {
        Molecule mu = molecule_from_json(s, entry);
        Rational alpha = rational_from_json(detail::json_field(entry, "alpha", "slice"), "alpha");
        try {
            out.push_back(make_slice(s, std::move(mu), std::move(alpha)));
        } catch (const std::invalid_argument& e) {
            throw io_error(std::string("slice: ") + e.what());
        }
    }
    if (out.empty()) throw io_error("slices: need at least one");
    return out;
}

inline Json function_to_json(const PointedMetricSpace& s, const LipschitzFunction& f) {
    Json out = Json::object();
    for (PointId p : s.points()) out[s.name(p)] = rational_to_json(f.at(p));
    return out;
}

inline LipschitzFunction function_from_json(const PointedMetricSpace& s, const Json& j) {
    if (!j.is_object()) throw io_error("function: expected an object");
    if (j.size() != s.size()) throw io_error("function: must value every point exactly once");
    std::vector<Rational> values(s.size());
    for (PointId p : s.points()) {
        auto it = j.find(s.name(p));
        if (it == j.end()) throw io_error("function: missing point '" + s.name(p) + "'");
        values[p.index] = rational_from_json(*it, "function value");
    }
    try {
        return LipschitzFunction::from_values(s, std::move(values));
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("function: ") + e.what());
    }
}

// ---- reports ----------------------------------------------------------

inline Json validation_to_json(const PointedMetricSpace& s, const ValidationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json pts = Json::array();
        for (PointId p : v.points) pts.push_back(s.name(p));
        violations.push_back(Json{{"axiom", axiom_name(v.axiom)},
                                  {"points", std::move(pts)},
                                  {"lhs", rational_to_json(v.lhs)},
                                  {"rhs", rational_to_json(v.rhs)}});
    }
    return Json{{"ok", r.ok}, {"violations", std::move(violations)}};
}

inline ValidationReport validation_from_json(const PointedMetricSpace& s, const Json& j) {
    ValidationReport r;
    r.ok = detail::json_bool(detail::json_field(j, "ok", "validation"), "validation.ok");
    for (const auto& v : detail::json_array(detail::json_field(j, "violations", "validation"),
                                            "validation.violations")) {
        AxiomViolation out;
        std::string axiom = detail::json_string(detail::json_field(v, "axiom", "violation"), "axiom");
        bool known = false;
        for (MetricAxiom a : {MetricAxiom::Nonnegative, MetricAxiom::ZeroDiagonal,
                              MetricAxiom::Separation, MetricAxiom::Symmetry, MetricAxiom::Triangle}) {
            if (axiom == axiom_name(a)) {
                out.axiom = a;
                known = true;
            }
        }
        if (!known) throw io_error("validation: unknown axiom '" + axiom + "'");
        for (const auto& p :
             detail::json_array(detail::json_field(v, "points", "violation"), "violation.points"))
            out.points.push_back(detail::json_point(p, s, "violation point"));
        out.lhs = rational_from_json(detail::json_field(v, "lhs", "violation"), "violation.lhs");
        out.rhs = rational_from_json(detail::json_field(v, "rhs", "violation"), "violation.rhs");
        r.violations.push_back(std::move(out));
    }
    return r;
}

inline Json check_to_json(const PointedMetricSpace& s, const TrapezoidCheck& c) {
    Json worst;
    if (const auto* pair = std::get_if<PairTuple>(&c.worst)) {
        worst = Json{{"kind", "pair"}, {"x", s.name(pair->x)}, {"y", s.name(pair->y)}};
    } else {
        const auto& q = std::get<QuadTuple>(c.worst);
        worst = Json{{"kind", "quad"},
                     {"x", s.name(q.x)},
                     {"y", s.name(q.y)},
                     {"z", s.name(q.z)},
                     {"w", s.name(q.w)}};
    }
    return Json{{"holds", c.holds}, {"slack", rational_to_json(c.slack)},
                {"worst", std::move(worst)}};
}

inline TrapezoidCheck check_from_json(const PointedMetricSpace& s, const Json& j) {
    TrapezoidCheck c;
    c.holds = detail::json_bool(detail::json_field(j, "holds", "check"), "check.holds");
    c.slack = rational_from_json(detail::json_field(j, "slack", "check"), "check.slack");
    const Json& worst = detail::json_field(j, "worst", "check");
    std::string kind = detail::json_string(detail::json_field(worst, "kind", "check.worst"), "kind");
    auto point = [&](const char* key) {
        return detail::json_point(detail::json_field(worst, key, "check.worst"), s, "check.worst");
    };
    if (kind == "pair") {
        c.worst = PairTuple{point("x"), point("y")};
    } else if (kind == "quad") {
        c.worst = QuadTuple{point("x"), point("y"), point("z"), point("w")};
    } else {
        throw io_error("check.worst: unknown kind '" + kind + "'");
    }
    return c;
}

inline Json required_to_json(const RequiredEpsilon& r) {
    return Json{{"ltp", rational_to_json(r.ltp)},
                {"sym", rational_to_json(r.sym)},
                {"sltp", rational_to_json(r.sltp)}};
}

inline RequiredEpsilon required_from_json(const Json& j) {
    return {rational_from_json(detail::json_field(j, "ltp", "required"), "required.ltp"),
            rational_from_json(detail::json_field(j, "sym", "required"), "required.sym"),
            rational_from_json(detail::json_field(j, "sltp", "required"), "required.sltp")};
}

inline Json witness_to_json(const PointedMetricSpace& s, const std::optional<WitnessResult>& w) {
    if (!w) return Json{{"found", false}};
    return Json{{"found", true}, {"u", s.name(w->u)}, {"v", s.name(w->v)},
                {"check", check_to_json(s, w->check)}};
}

inline std::optional<WitnessResult> witness_from_json(const PointedMetricSpace& s, const Json& j) {
    if (!detail::json_bool(detail::json_field(j, "found", "witness"), "witness.found"))
        return std::nullopt;
    return WitnessResult{detail::json_point(detail::json_field(j, "u", "witness"), s, "witness.u"),
                         detail::json_point(detail::json_field(j, "v", "witness"), s, "witness.v"),
                         check_from_json(s, detail::json_field(j, "check", "witness"))};
}

inline Json scan_to_json(const PointedMetricSpace& s, const ScanReport& r) {
    Json pairs = Json::array();
    for (const auto& row : r.pairs) {
        pairs.push_back(Json{{"u", s.name(row.u)},
                             {"v", s.name(row.v)},
                             {"check", check_to_json(s, row.check)},
                             {"required", required_to_json(row.required)}});
    }
    Json verdict;
    if (const auto* w = std::get_if<ScanVerdictWitness>(&r.verdict)) {
        verdict = Json{{"kind", "witness"}, {"u", s.name(w->u)}, {"v", s.name(w->v)}};
    } else {
        const auto& f = std::get<ScanVerdictAllFail>(r.verdict);
        verdict = Json{{"kind", "all-fail"},
                       {"min_required_epsilon", rational_to_json(f.min_required_epsilon)}};
    }
    return Json{{"pairs", std::move(pairs)}, {"verdict", std::move(verdict)},
                {"scope_note", r.scope_note}};
}

inline ScanReport scan_from_json(const PointedMetricSpace& s, const Json& j) {
    ScanReport r;
    for (const auto& row :
         detail::json_array(detail::json_field(j, "pairs", "scan"), "scan.pairs")) {
        r.pairs.push_back(
            {detail::json_point(detail::json_field(row, "u", "scan pair"), s, "scan.u"),
             detail::json_point(detail::json_field(row, "v", "scan pair"), s, "scan.v"),
             check_from_json(s, detail::json_field(row, "check", "scan pair")),
             required_from_json(detail::json_field(row, "required", "scan pair"))});
    }
    const Json& verdict = detail::json_field(j, "verdict", "scan");
    std::string kind =
        detail::json_string(detail::json_field(verdict, "kind", "scan.verdict"), "kind");
    if (kind == "witness") {
        r.verdict = ScanVerdictWitness{
            detail::json_point(detail::json_field(verdict, "u", "scan.verdict"), s, "verdict.u"),
            detail::json_point(detail::json_field(verdict, "v", "scan.verdict"), s, "verdict.v")};
    } else if (kind == "all-fail") {
        r.verdict = ScanVerdictAllFail{rational_from_json(
            detail::json_field(verdict, "min_required_epsilon", "scan.verdict"), "min required")};
    } else {
        throw io_error("scan.verdict: unknown kind '" + kind + "'");
    }
    r.scope_note =
        detail::json_string(detail::json_field(j, "scope_note", "scan"), "scan.scope_note");
    return r;
}

inline Json norm_result_to_json(const PointedMetricSpace& s, const MoleculeNormResult& r) {
    return Json{{"norm", rational_to_json(r.norm)},
                {"optimizer", function_to_json(s, r.optimizer)}};
}

inline MoleculeNormResult norm_result_from_json(const PointedMetricSpace& s, const Json& j) {
    return {rational_from_json(detail::json_field(j, "norm", "norm result"), "norm"),
            function_from_json(s, detail::json_field(j, "optimizer", "norm result"))};
}

inline Json radii_to_json(const PointedMetricSpace& s, const RadiiBundle& r) {
    return Json{{"u", s.name(r.u)},
                {"v", s.name(r.v)},
                {"r0", rational_to_json(r.r0)},
                {"s0", rational_to_json(r.s0)},
                {"r", rational_to_json(r.r)},
                {"s", rational_to_json(r.s)},
                {"epsilon", rational_to_json(r.epsilon)},
                {"swapped", r.swapped}};
}

inline RadiiBundle radii_from_json(const PointedMetricSpace& s, const Json& j) {
    RadiiBundle r;
    r.u = detail::json_point(detail::json_field(j, "u", "radii"), s, "radii.u");
    r.v = detail::json_point(detail::json_field(j, "v", "radii"), s, "radii.v");
    r.r0 = rational_from_json(detail::json_field(j, "r0", "radii"), "radii.r0");
    r.s0 = rational_from_json(detail::json_field(j, "s0", "radii"), "radii.s0");
    r.r = rational_from_json(detail::json_field(j, "r", "radii"), "radii.r");
    r.s = rational_from_json(detail::json_field(j, "s", "radii"), "radii.s");
    r.epsilon = rational_from_json(detail::json_field(j, "epsilon", "radii"), "radii.epsilon");
    r.swapped = detail::json_bool(detail::json_field(j, "swapped", "radii"), "radii.swapped");
    return r;
}

namespace detail {

inline Json interval_to_json(const AdmissibleInterval& i) {
    return Json{{"a_lo", rational_to_json(i.a_lo)}, {"a_hi", rational_to_json(i.a_hi)},
                {"b_lo", rational_to_json(i.b_lo)}, {"b_hi", rational_to_json(i.b_hi)},
                {"lo", rational_to_json(i.lo)},     {"hi", rational_to_json(i.hi)}};
}

inline AdmissibleInterval interval_from_json(const Json& j) {
    auto get = [&](const char* key) {
        return rational_from_json(json_field(j, key, "interval"), std::string("interval.") + key);
    };
    return {get("a_lo"), get("a_hi"), get("b_lo"), get("b_hi"), get("lo"), get("hi")};
}

inline SliceResult slice_result_from_json(const Json& j, const std::string& where) {
    std::string text = json_string(j, where);
    for (SliceResult r :
         {SliceResult::InSlice, SliceResult::NotInSlice, SliceResult::OutsideUnitBall}) {
        if (text == to_string(r)) return r;
    }
    throw io_error(where + ": unknown slice result '" + text + "'");
}

}  // namespace detail

inline Json construction_to_json(const PointedMetricSpace& s, const ConstructionReport& r) {
    Json subset = Json::array();
    for (PointId p : r.subset) subset.push_back(s.name(p));
    Json out{{"subset", std::move(subset)},
             {"epsilon", rational_to_json(r.epsilon)},
             {"target", rational_to_json(r.target)},
             {"witness_found", r.witness_found},
             {"pass", r.pass}};
    if (!r.witness_found) return out;
    out["radii"] = radii_to_json(s, r.radii);
    out["bump"] = function_to_json(s, r.bump);
    out["bump_norm"] = rational_to_json(r.bump_norm);
    out["bump_in_ball"] = r.bump_in_ball;
    out["bump_reaches_target"] = r.bump_reaches_target;
    Json slices = Json::array();
    for (const auto& sv : r.slices) {
        slices.push_back(Json{{"interior", function_to_json(s, sv.interior)},
                              {"interval", detail::interval_to_json(sv.interval)},
                              {"center", rational_to_json(sv.center)},
                              {"witness", function_to_json(s, sv.witness)},
                              {"witness_norm", rational_to_json(sv.witness_norm)},
                              {"witness_in_ball", sv.witness_in_ball},
                              {"membership", to_string(sv.membership)},
                              {"norm_plus", rational_to_json(sv.norm_plus)},
                              {"norm_minus", rational_to_json(sv.norm_minus)},
                              {"plus_in_ball", sv.plus_in_ball},
                              {"minus_in_ball", sv.minus_in_ball},
                              {"plus_membership", to_string(sv.plus_membership)},
                              {"minus_membership", to_string(sv.minus_membership)}});
    }
    out["slices"] = std::move(slices);
    return out;
}

inline ConstructionReport construction_from_json(const PointedMetricSpace& s, const Json& j) {
    ConstructionReport r;
    for (const auto& p :
         detail::json_array(detail::json_field(j, "subset", "construction"), "construction.subset"))
        r.subset.push_back(detail::json_point(p, s, "construction.subset"));
    r.epsilon = rational_from_json(detail::json_field(j, "epsilon", "construction"), "epsilon");
    r.target = rational_from_json(detail::json_field(j, "target", "construction"), "target");
    r.witness_found =
        detail::json_bool(detail::json_field(j, "witness_found", "construction"), "witness_found");
    r.pass = detail::json_bool(detail::json_field(j, "pass", "construction"), "pass");
    if (!r.witness_found) {
        r.bump = LipschitzFunction{};
        return r;
    }
    r.radii = radii_from_json(s, detail::json_field(j, "radii", "construction"));
    r.bump = function_from_json(s, detail::json_field(j, "bump", "construction"));
    r.bump_norm = rational_from_json(detail::json_field(j, "bump_norm", "construction"), "bump_norm");
    r.bump_in_ball =
        detail::json_bool(detail::json_field(j, "bump_in_ball", "construction"), "bump_in_ball");
    r.bump_reaches_target = detail::json_bool(
        detail::json_field(j, "bump_reaches_target", "construction"), "bump_reaches_target");
    for (const auto& entry : detail::json_array(detail::json_field(j, "slices", "construction"),
                                                "construction.slices")) {
        SliceVerification sv;
        sv.interior = function_from_json(s, detail::json_field(entry, "interior", "slice entry"));
        sv.interval = detail::interval_from_json(detail::json_field(entry, "interval", "slice entry"));
        sv.center = rational_from_json(detail::json_field(entry, "center", "slice entry"), "center");
        sv.witness = function_from_json(s, detail::json_field(entry, "witness", "slice entry"));
        sv.witness_norm = rational_from_json(
            detail::json_field(entry, "witness_norm", "slice entry"), "witness_norm");
        sv.witness_in_ball = detail::json_bool(
            detail::json_field(entry, "witness_in_ball", "slice entry"), "witness_in_ball");
        sv.membership = detail::slice_result_from_json(
            detail::json_field(entry, "membership", "slice entry"), "membership");
        sv.norm_plus =
            rational_from_json(detail::json_field(entry, "norm_plus", "slice entry"), "norm_plus");
        sv.norm_minus =
            rational_from_json(detail::json_field(entry, "norm_minus", "slice entry"), "norm_minus");
        sv.plus_in_ball = detail::json_bool(
            detail::json_field(entry, "plus_in_ball", "slice entry"), "plus_in_ball");
        sv.minus_in_ball = detail::json_bool(
            detail::json_field(entry, "minus_in_ball", "slice entry"), "minus_in_ball");
        sv.plus_membership = detail::slice_result_from_json(
            detail::json_field(entry, "plus_membership", "slice entry"), "plus_membership");
        sv.minus_membership = detail::slice_result_from_json(
            detail::json_field(entry, "minus_membership", "slice entry"), "minus_membership");
        r.slices.push_back(std::move(sv));
    }
    return r;
}

// ---- stream plumbing ---------------------------------------------------

inline Json parse_document(std::istream& in, const std::string& what) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw io_error(what + ": " + e.what());
    }
}

inline void write_document(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace sltp
