#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "sltp/lipschitz.hpp"
#include "sltp/metric_space.hpp"
#include "sltp/slice.hpp"
#include "sltp/transport.hpp"
#include "sltp/trapezoid.hpp"

namespace sltp {

// Interior point of the slice with norm strictly below 1 - eps: the dual
// optimizer of the slice functional scaled by 1 - eps - eta, eta halfway
// between eps and alpha. Requires eps < alpha.
inline LipschitzFunction pick_interior_function(const PointedMetricSpace& s,
                                                const WeakStarSlice& slice, const Rational& eps) {
    if (eps < 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in [0, 1)");
    if (eps >= slice.alpha) throw std::invalid_argument("epsilon must be smaller than alpha");
    MoleculeNormResult dual = molecule_norm(s, slice.functional);
    if (dual.norm != slice.functional_norm)
        throw std::invalid_argument("slice norm cache disagrees with the functional");
    Rational eta = (slice.alpha - eps) / 2;
    Rational factor = Rational(1) - eps - eta;
    LipschitzFunction h = scale(dual.optimizer, factor);
    // The optimizer pairs to the full norm, so h sits strictly inside the
    // slice with norm exactly `factor` (the optimizer has norm exactly 1).
    if (evaluate_pairing(h, slice.functional) <= (Rational(1) - slice.alpha) * slice.functional_norm)
        throw internal_error("interior function missed the slice");
    if (lip_norm(s, h).value != factor) throw internal_error("interior function norm drifted");
    return h;
}

// Radii of the two bump balls around a witness pair.
//   r0 = min over (x,y) in N^2 of (d(x,u) + d(y,u) - (1-eps) d(x,y)) / 2,
//   s0 likewise at v; then r + s is pinned to (1-eps)^2 d(u,v) with r as
//   large as r0 allows. If that leaves r = 0 the roles of u and v swap.
struct RadiiBundle {
    PointId u, v;  // oriented pair actually used (swap may have occurred)
    Rational r0, s0;
    Rational r, s;
    Rational epsilon;
    bool swapped = false;
    friend bool operator==(const RadiiBundle&, const RadiiBundle&) = default;
};

namespace detail {

inline Rational half_min_excess(const PointedMetricSpace& s, const std::vector<PointId>& pts,
                                const Rational& scale, PointId c) {
    return anchor_min(s, pts, scale, c).value / 2;
}

}  // namespace detail

inline RadiiBundle compute_radii(const PointedMetricSpace& s, std::vector<PointId> subset,
                                 const Rational& eps, PointId u, PointId v) {
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    if (!std::binary_search(pts.begin(), pts.end(), s.base()))
        throw std::invalid_argument("subset must contain the base point");
    if (!check_ineq_ltp(s, pts, eps, u, v).holds || !check_ineq_sym(s, pts, eps, u, v).holds)
        throw std::invalid_argument("pair is not a trapezoid witness for this subset and epsilon");

    const Rational scale = Rational(1) - eps;
    RadiiBundle out;
    out.u = u;
    out.v = v;
    out.epsilon = eps;
    out.r0 = detail::half_min_excess(s, pts, scale, u);
    out.s0 = detail::half_min_excess(s, pts, scale, v);
    if (out.r0 + out.s0 < scale * s.dist(u, v))
        throw internal_error("radii bound failed under a verified witness pair");
    Rational target = scale * scale * s.dist(u, v);
    out.r = std::min(out.r0, target);
    if (out.r == 0) {
        // Degenerate at u (some subset point too close); the symmetric
        // inequality guarantees room on the v side, so swap roles.
        out.swapped = true;
        std::swap(out.u, out.v);
        std::swap(out.r0, out.s0);
        out.r = std::min(out.r0, target);
        if (out.r == 0) throw internal_error("both bump radii degenerate");
    }
    out.s = target - out.r;
    if (out.s < 0 || out.s > out.s0) throw internal_error("bump radius s out of range");
    return out;
}

// The bump g: r - d(x,u) on B(u,r), d(x,v) - s on B(v,s), zero elsewhere.
// A radius-zero ball is empty. g has lip norm at most 1 and drop
// g(u) - g(v) = r + s across the witness pair.
inline LipschitzFunction build_bump(const PointedMetricSpace& s, const RadiiBundle& radii) {
    std::vector<PointId> ball_u = open_ball(s, radii.u, radii.r);
    std::vector<PointId> ball_v = open_ball(s, radii.v, radii.s);
    for (PointId p : ball_u) {
        if (p == s.base()) throw std::invalid_argument("base point inside the u bump ball");
    }
    for (PointId p : ball_v) {
        if (p == s.base()) throw std::invalid_argument("base point inside the v bump ball");
    }
    LipschitzFunction g = LipschitzFunction::zero(s);
    for (PointId p : ball_u) g.values[p.index] = radii.r - s.dist(p, radii.u);
    for (PointId p : ball_v) {
        if (g.values[p.index] != 0) throw internal_error("bump balls overlap");
        g.values[p.index] = s.dist(p, radii.v) - radii.s;
    }
    if (g.at(radii.u) - g.at(radii.v) != radii.r + radii.s)
        throw internal_error("bump drop is not r + s");
    if (lip_norm(s, g).value > 1) throw internal_error("bump exceeds the unit ball");
    return g;
}

// Window of admissible constant values on the bump support for one slice:
// anchors from h over N at u and v, shrunk by r and s respectively.
struct AdmissibleInterval {
    Rational a_lo, a_hi;  // max (h - d(.,u)), min (h + d(.,u)) over N
    Rational b_lo, b_hi;  // same at v
    Rational lo, hi;      // [max(a_lo+r, b_lo+s), min(a_hi-r, b_hi-s)], nonempty
    friend bool operator==(const AdmissibleInterval&, const AdmissibleInterval&) = default;
};

inline AdmissibleInterval admissible_interval(const PointedMetricSpace& s,
                                              const LipschitzFunction& h,
                                              std::vector<PointId> subset,
                                              const RadiiBundle& radii) {
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    const Rational scale = Rational(1) - radii.epsilon;
    if (lip_norm(s, restrict_to(s, h, pts)).value >= scale)
        throw std::invalid_argument("interior function is not strictly (1-eps)-Lipschitz on N");
    if (!check_ineq_ltp(s, pts, radii.epsilon, radii.u, radii.v).holds)
        throw std::invalid_argument("pair is not a long-trapezoid witness for this subset");

    AdmissibleInterval out;
    bool first = true;
    for (PointId x : pts) {
        Rational du = s.dist(x, radii.u);
        Rational dv = s.dist(x, radii.v);
        Rational lo_u = h.at(x) - du, hi_u = h.at(x) + du;
        Rational lo_v = h.at(x) - dv, hi_v = h.at(x) + dv;
        if (first) {
            out.a_lo = lo_u;
            out.a_hi = hi_u;
            out.b_lo = lo_v;
            out.b_hi = hi_v;
            first = false;
        } else {
            out.a_lo = std::max(out.a_lo, lo_u);
            out.a_hi = std::min(out.a_hi, hi_u);
            out.b_lo = std::max(out.b_lo, lo_v);
            out.b_hi = std::min(out.b_hi, hi_v);
        }
    }
    // Sharp bounds behind nonemptiness; each failure is impossible under the
    // preconditions just verified.
    if (out.a_hi - radii.r < out.a_lo + radii.r) throw internal_error("u-anchor window collapsed");
    if (out.b_hi - radii.s < out.b_lo + radii.s) throw internal_error("v-anchor window collapsed");
    if (out.a_hi - radii.r <= out.b_lo + radii.s) throw internal_error("anchor windows disjoint (u over v)");
    if (out.b_hi - radii.s <= out.a_lo + radii.r) throw internal_error("anchor windows disjoint (v over u)");
    out.lo = std::max(out.a_lo + radii.r, out.b_lo + radii.s);
    out.hi = std::min(out.a_hi - radii.r, out.b_hi - radii.s);
    if (out.lo > out.hi) throw internal_error("admissible interval empty");
    return out;
}

struct SliceVerification {
    LipschitzFunction interior;  // h: strictly inside the slice, norm < 1 - eps
    AdmissibleInterval interval;
    Rational center;           // chosen value on the bump support (midpoint)
    LipschitzFunction witness;  // f: h on N, center on the bump support, sup-extended
    Rational witness_norm;
    bool witness_in_ball = false;           // lip(f) <= 1
    SliceResult membership = SliceResult::NotInSlice;  // f in the slice
    Rational norm_plus, norm_minus;         // lip(f + g), lip(f - g)
    bool plus_in_ball = false, minus_in_ball = false;
    // Informational only: whether f +- g themselves land in the slice.
    SliceResult plus_membership = SliceResult::NotInSlice;
    SliceResult minus_membership = SliceResult::NotInSlice;
    friend bool operator==(const SliceVerification&, const SliceVerification&) = default;
};

struct ConstructionReport {
    std::vector<PointId> subset;  // N = {base} union slice supports
    Rational epsilon;
    Rational target;  // (1 - eps)^2, the guaranteed bump norm
    bool witness_found = false;
    // Everything below is meaningful only when witness_found:
    RadiiBundle radii;
    LipschitzFunction bump;
    Rational bump_norm;
    bool bump_in_ball = false, bump_reaches_target = false;
    std::vector<SliceVerification> slices;
    bool pass = false;  // witness found and every check above true
    friend bool operator==(const ConstructionReport&, const ConstructionReport&) = default;
};

// Runs the full construction: one common bump g and, per slice, a witness
// function f agreeing with an interior function on N and constant on the
// bump support, extended to the whole space. When it passes, every f lies in
// its slice while f + g and f - g stay in the unit ball, certifying the slices
// jointly contain functions that move by g in both directions.
inline ConstructionReport build_symmetric_witnesses(const PointedMetricSpace& s,
                                                    const std::vector<WeakStarSlice>& slices,
                                                    const Rational& eps) {
    if (slices.empty()) throw std::invalid_argument("need at least one slice");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
    for (const auto& slice : slices) {
        if (eps >= slice.alpha)
            throw std::invalid_argument("epsilon must be smaller than every alpha");
    }

    ConstructionReport report;
    report.epsilon = eps;
    report.target = (Rational(1) - eps) * (Rational(1) - eps);
    {
        std::vector<PointId> n{s.base()};
        for (const auto& slice : slices) {
            for (PointId p : slice.functional.support()) n.push_back(p);
        }
        report.subset = detail::canonical_subset(s, std::move(n));
    }

    std::vector<LipschitzFunction> interiors;
    interiors.reserve(slices.size());
    for (const auto& slice : slices) interiors.push_back(pick_interior_function(s, slice, eps));

    auto witness = find_witness(s, {report.subset, eps, {}}, TrapezoidMode::Sltp);
    if (!witness) return report;  // outcome: no witness pair at this epsilon
    report.witness_found = true;

    report.radii = compute_radii(s, report.subset, eps, witness->u, witness->v);
    report.bump = build_bump(s, report.radii);
    report.bump_norm = lip_norm(s, report.bump).value;
    report.bump_in_ball = report.bump_norm <= 1;
    report.bump_reaches_target = report.bump_norm >= report.target;

    std::vector<PointId> support;  // L = N union both bump balls
    {
        support = report.subset;
        for (PointId p : open_ball(s, report.radii.u, report.radii.r)) support.push_back(p);
        for (PointId p : open_ball(s, report.radii.v, report.radii.s)) support.push_back(p);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
    }
    for (PointId p : report.subset) {
        if (s.dist(p, report.radii.u) < report.radii.r ||
            s.dist(p, report.radii.v) < report.radii.s)
            throw internal_error("bump support meets the anchor subset");
    }
    PartialFunction weight = restrict_to(s, abs_of(report.bump), support);

    for (std::size_t i = 0; i < slices.size(); ++i) {
        SliceVerification sv;
        sv.interior = interiors[i];
        sv.interval = admissible_interval(s, sv.interior, report.subset, report.radii);
        sv.center = (sv.interval.lo + sv.interval.hi) / 2;
        // center stays clear of the anchors by a full radius on each side
        if (sv.center - report.radii.r < sv.interval.a_lo ||
            sv.center + report.radii.r > sv.interval.a_hi ||
            sv.center - report.radii.s < sv.interval.b_lo ||
            sv.center + report.radii.s > sv.interval.b_hi)
            throw internal_error("chosen center violates the anchor chain");

        PartialFunction partial = PartialFunction::empty(s);
        for (PointId p : support) {
            bool in_n = std::binary_search(report.subset.begin(), report.subset.end(), p);
            partial.set(p, in_n ? sv.interior.at(p) : sv.center);
        }
        // On L the witness must tolerate the bump in either direction, with
        // and without sign, before extension makes that global.
        for (bool plus : {false, true}) {
            for (bool absolute : {false, true}) {
                PartialFunction probe = partial;
                for (PointId p : support) {
                    Rational b = report.bump.at(p);
                    if (absolute && b < 0) b = -b;
                    probe.set(p, probe.at(p) + (plus ? b : -b));
                }
                if (lip_norm(s, probe).value > 1)
                    throw internal_error("pre-extension bound failed on the support");
            }
        }

        sv.witness = sup_extend(s, partial, weight);
        sv.witness_norm = lip_norm(s, sv.witness).value;
        sv.witness_in_ball = sv.witness_norm <= 1;
        sv.membership = slice_contains(s, slices[i], sv.witness);
        LipschitzFunction up = add(sv.witness, report.bump);
        LipschitzFunction down = sub(sv.witness, report.bump);
        sv.norm_plus = lip_norm(s, up).value;
        sv.norm_minus = lip_norm(s, down).value;
        sv.plus_in_ball = sv.norm_plus <= 1;
        sv.minus_in_ball = sv.norm_minus <= 1;
        sv.plus_membership = slice_contains(s, slices[i], up);
        sv.minus_membership = slice_contains(s, slices[i], down);
        report.slices.push_back(std::move(sv));
    }

    report.pass = report.bump_in_ball && report.bump_reaches_target;
    for (const auto& sv : report.slices) {
        report.pass = report.pass && sv.witness_in_ball && sv.membership == SliceResult::InSlice &&
                      sv.plus_in_ball && sv.minus_in_ball;
    }
    return report;
}

// First ordered pair (lexicographic) across which g drops steeply enough:
// g(u) - g(v) >= (1 - alpha) d(u, v). Requires lip(g) >= 1 - alpha, which
// guarantees such a pair exists.
inline std::pair<PointId, PointId> extract_witness_pair(const PointedMetricSpace& s,
                                                        const LipschitzFunction& g,
                                                        const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
    if (lip_norm(s, g).value < Rational(1) - alpha)
        throw std::invalid_argument("function norm below 1 - alpha; no steep pair promised");
    const Rational scale = Rational(1) - alpha;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
        for (std::uint32_t j = 0; j < s.size(); ++j) {
            if (i == j) continue;
            PointId u{i}, v{j};
            if (g.at(u) - g.at(v) >= scale * s.dist(u, v)) return {u, v};
        }
    }
    throw internal_error("no steep pair despite sufficient norm");
}

}  // namespace sltp
