#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sltp/metric_space.hpp"

namespace sltp {

// The two inequalities, for a candidate pair (u, v) and a finite subset N:
//
//   long trapezoid:       (1-eps) * (d(x,y) + d(u,v)) <= d(x,u) + d(y,v)
//                         for all x, y in N (x = y allowed);
//
//   symmetric trapezoid:  (1-eps) * (2 d(u,v) + d(x,y) + d(z,w))
//                             <= d(x,u) + d(y,u) + d(z,v) + d(w,v)
//                         for all x, y, z, w in N.
//
// "SLTP" below always means the conjunction of both.

struct PairTuple {
    PointId x, y;
    friend bool operator==(const PairTuple&, const PairTuple&) = default;
};

struct QuadTuple {
    PointId x, y, z, w;
    friend bool operator==(const QuadTuple&, const QuadTuple&) = default;
};

struct TrapezoidCheck {
    bool holds = false;
    Rational slack;  // min over tuples of (rhs - scaled lhs); >= 0 iff holds
    // Tuple attaining the minimum slack, first in lexicographic order; for the
    // combined check, taken from the binding inequality.
    std::variant<PairTuple, QuadTuple> worst;
    friend bool operator==(const TrapezoidCheck&, const TrapezoidCheck&) = default;
};

enum class TrapezoidMode { Ltp, Sltp };

inline const char* to_string(TrapezoidMode m) {
    return m == TrapezoidMode::Ltp ? "ltp" : "sltp";
}

namespace detail {

inline std::vector<PointId> canonical_subset(const PointedMetricSpace& s,
                                             std::vector<PointId> subset) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.back().index >= s.size())
        throw std::invalid_argument("subset point outside the space");
    return subset;
}

inline void check_pair_args(const PointedMetricSpace& s, PointId u, PointId v) {
    if (u.index >= s.size() || v.index >= s.size())
        throw std::invalid_argument("candidate point outside the space");
    if (u == v) throw std::invalid_argument("candidate pair must be two distinct points");
    if (s.dist(u, v) == 0) throw std::invalid_argument("candidate pair at distance zero");
}

inline void check_epsilon(const Rational& eps) {
    if (eps < 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in [0, 1)");
}

}  // namespace detail

inline TrapezoidCheck check_ineq_ltp(const PointedMetricSpace& s, std::vector<PointId> subset,
                                     const Rational& eps, PointId u, PointId v) {
    detail::check_pair_args(s, u, v);
    detail::check_epsilon(eps);
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    const Rational scale = Rational(1) - eps;
    const Rational& duv = s.dist(u, v);
    TrapezoidCheck out;
    bool first = true;
    for (PointId x : pts) {
        for (PointId y : pts) {
            Rational slack = s.dist(x, u) + s.dist(y, v) - scale * (s.dist(x, y) + duv);
            if (first || slack < out.slack) {
                out.slack = std::move(slack);
                out.worst = PairTuple{x, y};
                first = false;
            }
        }
    }
    out.holds = out.slack >= 0;
    return out;
}

namespace detail {

// scale * d(x, y) for every subset pair, row-major in pts order. Independent
// of the candidate pair, so a witness search computes it once.
inline std::vector<Rational> scaled_gaps(const PointedMetricSpace& s,
                                         const std::vector<PointId>& pts, const Rational& scale) {
    const std::size_t k = pts.size();
    std::vector<Rational> out(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out[i * k + j] = scale * s.dist(pts[i], pts[j]);
    }
    return out;
}

// min over (x, y) in N^2 of d(x, c) + d(y, c) - scale * d(x, y), with the
// first minimizing pair in lexicographic order. This is one independent half
// of the quadruple inequality; it also sets the bump radius bound at c.
struct AnchorMin {
    Rational value;
    PointId x, y;
};

inline AnchorMin anchor_min(const PointedMetricSpace& s, const std::vector<PointId>& pts,
                            const std::vector<Rational>& gaps, PointId c) {
    const std::size_t k = pts.size();
    AnchorMin out{Rational(0), pts.front(), pts.front()};
    bool first = true;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& dx = s.dist(pts[i], c);
        for (std::size_t j = 0; j < k; ++j) {
            Rational value = dx + s.dist(pts[j], c) - gaps[i * k + j];
            if (first || value < out.value) {
                out.value = std::move(value);
                out.x = pts[i];
                out.y = pts[j];
                first = false;
            }
        }
    }
    return out;
}

inline AnchorMin anchor_min(const PointedMetricSpace& s, const std::vector<PointId>& pts,
                            const Rational& scale, PointId c) {
    return anchor_min(s, pts, scaled_gaps(s, pts, scale), c);
}

}  // namespace detail

// The quadruple slack splits into independent halves at u and at v:
//   slack(x,y,z,w) = [d(x,u)+d(y,u)-s*d(x,y)] + [d(z,v)+d(w,v)-s*d(z,w)]
//                    - 2s*d(u,v),
// so the minimum is the sum of the two pair minima, and the lexicographically
// first minimizing quadruple is the pair of first minimizing pairs.
inline TrapezoidCheck check_ineq_sym(const PointedMetricSpace& s, std::vector<PointId> subset,
                                     const Rational& eps, PointId u, PointId v) {
    detail::check_pair_args(s, u, v);
    detail::check_epsilon(eps);
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    const Rational scale = Rational(1) - eps;
    std::vector<Rational> gaps = detail::scaled_gaps(s, pts, scale);
    detail::AnchorMin at_u = detail::anchor_min(s, pts, gaps, u);
    detail::AnchorMin at_v = detail::anchor_min(s, pts, gaps, v);
    TrapezoidCheck out;
    out.slack = at_u.value + at_v.value - scale * (Rational(2) * s.dist(u, v));
    out.worst = QuadTuple{at_u.x, at_u.y, at_v.x, at_v.y};
    out.holds = out.slack >= 0;
    return out;
}

// Conjunction of both inequalities. The reported slack is the smaller of the
// two minima; ties prefer the long-trapezoid tuple.
inline TrapezoidCheck check_sltp(const PointedMetricSpace& s, std::vector<PointId> subset,
                                 const Rational& eps, PointId u, PointId v) {
    TrapezoidCheck ltp = check_ineq_ltp(s, subset, eps, u, v);
    TrapezoidCheck sym = check_ineq_sym(s, std::move(subset), eps, u, v);
    TrapezoidCheck out = (sym.slack < ltp.slack) ? std::move(sym) : std::move(ltp);
    out.holds = out.slack >= 0;
    return out;
}

namespace detail {

// Fast holds-only variant: stops at the first violated pair.
inline bool holds_sltp(const PointedMetricSpace& s, const std::vector<PointId>& pts,
                       const std::vector<Rational>& gaps, const Rational& scale, PointId u,
                       PointId v, TrapezoidMode mode) {
    const std::size_t k = pts.size();
    const Rational threshold = scale * s.dist(u, v);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& dxu = s.dist(pts[i], u);
        for (std::size_t j = 0; j < k; ++j) {
            if (dxu + s.dist(pts[j], v) - gaps[i * k + j] < threshold) return false;
        }
    }
    if (mode == TrapezoidMode::Ltp) return true;
    // holds iff every v-half value covers what the u-half minimum leaves of
    // 2 * scale * d(u,v), so the second scan can stop at the first shortfall
    Rational need = threshold + threshold - anchor_min(s, pts, gaps, u).value;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& dzv = s.dist(pts[i], v);
        for (std::size_t j = 0; j < k; ++j) {
            if (dzv + s.dist(pts[j], v) - gaps[i * k + j] < need) return false;
        }
    }
    return true;
}

}  // namespace detail

// Smallest eps in [0, 1) making each inequality hold for (N, u, v); the
// checks are monotone in eps, so these are exact thresholds.
struct RequiredEpsilon {
    Rational ltp;   // long trapezoid alone
    Rational sym;   // symmetric inequality alone
    Rational sltp;  // the conjunction: max(ltp, sym)
    friend bool operator==(const RequiredEpsilon&, const RequiredEpsilon&) = default;
};

inline RequiredEpsilon required_epsilon(const PointedMetricSpace& s, std::vector<PointId> subset,
                                        PointId u, PointId v) {
    detail::check_pair_args(s, u, v);
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    const Rational& duv = s.dist(u, v);
    RequiredEpsilon out{Rational(0), Rational(0), Rational(0)};
    for (PointId x : pts) {
        for (PointId y : pts) {
            // lhs > 0 always: d(u,v) > 0 in a valid space
            Rational ratio = Rational(1) - (s.dist(x, u) + s.dist(y, v)) / (s.dist(x, y) + duv);
            if (ratio > out.ltp) out.ltp = std::move(ratio);
        }
    }
    const Rational duv2 = Rational(2) * duv;
    for (PointId x : pts) {
        for (PointId y : pts) {
            Rational half_u = s.dist(x, u) + s.dist(y, u);
            for (PointId z : pts) {
                for (PointId w : pts) {
                    Rational ratio = Rational(1) - (half_u + s.dist(z, v) + s.dist(w, v)) /
                                                       (duv2 + s.dist(x, y) + s.dist(z, w));
                    if (ratio > out.sym) out.sym = std::move(ratio);
                }
            }
        }
    }
    out.sltp = std::max(out.ltp, out.sym);
    return out;
}

struct WitnessQuery {
    std::vector<PointId> subset;
    Rational epsilon;
    // Unordered candidate pairs; empty means every pair of the space.
    std::vector<std::pair<PointId, PointId>> candidates;
};

struct WitnessResult {
    PointId u, v;
    TrapezoidCheck check;
    friend bool operator==(const WitnessResult&, const WitnessResult&) = default;
};

namespace detail {

inline std::vector<std::pair<PointId, PointId>> all_pairs(const PointedMetricSpace& s) {
    std::vector<std::pair<PointId, PointId>> out;
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) out.push_back({PointId{i}, PointId{j}});
    }
    return out;
}

inline std::vector<std::pair<PointId, PointId>> candidate_pairs(const PointedMetricSpace& s,
                                                                const WitnessQuery& q) {
    std::vector<std::pair<PointId, PointId>> pairs =
        q.candidates.empty() ? all_pairs(s) : q.candidates;
    for (auto& [u, v] : pairs) {
        check_pair_args(s, u, v);
        if (v < u) std::swap(u, v);
    }
    if (!q.candidates.empty()) {
        // generated pairs are already sorted and distinct
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    return pairs;
}

}  // namespace detail

// First candidate pair (lexicographic by point index) passing the check.
inline std::optional<WitnessResult> find_witness(const PointedMetricSpace& s,
                                                 const WitnessQuery& q, TrapezoidMode mode) {
    detail::check_epsilon(q.epsilon);
    std::vector<PointId> pts = detail::canonical_subset(s, q.subset);
    const Rational scale = Rational(1) - q.epsilon;
    const std::vector<Rational> gaps = detail::scaled_gaps(s, pts, scale);
    for (auto [u, v] : detail::candidate_pairs(s, q)) {
        if (!detail::holds_sltp(s, pts, gaps, scale, u, v, mode)) continue;
        TrapezoidCheck check = mode == TrapezoidMode::Ltp
                                   ? check_ineq_ltp(s, pts, q.epsilon, u, v)
                                   : check_sltp(s, pts, q.epsilon, u, v);
        if (!check.holds) throw internal_error("witness fast path disagrees with full check");
        return WitnessResult{u, v, std::move(check)};
    }
    return std::nullopt;
}

struct ScanVerdictWitness {
    PointId u, v;
    friend bool operator==(const ScanVerdictWitness&, const ScanVerdictWitness&) = default;
};

struct ScanVerdictAllFail {
    Rational min_required_epsilon;  // over all scanned pairs, for the scanned mode
    friend bool operator==(const ScanVerdictAllFail&, const ScanVerdictAllFail&) = default;
};

struct ScanPairResult {
    PointId u, v;
    TrapezoidCheck check;
    RequiredEpsilon required;
    friend bool operator==(const ScanPairResult&, const ScanPairResult&) = default;
};

struct ScanReport {
    std::vector<ScanPairResult> pairs;  // lexicographic order
    std::variant<ScanVerdictWitness, ScanVerdictAllFail> verdict;
    // The verdict speaks for the scanned finite space only. For a truncation
    // of a parametrized family it extends to the family exactly when every
    // fresh index is isometric to a scanned one; that premise is recorded
    // here rather than silently assumed.
    std::string scope_note;
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

inline constexpr const char* kScanScopeNote =
    "exhaustive over the scanned pairs of this finite space; "
    "extension to a parametrized family assumes fresh indices are isometric";

// Exhaustive scan over every pair of the space (u < v): per-pair check plus
// exact epsilon thresholds, and an overall verdict.
inline ScanReport counterexample_scan(const PointedMetricSpace& s, std::vector<PointId> subset,
                                      const Rational& eps, TrapezoidMode mode) {
    detail::check_epsilon(eps);
    if (s.size() < 2) throw std::invalid_argument("scan needs at least two points");
    std::vector<PointId> pts = detail::canonical_subset(s, std::move(subset));
    ScanReport report;
    report.scope_note = kScanScopeNote;
    std::optional<ScanVerdictWitness> witness;
    std::optional<Rational> min_required;
    for (auto [u, v] : detail::all_pairs(s)) {
        ScanPairResult row{u, v, {}, required_epsilon(s, pts, u, v)};
        row.check = mode == TrapezoidMode::Ltp ? check_ineq_ltp(s, pts, eps, u, v)
                                               : check_sltp(s, pts, eps, u, v);
        const Rational& needed = mode == TrapezoidMode::Ltp ? row.required.ltp : row.required.sltp;
        if (!min_required || needed < *min_required) min_required = needed;
        if (row.check.holds && !witness) witness = ScanVerdictWitness{u, v};
        report.pairs.push_back(std::move(row));
    }
    if (witness) {
        report.verdict = *witness;
    } else {
        if (!min_required) throw internal_error("scan saw no pairs");
        report.verdict = ScanVerdictAllFail{std::move(*min_required)};
    }
    return report;
}

}  // namespace sltp
