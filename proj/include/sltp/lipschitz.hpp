#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sltp/errors.hpp"
#include "sltp/metric_space.hpp"

namespace sltp {

// A real function on every point of a space, vanishing at the base point.
struct LipschitzFunction {
    std::vector<Rational> values;  // indexed by PointId::index

    static LipschitzFunction zero(const PointedMetricSpace& s) {
        return {std::vector<Rational>(s.size(), Rational(0))};
    }

    static LipschitzFunction from_values(const PointedMetricSpace& s,
                                         std::vector<Rational> values) {
        if (values.size() != s.size())
            throw std::invalid_argument("function has wrong number of values");
        if (values[s.base().index] != 0)
            throw std::invalid_argument("function must vanish at the base point");
        return {std::move(values)};
    }

    // f = d(., base)
    static LipschitzFunction distance_to_base(const PointedMetricSpace& s) {
        std::vector<Rational> v(s.size());
        for (std::uint32_t i = 0; i < s.size(); ++i) v[i] = s.dist(PointId{i}, s.base());
        return {std::move(v)};
    }

    const Rational& at(PointId p) const { return values.at(p.index); }

    friend bool operator==(const LipschitzFunction&, const LipschitzFunction&) = default;
};

inline LipschitzFunction add(const LipschitzFunction& f, const LipschitzFunction& g) {
    if (f.values.size() != g.values.size()) throw std::invalid_argument("size mismatch");
    LipschitzFunction out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += g.values[i];
    return out;
}

inline LipschitzFunction sub(const LipschitzFunction& f, const LipschitzFunction& g) {
    if (f.values.size() != g.values.size()) throw std::invalid_argument("size mismatch");
    LipschitzFunction out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= g.values[i];
    return out;
}

inline LipschitzFunction scale(const LipschitzFunction& f, const Rational& t) {
    LipschitzFunction out = f;
    for (auto& v : out.values) v *= t;
    return out;
}

inline LipschitzFunction abs_of(const LipschitzFunction& f) {
    LipschitzFunction out = f;
    for (auto& v : out.values) {
        if (v < 0) v = -v;
    }
    return out;
}

// A function defined on a subset of the points only.
struct PartialFunction {
    std::vector<std::optional<Rational>> values;  // nullopt = outside domain

    static PartialFunction empty(const PointedMetricSpace& s) {
        return {std::vector<std::optional<Rational>>(s.size())};
    }

    bool contains(PointId p) const { return p.index < values.size() && values[p.index].has_value(); }

    const Rational& at(PointId p) const {
        if (!contains(p)) throw std::invalid_argument("point outside partial function domain");
        return *values[p.index];
    }

    void set(PointId p, Rational v) { values.at(p.index) = std::move(v); }

    std::vector<PointId> domain() const {
        std::vector<PointId> out;
        for (std::uint32_t i = 0; i < values.size(); ++i) {
            if (values[i]) out.push_back(PointId{i});
        }
        return out;
    }

    friend bool operator==(const PartialFunction&, const PartialFunction&) = default;
};

inline PartialFunction restrict_to(const PointedMetricSpace& s, const LipschitzFunction& f,
                                   const std::vector<PointId>& subset) {
    PartialFunction out = PartialFunction::empty(s);
    for (PointId p : subset) out.set(p, f.at(p));
    return out;
}

struct LipNormResult {
    Rational value;
    // First pair (in index order) attaining the max quotient; absent when the
    // domain has fewer than two points.
    std::optional<std::pair<PointId, PointId>> attained_at;
    friend bool operator==(const LipNormResult&, const LipNormResult&) = default;
};

namespace detail {

template <typename ValueAt>
LipNormResult lip_norm_over(const PointedMetricSpace& s, const std::vector<PointId>& pts,
                            ValueAt&& value_at) {
    LipNormResult result{Rational(0), std::nullopt};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Rational& d = s.dist(pts[i], pts[j]);
            if (d == 0) continue;  // validation problem; a quotient is undefined here
            Rational diff = value_at(pts[i]) - value_at(pts[j]);
            if (diff < 0) diff = -diff;
            Rational q = diff / d;
            if (!result.attained_at || q > result.value) {
                result.value = std::move(q);
                result.attained_at = {pts[i], pts[j]};
            }
        }
    }
    return result;
}

}  // namespace detail

inline LipNormResult lip_norm(const PointedMetricSpace& s, const LipschitzFunction& f) {
    if (f.values.size() != s.size()) throw std::invalid_argument("function/space size mismatch");
    return detail::lip_norm_over(s, s.points(), [&](PointId p) -> const Rational& { return f.at(p); });
}

// Convention: a domain with fewer than two points has norm 0.
inline LipNormResult lip_norm(const PointedMetricSpace& s, const PartialFunction& f) {
    if (f.values.size() != s.size()) throw std::invalid_argument("function/space size mismatch");
    return detail::lip_norm_over(s, f.domain(), [&](PointId p) -> const Rational& { return f.at(p); });
}

// Extends f from its domain L to the whole space by
//   F(y) = max_{x in L} ( f(x) + |weight(x)| - d(x, y) )   for y outside L,
// keeping F = f on L. Requires base in L, f(base) = 0, and f + |weight|
// 1-Lipschitz on L; under these the result has Lipschitz norm at most 1.
inline LipschitzFunction sup_extend(const PointedMetricSpace& s, const PartialFunction& f,
                                    const PartialFunction& weight) {
    if (f.values.size() != s.size() || weight.values.size() != s.size())
        throw std::invalid_argument("function/space size mismatch");
    std::vector<PointId> domain = f.domain();
    if (domain.empty()) throw std::invalid_argument("sup_extend needs a nonempty domain");
    if (weight.domain() != domain)
        throw std::invalid_argument("weight domain must equal the function domain");
    if (!f.contains(s.base())) throw std::invalid_argument("domain must contain the base point");
    if (f.at(s.base()) != 0) throw std::invalid_argument("function must vanish at the base point");

    std::vector<Rational> lifted(s.size());  // f + |weight|, meaningful on the domain only
    for (PointId p : domain) {
        Rational w = weight.at(p);
        if (w < 0) w = -w;
        lifted[p.index] = f.at(p) + w;
    }
    auto combined = detail::lip_norm_over(
        s, domain, [&](PointId p) -> const Rational& { return lifted[p.index]; });
    if (combined.value > 1)
        throw std::invalid_argument("f + |weight| is not 1-Lipschitz on the domain");

    LipschitzFunction out = LipschitzFunction::zero(s);
    for (std::uint32_t y = 0; y < s.size(); ++y) {
        if (f.contains(PointId{y})) {
            out.values[y] = f.at(PointId{y});
            continue;
        }
        std::optional<Rational> best;
        for (PointId x : domain) {
            Rational candidate = lifted[x.index] - s.dist(x, PointId{y});
            if (!best || candidate > *best) best = std::move(candidate);
        }
        out.values[y] = std::move(*best);
    }
    return out;
}

}  // namespace sltp
