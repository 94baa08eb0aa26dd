#pragma once

#include <algorithm>
#include <vector>

#include "sltp/lipschitz.hpp"
#include "sltp/metric_space.hpp"

namespace sltp {

struct MoleculeTerm {
    PointId point;
    Rational coeff;
    friend bool operator==(const MoleculeTerm&, const MoleculeTerm&) = default;
};

// Finitely supported functional sum(coeff_j * delta_{point_j}). Terms are kept
// canonical: sorted by point index, merged, zero coefficients dropped. The
// delta at the base point is the zero functional, but base terms are kept as
// written; they simply contribute nothing to pairings or norms.
struct Molecule {
    std::vector<MoleculeTerm> terms;

    static Molecule from_terms(const PointedMetricSpace& s, std::vector<MoleculeTerm> raw) {
        for (const auto& t : raw) {
            if (t.point.index >= s.size())
                throw std::invalid_argument("molecule term outside the space");
        }
        std::sort(raw.begin(), raw.end(),
                  [](const MoleculeTerm& a, const MoleculeTerm& b) { return a.point < b.point; });
        Molecule m;
        for (auto& t : raw) {
            if (!m.terms.empty() && m.terms.back().point == t.point) {
                m.terms.back().coeff += t.coeff;
                if (m.terms.back().coeff == 0) m.terms.pop_back();
            } else if (t.coeff != 0) {
                m.terms.push_back(std::move(t));
            }
        }
        return m;
    }

    std::vector<PointId> support() const {
        std::vector<PointId> out;
        out.reserve(terms.size());
        for (const auto& t : terms) out.push_back(t.point);
        return out;
    }

    friend bool operator==(const Molecule&, const Molecule&) = default;
};

// (delta_x - delta_y) / d(x, y); the building block with norm exactly 1.
inline Molecule pair_molecule(const PointedMetricSpace& s, PointId x, PointId y) {
    if (x == y) throw std::invalid_argument("pair_molecule needs two distinct points");
    const Rational& d = s.dist(x, y);
    if (d == 0) throw std::invalid_argument("pair_molecule at distance zero");
    return Molecule::from_terms(s, {{x, Rational(1) / d}, {y, Rational(-1) / d}});
}

// <f, mu> = sum coeff_j * f(point_j)
inline Rational evaluate_pairing(const LipschitzFunction& f, const Molecule& mu) {
    Rational out = 0;
    for (const auto& t : mu.terms) out += t.coeff * f.at(t.point);
    return out;
}

}  // namespace sltp
