#pragma once

#include <utility>

#include "sltp/lipschitz.hpp"
#include "sltp/molecule.hpp"
#include "sltp/transport.hpp"

namespace sltp {

// Weak-star slice of the unit ball of the Lipschitz dual:
//   { f : lip(f) <= 1 and <mu, f> > (1 - alpha) * norm(mu) }.
// The molecule is kept unnormalized; its exact norm is computed once here.
struct WeakStarSlice {
    Molecule functional;
    Rational functional_norm;
    Rational alpha;  // in (0, 1]
    friend bool operator==(const WeakStarSlice&, const WeakStarSlice&) = default;
};

inline WeakStarSlice make_slice(const PointedMetricSpace& s, Molecule functional, Rational alpha) {
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
    Rational norm = molecule_norm(s, functional).norm;
    if (norm == 0) throw std::invalid_argument("slice functional has norm zero");
    return {std::move(functional), std::move(norm), std::move(alpha)};
}

enum class SliceResult {
    InSlice,
    NotInSlice,       // in the unit ball, pairing not above the threshold
    OutsideUnitBall,  // lip norm exceeds 1; membership is not even in question
};

inline const char* to_string(SliceResult r) {
    switch (r) {
        case SliceResult::InSlice: return "in-slice";
        case SliceResult::NotInSlice: return "not-in-slice";
        case SliceResult::OutsideUnitBall: return "outside-unit-ball";
    }
    return "?";
}

// Strict inequality; a pairing exactly at the threshold is not inside.
inline SliceResult slice_contains(const PointedMetricSpace& s, const WeakStarSlice& slice,
                                  const LipschitzFunction& f) {
    if (lip_norm(s, f).value > 1) return SliceResult::OutsideUnitBall;
    Rational pairing = evaluate_pairing(f, slice.functional);
    Rational threshold = (Rational(1) - slice.alpha) * slice.functional_norm;
    return pairing > threshold ? SliceResult::InSlice : SliceResult::NotInSlice;
}

}  // namespace sltp
