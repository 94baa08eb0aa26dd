#pragma once

#include <cstddef>
#include <vector>

#include "sltp/lipschitz.hpp"
#include "sltp/metric_space.hpp"
#include "sltp/molecule.hpp"

namespace sltp {

struct MoleculeNormResult {
    Rational norm;
    // 1-Lipschitz, vanishes at base, pairs with the molecule to exactly
    // `norm`; a certificate that the norm is not smaller than reported.
    LipschitzFunction optimizer;
    friend bool operator==(const MoleculeNormResult&, const MoleculeNormResult&) = default;
};

namespace detail {

// Exact network simplex for the uncapacitated min-cost flow problem on the
// complete digraph over all points, arc cost = distance. Supplies must sum
// to zero. Returns the optimal cost and node potentials normalized to zero
// at `root`. With metric costs the optimum equals the cost of an optimal
// direct transport between positive and negative supplies, and reduced-cost
// optimality makes the potentials 1-Lipschitz.
class TransportSimplex {
  public:
    TransportSimplex(const PointedMetricSpace& s, std::vector<Rational> supply,
                     std::uint32_t root)
        : s_(s), n_(static_cast<std::uint32_t>(s.size())), root_(root),
          parent_(n_, kNone), up_(n_, true), flow_(n_), pot_(n_), depth_(n_, 0) {
        // Initial basis: the star rooted at `root`; every node ships its
        // supply straight to the root.
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (v == root_) continue;
            parent_[v] = root_;
            if (supply[v] >= 0) {
                up_[v] = true;
                flow_[v] = supply[v];
            } else {
                up_[v] = false;
                flow_[v] = -supply[v];
            }
        }
        supply_ = std::move(supply);
    }

    void solve() {
        // Bland's pricing (first arc in the fixed (a,b) order with negative
        // reduced cost) keeps degenerate pivots from cycling.
        std::size_t guard = 0;
        const std::size_t guard_limit = 1'000'000;
        for (;;) {
            refresh_potentials();
            bool improved = false;
            for (std::uint32_t a = 0; a < n_ && !improved; ++a) {
                for (std::uint32_t b = 0; b < n_; ++b) {
                    if (a == b) continue;
                    // reduced cost of arc a->b
                    if (s_.dist(PointId{a}, PointId{b}) - pot_[a] + pot_[b] < 0) {
                        pivot(a, b);
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) break;
            if (++guard > guard_limit) throw internal_error("transport solver failed to converge");
        }
    }

    Rational optimal_cost() const {
        Rational total = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (v == root_) continue;
            total += flow_[v] * s_.dist(PointId{v}, PointId{parent_[v]});
        }
        return total;
    }

    // Also the dual objective; equals optimal_cost() at termination.
    Rational dual_value() const {
        Rational total = 0;
        for (std::uint32_t v = 0; v < n_; ++v) total += supply_[v] * pot_[v];
        return total;
    }

    const std::vector<Rational>& potentials() const { return pot_; }

  private:
    static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    void refresh_potentials() {
        std::vector<std::vector<std::uint32_t>> children(n_);
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (v != root_) children[parent_[v]].push_back(v);
        }
        pot_[root_] = 0;
        depth_[root_] = 0;
        std::vector<std::uint32_t> stack{root_};
        std::size_t seen = 0;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            ++seen;
            for (std::uint32_t c : children[x]) {
                const Rational& d = s_.dist(PointId{c}, PointId{x});
                // basic arcs price to zero: pot[tail] - pot[head] = cost
                pot_[c] = pot_[x];
                if (up_[c]) {
                    pot_[c] += d;
                } else {
                    pot_[c] -= d;
                }
                depth_[c] = depth_[x] + 1;
                stack.push_back(c);
            }
        }
        if (seen != n_) throw internal_error("transport basis is not a spanning tree");
    }

    std::vector<std::uint32_t> path_to_ancestor(std::uint32_t from, std::uint32_t ancestor) const {
        std::vector<std::uint32_t> path;
        for (std::uint32_t x = from; x != ancestor; x = parent_[x]) {
            path.push_back(x);
            if (x == root_) throw internal_error("lost tree ancestor");
        }
        return path;
    }

    void pivot(std::uint32_t a, std::uint32_t b) {
        // Entering arc a->b closes a cycle with the tree path b .. lca .. a.
        std::uint32_t x = a, y = b;
        while (depth_[x] > depth_[y]) x = parent_[x];
        while (depth_[y] > depth_[x]) y = parent_[y];
        while (x != y) {
            x = parent_[x];
            y = parent_[y];
        }
        const std::uint32_t lca = x;
        std::vector<std::uint32_t> a_side = path_to_ancestor(a, lca);  // traversed lca->a
        std::vector<std::uint32_t> b_side = path_to_ancestor(b, lca);  // traversed b->lca

        // An edge opposes the cycle direction iff pushing flow drains it.
        auto opposes = [&](std::uint32_t child, bool on_a_side) {
            return on_a_side ? up_[child] : !up_[child];
        };

        bool have_theta = false;
        Rational theta;
        std::uint32_t leaving = kNone;
        std::uint64_t leaving_arc = 0;
        auto arc_id = [&](std::uint32_t child) {
            std::uint64_t tail = up_[child] ? child : parent_[child];
            std::uint64_t head = up_[child] ? parent_[child] : child;
            return tail * n_ + head;
        };
        auto consider = [&](std::uint32_t child, bool on_a_side) {
            if (!opposes(child, on_a_side)) return;
            if (!have_theta || flow_[child] < theta ||
                (flow_[child] == theta && arc_id(child) < leaving_arc)) {
                theta = flow_[child];
                leaving = child;
                leaving_arc = arc_id(child);
                have_theta = true;
            }
        };
        for (std::uint32_t child : a_side) consider(child, true);
        for (std::uint32_t child : b_side) consider(child, false);
        if (!have_theta) throw internal_error("transport pivot found no leaving arc");

        auto push = [&](std::uint32_t child, bool on_a_side) {
            if (opposes(child, on_a_side)) {
                flow_[child] -= theta;
            } else {
                flow_[child] += theta;
            }
        };
        for (std::uint32_t child : a_side) push(child, true);
        for (std::uint32_t child : b_side) push(child, false);

        // The leaving edge splits off the subtree holding one endpoint of the
        // entering arc; re-root that subtree at the endpoint and hang it on
        // the other one.
        bool leaving_on_a_side = false;
        for (std::uint32_t child : a_side) {
            if (child == leaving) {
                leaving_on_a_side = true;
                break;
            }
        }
        std::uint32_t e = leaving_on_a_side ? a : b;
        std::vector<std::uint32_t> chain = path_to_ancestor(e, leaving);
        chain.push_back(leaving);
        // Reverse parent pointers along e .. leaving.
        for (std::size_t i = chain.size(); i-- > 1;) {
            std::uint32_t node = chain[i];
            std::uint32_t new_parent = chain[i - 1];
            parent_[node] = new_parent;
            up_[node] = !up_[new_parent];
            flow_[node] = flow_[new_parent];
        }
        parent_[e] = (e == a) ? b : a;
        up_[e] = (e == a);  // entering arc runs a->b
        flow_[e] = theta;
    }

    const PointedMetricSpace& s_;
    std::uint32_t n_;
    std::uint32_t root_;
    std::vector<Rational> supply_;
    std::vector<std::uint32_t> parent_;
    std::vector<bool> up_;        // arc child->parent (vs parent->child)
    std::vector<Rational> flow_;  // on the edge to the parent, >= 0
    std::vector<Rational> pot_;
    std::vector<std::uint32_t> depth_;
};

}  // namespace detail

// Norm of the molecule in the transport (Lipschitz-free) sense, together with
// a certifying dual optimizer. An unbalanced molecule is balanced by placing
// the missing mass at the base point, which the pairing cannot see.
inline MoleculeNormResult molecule_norm(const PointedMetricSpace& s, const Molecule& mu) {
    std::vector<Rational> supply(s.size(), Rational(0));
    Rational total = 0;
    for (const auto& t : mu.terms) {
        supply[t.point.index] += t.coeff;
        total += t.coeff;
    }
    supply[s.base().index] -= total;

    bool trivial = true;
    for (const auto& v : supply) {
        if (v != 0) {
            trivial = false;
            break;
        }
    }
    if (trivial) return {Rational(0), LipschitzFunction::zero(s)};

    detail::TransportSimplex simplex(s, std::move(supply), s.base().index);
    simplex.solve();
    Rational cost = simplex.optimal_cost();
    if (cost != simplex.dual_value()) throw internal_error("transport duality gap");

    LipschitzFunction optimizer{simplex.potentials()};
    if (optimizer.at(s.base()) != 0) throw internal_error("optimizer does not vanish at base");
    if (lip_norm(s, optimizer).value > 1) throw internal_error("optimizer is not 1-Lipschitz");
    if (evaluate_pairing(optimizer, mu) != cost)
        throw internal_error("optimizer does not certify the transport cost");
    return {std::move(cost), std::move(optimizer)};
}

}  // namespace sltp
