#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sltp/metric_space.hpp"

namespace sltp {

// Two-scale family with the long trapezoid property but not the symmetric
// one. Points a1, a2, b1, b2 followed by k interleaved pairs u_i, v_i;
// base a1. All distances are 1 or 2:
//   1: a-b, a-u, b-v, and u_i-v_i with matching index;
//   2: everything else distinct.
inline PointedMetricSpace gen_ex1(std::size_t k) {
    if (k < 1) throw std::invalid_argument("need at least one u,v pair");
    enum class Kind { A, B, U, V };
    struct Tag {
        Kind kind;
        std::size_t idx;
    };
    std::vector<std::string> names{"a1", "a2", "b1", "b2"};
    std::vector<Tag> tags{{Kind::A, 1}, {Kind::A, 2}, {Kind::B, 1}, {Kind::B, 2}};
    for (std::size_t i = 1; i <= k; ++i) {
        names.push_back("u" + std::to_string(i));
        tags.push_back({Kind::U, i});
        names.push_back("v" + std::to_string(i));
        tags.push_back({Kind::V, i});
    }
    auto dist = [](const Tag& p, const Tag& q) -> int {
        auto pair_of = [](Kind a, Kind b, Kind x, Kind y) {
            return (a == x && b == y) || (a == y && b == x);
        };
        if (pair_of(p.kind, q.kind, Kind::A, Kind::B)) return 1;
        if (pair_of(p.kind, q.kind, Kind::A, Kind::U)) return 1;
        if (pair_of(p.kind, q.kind, Kind::B, Kind::V)) return 1;
        if (pair_of(p.kind, q.kind, Kind::U, Kind::V)) return p.idx == q.idx ? 1 : 2;
        return 2;  // a-a, b-b, a-v, b-u, u-u, v-v
    };
    const std::size_t n = names.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            matrix[i][j] = matrix[j][i] = dist(tags[i], tags[j]);
        }
    }
    return PointedMetricSpace::from_matrix(std::move(names), "a1", std::move(matrix));
}

// Companion family where the symmetric inequality survives at fresh pairs
// while the long trapezoid property fails outright on N = {a, b}. Points
// a, b then k interleaved pairs u_i, v_i; base a.
//   1: a-u, b-v, u_i-v_i matching index; 2: everything else distinct.
inline PointedMetricSpace gen_ex2(std::size_t k) {
    if (k < 1) throw std::invalid_argument("need at least one u,v pair");
    enum class Kind { A, B, U, V };
    struct Tag {
        Kind kind;
        std::size_t idx;
    };
    std::vector<std::string> names{"a", "b"};
    std::vector<Tag> tags{{Kind::A, 0}, {Kind::B, 0}};
    for (std::size_t i = 1; i <= k; ++i) {
        names.push_back("u" + std::to_string(i));
        tags.push_back({Kind::U, i});
        names.push_back("v" + std::to_string(i));
        tags.push_back({Kind::V, i});
    }
    auto dist = [](const Tag& p, const Tag& q) -> int {
        auto pair_of = [](Kind a, Kind b, Kind x, Kind y) {
            return (a == x && b == y) || (a == y && b == x);
        };
        if (pair_of(p.kind, q.kind, Kind::A, Kind::U)) return 1;
        if (pair_of(p.kind, q.kind, Kind::B, Kind::V)) return 1;
        if (pair_of(p.kind, q.kind, Kind::U, Kind::V)) return p.idx == q.idx ? 1 : 2;
        return 2;  // a-b, a-v, b-u, u-u, v-v
    };
    const std::size_t n = names.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            matrix[i][j] = matrix[j][i] = dist(tags[i], tags[j]);
        }
    }
    return PointedMetricSpace::from_matrix(std::move(names), "a", std::move(matrix));
}

inline std::vector<L1Point> l1_basis_vectors(std::size_t m) {
    if (m < 2) throw std::invalid_argument("need at least two basis vectors");
    std::vector<L1Point> out;
    out.push_back({"0", {}});
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<Rational> coords(i, Rational(0));
        coords[i - 1] = 1;
        out.push_back({"e" + std::to_string(i), std::move(coords)});
    }
    return out;
}

// {0, e1, ..., em} in the sum metric; base is the origin.
inline PointedMetricSpace gen_l1_basis(std::size_t m) {
    return PointedMetricSpace::from_l1_vectors(l1_basis_vectors(m), "0");
}

// Shortest-path metric of a random connected weighted graph on n nodes,
// deterministic in the seed. Weights are small rationals.
inline PointedMetricSpace gen_random_graph_metric(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two nodes");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t m) { return static_cast<std::size_t>(rng() % m); };
    auto weight = [&]() {
        static const int nums[] = {1, 2, 3, 4, 5, 6};
        static const int dens[] = {1, 2, 3};
        return Rational(nums[pick(6)], dens[pick(3)]);
    };
    const Rational inf(-1);  // marker: no edge yet
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    auto add_edge = [&](std::size_t i, std::size_t j, Rational w) {
        if (d[i][j] == inf || w < d[i][j]) {
            d[i][j] = w;
            d[j][i] = std::move(w);
        }
    };
    for (std::size_t v = 1; v < n; ++v) add_edge(v, pick(v), weight());  // spanning tree
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() % 10 < 3) add_edge(i, j, weight());
        }
    }
    for (std::size_t via = 0; via < n; ++via) {  // Floyd-Warshall closure
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][via] == inf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[via][j] == inf) continue;
                Rational through = d[i][via] + d[via][j];
                if (d[i][j] == inf || through < d[i][j]) d[i][j] = std::move(through);
            }
        }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    return PointedMetricSpace::from_matrix(std::move(names), "p0", std::move(d));
}

// Random bounded, uniformly discrete cloud in the sum metric. Points come in
// pairs sharing their head coordinates exactly and differing in two private
// tail coordinates nobody else uses; an odd count adds one lone point. Any
// small anchor subset therefore leaves some pair untouched, and an untouched
// pair passes both trapezoid inequalities at every epsilon.
inline std::vector<L1Point> l1_cloud_vectors(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two points");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t m) { return static_cast<std::size_t>(rng() % m); };
    constexpr std::size_t head_dim = 3;
    auto head = [&]() {
        std::vector<Rational> h(head_dim);
        for (auto& c : h) c = Rational(static_cast<long>(pick(7)), 4);  // 0 .. 3/2
        return h;
    };
    auto height = [&]() { return Rational(static_cast<long>(1 + pick(4)), 4); };  // 1/4 .. 1

    std::vector<L1Point> out;
    out.reserve(n);
    std::size_t tail = head_dim;
    while (out.size() + 2 <= n) {
        std::vector<Rational> shared = head();
        for (int side = 0; side < 2; ++side) {
            L1Point p;
            p.label = "p" + std::to_string(out.size());
            p.coords = shared;
            p.coords.resize(tail + 1, Rational(0));
            p.coords[tail] = height();
            ++tail;
            out.push_back(std::move(p));
        }
    }
    if (out.size() < n) {
        L1Point p;
        p.label = "p" + std::to_string(out.size());
        p.coords = head();
        p.coords.resize(tail + 1, Rational(0));
        p.coords[tail] = height();
        out.push_back(std::move(p));
    }
    return out;
}

inline PointedMetricSpace gen_random_l1_cloud(std::size_t n, std::uint64_t seed) {
    return PointedMetricSpace::from_l1_vectors(l1_cloud_vectors(n, seed), "p0");
}

// Tail-splitting witness search on raw coordinates: take the smallest prefix
// holding every coordinate used by the anchors, then look for a pair whose
// difference over that prefix is at most delta = eps * r / 6, r the minimum
// pairwise distance. Any pair found this way passes both trapezoid
// inequalities at eps over those anchors; the search can miss pairs an
// exhaustive scan would find.
inline std::optional<std::pair<std::size_t, std::size_t>> l1_tail_witness(
    const std::vector<L1Point>& cloud, const std::vector<std::size_t>& anchors,
    const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (cloud.size() < 2) return std::nullopt;
    auto coord = [&](std::size_t p, std::size_t i) -> Rational {
        return i < cloud[p].coords.size() ? cloud[p].coords[i] : Rational(0);
    };
    std::size_t prefix = 0;
    for (std::size_t a : anchors) {
        if (a >= cloud.size()) throw std::invalid_argument("anchor outside the cloud");
        for (std::size_t i = 0; i < cloud[a].coords.size(); ++i) {
            if (cloud[a].coords[i] != 0) prefix = std::max(prefix, i + 1);
        }
    }
    std::size_t dim = 0;
    for (const auto& p : cloud) dim = std::max(dim, p.coords.size());
    auto distance = [&](std::size_t p, std::size_t q, std::size_t from, std::size_t to) {
        Rational d = 0;
        for (std::size_t i = from; i < to; ++i) {
            Rational diff = coord(p, i) - coord(q, i);
            d += diff < 0 ? Rational(-diff) : diff;
        }
        return d;
    };
    std::optional<Rational> min_dist;
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        for (std::size_t q = p + 1; q < cloud.size(); ++q) {
            Rational d = distance(p, q, 0, dim);
            if (!min_dist || d < *min_dist) min_dist = std::move(d);
        }
    }
    if (*min_dist <= 0) throw std::invalid_argument("cloud has duplicate points");
    Rational delta = eps * *min_dist / 6;
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        for (std::size_t q = p + 1; q < cloud.size(); ++q) {
            if (distance(p, q, 0, prefix) <= delta) return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

}  // namespace sltp
