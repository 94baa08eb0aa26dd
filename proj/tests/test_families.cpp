#include <catch2/catch_amalgamated.hpp>

#include <sltp/families.hpp>
#include <sltp/trapezoid.hpp>

using namespace sltp;

namespace {

// expected distances by name, mirroring the intended two-scale layout
Rational ex1_expected(const std::string& p, const std::string& q) {
    if (p == q) return 0;
    char a = p[0], b = q[0];
    auto is = [&](char x, char y) { return (a == x && b == y) || (a == y && b == x); };
    if (is('a', 'b') || is('a', 'u') || is('b', 'v')) return 1;
    if (is('u', 'v')) return p.substr(1) == q.substr(1) ? 1 : 2;
    return 2;
}

Rational ex2_expected(const std::string& p, const std::string& q) {
    if (p == q) return 0;
    char a = p[0], b = q[0];
    auto is = [&](char x, char y) { return (a == x && b == y) || (a == y && b == x); };
    if (is('a', 'u') || is('b', 'v')) return 1;
    if (is('u', 'v')) return p.substr(1) == q.substr(1) ? 1 : 2;
    return 2;
}

}  // namespace

TEST_CASE("two-scale family layout") {
    PointedMetricSpace s = gen_ex1(5);
    REQUIRE(s.size() == 14);
    REQUIRE(s.base() == s.require("a1"));
    REQUIRE(s.name(PointId{0}) == "a1");
    REQUIRE(s.name(PointId{3}) == "b2");
    REQUIRE(s.name(PointId{4}) == "u1");
    REQUIRE(s.name(PointId{13}) == "v5");
    for (PointId p : s.points()) {
        for (PointId q : s.points()) {
            REQUIRE(s.dist(p, q) == ex1_expected(s.name(p), s.name(q)));
        }
    }
    REQUIRE(validate_metric(s).ok);
    REQUIRE_THROWS_AS(gen_ex1(0), std::invalid_argument);
}

TEST_CASE("companion family layout") {
    PointedMetricSpace s = gen_ex2(3);
    REQUIRE(s.size() == 8);
    REQUIRE(s.base() == s.require("a"));
    REQUIRE(s.name(PointId{2}) == "u1");
    for (PointId p : s.points()) {
        for (PointId q : s.points()) {
            REQUIRE(s.dist(p, q) == ex2_expected(s.name(p), s.name(q)));
        }
    }
    REQUIRE(validate_metric(s).ok);
    REQUIRE_THROWS_AS(gen_ex2(0), std::invalid_argument);
}

TEST_CASE("interleaved pairs are mutually isometric") {
    PointedMetricSpace s = gen_ex1(3);
    std::vector<PointId> anchors{PointId{0}, PointId{1}, PointId{2}, PointId{3}};
    auto first = required_epsilon(s, anchors, s.require("u1"), s.require("v1"));
    REQUIRE(first == required_epsilon(s, anchors, s.require("u2"), s.require("v2")));
    REQUIRE(first == required_epsilon(s, anchors, s.require("u3"), s.require("v3")));
    REQUIRE(first.sltp == Rational(1, 3));
}

TEST_CASE("basis cloud distances") {
    REQUIRE_THROWS_AS(l1_basis_vectors(1), std::invalid_argument);
    PointedMetricSpace s = gen_l1_basis(4);
    REQUIRE(s.size() == 5);
    REQUIRE(s.base() == s.require("0"));
    for (std::uint32_t i = 1; i <= 4; ++i) {
        REQUIRE(s.dist(PointId{0}, PointId{i}) == 1);
        for (std::uint32_t j = i + 1; j <= 4; ++j) REQUIRE(s.dist(PointId{i}, PointId{j}) == 2);
    }
    REQUIRE(validate_metric(s).ok);
}

TEST_CASE("random graph metrics are valid and seed-deterministic") {
    REQUIRE_THROWS_AS(gen_random_graph_metric(1, 7), std::invalid_argument);
    for (std::uint64_t seed : {7ULL, 8ULL, 1234567ULL}) {
        PointedMetricSpace s = gen_random_graph_metric(6, seed);
        REQUIRE(s.size() == 6);
        REQUIRE(validate_metric(s).ok);
        REQUIRE(s == gen_random_graph_metric(6, seed));
    }
}

TEST_CASE("random clouds are valid, bounded, uniformly discrete") {
    REQUIRE_THROWS_AS(l1_cloud_vectors(1, 7), std::invalid_argument);
    for (std::uint64_t seed : {1ULL, 99ULL, 4096ULL}) {
        for (std::size_t n : {2, 9, 12}) {
            PointedMetricSpace s = gen_random_l1_cloud(n, seed);
            REQUIRE(s.size() == n);
            REQUIRE(validate_metric(s).ok);
            REQUIRE(s == gen_random_l1_cloud(n, seed));
            for (PointId p : s.points()) {
                for (PointId q : s.points()) {
                    if (p == q) continue;
                    REQUIRE(s.dist(p, q) >= Rational(1, 2));
                    REQUIRE(s.dist(p, q) <= Rational(13, 2));
                }
            }
        }
    }
}

TEST_CASE("cloud points pair up over shared heads") {
    auto cloud = l1_cloud_vectors(7, 321);
    REQUIRE(cloud.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) REQUIRE(cloud[i].label == "p" + std::to_string(i));
    for (std::size_t pair = 0; pair + 1 < 7; pair += 2) {
        const auto& a = cloud[pair].coords;
        const auto& b = cloud[pair + 1].coords;
        for (std::size_t c = 0; c < 3; ++c) REQUIRE(a[c] == b[c]);
        // private tails: one fresh coordinate each, strictly positive
        REQUIRE(a.back() >= Rational(1, 4));
        REQUIRE(b.back() >= Rational(1, 4));
        REQUIRE(a.size() + 1 == b.size());
    }
}

TEST_CASE("tail witness search") {
    auto cloud = l1_cloud_vectors(12, 2024);
    std::vector<std::size_t> anchors{0, 1, 2, 3};
    const Rational eps(1, 10);

    REQUIRE_THROWS_AS(l1_tail_witness(cloud, anchors, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(l1_tail_witness(cloud, anchors, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(l1_tail_witness(cloud, {99}, eps), std::invalid_argument);
    auto duplicated = cloud;
    duplicated.push_back(cloud[0]);
    duplicated.back().label = "copy";
    REQUIRE_THROWS_AS(l1_tail_witness(duplicated, anchors, eps), std::invalid_argument);

    // soundness: any reported pair passes both inequalities over the anchors
    for (std::uint64_t seed : {2024ULL, 5150ULL, 31337ULL}) {
        auto vectors = l1_cloud_vectors(12, seed);
        auto found = l1_tail_witness(vectors, anchors, eps);
        REQUIRE(found.has_value());
        PointedMetricSpace s = PointedMetricSpace::from_l1_vectors(vectors, "p0");
        std::vector<PointId> subset;
        for (std::size_t a : anchors) subset.push_back(PointId{static_cast<std::uint32_t>(a)});
        auto check = check_sltp(s, subset, eps,
                                PointId{static_cast<std::uint32_t>(found->first)},
                                PointId{static_cast<std::uint32_t>(found->second)});
        REQUIRE(check.holds);
    }

    // anchors spanning every coordinate leave nothing below the threshold
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < cloud.size(); ++i) all.push_back(i);
    REQUIRE_FALSE(l1_tail_witness(cloud, all, eps).has_value());
}
