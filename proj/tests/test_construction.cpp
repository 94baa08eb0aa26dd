#include <catch2/catch_amalgamated.hpp>

#include <sltp/construction.hpp>
#include <sltp/families.hpp>

#include "oracles.hpp"

using namespace sltp;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<Rational> values(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("make_slice and slice_contains") {
    PointedMetricSpace s = gen_l1_basis(2);
    REQUIRE_THROWS_AS(make_slice(s, pair_molecule(s, PointId{1}, PointId{0}), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(make_slice(s, pair_molecule(s, PointId{1}, PointId{0}), 2),
                      std::invalid_argument);
    REQUIRE_THROWS_WITH(make_slice(s, Molecule{}, Rational(1, 2)),
                        ContainsSubstring("norm zero"));
    REQUIRE_THROWS_WITH(make_slice(s, Molecule::from_terms(s, {{PointId{0}, 3}}), Rational(1, 2)),
                        ContainsSubstring("norm zero"));

    // pairing with (delta_e1 - delta_0) / d is f(e1); threshold is strict
    WeakStarSlice slice = make_slice(s, pair_molecule(s, PointId{1}, PointId{0}), Rational(1, 2));
    REQUIRE(slice.functional_norm == 1);
    auto f = LipschitzFunction::distance_to_base(s);
    REQUIRE(slice_contains(s, slice, f) == SliceResult::InSlice);
    REQUIRE(slice_contains(s, slice, scale(f, Rational(1, 2))) == SliceResult::NotInSlice);
    REQUIRE(slice_contains(s, slice, scale(f, 2)) == SliceResult::OutsideUnitBall);
}

TEST_CASE("pick_interior_function lands strictly inside") {
    PointedMetricSpace s = gen_l1_basis(8);
    WeakStarSlice slice = make_slice(s, pair_molecule(s, PointId{0}, PointId{1}), Rational(1, 2));

    auto h = pick_interior_function(s, slice, Rational(1, 10));
    REQUIRE(h.values == values({0, Rational(-7, 10), Rational(7, 10), Rational(7, 10),
                                Rational(7, 10), Rational(7, 10), Rational(7, 10),
                                Rational(7, 10), Rational(7, 10)}));
    REQUIRE(lip_norm(s, h).value == Rational(7, 10));
    REQUIRE(slice_contains(s, slice, h) == SliceResult::InSlice);

    WeakStarSlice wide = make_slice(s, pair_molecule(s, PointId{0}, PointId{1}), 1);
    REQUIRE(lip_norm(s, pick_interior_function(s, wide, Rational(1, 2))).value == Rational(1, 4));

    REQUIRE_THROWS_WITH(pick_interior_function(s, slice, Rational(1, 2)),
                        ContainsSubstring("smaller than alpha"));
    REQUIRE_THROWS_AS(pick_interior_function(s, slice, 1), std::invalid_argument);
    WeakStarSlice corrupted = slice;
    corrupted.functional_norm = 2;
    REQUIRE_THROWS_WITH(pick_interior_function(s, corrupted, Rational(1, 10)),
                        ContainsSubstring("cache disagrees"));
}

TEST_CASE("compute_radii splits the target drop") {
    PointedMetricSpace s = gen_l1_basis(8);
    std::vector<PointId> n{PointId{0}, PointId{1}, PointId{2}};
    const Rational eps(1, 10);

    auto plain = compute_radii(s, n, eps, PointId{3}, PointId{4});
    REQUIRE(plain == RadiiBundle{PointId{3}, PointId{4}, 1, 1, 1, Rational(31, 50), eps, false});

    // r0 at the base is zero, so the roles swap
    auto swapped = compute_radii(s, n, eps, PointId{0}, PointId{3});
    REQUIRE(swapped ==
            RadiiBundle{PointId{3}, PointId{0}, 1, 0, Rational(81, 100), 0, eps, true});

    REQUIRE_THROWS_AS(compute_radii(s, n, 0, PointId{3}, PointId{4}), std::invalid_argument);
    REQUIRE_THROWS_WITH(compute_radii(s, {PointId{1}, PointId{2}}, eps, PointId{3}, PointId{4}),
                        ContainsSubstring("contain the base point"));
    // (0, e1) fails the symmetric inequality over {0, e1, e2}
    REQUIRE_THROWS_WITH(compute_radii(s, n, eps, PointId{0}, PointId{1}),
                        ContainsSubstring("not a trapezoid witness"));
}

TEST_CASE("build_bump shapes") {
    PointedMetricSpace s = gen_l1_basis(8);
    std::vector<PointId> n{PointId{0}, PointId{1}, PointId{2}};
    const Rational eps(1, 10);

    auto g = build_bump(s, compute_radii(s, n, eps, PointId{3}, PointId{4}));
    REQUIRE(g.at(PointId{3}) == 1);
    REQUIRE(g.at(PointId{4}) == Rational(-31, 50));
    REQUIRE(g.at(PointId{0}) == 0);
    REQUIRE(g.at(PointId{5}) == 0);
    REQUIRE(lip_norm(s, g).value <= 1);

    auto one_sided = build_bump(s, compute_radii(s, n, eps, PointId{0}, PointId{3}));
    REQUIRE(one_sided.values ==
            values({0, 0, 0, Rational(81, 100), 0, 0, 0, 0, 0}));

    RadiiBundle wide{PointId{1}, PointId{2}, 2, 0, 2, 0, eps, false};
    REQUIRE_THROWS_WITH(build_bump(s, wide), ContainsSubstring("base point inside"));
    RadiiBundle overlap{PointId{1}, PointId{1}, Rational(1, 2), Rational(1, 2), Rational(1, 2),
                        Rational(1, 2), eps, false};
    REQUIRE_THROWS_AS(build_bump(s, overlap), internal_error);
}

TEST_CASE("admissible_interval preconditions and window") {
    PointedMetricSpace s = gen_l1_basis(8);
    std::vector<PointId> n{PointId{0}, PointId{1}, PointId{2}};
    const Rational eps(1, 10);
    auto radii = compute_radii(s, n, eps, PointId{0}, PointId{3});  // swaps to u = e3, v = 0

    REQUIRE_THROWS_WITH(admissible_interval(s, LipschitzFunction::distance_to_base(s), n, radii),
                        ContainsSubstring("strictly"));

    RadiiBundle inside{PointId{0}, PointId{1}, 0, 0, 0, 0, eps, false};
    REQUIRE_THROWS_WITH(admissible_interval(s, LipschitzFunction::zero(s), n, inside),
                        ContainsSubstring("long-trapezoid"));

    // with v at the base, the v window is the single point 0
    WeakStarSlice slice = make_slice(s, pair_molecule(s, PointId{0}, PointId{1}), Rational(1, 2));
    auto h = pick_interior_function(s, slice, eps);
    auto window = admissible_interval(s, h, n, radii);
    REQUIRE(window == AdmissibleInterval{-1, 1, 0, 0, 0, 0});
}

TEST_CASE("full construction on the basis cloud") {
    PointedMetricSpace s = gen_l1_basis(8);
    std::vector<WeakStarSlice> slices{
        make_slice(s, pair_molecule(s, PointId{0}, PointId{1}), Rational(1, 2)),
        make_slice(s, pair_molecule(s, PointId{1}, PointId{2}), Rational(1, 2))};
    const Rational eps(1, 10);

    auto report = build_symmetric_witnesses(s, slices, eps);
    REQUIRE(report.pass);
    REQUIRE(report.witness_found);
    REQUIRE(report.subset == std::vector<PointId>{PointId{0}, PointId{1}, PointId{2}});
    REQUIRE(report.epsilon == eps);
    REQUIRE(report.target == Rational(81, 100));
    REQUIRE(report.radii ==
            RadiiBundle{PointId{3}, PointId{0}, 1, 0, Rational(81, 100), 0, eps, true});
    REQUIRE(report.bump.values == values({0, 0, 0, Rational(81, 100), 0, 0, 0, 0, 0}));
    REQUIRE(report.bump_norm == Rational(81, 100));
    REQUIRE(report.bump_in_ball);
    REQUIRE(report.bump_reaches_target);
    REQUIRE(report.slices.size() == 2);

    const auto& first = report.slices[0];
    REQUIRE(first.interval == AdmissibleInterval{-1, 1, 0, 0, 0, 0});
    REQUIRE(first.center == 0);
    REQUIRE(first.witness.values == values({0, Rational(-7, 10), Rational(7, 10), 0, -1, -1, -1,
                                            -1, -1}));
    REQUIRE(first.witness_norm == 1);
    REQUIRE(first.witness_in_ball);
    REQUIRE(first.membership == SliceResult::InSlice);
    REQUIRE(evaluate_pairing(first.witness, slices[0].functional) == Rational(7, 10));
    REQUIRE(first.norm_plus == 1);
    REQUIRE(first.norm_minus == 1);
    REQUIRE(first.plus_in_ball);
    REQUIRE(first.minus_in_ball);

    const auto& second = report.slices[1];
    REQUIRE(second.interval == AdmissibleInterval{-1, 1, 0, 0, 0, 0});
    REQUIRE(second.center == 0);
    REQUIRE(second.witness.values == values({0, Rational(7, 10), Rational(-7, 10), 0, -1, -1, -1,
                                             -1, -1}));
    REQUIRE(second.membership == SliceResult::InSlice);

    // the bump is steep enough to expose a witness pair afterwards
    REQUIRE(extract_witness_pair(s, report.bump, Rational(1, 2)) ==
            std::make_pair(PointId{3}, PointId{0}));
}

TEST_CASE("construction stops cleanly when no witness pair exists") {
    PointedMetricSpace s = gen_ex1(2);
    std::vector<WeakStarSlice> slices{
        make_slice(s, pair_molecule(s, s.require("a2"), s.require("b1")), Rational(1, 2)),
        make_slice(s, pair_molecule(s, s.require("b2"), s.require("b1")), Rational(1, 2))};

    auto report = build_symmetric_witnesses(s, slices, Rational(1, 10));
    REQUIRE_FALSE(report.witness_found);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.slices.empty());
    REQUIRE(report.subset ==
            std::vector<PointId>{PointId{0}, PointId{1}, PointId{2}, PointId{3}});
    REQUIRE(report.target == Rational(81, 100));

    REQUIRE_THROWS_AS(build_symmetric_witnesses(s, {}, Rational(1, 10)), std::invalid_argument);
    REQUIRE_THROWS_AS(build_symmetric_witnesses(s, slices, 0), std::invalid_argument);
    REQUIRE_THROWS_WITH(build_symmetric_witnesses(s, slices, Rational(1, 2)),
                        ContainsSubstring("smaller than every alpha"));
}

TEST_CASE("extract_witness_pair guards") {
    PointedMetricSpace s = gen_l1_basis(2);
    REQUIRE_THROWS_AS(extract_witness_pair(s, LipschitzFunction::distance_to_base(s), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(extract_witness_pair(s, LipschitzFunction::distance_to_base(s), 1),
                      std::invalid_argument);
    REQUIRE_THROWS_WITH(extract_witness_pair(s, LipschitzFunction::zero(s), Rational(1, 2)),
                        ContainsSubstring("no steep pair promised"));
    REQUIRE(extract_witness_pair(s, LipschitzFunction::distance_to_base(s), Rational(1, 2)) ==
            std::make_pair(PointId{1}, PointId{0}));
}

TEST_CASE("randomized end-to-end construction trials") {
    oracle::Rng rng(192837465);
    int found = 0;
    for (int trial = 0; trial < 25; ++trial) {
        PointedMetricSpace s = rng.coin() ? gen_random_l1_cloud(8 + rng.pick(7), rng.gen())
                                          : gen_random_graph_metric(5 + rng.pick(5), rng.gen());
        std::vector<WeakStarSlice> slices;
        std::size_t count = 1 + rng.pick(3);
        for (std::size_t i = 0; i < count; ++i) {
            auto [x, y] = rng.distinct_pair(s);
            static const Rational alphas[] = {Rational(1, 2), Rational(3, 4), Rational(1)};
            slices.push_back(make_slice(s, pair_molecule(s, x, y), alphas[rng.pick(3)]));
        }
        const Rational eps = rng.coin() ? Rational(1, 10) : Rational(1, 20);
        auto report = build_symmetric_witnesses(s, slices, eps);
        if (!report.witness_found) continue;
        ++found;
        REQUIRE(report.pass);
        REQUIRE(report.bump_norm >= report.target);
        for (std::size_t i = 0; i < report.slices.size(); ++i) {
            const auto& sv = report.slices[i];
            REQUIRE(sv.witness_norm <= 1);
            REQUIRE(slice_contains(s, slices[i], sv.witness) == SliceResult::InSlice);
            REQUIRE(lip_norm(s, add(sv.witness, report.bump)).value <= 1);
            REQUIRE(lip_norm(s, sub(sv.witness, report.bump)).value <= 1);
        }
    }
    REQUIRE(found >= 1);
}
