#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <sltp/sltp.hpp>

using namespace sltp;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliRun {
    int status;
    std::string output;  // stdout and stderr interleaved
};

CliRun run_cli(const std::string& args) {
    std::string command = std::string(SLTP_BIN) + " " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, output};
}

Json parse_output(const std::string& text) {
    std::istringstream in(text);
    return parse_document(in, "cli output");
}

// temp document on disk, removed when the test block ends
struct TempDoc {
    std::string path;

    TempDoc(const std::string& stem, const Json& doc)
        : path("/tmp/sltp_cli_" + std::to_string(::getpid()) + "_" + stem + ".json") {
        std::ofstream out(path);
        write_document(out, doc);
    }

    TempDoc(const std::string& stem, const std::string& raw)
        : path("/tmp/sltp_cli_" + std::to_string(::getpid()) + "_" + stem + ".json") {
        std::ofstream out(path);
        out << raw;
    }

    ~TempDoc() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli example emits family instances as documents") {
    auto res = run_cli("example ex1 --k 5");
    REQUIRE(res.status == 0);
    REQUIRE(space_from_json(parse_output(res.output)) == gen_ex1(5));

    res = run_cli("example l1_basis --m 3");
    REQUIRE(res.status == 0);
    REQUIRE(space_from_json(parse_output(res.output)) == gen_l1_basis(3));

    res = run_cli("example l1_cloud --n 6 --seed 9");
    REQUIRE(res.status == 0);
    REQUIRE(space_from_json(parse_output(res.output)) == gen_random_l1_cloud(6, 9));

    res = run_cli("example random_graph_metric --n 5 --seed 3");
    REQUIRE(res.status == 0);
    REQUIRE(space_from_json(parse_output(res.output)) == gen_random_graph_metric(5, 3));
}

TEST_CASE("cli example rejects bad requests") {
    auto res = run_cli("example nope --k 2");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("unknown family 'nope'"));

    res = run_cli("example ex1");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("--k >= 1 required for family ex1"));

    res = run_cli("example l1_basis --m 1");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("--m >= 2"));
}

TEST_CASE("cli validate reports axiom status") {
    TempDoc good("valid_good", space_to_json(gen_ex1(1)));
    auto res = run_cli("validate " + good.path);
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("metric axioms hold (6 points)"));

    // triangle broken in both orientations through z
    auto bad = PointedMetricSpace::from_matrix(
        {"x", "y", "z"}, "x", {{0, 5, 1}, {5, 0, 1}, {1, 1, 0}});
    TempDoc bad_doc("valid_bad", space_to_json(bad));
    res = run_cli("validate " + bad_doc.path);
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output, ContainsSubstring("metric axiom violations: 2"));
    REQUIRE_THAT(res.output, ContainsSubstring("triangle at {x, y, z}: lhs 5, rhs 2"));
    REQUIRE_THAT(res.output, ContainsSubstring("triangle at {y, x, z}: lhs 5, rhs 2"));

    res = run_cli("validate " + bad_doc.path + " --format machine");
    REQUIRE(res.status == 1);
    REQUIRE(parse_output(res.output) == validation_to_json(bad, validate_metric(bad)));

    res = run_cli("validate - < " + good.path);
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("metric axioms hold"));

    res = run_cli("validate /nonexistent/space.json");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("cannot open"));

    TempDoc mangled("valid_mangled", std::string("{not json"));
    res = run_cli("validate " + mangled.path);
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("error: space: "));
}

TEST_CASE("cli single-pair checks") {
    PointedMetricSpace s = gen_ex1(1);
    TempDoc doc("check_space", space_to_json(s));
    const std::string tail = " --subset a1,a2,b1,b2 --eps 0 --pair u1,v1";

    auto res = run_cli("check-ltp " + doc.path + tail);
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output,
                 ContainsSubstring("check ltp: pair (u1, v1), subset {a1, a2, b1, b2}, eps 0"));
    REQUIRE_THAT(res.output, ContainsSubstring("result: holds, slack 0 at (a1, a2)"));

    res = run_cli("check-sltp " + doc.path + tail);
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output,
                 ContainsSubstring("result: fails, slack -2 at (a1, a2, b1, b2)"));

    res = run_cli("check-ltp " + doc.path + tail + " --format machine");
    REQUIRE(res.status == 0);
    TrapezoidCheck local = check_ineq_ltp(s, {PointId{0}, PointId{1}, PointId{2}, PointId{3}},
                                          Rational(0), PointId{4}, PointId{5});
    REQUIRE(parse_output(res.output) == check_to_json(s, local));

    res = run_cli("check-sltp " + doc.path + tail + " --scan");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("give either --pair or --scan, not both"));

    res = run_cli("check-sltp " + doc.path + " --subset a1,a2 --eps 0");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("need --pair u,v (or --scan)"));

    // --scan on a check subcommand routes to the full scan
    res = run_cli("check-sltp " + doc.path + " --subset a1,a2,b1,b2 --eps 0 --scan");
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output, ContainsSubstring("verdict: all-pairs-fail"));
}

TEST_CASE("cli scan") {
    PointedMetricSpace s = gen_ex1(1);
    TempDoc doc("scan_space", space_to_json(s));
    const std::string base = "scan " + doc.path + " --subset a1,a2,b1,b2";

    auto res = run_cli(base + " --eps 0 --mode sltp");
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output,
                 ContainsSubstring("scan sltp: subset {a1, a2, b1, b2}, eps 0, pairs 15"));
    REQUIRE_THAT(res.output,
                 ContainsSubstring("verdict: all-pairs-fail, min required eps = 1/3"));
    REQUIRE_THAT(res.output, ContainsSubstring("note: "));

    res = run_cli(base + " --eps 1/3 --mode sltp");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("verdict: witness (u1, v1)"));

    res = run_cli(base + " --eps 0 --mode sltp --format machine");
    REQUIRE(res.status == 1);
    ScanReport local = counterexample_scan(
        s, {PointId{0}, PointId{1}, PointId{2}, PointId{3}}, Rational(0), TrapezoidMode::Sltp);
    REQUIRE(parse_output(res.output) == scan_to_json(s, local));

    res = run_cli(base + " --eps 0 --mode bogus");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("unknown mode 'bogus'"));
}

TEST_CASE("cli witness") {
    PointedMetricSpace s = gen_ex1(1);
    TempDoc doc("witness_space", space_to_json(s));
    const std::string base = "witness " + doc.path + " --subset a1,a2,b1,b2 --mode sltp";

    auto res = run_cli(base + " --eps 1/3");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output,
                 ContainsSubstring("witness (u1, v1): holds, slack 0 at (a1, a2, b1, b2)"));

    res = run_cli(base + " --eps 0");
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output,
                 ContainsSubstring("no witness pair for subset {a1, a2, b1, b2} at eps 0"));

    res = run_cli(base + " --eps 1/3 --pair a1,a2 --pair u1,v1");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("witness (u1, v1)"));

    res = run_cli(base + " --eps 0 --format machine");
    REQUIRE(res.status == 1);
    REQUIRE(parse_output(res.output) == witness_to_json(s, std::nullopt));
}

TEST_CASE("cli molecule norm") {
    PointedMetricSpace s = gen_ex1(1);
    TempDoc doc("norm_space", space_to_json(s));

    auto res = run_cli("molecule-norm " + doc.path + " --pair a1,b1");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("norm: 1\n"));
    REQUIRE_THAT(res.output, ContainsSubstring("optimizer:"));
    REQUIRE_THAT(res.output, ContainsSubstring("  u1: "));

    res = run_cli("molecule-norm " + doc.path + " --pair a1,b1 --format machine");
    REQUIRE(res.status == 0);
    MoleculeNormResult local = molecule_norm(s, pair_molecule(s, PointId{0}, PointId{2}));
    REQUIRE(parse_output(res.output) == norm_result_to_json(s, local));

    TempDoc mol("norm_molecule",
                molecule_to_json(s, pair_molecule(s, PointId{4}, PointId{5})));
    res = run_cli("molecule-norm " + doc.path + " --molecule " + mol.path);
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("norm: 1\n"));

    res = run_cli("molecule-norm " + doc.path + " --molecule " + mol.path + " --pair a1,b1");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("give exactly one of --molecule or --pair"));

    res = run_cli("molecule-norm " + doc.path);
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("give exactly one of --molecule or --pair"));

    res = run_cli("molecule-norm " + doc.path + " --pair a1,zz");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("unknown point"));
}

TEST_CASE("cli construct") {
    PointedMetricSpace s = gen_l1_basis(8);
    TempDoc doc("construct_space", space_to_json(s));
    const std::string good = "construct " + doc.path +
                             " --slice-pair 0,e1 --slice-pair e1,e2 --alpha 1/2 --eps 1/10";

    auto res = run_cli(good);
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring(
                                 "construction: eps 1/10, target 81/100, subset {0, e1, e2}, "
                                 "slices 2"));
    REQUIRE_THAT(res.output, ContainsSubstring("witness pair: (e3, 0) [roles swapped]"));
    REQUIRE_THAT(res.output, ContainsSubstring("radii: r0 1, s0 0, r 81/100, s 0"));
    REQUIRE_THAT(res.output,
                 ContainsSubstring("bump norm: 81/100, inside the unit ball, reaches the target"));
    REQUIRE_THAT(res.output, ContainsSubstring(
                                 "slice 1: center 0; lip(f) 1; f in-slice; lip(f+g) 1; "
                                 "lip(f-g) 1"));
    REQUIRE_THAT(res.output, ContainsSubstring("result: PASS"));

    std::vector<WeakStarSlice> slices = {
        make_slice(s, pair_molecule(s, PointId{0}, PointId{1}), Rational(1, 2)),
        make_slice(s, pair_molecule(s, PointId{1}, PointId{2}), Rational(1, 2))};
    res = run_cli(good + " --format machine");
    REQUIRE(res.status == 0);
    REQUIRE(parse_output(res.output) ==
            construction_to_json(s, build_symmetric_witnesses(s, slices, Rational(1, 10))));

    TempDoc slice_doc("construct_slices", slices_to_json(s, slices));
    res = run_cli("construct " + doc.path + " --slices " + slice_doc.path + " --eps 1/10");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("result: PASS"));

    // anchors of ex1 block every pair below eps 1/3
    PointedMetricSpace blocked = gen_ex1(2);
    TempDoc blocked_doc("construct_blocked", space_to_json(blocked));
    res = run_cli("construct " + blocked_doc.path +
                  " --slice-pair a2,b1 --slice-pair b2,b1 --alpha 1/2 --eps 1/10");
    REQUIRE(res.status == 1);
    REQUIRE_THAT(res.output, ContainsSubstring("no witness pair at this epsilon"));
    REQUIRE_THAT(res.output, ContainsSubstring("result: FAIL"));

    res = run_cli("construct " + doc.path + " --slices " + slice_doc.path +
                  " --slice-pair 0,e1 --alpha 1/2 --eps 1/10");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("give either --slices or --slice-pair, not both"));

    res = run_cli("construct " + doc.path + " --slice-pair 0,e1 --eps 1/10");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("--slice-pair needs --alpha"));

    res = run_cli("construct " + doc.path + " --eps 1/10");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("need --slices or --slice-pair"));

    res = run_cli("construct " + doc.path + " --slice-pair 0,e1 --alpha 1/2 --eps 2");
    REQUIRE(res.status == 2);

    res = run_cli("construct " + doc.path + " --slice-pair 0,e1 --alpha 1/2");
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("--eps"));
}

TEST_CASE("cli usage errors and help") {
    auto res = run_cli("");
    REQUIRE(res.status == 2);

    res = run_cli("bogus-subcommand");
    REQUIRE(res.status == 2);

    res = run_cli("--help");
    REQUIRE(res.status == 0);
    REQUIRE_THAT(res.output, ContainsSubstring("trapezoid"));

    TempDoc doc("stdin_space", space_to_json(gen_ex1(1)));
    res = run_cli("molecule-norm - --molecule - < " + doc.path);
    REQUIRE(res.status == 2);
    REQUIRE_THAT(res.output, ContainsSubstring("only one input can come from stdin"));
}
