#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sltp/sltp.hpp"

// Exit codes: 0 check passed / witness found / construction passed;
// 1 well-formed negative result; 2 input or usage error; 3 internal
// invariant failure.

namespace {

using namespace sltp;

bool g_stdin_used = false;

Json read_json(const std::string& path, const char* what) {
    if (path == "-") {
        if (g_stdin_used) throw io_error("only one input can come from stdin");
        g_stdin_used = true;
        return parse_document(std::cin, what);
    }
    std::ifstream in(path);
    if (!in) throw io_error(std::string(what) + ": cannot open '" + path + "'");
    return parse_document(in, what);
}

PointedMetricSpace load_space(const std::string& path) {
    return space_from_json(read_json(path, "space"));
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string::size_type from = 0;
    while (true) {
        auto comma = text.find(',', from);
        out.push_back(text.substr(from, comma - from));
        if (comma == std::string::npos) break;
        from = comma + 1;
    }
    return out;
}

std::vector<PointId> parse_subset(const PointedMetricSpace& s, const std::string& csv) {
    std::vector<PointId> out;
    for (const auto& name : split_csv(csv)) out.push_back(s.require(name));
    return out;
}

std::pair<PointId, PointId> parse_point_pair(const PointedMetricSpace& s,
                                             const std::string& text) {
    auto names = split_csv(text);
    if (names.size() != 2) throw io_error("expected a pair 'u,v', got '" + text + "'");
    return {s.require(names[0]), s.require(names[1])};
}

std::string subset_text(const PointedMetricSpace& s, const std::vector<PointId>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += s.name(pts[i]);
    }
    return out + "}";
}

std::string tuple_text(const PointedMetricSpace& s,
                       const std::variant<PairTuple, QuadTuple>& t) {
    if (const auto* p = std::get_if<PairTuple>(&t))
        return "(" + s.name(p->x) + ", " + s.name(p->y) + ")";
    const auto& q = std::get<QuadTuple>(t);
    return "(" + s.name(q.x) + ", " + s.name(q.y) + ", " + s.name(q.z) + ", " + s.name(q.w) +
           ")";
}

std::string check_text(const PointedMetricSpace& s, const TrapezoidCheck& c) {
    return std::string(c.holds ? "holds" : "fails") + ", slack " + format_rational(c.slack) +
           " at " + tuple_text(s, c.worst);
}

void emit(const Json& doc) { write_document(std::cout, doc); }

TrapezoidMode parse_mode(const std::string& text) {
    if (text == "ltp") return TrapezoidMode::Ltp;
    if (text == "sltp") return TrapezoidMode::Sltp;
    throw io_error("unknown mode '" + text + "' (expected ltp or sltp)");
}

int run_validate(const std::string& path, const std::string& format) {
    PointedMetricSpace s = load_space(path);
    ValidationReport report = validate_metric(s);
    if (format == "machine") {
        emit(validation_to_json(s, report));
    } else if (report.ok) {
        std::cout << "metric axioms hold (" << s.size() << " points)\n";
    } else {
        std::cout << "metric axiom violations: " << report.violations.size() << "\n";
        for (const auto& v : report.violations) {
            std::cout << "  " << axiom_name(v.axiom) << " at " << subset_text(s, v.points)
                      << ": lhs " << format_rational(v.lhs) << ", rhs "
                      << format_rational(v.rhs) << "\n";
        }
    }
    return report.ok ? 0 : 1;
}

int run_example(const std::string& family, std::int64_t k, std::int64_t m, std::int64_t n,
                std::uint64_t seed) {
    auto need = [](std::int64_t value, std::int64_t least, const char* flag,
                   const char* fam) -> std::size_t {
        if (value < least)
            throw io_error(std::string(flag) + " >= " + std::to_string(least) +
                           " required for family " + fam);
        return static_cast<std::size_t>(value);
    };
    PointedMetricSpace s = [&] {
        if (family == "ex1") return gen_ex1(need(k, 1, "--k", "ex1"));
        if (family == "ex2") return gen_ex2(need(k, 1, "--k", "ex2"));
        if (family == "l1_basis") return gen_l1_basis(need(m, 2, "--m", "l1_basis"));
        if (family == "random_graph_metric")
            return gen_random_graph_metric(need(n, 2, "--n", "random_graph_metric"), seed);
        if (family == "l1_cloud") return gen_random_l1_cloud(need(n, 2, "--n", "l1_cloud"), seed);
        throw io_error("unknown family '" + family + "'");
    }();
    emit(space_to_json(s));
    return 0;
}

int run_scan(const PointedMetricSpace& s, TrapezoidMode mode, std::vector<PointId> subset,
             const Rational& eps, const std::string& format) {
    ScanReport report = counterexample_scan(s, subset, eps, mode);
    bool found = std::holds_alternative<ScanVerdictWitness>(report.verdict);
    if (format == "machine") {
        emit(scan_to_json(s, report));
        return found ? 0 : 1;
    }
    std::cout << "scan " << to_string(mode) << ": subset " << subset_text(s, subset) << ", eps "
              << format_rational(eps) << ", pairs " << report.pairs.size() << "\n";
    for (const auto& row : report.pairs) {
        const Rational& needed =
            mode == TrapezoidMode::Ltp ? row.required.ltp : row.required.sltp;
        std::cout << "  (" << s.name(row.u) << ", " << s.name(row.v)
                  << "): " << check_text(s, row.check) << "; required eps "
                  << format_rational(needed) << "\n";
    }
    if (found) {
        const auto& w = std::get<ScanVerdictWitness>(report.verdict);
        std::cout << "verdict: witness (" << s.name(w.u) << ", " << s.name(w.v) << ")\n";
    } else {
        const auto& f = std::get<ScanVerdictAllFail>(report.verdict);
        std::cout << "verdict: all-pairs-fail, min required eps = "
                  << format_rational(f.min_required_epsilon) << "\n";
    }
    std::cout << "note: " << report.scope_note << "\n";
    return found ? 0 : 1;
}

int run_check(const std::string& path, TrapezoidMode mode, const std::string& subset_csv,
              const std::string& eps_text, const std::string& pair_text, bool scan,
              const std::string& format) {
    PointedMetricSpace s = load_space(path);
    std::vector<PointId> subset = parse_subset(s, subset_csv);
    Rational eps = parse_rational(eps_text);
    if (scan && !pair_text.empty()) throw io_error("give either --pair or --scan, not both");
    if (scan) return run_scan(s, mode, std::move(subset), eps, format);
    if (pair_text.empty()) throw io_error("need --pair u,v (or --scan)");
    auto [u, v] = parse_point_pair(s, pair_text);
    TrapezoidCheck check = mode == TrapezoidMode::Ltp ? check_ineq_ltp(s, subset, eps, u, v)
                                                      : check_sltp(s, subset, eps, u, v);
    if (format == "machine") {
        emit(check_to_json(s, check));
    } else {
        std::cout << "check " << to_string(mode) << ": pair (" << s.name(u) << ", " << s.name(v)
                  << "), subset " << subset_text(s, subset) << ", eps " << format_rational(eps)
                  << "\n"
                  << "result: " << check_text(s, check) << "\n";
    }
    return check.holds ? 0 : 1;
}

int run_witness(const std::string& path, TrapezoidMode mode, const std::string& subset_csv,
                const std::string& eps_text, const std::vector<std::string>& pair_texts,
                const std::string& format) {
    PointedMetricSpace s = load_space(path);
    WitnessQuery query;
    query.subset = parse_subset(s, subset_csv);
    query.epsilon = parse_rational(eps_text);
    for (const auto& text : pair_texts) query.candidates.push_back(parse_point_pair(s, text));
    std::optional<WitnessResult> w = find_witness(s, query, mode);
    if (format == "machine") {
        emit(witness_to_json(s, w));
    } else if (w) {
        std::cout << "witness (" << s.name(w->u) << ", " << s.name(w->v)
                  << "): " << check_text(s, w->check) << "\n";
    } else {
        std::cout << "no witness pair for subset " << subset_text(s, query.subset) << " at eps "
                  << format_rational(query.epsilon) << "\n";
    }
    return w ? 0 : 1;
}

int run_molecule_norm(const std::string& path, const std::string& molecule_file,
                      const std::string& pair_text, const std::string& format) {
    PointedMetricSpace s = load_space(path);
    if (molecule_file.empty() == pair_text.empty())
        throw io_error("give exactly one of --molecule or --pair");
    Molecule mu;
    if (!molecule_file.empty()) {
        mu = molecule_from_json(s, read_json(molecule_file, "molecule"));
    } else {
        auto [x, y] = parse_point_pair(s, pair_text);
        mu = pair_molecule(s, x, y);
    }
    MoleculeNormResult result = molecule_norm(s, mu);
    if (format == "machine") {
        emit(norm_result_to_json(s, result));
    } else {
        std::cout << "norm: " << format_rational(result.norm) << "\n" << "optimizer:\n";
        for (PointId p : s.points())
            std::cout << "  " << s.name(p) << ": " << format_rational(result.optimizer.at(p))
                      << "\n";
    }
    return 0;
}

int run_construct(const std::string& path, const std::string& slices_file,
                  const std::vector<std::string>& slice_pairs, const std::string& alpha_text,
                  const std::string& eps_text, const std::string& format) {
    PointedMetricSpace s = load_space(path);
    Rational eps = parse_rational(eps_text);
    std::vector<WeakStarSlice> slices;
    if (!slices_file.empty() && !slice_pairs.empty())
        throw io_error("give either --slices or --slice-pair, not both");
    if (!slices_file.empty()) {
        slices = slices_from_json(s, read_json(slices_file, "slices"));
    } else if (!slice_pairs.empty()) {
        if (alpha_text.empty()) throw io_error("--slice-pair needs --alpha");
        Rational alpha = parse_rational(alpha_text);
        for (const auto& text : slice_pairs) {
            auto [x, y] = parse_point_pair(s, text);
            slices.push_back(make_slice(s, pair_molecule(s, x, y), alpha));
        }
    } else {
        throw io_error("need --slices or --slice-pair");
    }
    ConstructionReport report = build_symmetric_witnesses(s, slices, eps);
    if (format == "machine") {
        emit(construction_to_json(s, report));
        return report.pass ? 0 : 1;
    }
    std::cout << "construction: eps " << format_rational(report.epsilon) << ", target "
              << format_rational(report.target) << ", subset " << subset_text(s, report.subset)
              << ", slices " << slices.size() << "\n";
    if (!report.witness_found) {
        std::cout << "no witness pair at this epsilon\nresult: FAIL\n";
        return 1;
    }
    std::cout << "witness pair: (" << s.name(report.radii.u) << ", " << s.name(report.radii.v)
              << ")" << (report.radii.swapped ? " [roles swapped]" : "") << "\n"
              << "radii: r0 " << format_rational(report.radii.r0) << ", s0 "
              << format_rational(report.radii.s0) << ", r " << format_rational(report.radii.r)
              << ", s " << format_rational(report.radii.s) << "\n"
              << "bump norm: " << format_rational(report.bump_norm)
              << (report.bump_in_ball ? ", inside the unit ball" : ", OUTSIDE the unit ball")
              << (report.bump_reaches_target ? ", reaches the target" : ", BELOW the target")
              << "\n";
    for (std::size_t i = 0; i < report.slices.size(); ++i) {
        const auto& sv = report.slices[i];
        std::cout << "slice " << i + 1 << ": center " << format_rational(sv.center)
                  << "; lip(f) " << format_rational(sv.witness_norm) << "; f "
                  << to_string(sv.membership) << "; lip(f+g) " << format_rational(sv.norm_plus)
                  << "; lip(f-g) " << format_rational(sv.norm_minus) << "\n";
    }
    std::cout << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact trapezoid-inequality checks, transport norms, and slice witness "
                 "construction on finite pointed metric spaces"};
    app.require_subcommand(1);

    std::string space = "-";
    std::string format = "human";
    std::string subset;
    std::string eps;
    std::string pair;
    std::vector<std::string> pairs;
    bool scan = false;
    std::string mode = "sltp";
    std::string molecule_file;
    std::string slices_file;
    std::string alpha;
    std::string family;
    std::int64_t k = -1, m = -1, n = -1;
    std::uint64_t seed = 1;

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("space", space, "space document path, or - for stdin")
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "machine"}))
            ->capture_default_str();
    };

    CLI::App* validate = app.add_subcommand("validate", "check the metric axioms");
    add_space(validate);
    add_format(validate);

    CLI::App* example = app.add_subcommand("example", "emit a family instance");
    example->add_option("family", family, "ex1 | ex2 | l1_basis | random_graph_metric | l1_cloud")
        ->required();
    example->add_option("--k", k, "pair count for ex1/ex2");
    example->add_option("--m", m, "basis size for l1_basis");
    example->add_option("--n", n, "point count for random families");
    example->add_option("--seed", seed, "random family seed")->capture_default_str();

    CLI::App* check_ltp =
        app.add_subcommand("check-ltp", "long trapezoid inequality for one pair");
    CLI::App* check_sltp =
        app.add_subcommand("check-sltp", "both trapezoid inequalities for one pair");
    for (CLI::App* sub : {check_ltp, check_sltp}) {
        add_space(sub);
        add_format(sub);
        sub->add_option("--subset", subset, "comma-separated point names for N")->required();
        sub->add_option("--eps", eps, "epsilon in [0, 1)")->required();
        sub->add_option("--pair", pair, "candidate pair u,v");
        sub->add_flag("--scan", scan, "scan every pair of the space instead");
    }

    CLI::App* scan_cmd = app.add_subcommand("scan", "check every pair of the space");
    add_space(scan_cmd);
    add_format(scan_cmd);
    scan_cmd->add_option("--subset", subset, "comma-separated point names for N")->required();
    scan_cmd->add_option("--eps", eps, "epsilon in [0, 1)")->required();
    scan_cmd->add_option("--mode", mode, "ltp | sltp")->capture_default_str();

    CLI::App* witness = app.add_subcommand("witness", "first pair passing the check");
    add_space(witness);
    add_format(witness);
    witness->add_option("--subset", subset, "comma-separated point names for N")->required();
    witness->add_option("--eps", eps, "epsilon in [0, 1)")->required();
    witness->add_option("--mode", mode, "ltp | sltp")->capture_default_str();
    witness->add_option("--pair", pairs, "restrict candidates (repeatable)");

    CLI::App* norm = app.add_subcommand("molecule-norm", "transport norm and dual optimizer");
    add_space(norm);
    add_format(norm);
    norm->add_option("--molecule", molecule_file, "molecule document path");
    norm->add_option("--pair", pair, "elementary molecule through u,v");

    CLI::App* construct =
        app.add_subcommand("construct", "symmetric slice witnesses from a trapezoid pair");
    add_space(construct);
    add_format(construct);
    construct->add_option("--slices", slices_file, "slices document path");
    construct->add_option("--slice-pair", pairs,
                          "elementary-molecule slice through u,v (repeatable)");
    construct->add_option("--alpha", alpha, "slice depth for --slice-pair");
    construct->add_option("--eps", eps, "epsilon in (0, 1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(space, format);
        if (example->parsed()) return run_example(family, k, m, n, seed);
        if (check_ltp->parsed())
            return run_check(space, TrapezoidMode::Ltp, subset, eps, pair, scan, format);
        if (check_sltp->parsed())
            return run_check(space, TrapezoidMode::Sltp, subset, eps, pair, scan, format);
        if (scan_cmd->parsed()) {
            PointedMetricSpace s = load_space(space);
            return run_scan(s, parse_mode(mode), parse_subset(s, subset), parse_rational(eps),
                            format);
        }
        if (witness->parsed())
            return run_witness(space, parse_mode(mode), subset, eps, pairs, format);
        if (norm->parsed()) return run_molecule_norm(space, molecule_file, pair, format);
        if (construct->parsed())
            return run_construct(space, slices_file, pairs, alpha, eps, format);
        throw internal_error("no subcommand dispatched");
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
