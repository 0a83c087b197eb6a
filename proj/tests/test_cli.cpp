#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/fact_suite.hpp"
#include "cli/runner.hpp"
#include "cli/scenarios.hpp"
#include "cli/svg_plot.hpp"
#include "ermlab/errors.hpp"

using namespace ermlab;
using namespace ermlab::cli;

namespace {

namespace fs = std::filesystem;

Bits pt(int n, std::uint64_t v) { return Bits::from_u64(n, v); }

Conjunction conj(int n, std::initializer_list<std::pair<int, VarState>> states) {
    Conjunction c(n);
    for (auto& [v, s] : states) c.set_state(v, s);
    return c;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("ermlab_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

// Runs the built tool; returns the exit code and captures streams to files.
struct ToolRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

ToolRun run_tool(const std::string& args, const fs::path& scratch) {
    const fs::path out_file = scratch / "stdout.txt";
    const fs::path err_file = scratch / "stderr.txt";
    const std::string cmd = std::string(ERMLAB_TOOL_PATH) + " " + args + " >" + out_file.string() +
                            " 2>" + err_file.string();
    const int status = std::system(cmd.c_str());
    ToolRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out_file.string());
    r.err = read_text_file(err_file.string());
    return r;
}

std::string slurp(const fs::path& p) { return read_text_file(p.string()); }

} // namespace

TEST_CASE("csv parse and render round trip") {
    const std::string text = "a,b\n1,2.5\n-3,0.125\n";
    const CsvTable t = parse_csv(text);
    REQUIRE(t.columns == std::vector<std::string>{"a", "b"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == 1.0);
    CHECK(t.rows[0][1] == 2.5);
    CHECK(t.rows[1][0] == -3.0);
    CHECK(t.rows[1][1] == 0.125);
    CHECK(t.column_index("b") == 1);
    CHECK(t.column_index("missing") == -1);

    CHECK_THROWS_AS(parse_csv("a,b\n1,zebra\n"), ConfigError);
    CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ConfigError);
    CHECK_THROWS_AS(parse_csv(""), ConfigError);
}

TEST_CASE("format_double renders shortest round-trip forms") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(-3.0) == "-3");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    const double v = 0.4470226962271151;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("tradeoff samples csv has the pinned header") {
    TradeoffReport r;
    r.m = 5;
    r.trials = 2;
    r.estdecr = {0.5, -0.25};
    r.emp_gap = {0.0, 0.125};
    r.gen_gap = {0.5, -0.375};
    r.risk_gap = {0.5, -0.25};
    const std::string csv = tradeoff_samples_csv(r);
    CHECK(csv == "trial,estdecr,emp_gap,gen_gap,risk_gap\n"
                 "0,0.5,0,0.5,0.5\n"
                 "1,-0.25,0.125,-0.375,-0.25\n");
    const CsvTable parsed = parse_csv(csv);
    CHECK(parsed.rows.size() == 2);
}

TEST_CASE("scaling csv has the pinned header and projected flag") {
    std::vector<ScalingRecord> recs(2);
    recs[0] = {2, 729, 64, 0.5, false, 0.25};
    recs[1] = {6, 387420489, 1728, 128.0, true, 0.75};
    const std::string csv = scaling_csv(recs);
    CHECK(csv == "n,class_cardinality,expanded_dim,exhaustive_seconds,exhaustive_projected,expansion_seconds\n"
                 "2,729,64,0.5,0,0.25\n"
                 "6,387420489,1728,128,1,0.75\n");
}

TEST_CASE("svg plots are deterministic and validate their input") {
    CsvTable t;
    t.columns = {"m", "risk"};
    t.rows = {{10, 0.5}, {100, 0.25}, {1000, 0.125}};
    const std::string svg = render_svg_plot(t, PlotKind::RiskVsM, false);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("svg") != std::string::npos);
    CHECK(svg == render_svg_plot(t, PlotKind::RiskVsM, false));
    CHECK(svg != render_svg_plot(t, PlotKind::RiskVsM, true)); // log axis changes geometry

    CsvTable empty;
    empty.columns = {"m", "risk"};
    CHECK_THROWS_WITH_AS(render_svg_plot(empty, PlotKind::RiskVsM, false), "config field 'csv': no data rows",
                         ConfigError);

    CsvTable wrong;
    wrong.columns = {"foo"};
    wrong.rows = {{1.0}};
    CHECK_THROWS_AS(render_svg_plot(wrong, PlotKind::RiskVsM, false), ConfigError);
    CHECK_THROWS_AS(render_svg_plot(wrong, PlotKind::Scaling, false), ConfigError);
    CHECK_THROWS_AS(render_svg_plot(wrong, PlotKind::GapHistogram, false), ConfigError);
}

TEST_CASE("plot kinds parse by name") {
    CHECK(plot_kind_from_string("risk-vs-m") == PlotKind::RiskVsM);
    CHECK(plot_kind_from_string("scaling") == PlotKind::Scaling);
    CHECK(plot_kind_from_string("gap-histogram") == PlotKind::GapHistogram);
    CHECK_FALSE(plot_kind_from_string("pie").has_value());
}

TEST_CASE("config text and field accessors raise named errors") {
    CHECK_THROWS_AS(parse_config_text("{nope"), ConfigError);
    try {
        parse_config_text("{nope");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "(root)");
    }

    const Json j = parse_config_text(R"({"a": 3, "s": "x", "f": 0.25, "big": 18446744073709551615})");
    CHECK(config_int(j, "a", 0, 10) == 3);
    CHECK_THROWS_AS(config_int(j, "a", 4, 10), ConfigError);
    CHECK_THROWS_AS(config_int(j, "missing", 0, 10), ConfigError);
    CHECK_THROWS_AS(config_int(j, "s", 0, 10), ConfigError);
    CHECK(config_string(j, "s") == "x");
    CHECK_THROWS_AS(config_string(j, "a"), ConfigError);
    CHECK(config_double(j, "f", 0.0, 1.0, false, false) == 0.25);
    CHECK_THROWS_AS(config_double(j, "f", 0.25, 1.0, true, false), ConfigError); // open bound excludes 0.25
    CHECK(config_u64(j, "big") == UINT64_MAX);

    try {
        config_double(j, "f", 0.5, 1.0, false, false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("'f'") != std::string::npos);
    }
}

TEST_CASE("distribution config supports inline support and generators") {
    const Json inline_cfg = parse_config_text(R"({
        "distribution": {"n": 1, "support": [
            {"x": [0], "y": 0, "p": 0.5}, {"x": [1], "y": 1, "p": 0.5}]}
    })");
    const FiniteDistribution d = distribution_from_config(inline_cfg);
    CHECK(d.dimension() == 1);
    CHECK(d.support().size() == 2);

    const Json gen_cfg = parse_config_text(R"({
        "distribution": {"generator": {"kind": "uniform_noisy_target", "n": 2,
            "noise_rate": 0.1,
            "target": {"kind": "conjunction", "n": 2, "states": [1, 0]}}}
    })");
    const FiniteDistribution g = distribution_from_config(gen_cfg);
    CHECK(g.dimension() == 2);
    CHECK(g.support().size() == 8);

    // noise_rate outside [0, 0.5) names the offending field
    Json bad = gen_cfg;
    bad["distribution"]["generator"]["noise_rate"] = 0.7;
    try {
        distribution_from_config(bad);
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("noise_rate") != std::string::npos);
    }

    // generator target must match the generator dimension
    Json mismatched = gen_cfg;
    mismatched["distribution"]["generator"]["target"]["n"] = 3;
    mismatched["distribution"]["generator"]["target"]["states"] = {1, 0, 0};
    CHECK_THROWS_AS(distribution_from_config(mismatched), ConfigError);
}

TEST_CASE("learner config") {
    CHECK(learner_from_config(parse_config_text("{}")).kind == LearnerMode::Kind::Exhaustive);
    const LearnerMode greedy =
        learner_from_config(parse_config_text(R"({"learner": {"mode": "greedy", "budget": 50}})"));
    CHECK(greedy.kind == LearnerMode::Kind::Greedy);
    CHECK(greedy.budget == 50);
    CHECK_THROWS_AS(learner_from_config(parse_config_text(R"({"learner": {"mode": "greedy", "budget": 0}})")),
                    ConfigError);
    CHECK_THROWS_AS(learner_from_config(parse_config_text(R"({"learner": {"mode": "annealing"}})")),
                    ConfigError);
}

TEST_CASE("predicate specs parse") {
    CHECK(predicate_from_spec("max_literals=2").kind() == Predicate::Kind::MaxLiterals);
    CHECK(predicate_from_spec("max_literals=2").param(0) == 2);
    CHECK(predicate_from_spec("max_depth=1").kind() == Predicate::Kind::MaxDepth);
    CHECK(predicate_from_spec("is_constant").kind() == Predicate::Kind::IsConstant);
    CHECK(predicate_from_spec("always_true").kind() == Predicate::Kind::AlwaysTrue);
    CHECK(predicate_from_spec("always_false").kind() == Predicate::Kind::AlwaysFalse);
    const Predicate rh = predicate_from_spec("rep_hash=7,4,2");
    CHECK(rh.kind() == Predicate::Kind::RepHash);
    CHECK(rh.param(0) == 7);
    CHECK(rh.param(1) == 4);
    CHECK(rh.param(2) == 2);
    CHECK_THROWS_AS(predicate_from_spec("sparsity=3"), ConfigError);
    CHECK_THROWS_AS(predicate_from_spec("max_literals=x"), ConfigError);
}

TEST_CASE("hypothesis json round trips every kind") {
    std::vector<Hypothesis> all = {
        ConstLabel{true},
        conj(3, {{0, VarState::Positive}, {2, VarState::Negated}}),
        ThreeTermDnf{{conj(2, {{0, VarState::Positive}}), conj(2, {}), conj(2, {{1, VarState::Negated}})}},
    };
    DecisionTree t;
    t.n = 2;
    t.nodes = {TreeNode{0, false, 1, 2}, TreeNode{-1, false, -1, -1}, TreeNode{-1, true, -1, -1}};
    all.push_back(t);
    ExpandedConjunction ec;
    ec.base_n = 1;
    ec.conj = Conjunction(8);
    ec.conj.set_state(7, VarState::Positive);
    all.push_back(ec);

    for (const Hypothesis& h : all) {
        const Json j = to_json(h);
        CHECK(j.contains("kind"));
        const Hypothesis back = hypothesis_from_json(j);
        CHECK(back == h);
    }
    CHECK_THROWS_AS(hypothesis_from_json(Json{{"kind", "svm"}}), std::invalid_argument);
}

TEST_CASE("dataset and distribution json round trips") {
    Dataset d;
    d.n = 2;
    d.examples = {{pt(2, 0b01), true}, {pt(2, 0b10), false}};
    const Dataset d2 = dataset_from_json(to_json(d));
    CHECK(d2.n == 2);
    REQUIRE(d2.examples.size() == 2);
    CHECK(d2.examples[0].x == d.examples[0].x);
    CHECK(d2.examples[0].y == d.examples[0].y);

    const FiniteDistribution dist = uniform_noisy_target(2, conj(2, {{0, VarState::Positive}}), 0.25);
    const FiniteDistribution dist2 = distribution_from_json(to_json(dist));
    CHECK(dist2.dimension() == 2);
    REQUIRE(dist2.support().size() == dist.support().size());
    for (std::size_t i = 0; i < dist.support().size(); ++i) {
        CHECK(dist2.support()[i].x == dist.support()[i].x);
        CHECK(dist2.support()[i].y == dist.support()[i].y);
        CHECK(dist2.support()[i].p == dist.support()[i].p);
    }
}

TEST_CASE("class descriptors round trip, including stacked predicates") {
    const HypothesisClass plain = HypothesisClass::three_term_dnfs(2);
    const HypothesisClass back = class_from_descriptor(class_descriptor_json(plain));
    CHECK(back.family() == Family::ThreeTermDnf);
    CHECK(back.dimension() == 2);
    CHECK(back.size() == plain.size());

    const HypothesisClass trees =
        HypothesisClass::decision_trees(3, 2).restricted(Predicate::max_depth(1));
    const HypothesisClass trees_back = class_from_descriptor(class_descriptor_json(trees));
    CHECK(trees_back.tree_depth() == 2);
    CHECK(trees_back.size() == trees.size());

    const HypothesisClass stacked = HypothesisClass::conjunctions(3)
                                        .restricted(Predicate::max_literals(2))
                                        .restricted(Predicate::rep_hash(5, 3, 2));
    const Json j = class_descriptor_json(stacked);
    const HypothesisClass stacked_back = class_from_descriptor(j);
    CHECK(stacked_back.size() == stacked.size());
    CHECK(stacked_back.predicates().size() == 2);

    // custom predicates serialize as a marker but cannot be reconstructed
    const HypothesisClass custom = HypothesisClass::conjunctions(2).restricted(
        Predicate::custom("f", [](const Hypothesis&) { return true; }));
    const Json custom_j = class_descriptor_json(custom);
    CHECK_THROWS_AS(class_from_descriptor(custom_j), std::invalid_argument);

    CHECK_THROWS_AS(class_from_descriptor(parse_config_text(R"({"family": "svm", "n": 2})")),
                    std::invalid_argument);
}

TEST_CASE("report json shapes") {
    ErmResult r;
    r.chosen = conj(2, {{0, VarState::Positive}});
    r.min_empirical_risk = 0.25;
    r.minimizer_count = 3;
    const Json jr = to_json(r);
    CHECK(jr["min_empirical_risk"] == 0.25);
    CHECK(jr["minimizer_count"] == 3);
    CHECK(jr["chosen"]["kind"] == "conjunction");

    SampleStats s{0.5, 0.25, 0.75};
    const Json js = to_json(s);
    CHECK(js["mean"] == 0.5);
    CHECK(js["ci95"][0] == 0.25);
    CHECK(js["ci95"][1] == 0.75);

    RiskDecomposition dec;
    dec.total_risk = 0.5;
    dec.approx_error = 0.25;
    dec.estimation_error = 0.25;
    const Json jd = to_json(dec);
    CHECK(jd["total_risk"] == 0.5);
    CHECK(jd["approx_error"] == 0.25);
    CHECK(jd.size() == 6);
}

TEST_CASE("execute_config bounds report carries exactly the pinned keys") {
    const Json cfg = parse_config_text(
        R"({"experiment": "bounds", "d": 2, "m": 100, "delta": 0.05, "mode": "paper"})");
    const ArtifactMap arts = execute_config(cfg);
    REQUIRE(arts.count("report.json") == 1);
    const Json report = Json::parse(arts.at("report.json"));
    CHECK(report.size() == 5);
    CHECK(report["mode"] == "paper");
    CHECK(report["d"] == 2);
    CHECK(report["m"] == 100);
    CHECK(report["delta"] == 0.05);
    CHECK(report["value"] == 0.4470226962271151);

    CHECK_THROWS_AS(execute_config(parse_config_text(R"({"experiment": "tarot"})")), ConfigError);
    CHECK_THROWS_AS(execute_config(parse_config_text(R"({})")), ConfigError);
}

TEST_CASE("fnv1a hash fixtures") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("hello") != fnv1a_hex("hellp"));
    CHECK(fnv1a_hex("x").size() == 16);
}

TEST_CASE("scenarios run and classify as frozen") {
    CHECK(scenario_names() == std::vector<std::string>{"tradeoff", "no_tradeoff", "interpretability_wins"});
    const ScenarioResult no_trade = run_scenario("no_tradeoff");
    CHECK(no_trade.classified == TradeoffCase::NoTradeoff);
    CHECK(no_trade.report_json["case"] == "no_tradeoff");
    CHECK(no_trade.report_json.contains("seed"));
    CHECK(parse_csv(no_trade.samples_csv).rows.size() == static_cast<std::size_t>(no_trade.report.trials));
    CHECK_THROWS_AS(run_scenario("mystery"), ConfigError);
}

TEST_CASE("fact suite passes and formats") {
    const auto checks = run_fact_suite(10, Seed{40});
    REQUIRE(checks.size() == 7);
    for (const auto& c : checks) CHECK(c.pass);
    const std::string table = format_fact_table(checks);
    CHECK(table.find("fact 1: PASS") != std::string::npos);
    CHECK(table.find("fact 7: PASS") != std::string::npos);
}

TEST_CASE("random fixtures are reproducible and well formed") {
    for (int i = 0; i < 10; ++i) {
        const RandomFixture a = random_fixture(Seed{500u + i});
        const RandomFixture b = random_fixture(Seed{500u + i});
        CHECK(a.restricted.size() > 0);
        CHECK(a.restricted.size() <= a.full.size());
        CHECK(a.full.dimension() == a.dist.dimension());
        CHECK(a.data.n == a.full.dimension());
        CHECK(a.data.size() == b.data.size());
        CHECK(a.full.name() == b.full.name());
    }
}

TEST_CASE("tool: run executes a config and writes a faithful manifest") {
    TempDir tmp("run");
    const fs::path cfg = tmp.path / "exp.json";
    write_text_file(cfg.string(), R"({
        "experiment": "tradeoff",
        "class": {"family": "conjunction", "n": 2},
        "restriction": "max_literals=1",
        "distribution": {"generator": {"kind": "uniform_noisy_target", "n": 2,
            "noise_rate": 0.1,
            "target": {"kind": "conjunction", "n": 2, "states": [1, 1]}}},
        "m": 50, "trials": 10, "seed": 7
    })");
    const fs::path out = tmp.path / "exp.out";
    const ToolRun r = run_tool("run " + cfg.string() + " -o " + out.string(), tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out / "report.json"));
    CHECK(fs::exists(out / "samples.csv"));
    CHECK(fs::exists(out / "manifest.json"));

    const Json manifest = Json::parse(slurp(out / "manifest.json"));
    CHECK(manifest["tool_version"] == kToolVersion);
    CHECK(manifest["config_hash"] == fnv1a_hex(slurp(cfg)));
    CHECK(manifest["artifacts"].size() == 2);

    const Json report = Json::parse(slurp(out / "report.json"));
    CHECK(report["experiment"] == "tradeoff");
    CHECK(report["report"]["trials"] == 10);

    // a second run into a fresh directory is byte-identical
    const fs::path out2 = tmp.path / "again.out";
    const ToolRun r2 = run_tool("run " + cfg.string() + " -o " + out2.string(), tmp.path);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out / "report.json") == slurp(out2 / "report.json"));
    CHECK(slurp(out / "samples.csv") == slurp(out2 / "samples.csv"));
}

TEST_CASE("tool: config errors exit 2 and name the field") {
    TempDir tmp("cfgerr");
    const fs::path cfg = tmp.path / "bad.json";
    write_text_file(cfg.string(), R"({
        "experiment": "tradeoff",
        "class": {"family": "conjunction", "n": 2},
        "distribution": {"generator": {"kind": "uniform_noisy_target", "n": 2,
            "noise_rate": 0.7,
            "target": {"kind": "conjunction", "n": 2, "states": [1, 1]}}},
        "m": 50, "trials": 10
    })");
    const ToolRun r = run_tool("run " + cfg.string() + " -o " + (tmp.path / "o").string(), tmp.path);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("noise_rate") != std::string::npos);

    const ToolRun missing = run_tool("run " + (tmp.path / "ghost.json").string(), tmp.path);
    CHECK(missing.exit_code == 2);
}

TEST_CASE("tool: blowing the enumeration cap exits 3") {
    TempDir tmp("cap");
    const fs::path cfg = tmp.path / "vc.json";
    write_text_file(cfg.string(), R"({
        "experiment": "vc",
        "class": {"family": "three_term_dnf", "n": 6}
    })");
    const ToolRun r = run_tool("run " + cfg.string() + " -o " + (tmp.path / "o").string(), tmp.path);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("387420489") != std::string::npos);
}

TEST_CASE("tool: plot validates its csv") {
    TempDir tmp("plot");
    const fs::path csv = tmp.path / "empty.csv";
    write_text_file(csv.string(), "m,risk\n");
    const ToolRun r =
        run_tool("plot " + csv.string() + " -k risk-vs-m -o " + (tmp.path / "p.svg").string(), tmp.path);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("no data rows") != std::string::npos);

    write_text_file(csv.string(), "m,risk\n10,0.5\n100,0.25\n");
    const ToolRun ok =
        run_tool("plot " + csv.string() + " -k risk-vs-m -o " + (tmp.path / "p.svg").string(), tmp.path);
    CHECK(ok.exit_code == 0);
    CHECK(slurp(tmp.path / "p.svg").rfind("<?xml", 0) == 0);
}

TEST_CASE("tool: scenario prints its case line") {
    TempDir tmp("scen");
    const ToolRun r = run_tool("scenario no_tradeoff", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("case: no_tradeoff\n") != std::string::npos);

    // hyphen alias and artifact writing
    const fs::path out = tmp.path / "scen.out";
    const ToolRun r2 = run_tool("scenario no-tradeoff -o " + out.string(), tmp.path);
    CHECK(r2.exit_code == 0);
    CHECK(fs::exists(out / "report.json"));
    CHECK(fs::exists(out / "samples.csv"));

    const ToolRun unknown = run_tool("scenario lottery", tmp.path);
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("tool: bounds and vc subcommands print values") {
    TempDir tmp("misc");
    const ToolRun b = run_tool("bounds --d 2 --m 100 --delta 0.05", tmp.path);
    CHECK(b.exit_code == 0);
    CHECK(b.out == "0.4470226962271151\n");

    const ToolRun v = run_tool("vc --family conjunction --n 2", tmp.path);
    CHECK(v.exit_code == 0);
    CHECK(v.out == "2\n");

    const ToolRun vr = run_tool("vc --family conjunction --n 3 --predicate max_literals=1", tmp.path);
    CHECK(vr.exit_code == 0);
    CHECK(vr.out == "2\n");

    const ToolRun bad = run_tool("bounds --d -1 --m 100 --delta 0.05", tmp.path);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("tool: enumeration cap env override is validated") {
    TempDir tmp("env");
    const std::string tool = ERMLAB_TOOL_PATH;
    const fs::path out_file = tmp.path / "stdout.txt";
    const fs::path err_file = tmp.path / "stderr.txt";

    // a small cap turns a feasible vc query into a cap error (exit 3)
    int status = std::system(("ERMLAB_MAX_ENUM=100 " + tool + " vc --family three_term_dnf --n 2 >" +
                              out_file.string() + " 2>" + err_file.string())
                                 .c_str());
    CHECK(WEXITSTATUS(status) == 3);
    CHECK(read_text_file(err_file.string()).find("729") != std::string::npos);

    // garbage value is a config error (exit 2) naming the variable
    status = std::system(("ERMLAB_MAX_ENUM=banana " + tool + " vc --family conjunction --n 2 >" +
                          out_file.string() + " 2>" + err_file.string())
                             .c_str());
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(read_text_file(err_file.string()).find("ERMLAB_MAX_ENUM") != std::string::npos);

    // negative values must not wrap into a huge cap
    status = std::system(("ERMLAB_MAX_ENUM=-5 " + tool + " vc --family conjunction --n 2 >" +
                          out_file.string() + " 2>" + err_file.string())
                             .c_str());
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(read_text_file(err_file.string()).find("not a positive integer") != std::string::npos);
}

TEST_CASE("tool: version and bad usage") {
    TempDir tmp("ver");
    const ToolRun v = run_tool("--version", tmp.path);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("ermlab 0.1.0") != std::string::npos);

    const ToolRun nothing = run_tool("", tmp.path);
    CHECK(nothing.exit_code == 2); // a subcommand is required

    const ToolRun unknown = run_tool("teleport", tmp.path);
    CHECK(unknown.exit_code == 2);
}
