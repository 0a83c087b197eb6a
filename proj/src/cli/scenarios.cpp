#include "cli/scenarios.hpp"

#include <cstddef>

#include "cli/csv.hpp"
#include "ermlab/errors.hpp"
#include "ermlab/risk.hpp"

namespace ermlab::cli {

namespace {

struct ScenarioFixture {
    HypothesisClass full;
    HypothesisClass restricted;
    FiniteDistribution dist;
    std::size_t m = 0;
    int trials = 0;
    Seed seed{0};
};

Hypothesis conjunction_of(int n, std::initializer_list<std::pair<int, VarState>> states) {
    Conjunction c(n);
    for (const auto& [v, s] : states) c.set_state(v, s);
    return c;
}

Hypothesis stump_on(int n, int variable) {
    DecisionTree t;
    t.n = n;
    t.nodes = {TreeNode{variable, false, 1, 2}, TreeNode{-1, false, -1, -1}, TreeNode{-1, true, -1, -1}};
    return t;
}

// Conjunctions over two variables against the single-literal restriction,
// target x0 & x1: the restriction cannot represent the target, so its best
// risk is strictly worse and the risk gap stays positive.
ScenarioFixture tradeoff_fixture() {
    const HypothesisClass full = HypothesisClass::conjunctions(2);
    return ScenarioFixture{
        full,
        full.restricted(Predicate::max_literals(1)),
        uniform_noisy_target(2, conjunction_of(2, {{0, VarState::Positive}, {1, VarState::Positive}}), 0.1),
        2000,
        200,
        Seed{1001},
    };
}

// Same classes, target x0: the target survives the restriction, and at this
// sample size both learners find it, so the risk gap vanishes.
ScenarioFixture no_tradeoff_fixture() {
    const HypothesisClass full = HypothesisClass::conjunctions(2);
    return ScenarioFixture{
        full,
        full.restricted(Predicate::max_literals(1)),
        uniform_noisy_target(2, conjunction_of(2, {{0, VarState::Positive}}), 0.1),
        2000,
        200,
        Seed{2002},
    };
}

// Depth-2 trees against the stump restriction with a stump target, heavy
// label noise and a small sample: the large class overfits the noise while
// the restriction mostly recovers the target, so the risk gap goes negative.
ScenarioFixture interpretability_wins_fixture() {
    const HypothesisClass full = HypothesisClass::decision_trees(4, 2);
    return ScenarioFixture{
        full,
        full.restricted(Predicate::max_depth(1)),
        uniform_noisy_target(4, stump_on(4, 0), 0.15),
        16,
        200,
        Seed{3003},
    };
}

ScenarioFixture fixture_for(const std::string& name) {
    if (name == "tradeoff") return tradeoff_fixture();
    if (name == "no_tradeoff") return no_tradeoff_fixture();
    if (name == "interpretability_wins") return interpretability_wins_fixture();
    throw ConfigError("scenario", "unknown scenario '" + name + "'; expected one of tradeoff, no_tradeoff, "
                                  "interpretability_wins");
}

} // namespace

std::vector<std::string> scenario_names() { return {"tradeoff", "no_tradeoff", "interpretability_wins"}; }

ScenarioResult run_scenario(const std::string& name) {
    const ScenarioFixture fx = fixture_for(name);
    ScenarioResult result;
    result.name = name;
    result.report = tradeoff_experiment(fx.full, fx.restricted, fx.dist, fx.m, fx.trials, fx.seed);
    result.classified = classify_case(result.report);
    result.report_json = Json{
        {"scenario", name},
        {"seed", fx.seed.value},
        {"case", to_string(result.classified)},
        {"full_class", class_descriptor_json(fx.full)},
        {"restricted_class", class_descriptor_json(fx.restricted)},
        {"distribution", to_json(fx.dist)},
        {"report", to_json(result.report)},
    };
    result.samples_csv = tradeoff_samples_csv(result.report);
    return result;
}

} // namespace ermlab::cli
