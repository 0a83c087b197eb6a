#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ermlab/core.hpp"
#include "ermlab/hypothesis_class.hpp"
#include "ermlab/risk.hpp"

namespace ermlab {

struct ErmResult {
    Hypothesis chosen;
    double min_empirical_risk = 0.0;
    std::uint64_t minimizer_count = 0;
};

// Scans the class in canonical order and returns the first empirical-risk
// minimizer (deterministic tie-break), the minimum, and how many members
// attain it. Requires a nonempty dataset and a nonempty class.
ErmResult erm_exhaustive(const HypothesisClass& cls, const Dataset& data);

// All minimizers in canonical order; front() equals erm_exhaustive's choice.
std::vector<Hypothesis> erm_set(const HypothesisClass& cls, const Dataset& data);

// Elimination learner for conjunctions: start from the contradictory
// conjunction carrying all 2n literals and drop every literal falsified by a
// positive example. O(m * n); exact ERM when the sample is realizable by a
// conjunction. Negative examples are ignored; check is_consistent afterwards
// to detect non-realizable samples.
Conjunction learn_conjunction_realizable(const Dataset& data);

// empirical_risk(h, data) - min empirical risk over cls; h must be a member.
double optimization_error(const Hypothesis& h, const HypothesisClass& cls, const Dataset& data);

// Random-restart first-improvement hill climbing on empirical risk, spending
// at most `budget` empirical-risk evaluations. Deterministic in seed. When
// the budget covers the whole class the scan is exhaustive, so the result
// attains the exact minimum.
Hypothesis greedy_approx_erm(const HypothesisClass& cls, const Dataset& data, std::uint64_t budget, Seed seed);

// A named learning procedure tied to the class it searches. run(cls, data,
// seed) always returns a member of cls.
struct Learner {
    std::string name;
    std::function<Hypothesis(const HypothesisClass&, const Dataset&, Seed)> run;
};

struct LearnerMode {
    enum class Kind { Exhaustive, Greedy };
    Kind kind = Kind::Exhaustive;
    std::uint64_t budget = 0; // greedy only

    static LearnerMode exhaustive() { return {Kind::Exhaustive, 0}; }
    static LearnerMode greedy(std::uint64_t budget) { return {Kind::Greedy, budget}; }
};

Learner make_learner(const LearnerMode& mode);

} // namespace ermlab
