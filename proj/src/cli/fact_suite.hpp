#pragma once

#include <string>
#include <vector>

#include "ermlab/capacity.hpp"
#include "ermlab/decomposition.hpp"
#include "ermlab/risk.hpp"

namespace ermlab::cli {

// One randomized (class, restriction, distribution, dataset) instance for
// property checks. Dimension <= 3, dataset size <= 50, restriction nonempty.
struct RandomFixture {
    HypothesisClass full;
    HypothesisClass restricted;
    FiniteDistribution dist;
    Dataset data;
};

RandomFixture random_fixture(Seed seed);

struct FactCheck {
    int index = 0;
    std::string label;
    bool pass = false;
    std::string detail;
};

// Checks the seven ordering/convergence facts: five verbatim inequalities
// over randomized fixtures plus two statistical checks on a fixed fixture.
std::vector<FactCheck> run_fact_suite(int fixtures = 100, Seed base_seed = Seed{40});

// "fact 3: PASS — ..." lines, one per check.
std::string format_fact_table(const std::vector<FactCheck>& checks);

} // namespace ermlab::cli
