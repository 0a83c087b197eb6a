#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ermlab/core.hpp"
#include "ermlab/hypothesis.hpp"

namespace ermlab {

// Pr_{(x,y)~D}[h(x) != y], an exact finite sum over the support.
double exact_risk(const Hypothesis& h, const FiniteDistribution& dist);

// Fraction of misclassified examples. Throws on an empty dataset
// (empirical risk is undefined there).
double empirical_risk(const Hypothesis& h, const Dataset& data);

// Number of misclassified examples; the exact integer behind empirical_risk.
std::size_t error_count(const Hypothesis& h, const Dataset& data);

// |exact risk - empirical risk|.
double generalization_gap(const Hypothesis& h, const Dataset& data, const FiniteDistribution& dist);

// True when h misclassifies nothing in data; reports whether a learned
// hypothesis is consistent (used to detect non-realizable samples).
bool is_consistent(const Hypothesis& h, const Dataset& data);

// Distribution with the given marginal over points and labels forced to
// target(x); mass lands only on (x, target(x)).
FiniteDistribution realizable_distribution(const std::vector<std::pair<Bits, double>>& marginal,
                                           const Hypothesis& target);

// Uniform marginal over all of {0,1}^n; each label is target(x) flipped
// with probability noise_rate (0 keeps the distribution realizable).
// noise_rate must lie in [0, 0.5).
FiniteDistribution uniform_noisy_target(int n, const Hypothesis& target, double noise_rate);

} // namespace ermlab
