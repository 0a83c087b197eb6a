#include "ermlab/risk.hpp"

#include <cmath>
#include <stdexcept>

namespace ermlab {

double exact_risk(const Hypothesis& h, const FiniteDistribution& dist) {
    double risk = 0.0;
    for (const WeightedExample& e : dist.support()) {
        if (evaluate(h, e.x) != e.y) risk += e.p;
    }
    return risk;
}

std::size_t error_count(const Hypothesis& h, const Dataset& data) {
    std::size_t errors = 0;
    for (const LabeledExample& e : data.examples) {
        if (evaluate(h, e.x) != e.y) ++errors;
    }
    return errors;
}

double empirical_risk(const Hypothesis& h, const Dataset& data) {
    if (data.examples.empty()) throw std::invalid_argument("undefined empirical risk: dataset is empty");
    return static_cast<double>(error_count(h, data)) / static_cast<double>(data.size());
}

double generalization_gap(const Hypothesis& h, const Dataset& data, const FiniteDistribution& dist) {
    return std::abs(exact_risk(h, dist) - empirical_risk(h, data));
}

bool is_consistent(const Hypothesis& h, const Dataset& data) { return error_count(h, data) == 0; }

FiniteDistribution realizable_distribution(const std::vector<std::pair<Bits, double>>& marginal,
                                           const Hypothesis& target) {
    if (marginal.empty()) throw std::invalid_argument("realizable distribution needs a nonempty marginal");
    const int n = marginal.front().first.size();
    std::vector<WeightedExample> support;
    support.reserve(marginal.size());
    for (const auto& [x, p] : marginal) support.push_back({x, evaluate(target, x), p});
    return FiniteDistribution(n, std::move(support));
}

FiniteDistribution uniform_noisy_target(int n, const Hypothesis& target, double noise_rate) {
    if (!(noise_rate >= 0.0 && noise_rate < 0.5))
        throw std::invalid_argument("noise_rate must lie in [0, 0.5), got " + std::to_string(noise_rate));
    const DomainSpec domain(n);
    const double px = 1.0 / static_cast<double>(domain.point_count());
    std::vector<WeightedExample> support;
    for (std::uint64_t v = 0; v < domain.point_count(); ++v) {
        const Bits x = domain.point(v);
        const Label t = evaluate(target, x);
        if (noise_rate == 0.0) {
            support.push_back({x, t, px});
        } else {
            support.push_back({x, t, px * (1.0 - noise_rate)});
            support.push_back({x, !t, px * noise_rate});
        }
    }
    return FiniteDistribution(n, std::move(support));
}

} // namespace ermlab
