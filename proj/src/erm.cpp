#include "ermlab/erm.hpp"

#include <stdexcept>

namespace ermlab {

namespace {

// Error count, abandoning the scan once it exceeds `bound` (returns bound+1).
std::size_t error_count_bounded(const Hypothesis& h, const Dataset& data, std::size_t bound) {
    std::size_t errors = 0;
    for (const LabeledExample& e : data.examples) {
        if (evaluate(h, e.x) != e.y) {
            ++errors;
            if (errors > bound) return errors;
        }
    }
    return errors;
}

void check_erm_inputs(const HypothesisClass& cls, const Dataset& data) {
    if (data.examples.empty())
        throw std::invalid_argument("undefined empirical risk: dataset is empty");
    if (data.n != cls.dimension())
        throw std::invalid_argument("dataset dimension " + std::to_string(data.n) + " does not match class " +
                                    cls.name());
}

} // namespace

ErmResult erm_exhaustive(const HypothesisClass& cls, const Dataset& data) {
    check_erm_inputs(cls, data);
    ErmResult result;
    std::size_t best = data.size() + 1;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        const std::size_t errors = error_count_bounded(h, data, best);
        if (errors < best) {
            best = errors;
            result.chosen = h;
            result.minimizer_count = 1;
        } else if (errors == best) {
            ++result.minimizer_count;
        }
        return true;
    });
    if (result.minimizer_count == 0) throw std::invalid_argument("class " + cls.name() + " is empty");
    result.min_empirical_risk = static_cast<double>(best) / static_cast<double>(data.size());
    return result;
}

std::vector<Hypothesis> erm_set(const HypothesisClass& cls, const Dataset& data) {
    check_erm_inputs(cls, data);
    std::vector<Hypothesis> minimizers;
    std::size_t best = data.size() + 1;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        const std::size_t errors = error_count_bounded(h, data, best);
        if (errors < best) {
            best = errors;
            minimizers.clear();
            minimizers.push_back(h);
        } else if (errors == best) {
            minimizers.push_back(h);
        }
        return true;
    });
    if (minimizers.empty()) throw std::invalid_argument("class " + cls.name() + " is empty");
    return minimizers;
}

Conjunction learn_conjunction_realizable(const Dataset& data) {
    if (data.n < 1) throw std::invalid_argument("dataset carries no dimension");
    // Most specific start: every variable required both positive and negated.
    Conjunction h(Bits::ones(data.n), Bits::ones(data.n));
    for (const LabeledExample& e : data.examples) {
        if (!e.y) continue;
        if (e.x.size() != data.n)
            throw std::invalid_argument("dataset example dimension mismatch");
        h.pos &= e.x;       // drop positive literals falsified by e.x
        h.neg.and_not(e.x); // drop negated literals falsified by e.x
    }
    return h;
}

double optimization_error(const Hypothesis& h, const HypothesisClass& cls, const Dataset& data) {
    check_erm_inputs(cls, data);
    if (!cls.contains(h))
        throw std::invalid_argument("hypothesis '" + describe(h) + "' is not a member of " + cls.name());
    std::size_t best = data.size() + 1;
    cls.for_each_member([&](const Hypothesis& member, std::uint64_t) {
        const std::size_t errors = error_count_bounded(member, data, best);
        if (errors < best) best = errors;
        return true;
    });
    const std::size_t own = error_count(h, data);
    return static_cast<double>(own - best) / static_cast<double>(data.size());
}

namespace {

// Deterministic single-edit neighborhoods, in a fixed order per family.
std::vector<Hypothesis> neighbors_of(const Hypothesis& h, Family family) {
    std::vector<Hypothesis> out;
    switch (family) {
        case Family::Constant:
            throw std::invalid_argument("greedy search does not support family 'constant'");
        case Family::Conjunction: {
            const Conjunction& c = std::get<Conjunction>(h);
            for (int v = 0; v < c.dimension(); ++v) {
                const VarState cur = c.state(v);
                for (int s = 0; s < 3; ++s) {
                    if (static_cast<VarState>(s) == cur) continue;
                    Conjunction nb = c;
                    nb.set_state(v, static_cast<VarState>(s));
                    out.push_back(std::move(nb));
                }
            }
            break;
        }
        case Family::ThreeTermDnf: {
            const ThreeTermDnf& d = std::get<ThreeTermDnf>(h);
            for (int t = 0; t < 3; ++t) {
                const Conjunction& term = d.terms[static_cast<std::size_t>(t)];
                for (int v = 0; v < term.dimension(); ++v) {
                    const VarState cur = term.state(v);
                    for (int s = 0; s < 3; ++s) {
                        if (static_cast<VarState>(s) == cur) continue;
                        ThreeTermDnf nb = d;
                        nb.terms[static_cast<std::size_t>(t)].set_state(v, static_cast<VarState>(s));
                        out.push_back(std::move(nb));
                    }
                }
            }
            break;
        }
        case Family::DecisionTree: {
            const DecisionTree& t = std::get<DecisionTree>(h);
            for (std::size_t i = 0; i < t.nodes.size(); ++i) {
                if (t.nodes[i].is_leaf()) {
                    DecisionTree nb = t;
                    nb.nodes[i].leaf_label = !nb.nodes[i].leaf_label;
                    out.push_back(std::move(nb));
                } else {
                    for (int v = 0; v < t.n; ++v) {
                        if (v == t.nodes[i].variable) continue;
                        DecisionTree nb = t;
                        nb.nodes[i].variable = v;
                        out.push_back(std::move(nb));
                    }
                }
            }
            break;
        }
    }
    return out;
}

} // namespace

Hypothesis greedy_approx_erm(const HypothesisClass& cls, const Dataset& data, std::uint64_t budget, Seed seed) {
    check_erm_inputs(cls, data);
    if (budget == 0) throw std::invalid_argument("greedy search budget must be positive");
    if (cls.family() == Family::Constant)
        throw std::invalid_argument("greedy search does not support family 'constant'");
    if (budget >= cls.size()) return erm_exhaustive(cls, data).chosen; // full scan fits the budget

    CounterRng rng(seed);
    std::uint64_t evals = 0;
    Hypothesis best;
    std::size_t best_errors = data.size() + 1;
    const auto consider = [&](const Hypothesis& h, std::size_t errors) {
        if (errors < best_errors) {
            best_errors = errors;
            best = h;
        }
    };

    while (evals < budget) {
        Hypothesis current = cls.random_member(rng);
        std::size_t current_errors = error_count(current, data);
        ++evals;
        consider(current, current_errors);
        bool improved = true;
        while (improved && evals < budget && current_errors > 0) {
            improved = false;
            for (Hypothesis& nb : neighbors_of(current, cls.family())) {
                if (evals >= budget) break;
                if (!cls.contains(nb)) continue;
                const std::size_t errors = error_count(nb, data);
                ++evals;
                consider(nb, errors);
                if (errors < current_errors) { // first improvement
                    current = std::move(nb);
                    current_errors = errors;
                    improved = true;
                    break;
                }
            }
        }
        if (best_errors == 0) break; // nothing below zero exists
    }
    return best;
}

Learner make_learner(const LearnerMode& mode) {
    if (mode.kind == LearnerMode::Kind::Exhaustive) {
        return Learner{"erm_exhaustive", [](const HypothesisClass& cls, const Dataset& data, Seed) {
                           return erm_exhaustive(cls, data).chosen;
                       }};
    }
    const std::uint64_t budget = mode.budget;
    return Learner{"greedy(budget=" + std::to_string(budget) + ")",
                   [budget](const HypothesisClass& cls, const Dataset& data, Seed seed) {
                       return greedy_approx_erm(cls, data, budget, seed);
                   }};
}

} // namespace ermlab
