#include "cli/fact_suite.hpp"

#include <cmath>
#include <sstream>

#include "ermlab/erm.hpp"

namespace ermlab::cli {

namespace {

constexpr double kTol = 1e-12;

HypothesisClass random_base_class(CounterRng& rng) {
    switch (rng.next_below(4)) {
    case 0: return HypothesisClass::constants(1 + static_cast<int>(rng.next_below(3)));
    case 1: return HypothesisClass::conjunctions(1 + static_cast<int>(rng.next_below(3)));
    case 2: return HypothesisClass::three_term_dnfs(1 + static_cast<int>(rng.next_below(2)));
    default:
        return HypothesisClass::decision_trees(1 + static_cast<int>(rng.next_below(3)),
                                               1 + static_cast<int>(rng.next_below(2)));
    }
}

Predicate random_predicate(CounterRng& rng, const HypothesisClass& cls) {
    const bool tree = cls.family() == Family::DecisionTree;
    switch (rng.next_below(tree ? 4 : 3)) {
    case 0: return Predicate::max_literals(static_cast<int>(rng.next_below(3)));
    case 1: return Predicate::is_constant();
    case 2: {
        const std::uint64_t modulus = 4;
        return Predicate::rep_hash(rng.next_u64(), modulus, 1 + rng.next_below(modulus - 1));
    }
    default: return Predicate::max_depth(static_cast<int>(rng.next_below(cls.tree_depth() + 1)));
    }
}

FiniteDistribution random_distribution(CounterRng& rng, int n) {
    const DomainSpec domain(n);
    std::vector<WeightedExample> support;
    double total = 0.0;
    for (std::uint64_t i = 0; i < domain.point_count(); ++i) {
        for (int y = 0; y < 2; ++y) {
            if (rng.next_unit() < 0.3) continue; // leave some (x, y) pairs off the support
            const double w = 0.05 + rng.next_unit();
            support.push_back(WeightedExample{domain.point(i), y == 1, w});
            total += w;
        }
    }
    if (support.empty()) {
        support.push_back(WeightedExample{domain.point(0), false, 1.0});
        total = 1.0;
    }
    for (auto& e : support) e.p /= total;
    return FiniteDistribution(n, support);
}

} // namespace

RandomFixture random_fixture(Seed seed) {
    CounterRng rng(seed);
    HypothesisClass full = random_base_class(rng);
    for (int attempt = 0;; ++attempt) {
        HypothesisClass restricted = full.restricted(random_predicate(rng, full));
        if (restricted.size() == 0) {
            if (attempt >= 64) { // always_true cannot be empty
                restricted = full.restricted(Predicate::always_true());
            } else {
                continue;
            }
        }
        FiniteDistribution dist = random_distribution(rng, full.dimension());
        const std::size_t m = 1 + rng.next_below(50);
        Dataset data = draw_dataset(dist, m, derive_seed(seed, 101));
        return RandomFixture{std::move(full), std::move(restricted), std::move(dist), std::move(data)};
    }
}

namespace {

FactCheck check_counts(int index, std::string label, int failures, int total, const std::string& what) {
    std::ostringstream detail;
    detail << (total - failures) << "/" << total << " fixtures satisfied " << what;
    return FactCheck{index, std::move(label), failures == 0, detail.str()};
}

} // namespace

std::vector<FactCheck> run_fact_suite(int fixtures, Seed base_seed) {
    int fail1 = 0, fail2 = 0, fail3 = 0, fail4 = 0, fail5 = 0;
    for (int t = 0; t < fixtures; ++t) {
        const RandomFixture fx = random_fixture(derive_seed(base_seed, static_cast<std::uint64_t>(t)));

        const double approx_full = approximation_error(fx.full, fx.dist);
        const double approx_restricted = approximation_error(fx.restricted, fx.dist);
        if (approx_full > approx_restricted + kTol) ++fail1;

        const ErmResult er = erm_exhaustive(fx.full, fx.data);
        const double estimation = exact_risk(er.chosen, fx.dist) - approx_full;
        const double worst_full = worst_case_gen_error(fx.full, fx.data, fx.dist);
        if (estimation > 2.0 * worst_full + kTol) ++fail2;

        if (worst_case_gen_error(fx.restricted, fx.data, fx.dist) > worst_full + kTol) ++fail3;

        if (er.min_empirical_risk > erm_exhaustive(fx.restricted, fx.data).min_empirical_risk) ++fail4;

        const DomainSpec domain(fx.full.dimension());
        const VcResult vc_full = vc_dimension(fx.full, domain);
        const VcResult vc_restricted = vc_dimension(fx.restricted, domain);
        if (!vc_full.exact || !vc_restricted.exact || vc_restricted.dimension > vc_full.dimension) ++fail5;
    }

    // Statistical checks on a fixed fixture: conjunctions over n=2 with a
    // noisy single-literal target.
    const HypothesisClass cls = HypothesisClass::conjunctions(2);
    Conjunction target(2);
    target.set_state(0, VarState::Positive);
    const FiniteDistribution dist = uniform_noisy_target(2, Hypothesis{target}, 0.1);
    const DomainSpec domain(2);
    const int d = vc_dimension(cls, domain).dimension;

    const int bound_samples = 500;
    const std::size_t m6 = 200;
    const double bound = vc_bound(PacParams{d, m6, 0.05, 0.1}, BoundMode::Classical);
    int violations = 0;
    for (int t = 0; t < bound_samples; ++t) {
        const Dataset s = draw_dataset(dist, m6, derive_seed(base_seed, 7000 + static_cast<std::uint64_t>(t)));
        if (worst_case_gen_error(cls, s, dist) > bound) ++violations;
    }
    const double rate = static_cast<double>(violations) / bound_samples;

    const int risk_seeds = 200;
    const std::size_t m7 = 100 * static_cast<std::size_t>(d);
    double risk_sum = 0.0;
    for (int t = 0; t < risk_seeds; ++t) {
        const Dataset s = draw_dataset(dist, m7, derive_seed(base_seed, 9000 + static_cast<std::uint64_t>(t)));
        risk_sum += exact_risk(erm_exhaustive(cls, s).chosen, dist);
    }
    const double mean_risk = risk_sum / risk_seeds;
    const double approx = approximation_error(cls, dist);

    std::vector<FactCheck> checks;
    checks.push_back(check_counts(1, "restriction never lowers approximation error", fail1, fixtures,
                                  "approx(full) <= approx(restricted)"));
    checks.push_back(check_counts(2, "estimation error at most twice the worst-case generalization gap", fail2,
                                  fixtures, "risk(erm) - approx <= 2 * worst-case gap"));
    checks.push_back(check_counts(3, "restriction never raises the worst-case generalization gap", fail3, fixtures,
                                  "worst_gap(restricted) <= worst_gap(full)"));
    checks.push_back(check_counts(4, "full-class ERM attains no larger empirical risk", fail4, fixtures,
                                  "min_emp(full) <= min_emp(restricted)"));
    checks.push_back(
        check_counts(5, "restriction never raises the VC dimension", fail5, fixtures, "vc(restricted) <= vc(full)"));
    {
        std::ostringstream detail;
        detail << "violation rate " << rate << " <= 0.05 over " << bound_samples << " samples (bound " << bound
               << ", d=" << d << ", m=" << m6 << ")";
        checks.push_back(FactCheck{6, "worst-case gap exceeds the high-probability bound rarely", rate <= 0.05,
                                   detail.str()});
    }
    {
        std::ostringstream detail;
        detail << "mean ERM risk " << mean_risk << " vs approximation error " << approx << " at m=" << m7 << " over "
               << risk_seeds << " seeds";
        checks.push_back(FactCheck{7, "ERM risk converges to the approximation error",
                                   std::abs(mean_risk - approx) <= 0.02, detail.str()});
    }
    return checks;
}

std::string format_fact_table(const std::vector<FactCheck>& checks) {
    std::ostringstream out;
    for (const FactCheck& c : checks) {
        out << "fact " << c.index << ": " << (c.pass ? "PASS" : "FAIL") << " — " << c.label << " (" << c.detail
            << ")\n";
    }
    return out.str();
}

} // namespace ermlab::cli
