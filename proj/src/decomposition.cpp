#include "ermlab/decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace ermlab {

double approximation_error(const HypothesisClass& cls, const FiniteDistribution& dist) {
    double best = 2.0;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        const double risk = exact_risk(h, dist);
        if (risk < best) best = risk;
        return true;
    });
    if (best > 1.5) throw std::invalid_argument("class " + cls.name() + " is empty");
    return best;
}

RiskDecomposition decompose(const Hypothesis& h, const HypothesisClass& cls, const Dataset& data,
                            const FiniteDistribution& dist) {
    if (!cls.contains(h))
        throw std::invalid_argument("hypothesis '" + describe(h) + "' is not a member of " + cls.name());
    if (data.examples.empty()) throw std::invalid_argument("undefined empirical risk: dataset is empty");

    RiskDecomposition out;
    out.total_risk = exact_risk(h, dist);
    out.approx_error = approximation_error(cls, dist);
    out.estimation_error = out.total_risk - out.approx_error;
    const double own_empirical = empirical_risk(h, data);
    out.erm_empirical_risk = erm_exhaustive(cls, data).min_empirical_risk;
    out.optimization_error = optimization_error(h, cls, data);
    out.generalization_error = out.total_risk - own_empirical;

    const double sum1 = out.approx_error + out.estimation_error;
    const double sum2 = out.erm_empirical_risk + out.optimization_error + out.generalization_error;
    if (std::abs(sum1 - out.total_risk) > 1e-12 || std::abs(sum2 - out.total_risk) > 1e-12)
        throw std::logic_error("risk decomposition identity violated");
    return out;
}

SampleStats sample_stats(const std::vector<double>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("need at least two samples for a confidence interval");
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    const double half = 1.96 * sd / std::sqrt(n);
    return {mean, mean - half, mean + half};
}

TradeoffReport tradeoff_experiment(const HypothesisClass& full, const HypothesisClass& restricted,
                                   const FiniteDistribution& dist, std::size_t m, int trials, Seed base_seed,
                                   const LearnerMode& mode) {
    if (m < 1) throw std::invalid_argument("tradeoff experiment needs m >= 1");
    if (trials < 2) throw std::invalid_argument("tradeoff experiment needs trials >= 2");
    if (full.family() != restricted.family() || full.dimension() != restricted.dimension() ||
        full.tree_depth() != restricted.tree_depth())
        throw std::invalid_argument("restricted class must refine the full class (same family, n, params)");

    const Learner learner = make_learner(mode);
    const double approx_full = approximation_error(full, dist);
    const double approx_restricted = approximation_error(restricted, dist);

    TradeoffReport report;
    report.m = m;
    report.trials = trials;
    report.appincr = approx_restricted - approx_full;
    report.estdecr.reserve(static_cast<std::size_t>(trials));
    report.emp_gap.reserve(static_cast<std::size_t>(trials));
    report.gen_gap.reserve(static_cast<std::size_t>(trials));
    report.risk_gap.reserve(static_cast<std::size_t>(trials));

    for (int t = 0; t < trials; ++t) {
        const Seed trial_seed = derive_seed(base_seed, static_cast<std::uint64_t>(t));
        const Dataset sample = draw_dataset(dist, m, trial_seed);
        const Hypothesis h_full = learner.run(full, sample, derive_seed(trial_seed, 1));
        const Hypothesis h_restricted = learner.run(restricted, sample, derive_seed(trial_seed, 2));

        const double risk_full = exact_risk(h_full, dist);
        const double risk_restricted = exact_risk(h_restricted, dist);
        const double emp_full = empirical_risk(h_full, sample);
        const double emp_restricted = empirical_risk(h_restricted, sample);

        report.estdecr.push_back((risk_restricted - approx_restricted) - (risk_full - approx_full));
        report.emp_gap.push_back(emp_restricted - emp_full);
        report.gen_gap.push_back((risk_restricted - emp_restricted) - (risk_full - emp_full));
        report.risk_gap.push_back(risk_restricted - risk_full);
    }

    report.estdecr_stats = sample_stats(report.estdecr);
    report.emp_gap_stats = sample_stats(report.emp_gap);
    report.gen_gap_stats = sample_stats(report.gen_gap);
    report.risk_gap_stats = sample_stats(report.risk_gap);
    return report;
}

std::string to_string(TradeoffCase c) {
    switch (c) {
        case TradeoffCase::Tradeoff: return "tradeoff";
        case TradeoffCase::NoTradeoff: return "no_tradeoff";
        case TradeoffCase::InterpretabilityWins: return "interpretability_wins";
        case TradeoffCase::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

TradeoffCase classify_case(const TradeoffReport& report, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("classification tolerance must be nonnegative");
    const SampleStats& s = report.risk_gap_stats;
    if (s.ci_lo > tol) return TradeoffCase::Tradeoff;
    if (s.ci_hi < -tol) return TradeoffCase::InterpretabilityWins;
    if (s.ci_lo >= -tol && s.ci_hi <= tol) return TradeoffCase::NoTradeoff;
    return TradeoffCase::Inconclusive;
}

} // namespace ermlab
