#pragma once

#include <string>
#include <vector>

#include "ermlab/core.hpp"
#include "ermlab/erm.hpp"

namespace ermlab {

// min over cls of exact_risk. Exhaustive scan.
double approximation_error(const HypothesisClass& cls, const FiniteDistribution& dist);

// Two exact decompositions of one hypothesis' risk and empirical risk:
//   total_risk = approx_error + estimation_error
//   total_risk = erm_empirical_risk + optimization_error + generalization_error
// where generalization_error is signed (risk minus empirical risk).
// Requires h to be a member of cls, so estimation_error >= 0.
struct RiskDecomposition {
    double total_risk = 0.0;
    double approx_error = 0.0;
    double estimation_error = 0.0;
    double erm_empirical_risk = 0.0;
    double optimization_error = 0.0;
    double generalization_error = 0.0;
};

RiskDecomposition decompose(const Hypothesis& h, const HypothesisClass& cls, const Dataset& data,
                            const FiniteDistribution& dist);

struct SampleStats {
    double mean = 0.0;
    double ci_lo = 0.0; // 95% normal-approximation interval
    double ci_hi = 0.0;
};

SampleStats sample_stats(const std::vector<double>& samples);

// Monte-Carlo comparison of learning in a class H against its restriction
// H_I. Per trial (fresh sample of size m): the change in estimation error,
// empirical risk, generalization error, and true risk when switching from
// the H-learner's output to the H_I-learner's output. appincr is the
// deterministic increase in approximation error; per trial,
// appincr + estdecr[t] == risk_gap[t] exactly.
struct TradeoffReport {
    std::size_t m = 0;
    int trials = 0;
    double appincr = 0.0;
    std::vector<double> estdecr;
    std::vector<double> emp_gap;
    std::vector<double> gen_gap;
    std::vector<double> risk_gap;
    SampleStats estdecr_stats;
    SampleStats emp_gap_stats;
    SampleStats gen_gap_stats;
    SampleStats risk_gap_stats;
};

TradeoffReport tradeoff_experiment(const HypothesisClass& full, const HypothesisClass& restricted,
                                   const FiniteDistribution& dist, std::size_t m, int trials, Seed base_seed,
                                   const LearnerMode& mode = LearnerMode::exhaustive());

enum class TradeoffCase { Tradeoff, NoTradeoff, InterpretabilityWins, Inconclusive };

std::string to_string(TradeoffCase c);

// Reads the risk-gap confidence interval against a tolerance band:
// entirely above +tol -> Tradeoff; entirely below -tol ->
// InterpretabilityWins; inside [-tol, tol] -> NoTradeoff; else Inconclusive.
TradeoffCase classify_case(const TradeoffReport& report, double tol = 0.01);

} // namespace ermlab
