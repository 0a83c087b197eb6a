#pragma once

#include <cstdint>
#include <vector>

#include "ermlab/core.hpp"
#include "ermlab/erm.hpp"
#include "ermlab/hypothesis_class.hpp"

namespace ermlab {

// Label patterns a class induces on a point set.
struct ShatterCertificate {
    std::vector<Bits> points;
    std::uint64_t induced_count = 0; // |C restricted to points|
    bool shattered = false;          // induced_count == 2^|points|
};

// Distinct label patterns of cls on X (points must be distinct, |X| <= 63).
ShatterCertificate induced_partitions(const HypothesisClass& cls, const std::vector<Bits>& points);

bool shatters(const HypothesisClass& cls, const std::vector<Bits>& points);

struct VcSearchLimits {
    int max_set_size = 6;
    std::uint64_t max_subsets = 10'000'000;
};

struct VcResult {
    int dimension = 0;
    bool exact = true; // false when a search cap was hit, making this a lower bound
};

// Largest k such that some k-subset of the domain is shattered, found by
// exhaustive subset search. Search effort is capped by `limits`; a capped
// search reports its best value as a lower bound (exact = false).
VcResult vc_dimension(const HypothesisClass& cls, const DomainSpec& domain, VcSearchLimits limits = {});

enum class BoundMode { Paper, Classical };

struct PacParams {
    int d = 0;          // VC dimension
    std::size_t m = 1;  // sample size
    double delta = 0.05;
    double epsilon = 0.1; // used by sample-complexity calculators only

    void validate() const;
};

// High-probability bound on the worst-case generalization gap.
//   Paper mode:     constant * sqrt((d + ln(1/delta)) / m)
//   Classical mode: sqrt((8*d*ln(2*e*m/max(d,1)) + 8*ln(4/delta)) / m), m >= max(d,1)
double vc_bound(const PacParams& p, BoundMode mode, double paper_constant = 2.0);

// Excess-risk bound decaying like d*log(m)/m:
//   (4*d*ln(2*e*m/max(d,1)) + 4*ln(2/delta)) / m, m >= max(d,1)
double fast_rate_bound(const PacParams& p);

// max over cls of |exact risk - empirical risk|. Exhaustive scan.
double worst_case_gen_error(const HypothesisClass& cls, const Dataset& data, const FiniteDistribution& dist);

} // namespace ermlab
