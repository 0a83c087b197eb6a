#include "ermlab/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace ermlab {

ShatterCertificate induced_partitions(const HypothesisClass& cls, const std::vector<Bits>& points) {
    if (points.empty()) throw std::invalid_argument("induced_partitions: point set is empty");
    if (points.size() > 63) throw std::invalid_argument("induced_partitions: more than 63 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("induced_partitions: duplicate points");

    const std::uint64_t full = std::uint64_t{1} << points.size();
    std::unordered_set<std::uint64_t> patterns;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        std::uint64_t pattern = 0;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (evaluate(h, points[j])) pattern |= std::uint64_t{1} << j;
        patterns.insert(pattern);
        return patterns.size() < full; // all patterns seen: stop early
    });

    ShatterCertificate cert;
    cert.points = points;
    cert.induced_count = patterns.size();
    cert.shattered = patterns.size() == full;
    return cert;
}

bool shatters(const HypothesisClass& cls, const std::vector<Bits>& points) {
    return induced_partitions(cls, points).shattered;
}

namespace {

// Fast shattering check for subsets given by point indices; patterns fit a
// 64-bit mask because k <= 6 here.
bool shatters_subset(const HypothesisClass& cls, const std::vector<Bits>& points, const std::vector<int>& subset) {
    const std::uint64_t full_mask = (std::uint64_t{1} << (std::uint64_t{1} << subset.size())) - 1;
    std::uint64_t seen = 0;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        std::uint64_t pattern = 0;
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (evaluate(h, points[static_cast<std::size_t>(subset[j])])) pattern |= std::uint64_t{1} << j;
        seen |= std::uint64_t{1} << pattern;
        return seen != full_mask;
    });
    return seen == full_mask;
}

} // namespace

VcResult vc_dimension(const HypothesisClass& cls, const DomainSpec& domain, VcSearchLimits limits) {
    if (domain.n != cls.dimension())
        throw std::invalid_argument("domain dimension does not match class " + cls.name());
    if (limits.max_set_size < 1 || limits.max_set_size > 6)
        throw std::invalid_argument("vc_dimension: max_set_size must lie in [1, 6]");
    const std::uint64_t members = cls.size();
    if (members == 0) throw std::invalid_argument("vc_dimension: class " + cls.name() + " is empty");

    const std::vector<Bits> points = domain.enumerate_points();
    // A shattered k-set needs 2^k members and k distinct points, so k_geom
    // caps the dimension mathematically; limits.max_set_size caps the search.
    int by_members = 0;
    while (by_members < 62 && (std::uint64_t{1} << (by_members + 1)) <= members) ++by_members;
    const int k_geom = std::min(static_cast<int>(points.size()), by_members);
    const int k_max = std::min(limits.max_set_size, k_geom);
    const bool cap_binding = limits.max_set_size < k_geom;

    std::uint64_t subsets_examined = 0;
    int best = 0; // the empty set is always shattered by a nonempty class
    for (int k = 1; k <= k_max; ++k) {
        // Lexicographic combinations of {0, ..., |points|-1} of size k.
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        bool found = false;
        while (true) {
            if (subsets_examined >= limits.max_subsets) return {best, false};
            ++subsets_examined;
            if (shatters_subset(cls, points, subset)) {
                found = true;
                break;
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] ==
                                 static_cast<int>(points.size()) - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (!found) return {k - 1, true}; // shattering is downward closed
        best = k;
    }
    // Ran out of eligible set sizes. Exact unless the size cap alone stopped us.
    return {best, !(cap_binding && best == k_max)};
}

void PacParams::validate() const {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

double vc_bound(const PacParams& p, BoundMode mode, double paper_constant) {
    p.validate();
    const double m = static_cast<double>(p.m);
    if (mode == BoundMode::Paper) {
        if (!(paper_constant > 0.0)) throw std::invalid_argument("bound constant must be positive");
        return paper_constant * std::sqrt((static_cast<double>(p.d) + std::log(1.0 / p.delta)) / m);
    }
    const double d_eff = static_cast<double>(std::max(p.d, 1));
    if (m < d_eff) throw std::invalid_argument("classical bound requires m >= max(d, 1)");
    const double numerator =
        8.0 * static_cast<double>(p.d) * std::log(2.0 * std::exp(1.0) * m / d_eff) + 8.0 * std::log(4.0 / p.delta);
    return std::sqrt(numerator / m);
}

double fast_rate_bound(const PacParams& p) {
    p.validate();
    const double m = static_cast<double>(p.m);
    const double d_eff = static_cast<double>(std::max(p.d, 1));
    if (m < d_eff) throw std::invalid_argument("fast rate bound requires m >= max(d, 1)");
    return (4.0 * static_cast<double>(p.d) * std::log(2.0 * std::exp(1.0) * m / d_eff) +
            4.0 * std::log(2.0 / p.delta)) / m;
}

double worst_case_gen_error(const HypothesisClass& cls, const Dataset& data, const FiniteDistribution& dist) {
    if (data.examples.empty()) throw std::invalid_argument("undefined empirical risk: dataset is empty");
    double worst = -1.0;
    cls.for_each_member([&](const Hypothesis& h, std::uint64_t) {
        worst = std::max(worst, generalization_gap(h, data, dist));
        return true;
    });
    if (worst < 0.0) throw std::invalid_argument("class " + cls.name() + " is empty");
    return worst;
}

} // namespace ermlab
