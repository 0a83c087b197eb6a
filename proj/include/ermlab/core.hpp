#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ermlab/bits.hpp"
#include "ermlab/rng.hpp"

namespace ermlab {

// A label is one of {0, 1}; true encodes 1.
using Label = bool;

// The boolean cube {0,1}^n. Points are indexed by their integer value,
// variable 0 in the least significant bit.
struct DomainSpec {
    int n = 1;

    explicit DomainSpec(int dimension);

    std::uint64_t point_count() const { return std::uint64_t{1} << n; }

    Bits point(std::uint64_t index) const;

    // All 2^n points in integer order. Guarded by the enumeration cap.
    std::vector<Bits> enumerate_points() const;
};

struct LabeledExample {
    Bits x;
    Label y = false;

    friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

// A finite labeled sample. May be empty; every example has dimension n.
struct Dataset {
    int n = 0;
    std::vector<LabeledExample> examples;

    std::size_t size() const { return examples.size(); }

    // Throws if some example has dimension other than n.
    void validate() const;
};

struct WeightedExample {
    Bits x;
    Label y = false;
    double p = 0.0;
};

// A distribution over {0,1}^n x {0,1} with finite support. The support is
// kept in canonical order (integer order of x, then label), entries unique,
// weights nonnegative and summing to 1 within 1e-9.
class FiniteDistribution {
public:
    FiniteDistribution(int n, std::vector<WeightedExample> support);

    int dimension() const { return n_; }
    const std::vector<WeightedExample>& support() const { return support_; }

    // Mass of the event {(x, y)}; zero when the pair is off-support.
    double mass(const Bits& x, Label y) const;

private:
    int n_ = 0;
    std::vector<WeightedExample> support_;
    std::vector<double> cumulative_;

    friend Dataset draw_dataset(const FiniteDistribution&, std::size_t, Seed);
};

// m i.i.d. draws via inverse CDF over the canonical support order.
// Pure function of (dist, m, seed); m = 0 yields an empty dataset.
Dataset draw_dataset(const FiniteDistribution& dist, std::size_t m, Seed seed);

} // namespace ermlab
