#include "ermlab/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ermlab/errors.hpp"

namespace ermlab {

namespace {

std::atomic<std::uint64_t>* cap_storage() {
    static std::atomic<std::uint64_t> cap{std::uint64_t{1} << 24};
    return &cap;
}

} // namespace

std::uint64_t enumeration_cap() { return cap_storage()->load(); }

void set_enumeration_cap(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
    cap_storage()->store(cap);
}

DomainSpec::DomainSpec(int dimension) : n(dimension) {
    if (n < 1 || n > 62) throw std::invalid_argument("domain dimension must be in [1, 62], got " + std::to_string(n));
}

Bits DomainSpec::point(std::uint64_t index) const {
    if (index >= point_count()) throw std::out_of_range("domain point index out of range");
    return Bits::from_u64(n, index);
}

std::vector<Bits> DomainSpec::enumerate_points() const {
    const std::uint64_t cap = enumeration_cap();
    if (point_count() > cap)
        throw CapExceededError("domain {0,1}^" + std::to_string(n), point_count(), cap);
    std::vector<Bits> points;
    points.reserve(point_count());
    for (std::uint64_t v = 0; v < point_count(); ++v) points.push_back(Bits::from_u64(n, v));
    return points;
}

void Dataset::validate() const {
    for (const LabeledExample& e : examples) {
        if (e.x.size() != n)
            throw std::invalid_argument("dataset example has dimension " + std::to_string(e.x.size()) +
                                        ", expected " + std::to_string(n));
    }
}

namespace {

// Canonical support order: integer order of x, then label 0 before 1.
bool support_less(const WeightedExample& a, const WeightedExample& b) {
    const int c = Bits::compare(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

} // namespace

FiniteDistribution::FiniteDistribution(int n, std::vector<WeightedExample> support)
    : n_(n), support_(std::move(support)) {
    if (n_ < 1) throw std::invalid_argument("distribution dimension must be positive");
    if (support_.empty()) throw std::invalid_argument("distribution support must be nonempty");
    double total = 0.0;
    for (const WeightedExample& e : support_) {
        if (e.x.size() != n_)
            throw std::invalid_argument("support point has dimension " + std::to_string(e.x.size()) +
                                        ", expected " + std::to_string(n_));
        if (!(e.p >= 0.0))
            throw std::invalid_argument("support weight must be nonnegative");
        total += e.p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("support weights sum to " + std::to_string(total) + ", expected 1 within 1e-9");
    std::sort(support_.begin(), support_.end(), support_less);
    for (std::size_t i = 1; i < support_.size(); ++i) {
        if (support_[i - 1].x == support_[i].x && support_[i - 1].y == support_[i].y)
            throw std::invalid_argument("duplicate support entry (x=" + support_[i].x.to_string() +
                                        ", y=" + std::to_string(int(support_[i].y)) + ")");
    }
    cumulative_.reserve(support_.size());
    double acc = 0.0;
    for (const WeightedExample& e : support_) {
        acc += e.p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
}

double FiniteDistribution::mass(const Bits& x, Label y) const {
    for (const WeightedExample& e : support_) {
        if (e.y == y && e.x == x) return e.p;
    }
    return 0.0;
}

Dataset draw_dataset(const FiniteDistribution& dist, std::size_t m, Seed seed) {
    Dataset out;
    out.n = dist.dimension();
    out.examples.reserve(m);
    CounterRng rng(seed);
    const std::vector<double>& cum = dist.cumulative_;
    for (std::size_t i = 0; i < m; ++i) {
        const double u = rng.next_unit();
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
        const WeightedExample& e = dist.support()[idx];
        out.examples.push_back({e.x, e.y});
    }
    return out;
}

} // namespace ermlab
