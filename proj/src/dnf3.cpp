#include "ermlab/dnf3.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ermlab/errors.hpp"
#include "ermlab/hypothesis_class.hpp"
#include "ermlab/risk.hpp"

namespace ermlab {

TripleExpansion::TripleExpansion(int n) : n_(n) {
    if (n < 1 || n > 20) throw std::invalid_argument("triple expansion dimension must lie in [1, 20]");
}

std::array<Literal, 3> TripleExpansion::triple(std::uint64_t coordinate) const {
    if (coordinate >= coordinate_count()) throw std::out_of_range("triple coordinate out of range");
    const std::uint64_t lits = static_cast<std::uint64_t>(literal_count());
    const int w = static_cast<int>(coordinate % lits);
    const int v = static_cast<int>((coordinate / lits) % lits);
    const int u = static_cast<int>(coordinate / (lits * lits));
    return {literal_at(u), literal_at(v), literal_at(w)};
}

std::uint64_t TripleExpansion::coordinate(const Literal& u, const Literal& v, const Literal& w) const {
    const auto check = [this](const Literal& l) {
        if (l.variable < 0 || l.variable >= n_) throw std::invalid_argument("literal variable out of range");
    };
    check(u);
    check(v);
    check(w);
    const std::uint64_t lits = static_cast<std::uint64_t>(literal_count());
    return (static_cast<std::uint64_t>(literal_index(u)) * lits + static_cast<std::uint64_t>(literal_index(v))) *
               lits + static_cast<std::uint64_t>(literal_index(w));
}

Bits TripleExpansion::expand(const Bits& x) const {
    if (x.size() != n_)
        throw std::invalid_argument("point has dimension " + std::to_string(x.size()) + ", expansion expects " +
                                    std::to_string(n_));
    return expand_or_triples(x);
}

Dataset expand_triples_dataset(const Dataset& data, const TripleExpansion& map) {
    Dataset out;
    out.n = static_cast<int>(map.coordinate_count());
    out.examples.reserve(data.size());
    for (const LabeledExample& e : data.examples) out.examples.push_back({map.expand(e.x), e.y});
    return out;
}

ExpandedConjunction dnf_as_expanded_conjunction(const ThreeTermDnf& h) {
    const int n = h.dimension();
    const TripleExpansion map(n);
    Conjunction conj(static_cast<int>(map.coordinate_count()));
    const std::vector<Literal> lits_a = h.terms[0].literals();
    const std::vector<Literal> lits_b = h.terms[1].literals();
    const std::vector<Literal> lits_c = h.terms[2].literals();
    for (const Literal& u : lits_a)
        for (const Literal& v : lits_b)
            for (const Literal& w : lits_c)
                conj.pos.set(static_cast<int>(map.coordinate(u, v, w)));
    return ExpandedConjunction{n, std::move(conj)};
}

ExpandedConjunction learn_dnf3_by_expansion(const Dataset& data, int n) {
    if (data.n != n) throw std::invalid_argument("dataset dimension does not match n");
    const TripleExpansion map(n);
    const Dataset expanded = expand_triples_dataset(data, map);
    return ExpandedConjunction{n, learn_conjunction_realizable(expanded)};
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exponent) {
    std::uint64_t out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

// Per-conjunction prediction masks over the sample, one bit per example.
// A DNF's predictions are the OR of its three term masks, so the whole scan
// is word operations. Scan order (i1, i2, i3) lexicographic matches the
// canonical class order, keeping the tie-break identical to erm_exhaustive.
struct PackedScan {
    std::size_t words = 0;
    std::vector<std::uint64_t> label_mask;
    std::vector<std::vector<std::uint64_t>> term_masks; // [conjunction index][word]
};

PackedScan build_packed_scan(const Dataset& data, int n) {
    PackedScan scan;
    const std::size_t m = data.size();
    scan.words = (m + 63) / 64;
    scan.label_mask.assign(scan.words, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (data.examples[i].y) scan.label_mask[i >> 6] |= std::uint64_t{1} << (i & 63);

    const std::uint64_t per_term = pow_u64(3, n);
    scan.term_masks.assign(per_term, {});
    for (std::uint64_t c = 0; c < per_term; ++c) {
        Conjunction conj(n);
        std::uint64_t rem = c;
        for (int v = 0; v < n; ++v) {
            conj.set_state(v, static_cast<VarState>(rem % 3));
            rem /= 3;
        }
        std::vector<std::uint64_t>& mask = scan.term_masks[c];
        mask.assign(scan.words, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (evaluate(conj, data.examples[i].x)) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return scan;
}

} // namespace

ErmResult erm_dnf3_exhaustive(const Dataset& data, int n) {
    if (data.examples.empty()) throw std::invalid_argument("undefined empirical risk: dataset is empty");
    if (data.n != n) throw std::invalid_argument("dataset dimension does not match n");
    const HypothesisClass cls = HypothesisClass::three_term_dnfs(n);
    cls.require_enumerable();

    const PackedScan scan = build_packed_scan(data, n);
    const std::uint64_t per_term = pow_u64(3, n);
    const std::size_t m = data.size();

    std::size_t best = m + 1;
    std::uint64_t best_index = 0;
    std::uint64_t minimizer_count = 0;
    std::vector<std::uint64_t> pred(scan.words);
    for (std::uint64_t i1 = 0; i1 < per_term; ++i1) {
        const std::vector<std::uint64_t>& a = scan.term_masks[i1];
        for (std::uint64_t i2 = 0; i2 < per_term; ++i2) {
            const std::vector<std::uint64_t>& b = scan.term_masks[i2];
            for (std::uint64_t i3 = 0; i3 < per_term; ++i3) {
                const std::vector<std::uint64_t>& c = scan.term_masks[i3];
                std::size_t errors = 0;
                for (std::size_t w = 0; w < scan.words; ++w)
                    errors += static_cast<std::size_t>(
                        std::popcount((a[w] | b[w] | c[w]) ^ scan.label_mask[w]));
                if (errors < best) {
                    best = errors;
                    best_index = (i1 * per_term + i2) * per_term + i3;
                    minimizer_count = 1;
                } else if (errors == best) {
                    ++minimizer_count;
                }
            }
        }
    }

    ErmResult result;
    result.chosen = cls.base_member(best_index);
    result.min_empirical_risk = static_cast<double>(best) / static_cast<double>(m);
    result.minimizer_count = minimizer_count;
    return result;
}

namespace {

double checked_log(double value, double log_base) {
    if (!(log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
    return std::log(value) / std::log(log_base);
}

void check_pac_args(int n, double epsilon, double delta) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
}

} // namespace

double sample_complexity_dnf3_raw(int n, double epsilon, double delta, double log_base) {
    check_pac_args(n, epsilon, delta);
    return 3.0 * static_cast<double>(n) * checked_log(3.0 / delta, log_base) / epsilon;
}

std::uint64_t sample_complexity_dnf3(int n, double epsilon, double delta, double log_base) {
    return static_cast<std::uint64_t>(std::ceil(sample_complexity_dnf3_raw(n, epsilon, delta, log_base)));
}

double sample_complexity_expanded_raw(int n, double epsilon, double delta, double log_base) {
    check_pac_args(n, epsilon, delta);
    const double n3 = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    return n3 * checked_log(1.0 / delta, log_base) / epsilon;
}

std::uint64_t sample_complexity_expanded(int n, double epsilon, double delta, double log_base) {
    return static_cast<std::uint64_t>(std::ceil(sample_complexity_expanded_raw(n, epsilon, delta, log_base)));
}

namespace {

bool is_constant_on_cube(const ThreeTermDnf& h, int n) {
    const DomainSpec domain(n);
    const bool first = evaluate(h, domain.point(0));
    for (std::uint64_t v = 1; v < domain.point_count(); ++v)
        if (evaluate(h, domain.point(v)) != first) return false;
    return true;
}

} // namespace

ThreeTermDnf random_dnf3_target(int n, Seed seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    CounterRng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ThreeTermDnf h;
        for (int t = 0; t < 3; ++t) {
            Conjunction term(n);
            for (int v = 0; v < n; ++v)
                term.set_state(v, static_cast<VarState>(rng.next_below(3)));
            h.terms[static_cast<std::size_t>(t)] = std::move(term);
        }
        if (n <= 12 && is_constant_on_cube(h, n)) continue; // redraw constants
        return h;
    }
    throw std::logic_error("random_dnf3_target: failed to draw a nonconstant function");
}

namespace {

double median_of_three(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

template <typename F>
double median_timed_seconds(F&& body) {
    double times[3];
    for (double& t : times) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        t = std::chrono::duration<double>(stop - start).count();
    }
    return median_of_three(times[0], times[1], times[2]);
}

} // namespace

std::vector<ScalingRecord> benchmark_scaling(const std::vector<int>& n_values, std::size_t m, Seed seed) {
    if (n_values.empty()) throw std::invalid_argument("benchmark needs at least one n");
    if (m < 1) throw std::invalid_argument("benchmark needs m >= 1");
    const std::uint64_t cap = enumeration_cap();

    std::vector<ScalingRecord> records;
    double per_hypothesis_seconds = -1.0; // from the largest measured exhaustive run
    for (const int n : n_values) {
        if (n < 1 || n > 13) throw std::invalid_argument("benchmark n must lie in [1, 13]");
        ScalingRecord rec;
        rec.n = n;
        rec.class_cardinality = pow_u64(3, 3 * n);
        rec.expanded_dim = triple_coordinate_count(n);

        const Seed n_seed = derive_seed(seed, static_cast<std::uint64_t>(n));
        const ThreeTermDnf target = random_dnf3_target(n, n_seed);
        const FiniteDistribution dist = uniform_noisy_target(n, target, 0.0);
        const Dataset sample = draw_dataset(dist, m, derive_seed(n_seed, 1));

        volatile std::uint64_t sink = 0; // keep timed bodies observable
        rec.expansion_seconds = median_timed_seconds([&] {
            const ExpandedConjunction learned = learn_dnf3_by_expansion(sample, n);
            sink = sink + static_cast<std::uint64_t>(learned.conj.pos.count());
        });

        if (rec.class_cardinality <= cap) {
            rec.exhaustive_seconds = median_timed_seconds([&] {
                const ErmResult res = erm_dnf3_exhaustive(sample, n);
                sink = sink + res.minimizer_count;
            });
            per_hypothesis_seconds = rec.exhaustive_seconds / static_cast<double>(rec.class_cardinality);
        } else {
            if (per_hypothesis_seconds < 0.0)
                throw std::invalid_argument(
                    "benchmark cannot project exhaustive time for n=" + std::to_string(n) +
                    ": no smaller n was measured first");
            rec.exhaustive_seconds = per_hypothesis_seconds * static_cast<double>(rec.class_cardinality);
            rec.exhaustive_projected = true;
        }
        records.push_back(rec);
    }
    return records;
}

} // namespace ermlab
