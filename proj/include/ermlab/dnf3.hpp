#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ermlab/core.hpp"
#include "ermlab/erm.hpp"
#include "ermlab/hypothesis.hpp"

namespace ermlab {

// The ordered literal-triple feature map over n variables: one output
// coordinate per ordered triple (u, v, w) of the 2n literals, holding
// u(x) | v(x) | w(x). Literal order x0, !x0, x1, !x1, ...; triples in
// lexicographic order. Everything here is a pure function of n.
class TripleExpansion {
public:
    explicit TripleExpansion(int n);

    int base_dimension() const { return n_; }
    int literal_count() const { return 2 * n_; }
    std::uint64_t coordinate_count() const { return triple_coordinate_count(n_); }

    std::array<Literal, 3> triple(std::uint64_t coordinate) const;
    std::uint64_t coordinate(const Literal& u, const Literal& v, const Literal& w) const;

    // x in {0,1}^n mapped to {0,1}^(2n)^3.
    Bits expand(const Bits& x) const;

private:
    int n_ = 1;
};

// Applies the expansion to every example; labels are unchanged.
Dataset expand_triples_dataset(const Dataset& data, const TripleExpansion& map);

// Conjunction over the expanded space whose positive coordinates are exactly
// the triples drawn from the three term literal sets (the distributive
// rewriting of the disjunction). A term with no literals yields no triples.
ExpandedConjunction dnf_as_expanded_conjunction(const ThreeTermDnf& h);

// Learns a 3-term-DNF-representable sample by eliminating expanded-space
// literals: expand, then run the conjunction elimination learner. Runs in
// time polynomial in m and (2n)^3.
ExpandedConjunction learn_dnf3_by_expansion(const Dataset& data, int n);

// Exact ERM over the full three-term-DNF class (3^(3n) members, canonical
// order and tie-break). The scan precomputes per-term error masks, and its
// result is identical to erm_exhaustive on the same class.
ErmResult erm_dnf3_exhaustive(const Dataset& data, int n);

// ceil(3 * n * log_b(3/delta) / epsilon): samples sufficient for direct
// 3-term DNF learning. Default base e; the base is a report knob, not a
// tuning parameter.
double sample_complexity_dnf3_raw(int n, double epsilon, double delta, double log_base = 2.718281828459045235);
std::uint64_t sample_complexity_dnf3(int n, double epsilon, double delta, double log_base = 2.718281828459045235);

// ceil(n^3 * log_b(1/delta) / epsilon): samples sufficient after expansion.
double sample_complexity_expanded_raw(int n, double epsilon, double delta, double log_base = 2.718281828459045235);
std::uint64_t sample_complexity_expanded(int n, double epsilon, double delta, double log_base = 2.718281828459045235);

// Uniformly random term states (absent/positive/negated per variable per
// term), redrawn until the function is nonconstant on {0,1}^n (checked
// exhaustively for n <= 12). Pure function of (n, seed).
ThreeTermDnf random_dnf3_target(int n, Seed seed);

struct ScalingRecord {
    int n = 0;
    std::uint64_t class_cardinality = 0; // 3^(3n)
    std::uint64_t expanded_dim = 0;      // (2n)^3
    double exhaustive_seconds = 0.0;     // measured, or projected when flagged
    bool exhaustive_projected = false;
    double expansion_seconds = 0.0;      // measured expansion-learner time
};

// Times both learners on realizable samples of size m drawn from a random
// target per n (median of 3 runs, serialized on one thread). For n whose
// class exceeds the enumeration cap, the exhaustive time is projected from
// the per-hypothesis cost at the largest measured n and flagged.
std::vector<ScalingRecord> benchmark_scaling(const std::vector<int>& n_values, std::size_t m, Seed seed);

} // namespace ermlab
