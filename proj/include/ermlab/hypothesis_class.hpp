#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ermlab/hypothesis.hpp"
#include "ermlab/rng.hpp"

namespace ermlab {

enum class Family { Constant, Conjunction, ThreeTermDnf, DecisionTree };

std::string to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);

// Exact member count; overflow marks saturation past 2^64 - 1.
struct Cardinality {
    std::uint64_t value = 0;
    bool overflow = false;
};

// Membership restriction. Every built-in is a pure function of the
// representation, so restricted classes have stable canonical membership.
class Predicate {
public:
    enum class Kind { AlwaysTrue, AlwaysFalse, MaxLiterals, MaxDepth, IsConstant, RepHash, Custom };

    static Predicate always_true();
    static Predicate always_false();
    // Total number of present literals at most k (internal node count for trees).
    static Predicate max_literals(int k);
    // Decision tree depth at most d; rejects non-tree representations.
    static Predicate max_depth(int d);
    static Predicate is_constant();
    // Keeps h when mix64(salt ^ representation_hash(h)) % modulus < threshold.
    static Predicate rep_hash(std::uint64_t salt, std::uint64_t modulus, std::uint64_t threshold);
    // Escape hatch for tests; not serializable beyond its name.
    static Predicate custom(std::string name, std::function<bool(const Hypothesis&)> fn);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::int64_t param(int i) const { return params_[static_cast<std::size_t>(i)]; }

    bool matches(const Hypothesis& h) const;

private:
    Kind kind_ = Kind::AlwaysTrue;
    std::string name_;
    std::int64_t params_[3] = {0, 0, 0};
    std::function<bool(const Hypothesis&)> fn_;
};

// A finite hypothesis class: a base family over {0,1}^n (with its canonical
// total order) plus an optional stack of membership predicates. Restriction
// keeps the base order and filters membership.
class HypothesisClass {
public:
    static HypothesisClass constants(int n);
    static HypothesisClass conjunctions(int n);
    static HypothesisClass three_term_dnfs(int n);
    static HypothesisClass decision_trees(int n, int max_depth);

    HypothesisClass restricted(Predicate predicate) const;

    const std::string& name() const { return name_; }
    Family family() const { return family_; }
    int dimension() const { return n_; }
    int tree_depth() const { return tree_depth_; }
    const std::vector<Predicate>& predicates() const { return predicates_; }
    bool is_restricted() const { return !predicates_.empty(); }

    // Count of the unrestricted base family.
    Cardinality base_cardinality() const { return base_cardinality_; }

    // Count of actual members. Restricted classes compute it by one capped
    // scan and cache the result.
    std::uint64_t size() const;

    // Member of the base family at a canonical index (ignores predicates).
    Hypothesis base_member(std::uint64_t index) const;

    // Canonical index of h within the base family; nullopt when h does not
    // belong to the base family at all.
    std::optional<std::uint64_t> base_index_of(const Hypothesis& h) const;

    bool contains(const Hypothesis& h) const;

    // Visits members in canonical order; visitor returns false to stop.
    // Throws CapExceededError when the base cardinality exceeds the cap.
    void for_each_member(const std::function<bool(const Hypothesis&, std::uint64_t)>& visit) const;

    std::vector<Hypothesis> enumerate() const;

    // k-th member of the (possibly restricted) class in canonical order.
    Hypothesis member_at(std::uint64_t k) const;

    // Uniform draw from the member set.
    Hypothesis random_member(CounterRng& rng) const;

    // Throws CapExceededError when enumeration would exceed the cap.
    void require_enumerable() const;

private:
    HypothesisClass(Family family, int n, int tree_depth);

    std::string name_;
    Family family_ = Family::Constant;
    int n_ = 1;
    int tree_depth_ = 0;
    std::vector<Predicate> predicates_;
    Cardinality base_cardinality_;
    std::vector<Cardinality> tree_counts_; // member count per depth budget 0..tree_depth_

    // Cached restricted size; sentinel UINT64_MAX means "not yet computed".
    // Benign race: recomputation yields the same value.
    mutable std::atomic<std::uint64_t> cached_size_{UINT64_MAX};

    bool matches_predicates(const Hypothesis& h) const;
    Hypothesis decode_tree(std::uint64_t index, int depth_budget) const;
    std::optional<std::uint64_t> encode_tree(const DecisionTree& t) const;

public:
    HypothesisClass(const HypothesisClass& other);
    HypothesisClass& operator=(const HypothesisClass& other);
};

} // namespace ermlab
