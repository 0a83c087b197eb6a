#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ermlab/bits.hpp"
#include "ermlab/core.hpp"

namespace ermlab {

// A possibly negated variable. Variables are 0-indexed; variable 0 is the
// least significant bit of a point.
struct Literal {
    int variable = 0;
    bool negated = false;

    bool holds_on(const Bits& x) const { return x.test(variable) != negated; }

    friend bool operator==(const Literal&, const Literal&) = default;
};

// Literal order x0, !x0, x1, !x1, ...
inline Literal literal_at(int index) { return Literal{index / 2, (index % 2) != 0}; }
inline int literal_index(const Literal& l) { return 2 * l.variable + (l.negated ? 1 : 0); }

// Per-variable requirement of a conjunction.
enum class VarState : std::uint8_t { Absent = 0, Positive = 1, Negated = 2, Both = 3 };

// Conjunction of literals over n variables, stored as two requirement masks.
// Empty conjunction is constant 1; a variable required both positive and
// negated (possible as learner output) makes the conjunction constant 0.
struct Conjunction {
    Bits pos; // variables required to be 1
    Bits neg; // variables required to be 0

    Conjunction() = default;
    explicit Conjunction(int n) : pos(n), neg(n) {}
    Conjunction(Bits positive, Bits negative);

    int dimension() const { return pos.size(); }

    VarState state(int variable) const {
        const int s = (pos.test(variable) ? 1 : 0) | (neg.test(variable) ? 2 : 0);
        return static_cast<VarState>(s);
    }

    void set_state(int variable, VarState s) {
        pos.set(variable, s == VarState::Positive || s == VarState::Both);
        neg.set(variable, s == VarState::Negated || s == VarState::Both);
    }

    int literal_count() const { return pos.count() + neg.count(); }
    bool is_contradictory() const { return pos.intersects(neg); }
    bool is_empty() const { return pos.none() && neg.none(); }

    // Present literals in the order x0, !x0, x1, !x1, ...
    std::vector<Literal> literals() const;

    friend bool operator==(const Conjunction&, const Conjunction&) = default;
};

struct ConstLabel {
    Label label = false;

    friend bool operator==(const ConstLabel&, const ConstLabel&) = default;
};

// Disjunction of exactly three conjunction terms over a common dimension.
struct ThreeTermDnf {
    std::array<Conjunction, 3> terms;

    int dimension() const { return terms[0].dimension(); }

    friend bool operator==(const ThreeTermDnf&, const ThreeTermDnf&) = default;
};

// Binary decision tree. Nodes live in a flat vector; node 0 is the root.
// An internal node tests one variable: left child on 0, right child on 1.
struct TreeNode {
    int variable = -1; // negative marks a leaf
    Label leaf_label = false;
    int left = -1;
    int right = -1;

    bool is_leaf() const { return variable < 0; }

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct DecisionTree {
    int n = 0;
    std::vector<TreeNode> nodes; // nonempty; nodes[0] is the root

    int dimension() const { return n; }
    int depth() const; // leaf-only tree has depth 0

    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

// Conjunction over the literal-triple expansion of a base space: coordinate
// (u, v, w) of the expansion holds u(x) | v(x) | w(x). The conjunction masks
// have dimension (2 * base_n)^3.
struct ExpandedConjunction {
    int base_n = 0;
    Conjunction conj;

    friend bool operator==(const ExpandedConjunction&, const ExpandedConjunction&) = default;
};

using Hypothesis = std::variant<ConstLabel, Conjunction, ThreeTermDnf, DecisionTree, ExpandedConjunction>;

// Input dimension the hypothesis expects; -1 accepts any dimension.
int dimension_of(const Hypothesis& h);

// h(x). Throws on dimension mismatch.
bool evaluate(const Hypothesis& h, const Bits& x);
bool evaluate(const Conjunction& h, const Bits& x);
bool evaluate(const ThreeTermDnf& h, const Bits& x);
bool evaluate(const DecisionTree& h, const Bits& x);
bool evaluate(const ExpandedConjunction& h, const Bits& x);
inline bool evaluate(const ConstLabel& h, const Bits&) { return h.label; }

// Number of literal-triple coordinates of the expansion over n variables.
std::uint64_t triple_coordinate_count(int n);

// The expansion map applied to one point: output bit (u*2n + v)*2n + w holds
// literal_at(u)(x) | literal_at(v)(x) | literal_at(w)(x).
Bits expand_or_triples(const Bits& x);

// Syntactic constant detection: true when the representation alone forces a
// constant function (e.g. empty or contradictory conjunction, all leaves
// equal). Sound but not complete for trees.
bool is_syntactic_constant(const Hypothesis& h);

// Stable structural fingerprint of the representation (not the function).
std::uint64_t representation_hash(const Hypothesis& h);

// Short human-readable rendering, e.g. "x0 & !x2".
std::string describe(const Hypothesis& h);

} // namespace ermlab
