#include "ermlab/hypothesis.hpp"

#include <algorithm>
#include <stdexcept>

namespace ermlab {

Conjunction::Conjunction(Bits positive, Bits negative) : pos(std::move(positive)), neg(std::move(negative)) {
    if (pos.size() != neg.size())
        throw std::invalid_argument("conjunction masks must share one dimension");
}

std::vector<Literal> Conjunction::literals() const {
    std::vector<Literal> out;
    for (int v = 0; v < dimension(); ++v) {
        if (pos.test(v)) out.push_back(Literal{v, false});
        if (neg.test(v)) out.push_back(Literal{v, true});
    }
    return out;
}

int DecisionTree::depth() const {
    if (nodes.empty()) throw std::invalid_argument("decision tree has no nodes");
    // Iterative post-order over the flat node array.
    std::vector<int> depth_of(nodes.size(), -1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int i = stack.back();
        const TreeNode& node = nodes[static_cast<std::size_t>(i)];
        if (node.is_leaf()) {
            depth_of[static_cast<std::size_t>(i)] = 0;
            stack.pop_back();
            continue;
        }
        const int dl = depth_of[static_cast<std::size_t>(node.left)];
        const int dr = depth_of[static_cast<std::size_t>(node.right)];
        if (dl >= 0 && dr >= 0) {
            depth_of[static_cast<std::size_t>(i)] = 1 + std::max(dl, dr);
            stack.pop_back();
        } else {
            if (dl < 0) stack.push_back(node.left);
            if (dr < 0) stack.push_back(node.right);
        }
    }
    return depth_of[0];
}

int dimension_of(const Hypothesis& h) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) return -1;
            else if constexpr (std::is_same_v<T, Conjunction>) return v.dimension();
            else if constexpr (std::is_same_v<T, ThreeTermDnf>) return v.dimension();
            else if constexpr (std::is_same_v<T, DecisionTree>) return v.n;
            else return v.base_n;
        },
        h);
}

namespace {

void check_dimension(int expected, const Bits& x) {
    if (expected >= 0 && x.size() != expected)
        throw std::invalid_argument("input has dimension " + std::to_string(x.size()) + ", hypothesis expects " +
                                    std::to_string(expected));
}

} // namespace

bool evaluate(const Conjunction& h, const Bits& x) {
    check_dimension(h.dimension(), x);
    return h.pos.subset_of(x) && !h.neg.intersects(x);
}

bool evaluate(const ThreeTermDnf& h, const Bits& x) {
    check_dimension(h.dimension(), x);
    return evaluate(h.terms[0], x) || evaluate(h.terms[1], x) || evaluate(h.terms[2], x);
}

bool evaluate(const DecisionTree& h, const Bits& x) {
    check_dimension(h.n, x);
    if (h.nodes.empty()) throw std::invalid_argument("decision tree has no nodes");
    int i = 0;
    while (true) {
        const TreeNode& node = h.nodes[static_cast<std::size_t>(i)];
        if (node.is_leaf()) return node.leaf_label;
        i = x.test(node.variable) ? node.right : node.left;
    }
}

std::uint64_t triple_coordinate_count(int n) {
    const std::uint64_t lits = 2 * static_cast<std::uint64_t>(n);
    return lits * lits * lits;
}

Bits expand_or_triples(const Bits& x) {
    const int n = x.size();
    const int lits = 2 * n;
    Bits out(static_cast<int>(triple_coordinate_count(n)));
    std::vector<char> lit_val(static_cast<std::size_t>(lits));
    for (int l = 0; l < lits; ++l) lit_val[static_cast<std::size_t>(l)] = literal_at(l).holds_on(x) ? 1 : 0;
    int coord = 0;
    for (int u = 0; u < lits; ++u) {
        for (int v = 0; v < lits; ++v) {
            const bool uv = lit_val[static_cast<std::size_t>(u)] | lit_val[static_cast<std::size_t>(v)];
            for (int w = 0; w < lits; ++w, ++coord) {
                if (uv || lit_val[static_cast<std::size_t>(w)]) out.set(coord);
            }
        }
    }
    return out;
}

bool evaluate(const ExpandedConjunction& h, const Bits& x) {
    check_dimension(h.base_n, x);
    return evaluate(h.conj, expand_or_triples(x));
}

bool evaluate(const Hypothesis& h, const Bits& x) {
    return std::visit([&x](const auto& v) { return evaluate(v, x); }, h);
}

bool is_syntactic_constant(const Hypothesis& h) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) {
                return true;
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                return v.is_empty() || v.is_contradictory();
            } else if constexpr (std::is_same_v<T, ThreeTermDnf>) {
                bool all_contradictory = true;
                for (const Conjunction& t : v.terms) {
                    if (t.is_empty()) return true; // some term constant 1
                    all_contradictory = all_contradictory && t.is_contradictory();
                }
                return all_contradictory;
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                bool seen[2] = {false, false};
                for (const TreeNode& node : v.nodes)
                    if (node.is_leaf()) seen[node.leaf_label ? 1 : 0] = true;
                return !(seen[0] && seen[1]);
            } else {
                return v.conj.is_empty() || v.conj.is_contradictory();
            }
        },
        h);
}

namespace {

std::uint64_t fnv_step(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
    return h ^ (h >> 29);
}

} // namespace

std::uint64_t representation_hash(const Hypothesis& h) {
    std::uint64_t out = fnv_step(0xcbf29ce484222325ull, h.index());
    std::visit(
        [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) {
                out = fnv_step(out, v.label ? 1 : 0);
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                out = fnv_step(out, v.pos.hash());
                out = fnv_step(out, v.neg.hash());
            } else if constexpr (std::is_same_v<T, ThreeTermDnf>) {
                for (const Conjunction& t : v.terms) {
                    out = fnv_step(out, t.pos.hash());
                    out = fnv_step(out, t.neg.hash());
                }
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                out = fnv_step(out, static_cast<std::uint64_t>(v.n));
                for (const TreeNode& node : v.nodes) {
                    out = fnv_step(out, static_cast<std::uint64_t>(node.variable + 1));
                    out = fnv_step(out, node.is_leaf() ? (node.leaf_label ? 2 : 1)
                                                       : (static_cast<std::uint64_t>(node.left) << 20 |
                                                          static_cast<std::uint64_t>(node.right)));
                }
            } else {
                out = fnv_step(out, static_cast<std::uint64_t>(v.base_n));
                out = fnv_step(out, v.conj.pos.hash());
                out = fnv_step(out, v.conj.neg.hash());
            }
        },
        h);
    return out;
}

namespace {

std::string describe_conjunction(const Conjunction& c) {
    if (c.is_empty()) return "true";
    std::string s;
    for (const Literal& l : c.literals()) {
        if (!s.empty()) s += " & ";
        if (l.negated) s += "!";
        s += "x" + std::to_string(l.variable);
    }
    return s;
}

std::string describe_tree(const DecisionTree& t, int i) {
    const TreeNode& node = t.nodes[static_cast<std::size_t>(i)];
    if (node.is_leaf()) return node.leaf_label ? "1" : "0";
    return "(x" + std::to_string(node.variable) + " ? " + describe_tree(t, node.right) + " : " +
           describe_tree(t, node.left) + ")";
}

} // namespace

std::string describe(const Hypothesis& h) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) {
                return v.label ? "const 1" : "const 0";
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                return describe_conjunction(v);
            } else if constexpr (std::is_same_v<T, ThreeTermDnf>) {
                return "(" + describe_conjunction(v.terms[0]) + ") | (" + describe_conjunction(v.terms[1]) + ") | (" +
                       describe_conjunction(v.terms[2]) + ")";
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                return describe_tree(v, 0);
            } else {
                return "expanded conjunction over " + std::to_string(triple_coordinate_count(v.base_n)) +
                       " triple coordinates";
            }
        },
        h);
}

} // namespace ermlab
