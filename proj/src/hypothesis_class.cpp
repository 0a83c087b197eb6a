#include "ermlab/hypothesis_class.hpp"

#include <algorithm>
#include <stdexcept>

#include "ermlab/errors.hpp"

namespace ermlab {

std::string to_string(Family family) {
    switch (family) {
        case Family::Constant: return "constant";
        case Family::Conjunction: return "conjunction";
        case Family::ThreeTermDnf: return "three_term_dnf";
        case Family::DecisionTree: return "decision_tree";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    if (name == "constant") return Family::Constant;
    if (name == "conjunction") return Family::Conjunction;
    if (name == "three_term_dnf") return Family::ThreeTermDnf;
    if (name == "decision_tree") return Family::DecisionTree;
    return std::nullopt;
}

namespace {

Cardinality checked_mul(Cardinality a, Cardinality b) {
    if (a.overflow || b.overflow) return {UINT64_MAX, true};
    const unsigned __int128 p = static_cast<unsigned __int128>(a.value) * b.value;
    if (p > UINT64_MAX) return {UINT64_MAX, true};
    return {static_cast<std::uint64_t>(p), false};
}

Cardinality checked_add(Cardinality a, std::uint64_t b) {
    if (a.overflow || a.value > UINT64_MAX - b) return {UINT64_MAX, true};
    return {a.value + b, false};
}

Cardinality pow3(int k) {
    Cardinality c{1, false};
    for (int i = 0; i < k; ++i) c = checked_mul(c, {3, false});
    return c;
}

} // namespace

// --- Predicate ---------------------------------------------------------

Predicate Predicate::always_true() {
    Predicate p;
    p.kind_ = Kind::AlwaysTrue;
    p.name_ = "always_true";
    return p;
}

Predicate Predicate::always_false() {
    Predicate p;
    p.kind_ = Kind::AlwaysFalse;
    p.name_ = "always_false";
    return p;
}

Predicate Predicate::max_literals(int k) {
    if (k < 0) throw std::invalid_argument("max_literals: k must be nonnegative");
    Predicate p;
    p.kind_ = Kind::MaxLiterals;
    p.name_ = "max_literals(" + std::to_string(k) + ")";
    p.params_[0] = k;
    return p;
}

Predicate Predicate::max_depth(int d) {
    if (d < 0) throw std::invalid_argument("max_depth: d must be nonnegative");
    Predicate p;
    p.kind_ = Kind::MaxDepth;
    p.name_ = "max_depth(" + std::to_string(d) + ")";
    p.params_[0] = d;
    return p;
}

Predicate Predicate::is_constant() {
    Predicate p;
    p.kind_ = Kind::IsConstant;
    p.name_ = "is_constant";
    return p;
}

Predicate Predicate::rep_hash(std::uint64_t salt, std::uint64_t modulus, std::uint64_t threshold) {
    if (modulus == 0) throw std::invalid_argument("rep_hash: modulus must be positive");
    Predicate p;
    p.kind_ = Kind::RepHash;
    p.name_ = "rep_hash(" + std::to_string(salt) + "," + std::to_string(modulus) + "," +
              std::to_string(threshold) + ")";
    p.params_[0] = static_cast<std::int64_t>(salt);
    p.params_[1] = static_cast<std::int64_t>(modulus);
    p.params_[2] = static_cast<std::int64_t>(threshold);
    return p;
}

Predicate Predicate::custom(std::string name, std::function<bool(const Hypothesis&)> fn) {
    Predicate p;
    p.kind_ = Kind::Custom;
    p.name_ = std::move(name);
    p.fn_ = std::move(fn);
    return p;
}

namespace {

int literal_budget_used(const Hypothesis& h) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) {
                return 0;
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                return v.literal_count();
            } else if constexpr (std::is_same_v<T, ThreeTermDnf>) {
                return v.terms[0].literal_count() + v.terms[1].literal_count() + v.terms[2].literal_count();
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                int internal = 0;
                for (const TreeNode& node : v.nodes)
                    if (!node.is_leaf()) ++internal;
                return internal;
            } else {
                return v.conj.literal_count();
            }
        },
        h);
}

} // namespace

bool Predicate::matches(const Hypothesis& h) const {
    switch (kind_) {
        case Kind::AlwaysTrue: return true;
        case Kind::AlwaysFalse: return false;
        case Kind::MaxLiterals: return literal_budget_used(h) <= params_[0];
        case Kind::MaxDepth: {
            const DecisionTree* t = std::get_if<DecisionTree>(&h);
            if (t == nullptr) throw std::invalid_argument("max_depth predicate applies to decision trees");
            return t->depth() <= params_[0];
        }
        case Kind::IsConstant: return is_syntactic_constant(h);
        case Kind::RepHash: {
            const std::uint64_t v = mix64(static_cast<std::uint64_t>(params_[0]) ^ representation_hash(h));
            return v % static_cast<std::uint64_t>(params_[1]) < static_cast<std::uint64_t>(params_[2]);
        }
        case Kind::Custom: return fn_(h);
    }
    return false;
}

// --- HypothesisClass ----------------------------------------------------

HypothesisClass::HypothesisClass(Family family, int n, int tree_depth)
    : family_(family), n_(n), tree_depth_(tree_depth) {
    if (n_ < 1) throw std::invalid_argument("class dimension must be positive");
    switch (family_) {
        case Family::Constant:
            base_cardinality_ = {2, false};
            name_ = "constants(n=" + std::to_string(n_) + ")";
            break;
        case Family::Conjunction:
            base_cardinality_ = pow3(n_);
            name_ = "conjunctions(n=" + std::to_string(n_) + ")";
            break;
        case Family::ThreeTermDnf:
            base_cardinality_ = pow3(3 * n_);
            name_ = "three_term_dnfs(n=" + std::to_string(n_) + ")";
            break;
        case Family::DecisionTree: {
            if (tree_depth_ < 0) throw std::invalid_argument("tree depth bound must be nonnegative");
            tree_counts_.resize(static_cast<std::size_t>(tree_depth_) + 1);
            tree_counts_[0] = {2, false};
            for (int d = 1; d <= tree_depth_; ++d) {
                const Cardinality sub = tree_counts_[static_cast<std::size_t>(d) - 1];
                tree_counts_[static_cast<std::size_t>(d)] =
                    checked_add(checked_mul({static_cast<std::uint64_t>(n_), false}, checked_mul(sub, sub)), 2);
            }
            base_cardinality_ = tree_counts_.back();
            name_ = "decision_trees(n=" + std::to_string(n_) + ",depth<=" + std::to_string(tree_depth_) + ")";
            break;
        }
    }
}

HypothesisClass::HypothesisClass(const HypothesisClass& other)
    : name_(other.name_),
      family_(other.family_),
      n_(other.n_),
      tree_depth_(other.tree_depth_),
      predicates_(other.predicates_),
      base_cardinality_(other.base_cardinality_),
      tree_counts_(other.tree_counts_),
      cached_size_(other.cached_size_.load()) {}

HypothesisClass& HypothesisClass::operator=(const HypothesisClass& other) {
    if (this != &other) {
        name_ = other.name_;
        family_ = other.family_;
        n_ = other.n_;
        tree_depth_ = other.tree_depth_;
        predicates_ = other.predicates_;
        base_cardinality_ = other.base_cardinality_;
        tree_counts_ = other.tree_counts_;
        cached_size_.store(other.cached_size_.load());
    }
    return *this;
}

HypothesisClass HypothesisClass::constants(int n) { return HypothesisClass(Family::Constant, n, 0); }

HypothesisClass HypothesisClass::conjunctions(int n) { return HypothesisClass(Family::Conjunction, n, 0); }

HypothesisClass HypothesisClass::three_term_dnfs(int n) { return HypothesisClass(Family::ThreeTermDnf, n, 0); }

HypothesisClass HypothesisClass::decision_trees(int n, int max_depth) {
    return HypothesisClass(Family::DecisionTree, n, max_depth);
}

HypothesisClass HypothesisClass::restricted(Predicate predicate) const {
    HypothesisClass out(*this);
    out.name_ = name_ + " | " + predicate.name();
    out.predicates_.push_back(std::move(predicate));
    out.cached_size_.store(UINT64_MAX);
    return out;
}

void HypothesisClass::require_enumerable() const {
    const std::uint64_t cap = enumeration_cap();
    if (base_cardinality_.overflow || base_cardinality_.value > cap)
        throw CapExceededError("class " + name_, base_cardinality_.value, cap, base_cardinality_.overflow);
}

std::uint64_t HypothesisClass::size() const {
    if (predicates_.empty()) return base_cardinality_.overflow ? UINT64_MAX : base_cardinality_.value;
    std::uint64_t cached = cached_size_.load();
    if (cached != UINT64_MAX) return cached;
    require_enumerable();
    std::uint64_t count = 0;
    for_each_member([&count](const Hypothesis&, std::uint64_t) {
        ++count;
        return true;
    });
    cached_size_.store(count);
    return count;
}

Hypothesis HypothesisClass::base_member(std::uint64_t index) const {
    if (base_cardinality_.overflow ? false : index >= base_cardinality_.value)
        throw std::out_of_range("member index " + std::to_string(index) + " out of range for " + name_);
    switch (family_) {
        case Family::Constant:
            return ConstLabel{index == 1};
        case Family::Conjunction: {
            Conjunction c(n_);
            std::uint64_t rem = index;
            for (int v = 0; v < n_; ++v) {
                c.set_state(v, static_cast<VarState>(rem % 3));
                rem /= 3;
            }
            return c;
        }
        case Family::ThreeTermDnf: {
            const std::uint64_t per_term = pow3(n_).value;
            ThreeTermDnf d;
            const std::uint64_t i3 = index % per_term;
            const std::uint64_t i2 = (index / per_term) % per_term;
            const std::uint64_t i1 = index / (per_term * per_term);
            const std::uint64_t idx[3] = {i1, i2, i3};
            for (int t = 0; t < 3; ++t) {
                Conjunction c(n_);
                std::uint64_t rem = idx[t];
                for (int v = 0; v < n_; ++v) {
                    c.set_state(v, static_cast<VarState>(rem % 3));
                    rem /= 3;
                }
                d.terms[static_cast<std::size_t>(t)] = std::move(c);
            }
            return d;
        }
        case Family::DecisionTree:
            return decode_tree(index, tree_depth_);
    }
    throw std::logic_error("unreachable family");
}

// Canonical tree order at depth budget d: index 0 -> leaf 0, 1 -> leaf 1,
// then nodes ordered by (variable, left subtree index, right subtree index)
// with subtrees drawn from the budget-(d-1) order. Nodes are laid out in
// preorder so equal structures compare equal.
Hypothesis HypothesisClass::decode_tree(std::uint64_t index, int depth_budget) const {
    DecisionTree tree;
    tree.n = n_;
    const std::function<int(std::uint64_t, int)> build = [&](std::uint64_t idx, int budget) -> int {
        const int self = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        if (idx < 2) {
            tree.nodes[static_cast<std::size_t>(self)].variable = -1;
            tree.nodes[static_cast<std::size_t>(self)].leaf_label = (idx == 1);
            return self;
        }
        const std::uint64_t sub = tree_counts_[static_cast<std::size_t>(budget) - 1].value;
        const std::uint64_t k = idx - 2;
        const std::uint64_t var = k / (sub * sub);
        const std::uint64_t rem = k % (sub * sub);
        tree.nodes[static_cast<std::size_t>(self)].variable = static_cast<int>(var);
        const int left = build(rem / sub, budget - 1);
        const int right = build(rem % sub, budget - 1);
        tree.nodes[static_cast<std::size_t>(self)].left = left;
        tree.nodes[static_cast<std::size_t>(self)].right = right;
        return self;
    };
    build(index, depth_budget);
    return tree;
}

namespace {

std::optional<std::uint64_t> encode_conjunction(const Conjunction& c, int n) {
    if (c.dimension() != n) return std::nullopt;
    std::uint64_t index = 0;
    std::uint64_t place = 1;
    for (int v = 0; v < n; ++v) {
        const VarState s = c.state(v);
        if (s == VarState::Both) return std::nullopt;
        index += place * static_cast<std::uint64_t>(s);
        place *= 3;
    }
    return index;
}

} // namespace

std::optional<std::uint64_t> HypothesisClass::encode_tree(const DecisionTree& t) const {
    if (t.n != n_ || t.nodes.empty()) return std::nullopt;
    // Returns (index within budget order, subtree depth) or nullopt when invalid.
    const std::function<std::optional<std::pair<std::uint64_t, int>>(int, int)> walk =
        [&](int node_index, int budget) -> std::optional<std::pair<std::uint64_t, int>> {
        if (node_index < 0 || node_index >= static_cast<int>(t.nodes.size())) return std::nullopt;
        const TreeNode& node = t.nodes[static_cast<std::size_t>(node_index)];
        if (node.is_leaf()) return std::make_pair(std::uint64_t{node.leaf_label ? 1u : 0u}, 0);
        if (budget == 0 || node.variable >= n_) return std::nullopt;
        const auto left = walk(node.left, budget - 1);
        const auto right = walk(node.right, budget - 1);
        if (!left || !right) return std::nullopt;
        const std::uint64_t sub = tree_counts_[static_cast<std::size_t>(budget) - 1].value;
        const std::uint64_t idx =
            2 + static_cast<std::uint64_t>(node.variable) * sub * sub + left->first * sub + right->first;
        return std::make_pair(idx, 1 + std::max(left->second, right->second));
    };
    const auto res = walk(0, tree_depth_);
    if (!res) return std::nullopt;
    return res->first;
}

std::optional<std::uint64_t> HypothesisClass::base_index_of(const Hypothesis& h) const {
    switch (family_) {
        case Family::Constant: {
            const ConstLabel* c = std::get_if<ConstLabel>(&h);
            if (c == nullptr) return std::nullopt;
            return c->label ? 1 : 0;
        }
        case Family::Conjunction: {
            const Conjunction* c = std::get_if<Conjunction>(&h);
            if (c == nullptr) return std::nullopt;
            return encode_conjunction(*c, n_);
        }
        case Family::ThreeTermDnf: {
            const ThreeTermDnf* d = std::get_if<ThreeTermDnf>(&h);
            if (d == nullptr) return std::nullopt;
            const std::uint64_t per_term = pow3(n_).value;
            std::uint64_t index = 0;
            for (const Conjunction& term : d->terms) {
                const auto ti = encode_conjunction(term, n_);
                if (!ti) return std::nullopt;
                index = index * per_term + *ti;
            }
            return index;
        }
        case Family::DecisionTree: {
            const DecisionTree* t = std::get_if<DecisionTree>(&h);
            if (t == nullptr) return std::nullopt;
            return encode_tree(*t);
        }
    }
    return std::nullopt;
}

bool HypothesisClass::matches_predicates(const Hypothesis& h) const {
    for (const Predicate& p : predicates_)
        if (!p.matches(h)) return false;
    return true;
}

bool HypothesisClass::contains(const Hypothesis& h) const {
    return base_index_of(h).has_value() && matches_predicates(h);
}

void HypothesisClass::for_each_member(const std::function<bool(const Hypothesis&, std::uint64_t)>& visit) const {
    require_enumerable();
    const std::uint64_t total = base_cardinality_.value;
    if (predicates_.empty()) {
        for (std::uint64_t i = 0; i < total; ++i) {
            if (!visit(base_member(i), i)) return;
        }
        return;
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        Hypothesis h = base_member(i);
        if (!matches_predicates(h)) continue;
        if (!visit(h, i)) return;
    }
}

std::vector<Hypothesis> HypothesisClass::enumerate() const {
    std::vector<Hypothesis> out;
    for_each_member([&out](const Hypothesis& h, std::uint64_t) {
        out.push_back(h);
        return true;
    });
    return out;
}

Hypothesis HypothesisClass::member_at(std::uint64_t k) const {
    if (predicates_.empty()) return base_member(k);
    std::optional<Hypothesis> found;
    std::uint64_t seen = 0;
    for_each_member([&](const Hypothesis& h, std::uint64_t) {
        if (seen == k) {
            found = h;
            return false;
        }
        ++seen;
        return true;
    });
    if (!found) throw std::out_of_range("member index " + std::to_string(k) + " out of range for " + name_);
    return *found;
}

Hypothesis HypothesisClass::random_member(CounterRng& rng) const {
    if (predicates_.empty()) return base_member(rng.next_below(base_cardinality_.value));
    const std::uint64_t total = size();
    if (total == 0) throw std::invalid_argument("class " + name_ + " is empty");
    // Rejection sampling against the base order stays uniform over members.
    const std::uint64_t base_total = base_cardinality_.value;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Hypothesis h = base_member(rng.next_below(base_total));
        if (matches_predicates(h)) return h;
    }
    return member_at(rng.next_below(total));
}

} // namespace ermlab
