#include "ermlab/json_io.hpp"

#include <stdexcept>

namespace ermlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

int require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

double require_number(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) bad(std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

Label label_from(const Json& j) {
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v == 0 || v == 1) return v == 1;
    }
    bad("label must be 0 or 1");
}

} // namespace

Json to_json(const Bits& x) {
    Json arr = Json::array();
    for (int i = 0; i < x.size(); ++i) arr.push_back(x.test(i) ? 1 : 0);
    return arr;
}

Bits bits_from_json(const Json& j) {
    if (!j.is_array()) bad("point must be an array of 0/1");
    Bits out(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) bad("point entries must be integers");
        const int v = j[i].get<int>();
        if (v != 0 && v != 1) bad("point entries must be 0 or 1");
        if (v == 1) out.set(static_cast<int>(i));
    }
    return out;
}

Json to_json(const Dataset& data) {
    Json examples = Json::array();
    for (const LabeledExample& e : data.examples)
        examples.push_back(Json{{"x", to_json(e.x)}, {"y", e.y ? 1 : 0}});
    return Json{{"n", data.n}, {"examples", examples}};
}

Dataset dataset_from_json(const Json& j) {
    Dataset out;
    out.n = require_int(j, "n");
    if (!j.contains("examples") || !j["examples"].is_array()) bad("missing array field 'examples'");
    for (const Json& e : j["examples"]) {
        Bits x = bits_from_json(e.contains("x") ? e["x"] : Json());
        out.examples.push_back({std::move(x), label_from(e.contains("y") ? e["y"] : Json())});
    }
    out.validate();
    return out;
}

Json to_json(const FiniteDistribution& dist) {
    Json support = Json::array();
    for (const WeightedExample& e : dist.support())
        support.push_back(Json{{"x", to_json(e.x)}, {"y", e.y ? 1 : 0}, {"p", e.p}});
    return Json{{"n", dist.dimension()}, {"support", support}};
}

FiniteDistribution distribution_from_json(const Json& j) {
    const int n = require_int(j, "n");
    if (!j.contains("support") || !j["support"].is_array()) bad("missing array field 'support'");
    std::vector<WeightedExample> support;
    for (const Json& e : j["support"]) {
        WeightedExample w;
        w.x = bits_from_json(e.contains("x") ? e["x"] : Json());
        w.y = label_from(e.contains("y") ? e["y"] : Json());
        w.p = require_number(e, "p");
        support.push_back(std::move(w));
    }
    return FiniteDistribution(n, std::move(support));
}

namespace {

Json states_json(const Conjunction& c) {
    Json arr = Json::array();
    for (int v = 0; v < c.dimension(); ++v) arr.push_back(static_cast<int>(c.state(v)));
    return arr;
}

Conjunction conjunction_from_states(const Json& arr) {
    if (!arr.is_array()) bad("conjunction states must be an array");
    Conjunction c(static_cast<int>(arr.size()));
    for (std::size_t v = 0; v < arr.size(); ++v) {
        if (!arr[v].is_number_integer()) bad("conjunction states must be integers");
        const int s = arr[v].get<int>();
        if (s < 0 || s > 3) bad("conjunction state must lie in [0, 3]");
        c.set_state(static_cast<int>(v), static_cast<VarState>(s));
    }
    return c;
}

Json tree_node_json(const DecisionTree& t, int i) {
    const TreeNode& node = t.nodes[static_cast<std::size_t>(i)];
    if (node.is_leaf()) return Json{{"label", node.leaf_label ? 1 : 0}};
    return Json{{"var", node.variable},
                {"left", tree_node_json(t, node.left)},
                {"right", tree_node_json(t, node.right)}};
}

// Rebuilds nodes in preorder (root, left subtree, right subtree), the same
// layout the canonical decoder produces.
int tree_node_from_json(const Json& j, DecisionTree& t) {
    const int self = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    if (j.contains("label")) {
        t.nodes[static_cast<std::size_t>(self)].leaf_label = label_from(j["label"]);
        return self;
    }
    const int var = require_int(j, "var");
    if (var < 0) bad("tree node variable must be nonnegative");
    if (!j.contains("left") || !j.contains("right")) bad("internal tree node needs 'left' and 'right'");
    t.nodes[static_cast<std::size_t>(self)].variable = var;
    const int left = tree_node_from_json(j["left"], t);
    const int right = tree_node_from_json(j["right"], t);
    t.nodes[static_cast<std::size_t>(self)].left = left;
    t.nodes[static_cast<std::size_t>(self)].right = right;
    return self;
}

Json sparse_mask_json(const Bits& mask) {
    Json arr = Json::array();
    for (int i = 0; i < mask.size(); ++i)
        if (mask.test(i)) arr.push_back(i);
    return arr;
}

void fill_sparse_mask(const Json& arr, Bits& mask) {
    if (!arr.is_array()) bad("coordinate list must be an array");
    for (const Json& e : arr) {
        if (!e.is_number_integer()) bad("coordinate list entries must be integers");
        const int i = e.get<int>();
        if (i < 0 || i >= mask.size()) bad("coordinate index out of range");
        mask.set(i);
    }
}

} // namespace

Json to_json(const Hypothesis& h) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstLabel>) {
                return Json{{"kind", "constant"}, {"label", v.label ? 1 : 0}};
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                return Json{{"kind", "conjunction"}, {"n", v.dimension()}, {"states", states_json(v)}};
            } else if constexpr (std::is_same_v<T, ThreeTermDnf>) {
                return Json{{"kind", "three_term_dnf"},
                            {"n", v.dimension()},
                            {"terms", Json::array({states_json(v.terms[0]), states_json(v.terms[1]),
                                                   states_json(v.terms[2])})}};
            } else if constexpr (std::is_same_v<T, DecisionTree>) {
                return Json{{"kind", "decision_tree"}, {"n", v.n}, {"root", tree_node_json(v, 0)}};
            } else {
                return Json{{"kind", "expanded_conjunction"},
                            {"base_n", v.base_n},
                            {"pos", sparse_mask_json(v.conj.pos)},
                            {"neg", sparse_mask_json(v.conj.neg)}};
            }
        },
        h);
}

Hypothesis hypothesis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("hypothesis needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "constant") {
        return ConstLabel{label_from(j.contains("label") ? j["label"] : Json())};
    }
    if (kind == "conjunction") {
        const int n = require_int(j, "n");
        Conjunction c = conjunction_from_states(j.contains("states") ? j["states"] : Json());
        if (c.dimension() != n) bad("conjunction states length does not match n");
        return c;
    }
    if (kind == "three_term_dnf") {
        const int n = require_int(j, "n");
        if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].size() != 3)
            bad("three_term_dnf needs exactly 3 terms");
        ThreeTermDnf d;
        for (int t = 0; t < 3; ++t) {
            d.terms[static_cast<std::size_t>(t)] = conjunction_from_states(j["terms"][static_cast<std::size_t>(t)]);
            if (d.terms[static_cast<std::size_t>(t)].dimension() != n) bad("term states length does not match n");
        }
        return d;
    }
    if (kind == "decision_tree") {
        DecisionTree t;
        t.n = require_int(j, "n");
        if (t.n < 1) bad("decision_tree needs n >= 1");
        if (!j.contains("root")) bad("decision_tree needs 'root'");
        tree_node_from_json(j["root"], t);
        for (const TreeNode& node : t.nodes)
            if (!node.is_leaf() && node.variable >= t.n) bad("tree node variable out of range");
        return t;
    }
    if (kind == "expanded_conjunction") {
        const int base_n = require_int(j, "base_n");
        if (base_n < 1) bad("expanded_conjunction needs base_n >= 1");
        Conjunction c(static_cast<int>(triple_coordinate_count(base_n)));
        fill_sparse_mask(j.contains("pos") ? j["pos"] : Json::array(), c.pos);
        fill_sparse_mask(j.contains("neg") ? j["neg"] : Json::array(), c.neg);
        return ExpandedConjunction{base_n, std::move(c)};
    }
    bad("unknown hypothesis kind '" + kind + "'");
}

Json to_json(const Predicate& p) {
    switch (p.kind()) {
        case Predicate::Kind::AlwaysTrue: return Json{{"kind", "always_true"}};
        case Predicate::Kind::AlwaysFalse: return Json{{"kind", "always_false"}};
        case Predicate::Kind::MaxLiterals: return Json{{"kind", "max_literals"}, {"k", p.param(0)}};
        case Predicate::Kind::MaxDepth: return Json{{"kind", "max_depth"}, {"d", p.param(0)}};
        case Predicate::Kind::IsConstant: return Json{{"kind", "is_constant"}};
        case Predicate::Kind::RepHash:
            return Json{{"kind", "rep_hash"},
                        {"salt", static_cast<std::uint64_t>(p.param(0))},
                        {"modulus", static_cast<std::uint64_t>(p.param(1))},
                        {"threshold", static_cast<std::uint64_t>(p.param(2))}};
        case Predicate::Kind::Custom: return Json{{"kind", "custom"}, {"name", p.name()}};
    }
    bad("unknown predicate kind");
}

Predicate predicate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("predicate needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "always_true") return Predicate::always_true();
    if (kind == "always_false") return Predicate::always_false();
    if (kind == "max_literals") return Predicate::max_literals(require_int(j, "k"));
    if (kind == "max_depth") return Predicate::max_depth(require_int(j, "d"));
    if (kind == "is_constant") return Predicate::is_constant();
    if (kind == "rep_hash") {
        if (!j.contains("salt") || !j.contains("modulus") || !j.contains("threshold"))
            bad("rep_hash needs salt, modulus, threshold");
        return Predicate::rep_hash(j["salt"].get<std::uint64_t>(), j["modulus"].get<std::uint64_t>(),
                                   j["threshold"].get<std::uint64_t>());
    }
    bad("unknown or non-deserializable predicate kind '" + kind + "'");
}

Json class_descriptor_json(const HypothesisClass& cls) {
    Json params = Json::object();
    if (cls.family() == Family::DecisionTree) params["max_depth"] = cls.tree_depth();
    Json predicate;
    const std::vector<Predicate>& preds = cls.predicates();
    if (preds.empty()) {
        predicate = nullptr;
    } else if (preds.size() == 1) {
        predicate = to_json(preds[0]);
    } else {
        Json items = Json::array();
        for (const Predicate& p : preds) items.push_back(to_json(p));
        predicate = Json{{"kind", "all_of"}, {"items", items}};
    }
    return Json{{"family", to_string(cls.family())},
                {"n", cls.dimension()},
                {"params", params},
                {"predicate", predicate}};
}

HypothesisClass class_from_descriptor(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        bad("class descriptor needs a string 'family'");
    const std::string family_name = j["family"].get<std::string>();
    const std::optional<Family> family = family_from_string(family_name);
    if (!family) bad("unknown family '" + family_name + "'");
    const int n = require_int(j, "n");
    HypothesisClass cls = [&] {
        switch (*family) {
            case Family::Constant: return HypothesisClass::constants(n);
            case Family::Conjunction: return HypothesisClass::conjunctions(n);
            case Family::ThreeTermDnf: return HypothesisClass::three_term_dnfs(n);
            case Family::DecisionTree: {
                if (!j.contains("params") || !j["params"].is_object())
                    bad("decision_tree descriptor needs params.max_depth");
                return HypothesisClass::decision_trees(n, require_int(j["params"], "max_depth"));
            }
        }
        bad("unknown family");
    }();
    if (j.contains("predicate") && !j["predicate"].is_null()) {
        const Json& p = j["predicate"];
        if (p.is_object() && p.contains("kind") && p["kind"] == "all_of") {
            if (!p.contains("items") || !p["items"].is_array()) bad("all_of predicate needs 'items'");
            for (const Json& item : p["items"]) cls = cls.restricted(predicate_from_json(item));
        } else {
            cls = cls.restricted(predicate_from_json(p));
        }
    }
    return cls;
}

Json to_json(const ErmResult& r) {
    return Json{{"chosen", to_json(r.chosen)},
                {"min_empirical_risk", r.min_empirical_risk},
                {"minimizer_count", r.minimizer_count}};
}

Json to_json(const RiskDecomposition& d) {
    return Json{{"total_risk", d.total_risk},
                {"approx_error", d.approx_error},
                {"estimation_error", d.estimation_error},
                {"erm_empirical_risk", d.erm_empirical_risk},
                {"optimization_error", d.optimization_error},
                {"generalization_error", d.generalization_error}};
}

Json to_json(const SampleStats& s) {
    return Json{{"mean", s.mean}, {"ci95", Json::array({s.ci_lo, s.ci_hi})}};
}

Json to_json(const TradeoffReport& r) {
    const auto quantity = [](const std::vector<double>& samples, const SampleStats& stats) {
        Json q = to_json(stats);
        q["samples"] = samples;
        return q;
    };
    return Json{{"m", r.m},
                {"trials", r.trials},
                {"appincr", r.appincr},
                {"estdecr", quantity(r.estdecr, r.estdecr_stats)},
                {"emp_gap", quantity(r.emp_gap, r.emp_gap_stats)},
                {"gen_gap", quantity(r.gen_gap, r.gen_gap_stats)},
                {"risk_gap", quantity(r.risk_gap, r.risk_gap_stats)}};
}

} // namespace ermlab
