#include "m0n/forest.hpp"

#include <functional>
#include <queue>

#include "m0n/error.hpp"

namespace m0n {

std::int64_t WeightedTree::vertex_weight_sum() const {
  std::int64_t sum = 0;
  for (auto w : vertex_weights) sum += w;
  return sum;
}

std::int64_t WeightedTree::edge_weight_sum() const {
  std::int64_t sum = 0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::FromVertex: return "vertex";
    case Origin::FromEdge: return "edge";
    case Origin::FromLeafVertex: return "leaf";
  }
  return "unknown";
}

WeightedTree to_weighted(const LoadedTree& tree) {
  WeightedTree out;
  const auto deg = tree.degrees();
  out.vertex_weights.reserve(tree.vertex_count());
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    out.vertex_weights.push_back(static_cast<std::int64_t>(deg[v] + tree.labels[v].size()) - 3);
  }
  out.edges.reserve(tree.edges.size());
  for (const auto& e : tree.edges) out.edges.push_back({e.u, e.v, e.multiplicity - 1});
  out.labels = tree.labels;
  return out;
}

int sign_of(const WeightedTree& tree) {
  const std::int64_t edge_sum = tree.edge_weight_sum();
  if (edge_sum != tree.vertex_weight_sum()) {
    throw Error(ErrorCode::WeightIdentityViolation,
                "vertex weight sum " + std::to_string(tree.vertex_weight_sum()) +
                    " != edge weight sum " + std::to_string(edge_sum));
  }
  return edge_sum % 2 == 0 ? 1 : -1;
}

RedundancyTree to_redundancy(const WeightedTree& tree) {
  const std::size_t nv = tree.vertex_weights.size();
  const std::size_t ne = tree.edges.size();
  std::vector<std::size_t> deg(nv, 0);
  for (const auto& e : tree.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }

  RedundancyTree out;
  out.weights.reserve(nv + ne);
  for (std::size_t v = 0; v < nv; ++v) {
    out.weights.push_back(tree.vertex_weights[v]);
    out.origins.push_back(deg[v] == 1 ? Origin::FromLeafVertex : Origin::FromVertex);
    out.labels.push_back(v < tree.labels.size() ? tree.labels[v] : LabelSet{});
  }
  for (std::size_t i = 0; i < ne; ++i) {
    const std::size_t mid = nv + i;
    out.weights.push_back(tree.edges[i].weight);
    out.origins.push_back(Origin::FromEdge);
    out.labels.emplace_back();
    out.edges.emplace_back(tree.edges[i].u, mid);
    out.edges.emplace_back(mid, tree.edges[i].v);
  }
  out.source.resize(nv + ne);
  for (std::size_t v = 0; v < nv + ne; ++v) out.source[v] = v;
  return out;
}

RedundancyForest prune(const RedundancyTree& tree) {
  const std::size_t nv = tree.vertex_count();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& [a, b] : tree.edges) {
    if (tree.weights[a] == 0 || tree.weights[b] == 0) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  RedundancyForest forest;
  std::vector<std::size_t> local(nv, nv);
  for (std::size_t start = 0; start < nv; ++start) {
    if (tree.weights[start] == 0 || local[start] != nv) continue;
    // Collect the component, then number it in increasing id order.
    std::vector<std::size_t> members{start};
    local[start] = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t w : adj[members[i]]) {
        if (local[w] == nv) {
          local[w] = 0;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    RedundancyTree component;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t g = members[i];
      local[g] = i;
      component.weights.push_back(tree.weights[g]);
      component.origins.push_back(tree.origins[g]);
      component.source.push_back(tree.source.empty() ? g : tree.source[g]);
      component.labels.push_back(g < tree.labels.size() ? tree.labels[g] : LabelSet{});
    }
    for (std::size_t g : members) {
      for (std::size_t w : adj[g]) {
        if (g < w) component.edges.emplace_back(local[g], local[w]);
      }
    }
    forest.trees.push_back(std::move(component));
  }
  return forest;
}

namespace {

class SmallestLeafFirst {
 public:
  void push(std::size_t v) { heap_.push(v); }
  std::size_t pop() {
    const std::size_t v = heap_.top();
    heap_.pop();
    return v;
  }

 private:
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap_;
};

class RandomLeaf {
 public:
  explicit RandomLeaf(std::mt19937_64& rng) : rng_(rng) {}
  void push(std::size_t v) { pool_.push_back(v); }
  std::size_t pop() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    const std::size_t i = pick(rng_);
    const std::size_t v = pool_[i];
    pool_[i] = pool_.back();
    pool_.pop_back();
    return v;
  }

 private:
  std::mt19937_64& rng_;
  std::vector<std::size_t> pool_;
};

RedundancyTree leaf_step_structure(const RedundancyTree& tree, std::size_t leaf,
                                   std::size_t parent, std::int64_t leaf_weight,
                                   std::int64_t parent_weight) {
  RedundancyTree step;
  for (auto [v, w] : {std::pair{leaf, leaf_weight}, std::pair{parent, parent_weight}}) {
    step.weights.push_back(w);
    step.origins.push_back(tree.origins[v]);
    step.source.push_back(tree.source.empty() ? v : tree.source[v]);
    step.labels.push_back(v < tree.labels.size() ? tree.labels[v] : LabelSet{});
  }
  step.edges.emplace_back(0, 1);
  return step;
}

// Repeatedly removes a leaf l with parent p, multiplying by C(w(p), w(l)) and
// lowering w(p) by w(l). The surviving vertex must end with weight 0.
template <class Picker>
Integer eliminate_leaves(const RedundancyTree& tree, Picker& picker, const TraceSink& trace) {
  const std::size_t nv = tree.vertex_count();
  if (nv == 0) return 1;

  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> degree(nv);
  std::vector<std::int64_t> weight = tree.weights;
  std::vector<bool> alive(nv, true);
  for (std::size_t v = 0; v < nv; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] == 1) picker.push(v);
  }

  std::vector<Integer> factors;
  std::size_t remaining = nv;
  while (remaining > 1) {
    const std::size_t leaf = picker.pop();
    std::size_t parent = nv;
    for (std::size_t w : adj[leaf]) {
      if (alive[w]) parent = w;
    }
    if (weight[leaf] > weight[parent]) {
      if (trace) {
        trace({"leaf_exceeds_parent",
               leaf_step_structure(tree, leaf, parent, weight[leaf], weight[parent]),
               std::nullopt});
      }
      return 0;
    }
    if (trace) {
      trace({"eliminate", leaf_step_structure(tree, leaf, parent, weight[leaf], weight[parent]),
             std::pair{weight[parent], weight[leaf]}});
    }
    factors.push_back(binomial(weight[parent], weight[leaf]));
    weight[parent] -= weight[leaf];
    alive[leaf] = false;
    --remaining;
    if (--degree[parent] == 1) picker.push(parent);
  }

  for (std::size_t v = 0; v < nv; ++v) {
    if (!alive[v]) continue;
    if (weight[v] != 0) return 0;
  }
  return product(std::move(factors));
}

}  // namespace

Integer eval_redundancy_tree(const RedundancyTree& tree, const TraceSink& trace) {
  SmallestLeafFirst picker;
  return eliminate_leaves(tree, picker, trace);
}

Integer eval_redundancy_tree(const RedundancyTree& tree, std::mt19937_64& rng) {
  RandomLeaf picker(rng);
  return eliminate_leaves(tree, picker, {});
}

Integer eval_forest(const RedundancyForest& forest, const TraceSink& trace) {
  std::vector<Integer> values;
  values.reserve(forest.trees.size());
  for (const auto& tree : forest.trees) {
    Integer value = eval_redundancy_tree(tree, trace);
    if (value == 0) return 0;
    values.push_back(std::move(value));
  }
  return product(std::move(values));
}

Integer eval_tree(const LoadedTree& tree, const TraceSink& trace) {
  require_valid(tree);
  if (trace) trace({"loaded_tree", tree, std::nullopt});
  if (!tree.is_proper()) {
    if (trace) trace({"not_proper", std::monostate{}, std::nullopt});
    return 0;
  }
  const WeightedTree weighted = to_weighted(tree);
  if (trace) trace({"weighted_tree", weighted, std::nullopt});
  const int sign = sign_of(weighted);
  const RedundancyTree redundancy = to_redundancy(weighted);
  if (trace) trace({"redundancy_tree", redundancy, std::nullopt});
  const RedundancyForest forest = prune(redundancy);
  if (trace) trace({"redundancy_forest", forest, std::nullopt});
  Integer value = eval_forest(forest, trace);
  return sign < 0 ? Integer(-value) : value;
}

Integer eval(const Monomial& m, const TraceSink& trace) {
  const Classification c = classify(m);
  if (trace) trace({"classify:" + std::string(to_string(c)), std::monostate{}, std::nullopt});
  if (c == Classification::DegreeMismatch || c == Classification::ZeroByKeel) return 0;
  return eval_tree(monomial_to_tree(m), trace);
}

}  // namespace m0n
