#include "m0n/loaded_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>

#include "m0n/error.hpp"

namespace m0n {

std::int64_t LoadedTree::total_multiplicity() const {
  std::int64_t total = 0;
  for (const auto& e : edges) total += e.multiplicity;
  return total;
}

std::vector<std::size_t> LoadedTree::degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<std::size_t>> LoadedTree::incidence() const {
  std::vector<std::vector<std::size_t>> inc(vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[edges[i].u].push_back(i);
    inc[edges[i].v].push_back(i);
  }
  return inc;
}

std::vector<Violation> validate(const LoadedTree& tree) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  const std::size_t nv = tree.vertex_count();
  if (nv == 0) {
    out.push_back({Kind::NotATree, std::nullopt, std::nullopt, "tree has no vertices"});
    return out;
  }

  bool endpoints_ok = true;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const auto& e = tree.edges[i];
    if (e.u >= nv || e.v >= nv || e.u == e.v) {
      out.push_back({Kind::NotATree, std::nullopt, i, "edge endpoints invalid"});
      endpoints_ok = false;
    }
    if (e.multiplicity < 1) {
      out.push_back({Kind::BadMultiplicity, std::nullopt, i, "multiplicity must be positive"});
    }
  }
  if (!endpoints_ok) return out;

  if (tree.edges.size() + 1 != nv) {
    out.push_back({Kind::NotATree, std::nullopt, std::nullopt,
                   std::to_string(tree.edges.size()) + " edges on " + std::to_string(nv) +
                       " vertices"});
  } else {
    const auto inc = tree.incidence();
    std::vector<bool> seen(nv, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : inc[v]) {
        const std::size_t w = tree.other_end(e, v);
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != nv) {
      out.push_back({Kind::NotATree, std::nullopt, std::nullopt, "graph is not connected"});
    }
  }

  std::vector<int> owner(static_cast<std::size_t>(std::max(tree.n, 0)) + 1, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    for (Label l : tree.labels[v]) {
      if (l < 1 || l > tree.n) {
        out.push_back({Kind::LabelsNotPartition, v, std::nullopt,
                       "label " + std::to_string(l) + " outside 1.." + std::to_string(tree.n)});
        continue;
      }
      if (owner[l] >= 0) {
        out.push_back({Kind::LabelsNotPartition, v, std::nullopt,
                       "label " + std::to_string(l) + " also on vertex " +
                           std::to_string(owner[l])});
        continue;
      }
      owner[l] = static_cast<int>(v);
    }
  }
  for (Label l = 1; l <= tree.n; ++l) {
    if (owner[l] < 0) {
      out.push_back({Kind::LabelsNotPartition, std::nullopt, std::nullopt,
                     "label " + std::to_string(l) + " missing"});
    }
  }

  const auto deg = tree.degrees();
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] + tree.labels[v].size() < 3) {
      out.push_back({Kind::DegreePlusLabelsTooSmall, v, std::nullopt,
                     "deg + |h| = " + std::to_string(deg[v] + tree.labels[v].size()) +
                         " < 3 at vertex " + std::to_string(v)});
    }
  }
  return out;
}

void require_valid(const LoadedTree& tree) {
  const auto violations = validate(tree);
  if (!violations.empty()) throw Error(ErrorCode::InvalidTree, violations.front().message);
}

std::vector<bool> side_of(const LoadedTree& tree, std::size_t edge) {
  const auto inc = tree.incidence();
  std::vector<bool> side(tree.vertex_count(), false);
  std::vector<std::size_t> stack{tree.edges[edge].u};
  side[tree.edges[edge].u] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : inc[v]) {
      if (e == edge) continue;
      const std::size_t w = tree.other_end(e, v);
      if (!side[w]) {
        side[w] = true;
        stack.push_back(w);
      }
    }
  }
  return side;
}

Monomial tree_to_monomial(const LoadedTree& tree) {
  if (tree.edges.empty()) {
    if (tree.n != 3) {
      throw Error(ErrorCode::EmptyNonTrivial,
                  "edgeless tree with " + std::to_string(tree.n) + " labels has no monomial");
    }
    return Monomial(3);
  }
  Monomial m(tree.n);
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const auto side = side_of(tree, i);
    std::vector<Label> part;
    for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
      if (side[v]) part.insert(part.end(), tree.labels[v].begin(), tree.labels[v].end());
    }
    m.multiply(cut_from_part(LabelSet(std::move(part)), tree.n), tree.edges[i].multiplicity);
  }
  return m;
}

LoadedTree monomial_to_tree(const Monomial& m) {
  if (m.empty()) {
    if (m.ambient() != 3) {
      throw Error(ErrorCode::EmptyNonTrivial,
                  "the empty monomial only corresponds to a tree when n = 3");
    }
    return LoadedTree{3, {LabelSet{1, 2, 3}}, {}};
  }
  return monomial_to_tree(m, m.factors().begin()->first);
}

LoadedTree monomial_to_tree(const Monomial& m, const Cut& pivot) {
  const int n = m.ambient();
  if (m.empty()) return monomial_to_tree(m);
  if (!is_tree_monomial(m)) {
    throw Error(ErrorCode::CrossingFactors, "monomial has two crossing factors");
  }
  const auto pivot_it = m.factors().find(pivot);
  if (pivot_it == m.factors().end()) {
    throw Error(ErrorCode::InvalidArgument, "pivot " + to_string(pivot) + " is not a factor");
  }

  // Node 0 and 1 are the pivot parts; every other cut contributes the one part
  // strictly inside a pivot part.
  const LabelSet& inner = pivot.first();
  const LabelSet& outer = pivot.second();
  std::vector<LabelSet> sets{inner, outer};
  std::vector<std::int64_t> exponent{pivot_it->second, 0};
  for (const auto& [cut, e] : m.factors()) {
    if (cut == pivot) continue;
    auto strictly_inside = [&](const LabelSet& p) {
      return p.is_strict_subset_of(inner) || p.is_strict_subset_of(outer);
    };
    sets.push_back(strictly_inside(cut.first()) ? cut.first() : cut.second());
    exponent.push_back(e);
  }

  // Hasse diagram: in a laminar family the cover of a set is its smallest
  // strict superset.
  const std::size_t k = sets.size();
  std::vector<std::size_t> parent(k, k);
  for (std::size_t i = 2; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !sets[i].is_strict_subset_of(sets[j])) continue;
      if (parent[i] == k || sets[j].size() < sets[parent[i]].size()) parent[i] = j;
    }
  }

  LoadedTree tree;
  tree.n = n;
  tree.labels = sets;
  for (std::size_t i = 2; i < k; ++i) {
    tree.labels[parent[i]] = tree.labels[parent[i]].minus(sets[i]);
  }
  tree.edges.push_back({0, 1, exponent[0]});
  for (std::size_t i = 2; i < k; ++i) tree.edges.push_back({parent[i], i, exponent[i]});
  return tree;
}

namespace {

// Uniform labeled tree on `count` >= 2 vertices from a random Pruefer sequence.
std::vector<TreeEdge> random_topology(std::size_t count, std::mt19937_64& rng) {
  if (count == 2) return {{0, 1, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  std::vector<std::size_t> code(count - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(count, 1);
  for (std::size_t c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < count; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<TreeEdge> edges;
  for (std::size_t c : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c), 1});
    if (--degree[c] == 1) leaves.push(c);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  const std::size_t b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b), 1});
  return edges;
}

}  // namespace

LoadedTree random_proper_tree(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "random_proper_tree needs n >= 3");
  if (n == 3) return LoadedTree{3, {LabelSet{1, 2, 3}}, {}};

  std::mt19937_64 rng(seed);
  // Any tree needs sum(max(0, 3 - deg)) >= V + 2 labels, so V <= n - 2.
  std::size_t count =
      std::uniform_int_distribution<std::size_t>(2, static_cast<std::size_t>(n) - 2)(rng);
  std::vector<TreeEdge> edges;
  std::vector<std::size_t> required;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 8 == 0 && count > 2) --count;
    edges = random_topology(count, rng);
    std::vector<std::size_t> deg(count, 0);
    for (const auto& e : edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    required.assign(count, 0);
    std::size_t total = 0;
    for (std::size_t v = 0; v < count; ++v) {
      required[v] = deg[v] < 3 ? 3 - deg[v] : 0;
      total += required[v];
    }
    if (total <= static_cast<std::size_t>(n)) break;
  }

  std::vector<Label> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::vector<Label>> labels(count);
  std::size_t next = 0;
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t i = 0; i < required[v]; ++i) labels[v].push_back(pool[next++]);
  }
  std::uniform_int_distribution<std::size_t> any_vertex(0, count - 1);
  while (next < pool.size()) labels[any_vertex(rng)].push_back(pool[next++]);

  std::uniform_int_distribution<std::size_t> any_edge(0, edges.size() - 1);
  for (auto extra = static_cast<std::int64_t>(n) - 3 - static_cast<std::int64_t>(edges.size());
       extra > 0; --extra) {
    ++edges[any_edge(rng)].multiplicity;
  }

  LoadedTree tree;
  tree.n = n;
  for (auto& l : labels) tree.labels.emplace_back(std::move(l));
  tree.edges = std::move(edges);
  return tree;
}

std::string canonical_form(const LoadedTree& tree) {
  if (tree.vertex_count() == 0) return "()";
  std::size_t root = 0;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (tree.labels[v].contains(1)) root = v;
  }
  const auto inc = tree.incidence();
  std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v,
                                                                     std::size_t from) {
    std::vector<std::string> children;
    for (std::size_t e : inc[v]) {
      const std::size_t w = tree.other_end(e, v);
      if (w == from) continue;
      children.push_back(std::to_string(tree.edges[e].multiplicity) + encode(w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(" + to_string(tree.labels[v]);
    for (const auto& c : children) out += c;
    return out + ")";
  };
  return "n=" + std::to_string(tree.n) + encode(root, tree.vertex_count());
}

LoadedTree relabel_contiguous(const LoadedTree& tree) {
  std::vector<Label> all;
  for (const auto& h : tree.labels) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());
  std::unordered_map<Label, Label> rename;
  for (std::size_t i = 0; i < all.size(); ++i) rename[all[i]] = static_cast<Label>(i + 1);

  LoadedTree out;
  out.n = static_cast<int>(all.size());
  out.edges = tree.edges;
  for (const auto& h : tree.labels) {
    std::vector<Label> mapped;
    for (Label l : h) mapped.push_back(rename.at(l));
    out.labels.emplace_back(std::move(mapped));
  }
  return out;
}

}  // namespace m0n
