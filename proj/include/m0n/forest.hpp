#ifndef M0N_FOREST_HPP_
#define M0N_FOREST_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "m0n/integer.hpp"
#include "m0n/loaded_tree.hpp"
#include "m0n/monomial.hpp"

namespace m0n {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t weight = 0;
};

// Loaded tree topology with w(v) = deg(v) + |h(v)| - 3 and w(e) = m(e) - 1.
// Labels are carried along for display only.
struct WeightedTree {
  std::vector<std::int64_t> vertex_weights;
  std::vector<WeightedEdge> edges;
  std::vector<LabelSet> labels;

  std::int64_t vertex_weight_sum() const;
  std::int64_t edge_weight_sum() const;
};

enum class Origin { FromVertex, FromEdge, FromLeafVertex };

std::string_view to_string(Origin origin);

// Vertex-weighted tree. `source[i]` is the id of vertex i in the structure it
// was derived from (identity for a fresh redundancy tree, the redundancy tree
// id for a pruned component).
struct RedundancyTree {
  std::vector<std::int64_t> weights;
  std::vector<Origin> origins;
  std::vector<std::size_t> source;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Label set of the originating loaded-tree vertex, empty for edge midpoints.
  std::vector<LabelSet> labels;

  std::size_t vertex_count() const { return weights.size(); }
};

// Empty `trees` is the null graph.
struct RedundancyForest {
  std::vector<RedundancyTree> trees;
};

using TraceStructure =
    std::variant<std::monostate, LoadedTree, WeightedTree, RedundancyTree, RedundancyForest>;

struct TraceEvent {
  std::string stage;
  TraceStructure structure;
  // [top, bottom] of the binomial applied at this step.
  std::optional<std::pair<std::int64_t, std::int64_t>> binomial;
};

using TraceSink = std::function<void(const TraceEvent&)>;

WeightedTree to_weighted(const LoadedTree& tree);

// (-1)^(edge weight sum). Throws WeightIdentityViolation if the vertex and
// edge weight sums differ.
int sign_of(const WeightedTree& tree);

// Subdivides every edge once; edge i becomes vertex V + i.
RedundancyTree to_redundancy(const WeightedTree& tree);

// Deletes zero-weight vertices and splits the rest into components.
RedundancyForest prune(const RedundancyTree& tree);

// Leaf elimination, smallest leaf id first.
Integer eval_redundancy_tree(const RedundancyTree& tree, const TraceSink& trace = {});
// Leaf elimination in a uniformly random order drawn from `rng`.
Integer eval_redundancy_tree(const RedundancyTree& tree, std::mt19937_64& rng);

Integer eval_forest(const RedundancyForest& forest, const TraceSink& trace = {});

// Signed value of a valid loaded tree; zero when the tree is not proper.
Integer eval_tree(const LoadedTree& tree, const TraceSink& trace = {});

// Integral of a monomial.
Integer eval(const Monomial& m, const TraceSink& trace = {});

}  // namespace m0n

#endif  // M0N_FOREST_HPP_
