#ifndef M0N_LOADED_TREE_HPP_
#define M0N_LOADED_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m0n/label_set.hpp"
#include "m0n/monomial.hpp"

namespace m0n {

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// A tree whose vertices carry label sets (possibly empty) and whose edges
// carry positive multiplicities. Vertex ids are the indices 0..size-1 of
// `labels`. A loaded tree is valid when it is a tree, the nonempty label sets
// partition {1..n}, and deg(v) + |h(v)| >= 3 at every vertex.
struct LoadedTree {
  int n = 0;
  std::vector<LabelSet> labels;
  std::vector<TreeEdge> edges;

  std::size_t vertex_count() const { return labels.size(); }
  std::int64_t total_multiplicity() const;
  // Proper: total multiplicity equals n - 3.
  bool is_proper() const { return total_multiplicity() == n - 3; }

  std::vector<std::size_t> degrees() const;
  // Incident edge indices per vertex.
  std::vector<std::vector<std::size_t>> incidence() const;
  std::size_t other_end(std::size_t edge, std::size_t vertex) const {
    return edges[edge].u == vertex ? edges[edge].v : edges[edge].u;
  }

  friend bool operator==(const LoadedTree&, const LoadedTree&) = default;
};

struct Violation {
  enum class Kind { NotATree, LabelsNotPartition, DegreePlusLabelsTooSmall, BadMultiplicity };
  Kind kind;
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> edge;
  std::string message;
};

std::vector<Violation> validate(const LoadedTree& tree);

// Throws InvalidTree carrying the first violation.
void require_valid(const LoadedTree& tree);

// Vertices on the `u` side of `edge` once it is removed.
std::vector<bool> side_of(const LoadedTree& tree, std::size_t edge);

// Each edge contributes the cut separating the labels of its two sides, raised
// to its multiplicity. Throws EmptyNonTrivial for an edgeless tree with n != 3.
Monomial tree_to_monomial(const LoadedTree& tree);

// Builds the loaded tree of a tree monomial from the containment order of the
// parts around a pivot cut. The default pivot is the smallest factor.
// Throws CrossingFactors or EmptyNonTrivial.
LoadedTree monomial_to_tree(const Monomial& m);
LoadedTree monomial_to_tree(const Monomial& m, const Cut& pivot);

// Deterministic in (n, seed). The result always passes validate() and is proper.
LoadedTree random_proper_tree(int n, std::uint64_t seed);

// String that is equal for two loaded trees iff they are isomorphic (label
// sets, topology and multiplicities; vertex ids ignored).
std::string canonical_form(const LoadedTree& tree);

// Renumbers the labels in use to 1..k preserving order; n becomes k.
LoadedTree relabel_contiguous(const LoadedTree& tree);

}  // namespace m0n

#endif  // M0N_LOADED_TREE_HPP_
