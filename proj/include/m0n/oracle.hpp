#ifndef M0N_ORACLE_HPP_
#define M0N_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "m0n/forest.hpp"
#include "m0n/integer.hpp"
#include "m0n/loaded_tree.hpp"

// Evaluation of proper loaded trees by recursive edge cutting. Independent of
// the redundancy-forest evaluator; used to cross-check it.
namespace m0n::oracle {

enum class CutKind { SingleEdge, MultiEdge, StarCut };

std::string_view to_string(CutKind kind);

// Fresh labels introduced by a cut, before the children are renumbered.
struct AuxLabels {
  Label x;
  Label a;
  Label b;

  static AuxLabels above(int n) { return {n + 1, n + 2, n + 3}; }
};

// One cut of `edge`. side1 holds the labels on the edge's `u` side, s1 the
// total multiplicity of edges on that side, r the multiplicity of the edge.
// children is empty when the binomial is zero.
struct CutStep {
  std::size_t edge = 0;
  CutKind kind = CutKind::MultiEdge;
  Integer binomial = 1;
  std::int64_t r = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  LabelSet side1;
  LabelSet side2;
  std::optional<std::pair<LoadedTree, LoadedTree>> children;
};

// Splits along a multiplicity-1 edge, giving each endpoint the fresh label x.
// Children are relabeled to 1..n'. Throws NotSingleEdge.
CutStep single_edge_cut(const LoadedTree& tree, std::size_t edge);

// Replaces the far side of `edge` on each half by a new {a, b} vertex joined
// with multiplicity |I_i| - s_i - 1; binomial is C(r - 1, |I_1| - s_1 - 2).
CutStep multi_edge_cut(const LoadedTree& tree, std::size_t edge);

// An edge whose cut leaves a star component (topology only). Throws TooSmall
// for trees with fewer than three vertices.
std::size_t find_star_cut(const LoadedTree& tree);

// Multinomial of the center weight over the edge weights for a star whose
// leaves have weight zero (two-vertex trees allowed). Throws NotSunLike.
Integer sun_like_value(const LoadedTree& tree);

// Signed value of a proper loaded tree via single-edge cuts, leaf cuts,
// star-cuts and sun-like base cases. Throws InvalidTree for invalid input.
Integer oracle_eval(const LoadedTree& tree, const TraceSink& trace = {});

}  // namespace m0n::oracle

#endif  // M0N_ORACLE_HPP_
