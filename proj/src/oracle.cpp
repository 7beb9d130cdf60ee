#include "m0n/oracle.hpp"

#include "m0n/error.hpp"

namespace m0n::oracle {

std::string_view to_string(CutKind kind) {
  switch (kind) {
    case CutKind::SingleEdge: return "single_edge";
    case CutKind::MultiEdge: return "multi_edge";
    case CutKind::StarCut: return "star_cut";
  }
  return "unknown";
}

namespace {

// Vertices with side[v] == keep, renumbered in id order. `anchor` is the new id
// of the old vertex `endpoint`.
struct Component {
  LoadedTree tree;
  std::size_t anchor = 0;
  LabelSet labels;
  std::int64_t multiplicity = 0;
};

Component extract(const LoadedTree& tree, const std::vector<bool>& side, bool keep,
                  std::size_t endpoint) {
  Component out;
  out.tree.n = tree.n;
  std::vector<std::size_t> renumber(tree.vertex_count(), tree.vertex_count());
  std::vector<Label> labels;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (side[v] != keep) continue;
    renumber[v] = out.tree.labels.size();
    out.tree.labels.push_back(tree.labels[v]);
    labels.insert(labels.end(), tree.labels[v].begin(), tree.labels[v].end());
  }
  for (const auto& e : tree.edges) {
    if (side[e.u] == keep && side[e.v] == keep) {
      out.tree.edges.push_back({renumber[e.u], renumber[e.v], e.multiplicity});
      out.multiplicity += e.multiplicity;
    }
  }
  out.anchor = renumber[endpoint];
  out.labels = LabelSet(std::move(labels));
  return out;
}

std::vector<std::int64_t> vertex_weights(const LoadedTree& tree) {
  const auto deg = tree.degrees();
  std::vector<std::int64_t> w(tree.vertex_count());
  for (std::size_t v = 0; v < w.size(); ++v) {
    w[v] = static_cast<std::int64_t>(deg[v] + tree.labels[v].size()) - 3;
  }
  return w;
}

void emit(const TraceSink& trace, const CutStep& step, const LoadedTree& tree) {
  if (!trace) return;
  const std::int64_t bottom = static_cast<std::int64_t>(step.side1.size()) - step.s1 - 2;
  trace({std::string(to_string(step.kind)), tree,
         step.kind == CutKind::SingleEdge ? std::nullopt
                                          : std::optional{std::pair{step.r - 1, bottom}}});
}

Integer absolute_value(const LoadedTree& tree, const TraceSink& trace);

Integer apply(const CutStep& step, const LoadedTree& tree, const TraceSink& trace) {
  emit(trace, step, tree);
  if (!step.children) return 0;
  Integer first = absolute_value(step.children->first, trace);
  if (first == 0) return 0;
  return step.binomial * first * absolute_value(step.children->second, trace);
}

Integer absolute_value(const LoadedTree& tree, const TraceSink& trace) {
  if (!tree.is_proper()) {
    if (trace) trace({"not_proper", tree, std::nullopt});
    return 0;
  }
  const std::size_t nv = tree.vertex_count();
  if (nv == 1) {
    if (trace) trace({"single_vertex", tree, std::nullopt});
    return tree.labels[0].size() == 3 ? 1 : 0;
  }

  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    if (tree.edges[e].multiplicity == 1) return apply(single_edge_cut(tree, e), tree, trace);
  }

  const auto weight = vertex_weights(tree);
  if (nv == 2) {
    if (weight[0] == 0 || weight[1] == 0) {
      if (trace) trace({"sun_like", tree, std::nullopt});
      return sun_like_value(tree);
    }
    return apply(multi_edge_cut(tree, 0), tree, trace);
  }

  const auto deg = tree.degrees();
  const auto inc = tree.incidence();
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] == 1 && weight[v] > 0) return apply(multi_edge_cut(tree, inc[v][0]), tree, trace);
  }

  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] + 1 == nv) {
      if (trace) trace({"sun_like", tree, std::nullopt});
      return sun_like_value(tree);
    }
  }

  CutStep step = multi_edge_cut(tree, find_star_cut(tree));
  step.kind = CutKind::StarCut;
  return apply(step, tree, trace);
}

}  // namespace

CutStep single_edge_cut(const LoadedTree& tree, std::size_t edge) {
  const TreeEdge& cut = tree.edges.at(edge);
  if (cut.multiplicity != 1) {
    throw Error(ErrorCode::NotSingleEdge,
                "edge " + std::to_string(edge) + " has multiplicity " +
                    std::to_string(cut.multiplicity));
  }
  const AuxLabels aux = AuxLabels::above(tree.n);
  const auto side = side_of(tree, edge);
  Component first = extract(tree, side, true, cut.u);
  Component second = extract(tree, side, false, cut.v);
  first.tree.labels[first.anchor] = first.tree.labels[first.anchor].unite({aux.x});
  second.tree.labels[second.anchor] = second.tree.labels[second.anchor].unite({aux.x});

  CutStep step;
  step.edge = edge;
  step.kind = CutKind::SingleEdge;
  step.binomial = 1;
  step.r = 1;
  step.s1 = first.multiplicity;
  step.s2 = second.multiplicity;
  step.side1 = first.labels;
  step.side2 = second.labels;
  step.children.emplace(relabel_contiguous(first.tree), relabel_contiguous(second.tree));
  return step;
}

CutStep multi_edge_cut(const LoadedTree& tree, std::size_t edge) {
  const TreeEdge& cut = tree.edges.at(edge);
  const AuxLabels aux = AuxLabels::above(tree.n);
  const auto side = side_of(tree, edge);
  Component first = extract(tree, side, true, cut.u);
  Component second = extract(tree, side, false, cut.v);

  CutStep step;
  step.edge = edge;
  step.kind = CutKind::MultiEdge;
  step.r = cut.multiplicity;
  step.s1 = first.multiplicity;
  step.s2 = second.multiplicity;
  step.side1 = first.labels;
  step.side2 = second.labels;
  step.binomial =
      binomial(step.r - 1, static_cast<std::int64_t>(step.side1.size()) - step.s1 - 2);
  if (step.binomial == 0) return step;

  auto attach = [&aux](Component& c) {
    const std::size_t pendant = c.tree.labels.size();
    c.tree.labels.push_back(LabelSet{aux.a, aux.b});
    c.tree.edges.push_back(
        {c.anchor, pendant, static_cast<std::int64_t>(c.labels.size()) - c.multiplicity - 1});
    c.tree.n += 2;
  };
  attach(first);
  attach(second);
  step.children.emplace(relabel_contiguous(first.tree), relabel_contiguous(second.tree));
  return step;
}

std::size_t find_star_cut(const LoadedTree& tree) {
  const std::size_t nv = tree.vertex_count();
  if (nv < 3) {
    throw Error(ErrorCode::TooSmall, "star cuts need at least three vertices");
  }
  const auto deg = tree.degrees();
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] + 1 == nv) return 0;
  }
  // Strip the leaves; a leaf u of what remains is a support vertex whose edge
  // to its only non-leaf neighbour splits off u with its leaves.
  const auto inc = tree.incidence();
  for (std::size_t u = 0; u < nv; ++u) {
    if (deg[u] < 2) continue;
    std::size_t inner_edge = tree.edges.size();
    std::size_t inner_degree = 0;
    for (std::size_t e : inc[u]) {
      if (deg[tree.other_end(e, u)] >= 2) {
        ++inner_degree;
        inner_edge = e;
      }
    }
    if (inner_degree == 1) return inner_edge;
  }
  throw Error(ErrorCode::InvalidTree, "no star cut found; input is not a tree");
}

Integer sun_like_value(const LoadedTree& tree) {
  const std::size_t nv = tree.vertex_count();
  const auto weight = vertex_weights(tree);
  std::size_t center = nv;
  if (nv == 2) {
    if (weight[0] != 0 && weight[1] != 0) {
      throw Error(ErrorCode::NotSunLike, "both endpoints have nonzero weight");
    }
    center = weight[0] != 0 ? 0 : 1;
  } else if (nv >= 3) {
    const auto deg = tree.degrees();
    for (std::size_t v = 0; v < nv; ++v) {
      if (deg[v] + 1 == nv) center = v;
    }
  }
  if (center == nv) throw Error(ErrorCode::NotSunLike, "tree is not a star");
  for (std::size_t v = 0; v < nv; ++v) {
    if (v != center && weight[v] != 0) {
      throw Error(ErrorCode::NotSunLike, "leaf " + std::to_string(v) + " has nonzero weight");
    }
  }
  std::vector<std::int64_t> edge_weights;
  for (const auto& e : tree.edges) edge_weights.push_back(e.multiplicity - 1);
  return multinomial(weight[center], edge_weights);
}

Integer oracle_eval(const LoadedTree& tree, const TraceSink& trace) {
  require_valid(tree);
  if (!tree.is_proper()) return 0;
  std::int64_t edge_weight_sum = 0;
  for (const auto& e : tree.edges) edge_weight_sum += e.multiplicity - 1;
  Integer value = absolute_value(tree, trace);
  return edge_weight_sum % 2 == 0 ? value : Integer(-value);
}

}  // namespace m0n::oracle
