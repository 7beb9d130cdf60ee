#include "m0n/serialize.hpp"

#include <sstream>

#include "m0n/error.hpp"

namespace m0n {

namespace {

Json labels_json(const LabelSet& labels) {
  Json out = Json::array();
  for (Label l : labels) out.push_back(l);
  return out;
}

void append_redundancy(Json& vertices, Json& edges, const RedundancyTree& tree) {
  auto id = [&tree](std::size_t v) { return tree.source.empty() ? v : tree.source[v]; };
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    vertices.push_back({{"id", id(v)},
                        {"labels", labels_json(v < tree.labels.size() ? tree.labels[v] : LabelSet{})},
                        {"weight", tree.weights[v]}});
  }
  for (const auto& [a, b] : tree.edges) edges.push_back({{"u", id(a)}, {"v", id(b)}});
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void redundancy_dot(std::ostringstream& out, const RedundancyTree& tree) {
  auto id = [&tree](std::size_t v) { return tree.source.empty() ? v : tree.source[v]; };
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    std::string label = "w=" + std::to_string(tree.weights[v]);
    if (tree.origins[v] != Origin::FromEdge && v < tree.labels.size()) {
      label = to_string(tree.labels[v]) + "\\n" + label;
    }
    out << "  r" << id(v) << " [label=" << quote(label)
        << (tree.origins[v] == Origin::FromEdge ? ", shape=box" : "") << "];\n";
  }
  for (const auto& [a, b] : tree.edges) out << "  r" << id(a) << " -- r" << id(b) << ";\n";
}

}  // namespace

Json to_json(const LoadedTree& tree) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    vertices.push_back({{"id", v}, {"labels", labels_json(tree.labels[v])}});
  }
  Json edges = Json::array();
  for (const auto& e : tree.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"multiplicity", e.multiplicity}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const WeightedTree& tree) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < tree.vertex_weights.size(); ++v) {
    vertices.push_back({{"id", v},
                        {"labels", labels_json(v < tree.labels.size() ? tree.labels[v] : LabelSet{})},
                        {"weight", tree.vertex_weights[v]}});
  }
  Json edges = Json::array();
  for (const auto& e : tree.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const RedundancyTree& tree) {
  Json vertices = Json::array();
  Json edges = Json::array();
  append_redundancy(vertices, edges, tree);
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const RedundancyForest& forest) {
  Json vertices = Json::array();
  Json edges = Json::array();
  for (const auto& tree : forest.trees) append_redundancy(vertices, edges, tree);
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const TraceEvent& event) {
  Json out;
  out["stage"] = event.stage;
  out["structure"] = std::visit(
      [](const auto& s) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, std::monostate>) {
          return nullptr;
        } else {
          return to_json(s);
        }
      },
      event.structure);
  if (event.binomial) out["binomial"] = {event.binomial->first, event.binomial->second};
  return out;
}

LoadedTree loaded_tree_from_json(const Json& json) {
  try {
    LoadedTree tree;
    const auto& vertices = json.at("vertices");
    tree.labels.resize(vertices.size());
    for (const auto& v : vertices) {
      const auto id = v.at("id").get<std::size_t>();
      if (id >= vertices.size()) {
        throw Error(ErrorCode::InvalidTree, "vertex id " + std::to_string(id) + " out of range");
      }
      tree.labels[id] = LabelSet(v.at("labels").get<std::vector<Label>>());
      if (!tree.labels[id].empty()) tree.n = std::max(tree.n, tree.labels[id].max());
    }
    for (const auto& e : json.at("edges")) {
      tree.edges.push_back({e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(),
                            e.value("multiplicity", std::int64_t{1})});
    }
    return tree;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidTree, std::string("malformed tree JSON: ") + e.what());
  }
}

std::string to_dot(const LoadedTree& tree) {
  std::ostringstream out;
  out << "graph loaded_tree {\n";
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    out << "  v" << v << " [label=" << quote(to_string(tree.labels[v])) << "];\n";
  }
  for (const auto& e : tree.edges) {
    out << "  v" << e.u << " -- v" << e.v << " [label=" << quote(std::to_string(e.multiplicity))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const WeightedTree& tree) {
  std::ostringstream out;
  out << "graph weighted_tree {\n";
  for (std::size_t v = 0; v < tree.vertex_weights.size(); ++v) {
    std::string label = "w=" + std::to_string(tree.vertex_weights[v]);
    if (v < tree.labels.size()) label = to_string(tree.labels[v]) + "\\n" + label;
    out << "  v" << v << " [label=" << quote(label) << "];\n";
  }
  for (const auto& e : tree.edges) {
    out << "  v" << e.u << " -- v" << e.v << " [label=" << quote("w=" + std::to_string(e.weight))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const RedundancyTree& tree) {
  std::ostringstream out;
  out << "graph redundancy_tree {\n";
  redundancy_dot(out, tree);
  out << "}\n";
  return out.str();
}

std::string to_dot(const RedundancyForest& forest) {
  std::ostringstream out;
  out << "graph redundancy_forest {\n";
  for (std::size_t i = 0; i < forest.trees.size(); ++i) {
    out << " subgraph cluster_" << i << " {\n";
    redundancy_dot(out, forest.trees[i]);
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace m0n
