#ifndef M0N_SERIALIZE_HPP_
#define M0N_SERIALIZE_HPP_

#include <string>

#include "json.hpp"

#include "m0n/forest.hpp"
#include "m0n/loaded_tree.hpp"
#include "m0n/oracle.hpp"

namespace m0n {

using Json = nlohmann::ordered_json;

// {vertices: [{id, labels, weight?}], edges: [{u, v, multiplicity?, weight?}]}
// Forest vertex ids are the redundancy-tree ids, so they are unique across
// components.
Json to_json(const LoadedTree& tree);
Json to_json(const WeightedTree& tree);
Json to_json(const RedundancyTree& tree);
Json to_json(const RedundancyForest& forest);

// {stage, structure, binomial?}
Json to_json(const TraceEvent& event);

// Inverse of to_json(const LoadedTree&); n is the largest label.
LoadedTree loaded_tree_from_json(const Json& json);

std::string to_dot(const LoadedTree& tree);
std::string to_dot(const WeightedTree& tree);
std::string to_dot(const RedundancyTree& tree);
std::string to_dot(const RedundancyForest& forest);

}  // namespace m0n

#endif  // M0N_SERIALIZE_HPP_
