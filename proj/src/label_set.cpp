#include "m0n/label_set.hpp"

#include <algorithm>
#include <iterator>

namespace m0n {

LabelSet::LabelSet(std::initializer_list<Label> labels)
    : LabelSet(std::vector<Label>(labels)) {}

LabelSet::LabelSet(std::vector<Label> labels) : members_(std::move(labels)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

LabelSet LabelSet::range(Label first, Label last) {
  LabelSet out;
  for (Label l = first; l <= last; ++l) out.members_.push_back(l);
  return out;
}

bool LabelSet::contains(Label label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

bool LabelSet::intersects(const LabelSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

LabelSet LabelSet::unite(const LabelSet& other) const {
  LabelSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

LabelSet LabelSet::intersect(const LabelSet& other) const {
  LabelSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  LabelSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

std::string to_string(const LabelSet& set) {
  std::string out = "{";
  bool first = true;
  for (Label l : set) {
    if (!first) out += ',';
    out += std::to_string(l);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace m0n
