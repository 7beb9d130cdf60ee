#ifndef M0N_LABEL_SET_HPP_
#define M0N_LABEL_SET_HPP_

#include <initializer_list>
#include <string>
#include <vector>

namespace m0n {

using Label = int;

// Finite set of positive labels, stored sorted and duplicate-free.
class LabelSet {
 public:
  using const_iterator = std::vector<Label>::const_iterator;

  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);
  explicit LabelSet(std::vector<Label> labels);

  // {first, first+1, ..., last}; empty when last < first.
  static LabelSet range(Label first, Label last);

  bool contains(Label label) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Label min() const { return members_.front(); }
  Label max() const { return members_.back(); }

  bool intersects(const LabelSet& other) const;
  bool is_subset_of(const LabelSet& other) const;
  bool is_strict_subset_of(const LabelSet& other) const {
    return size() < other.size() && is_subset_of(other);
  }

  LabelSet unite(const LabelSet& other) const;
  LabelSet intersect(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  const std::vector<Label>& members() const { return members_; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  // Lexicographic on the sorted member sequence.
  friend bool operator<(const LabelSet& a, const LabelSet& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<Label> members_;
};

// "{1,2,3}", or "{}" for the empty set.
std::string to_string(const LabelSet& set);

}  // namespace m0n

#endif  // M0N_LABEL_SET_HPP_
