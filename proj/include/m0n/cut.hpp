#ifndef M0N_CUT_HPP_
#define M0N_CUT_HPP_

#include <string>

#include "m0n/label_set.hpp"

namespace m0n {

// A bipartition {I, J} of {1..n} with |I|, |J| >= 2, i.e. the index of one
// boundary generator. Stored with the part containing label 1 first, so two
// cuts are equal exactly when they denote the same generator.
class Cut {
 public:
  const LabelSet& first() const { return first_; }
  const LabelSet& second() const { return second_; }
  int ambient() const { return ambient_; }

  friend bool operator==(const Cut&, const Cut&) = default;
  friend bool operator<(const Cut& a, const Cut& b);

 private:
  friend Cut canonicalize_cut(LabelSet, LabelSet, int);
  Cut(LabelSet first, LabelSet second, int ambient)
      : first_(std::move(first)), second_(std::move(second)), ambient_(ambient) {}

  LabelSet first_;
  LabelSet second_;
  int ambient_ = 0;
};

// Throws PartTooSmall or NotAPartition.
Cut canonicalize_cut(LabelSet a, LabelSet b, int n);

// The cut {part, N \ part}.
Cut cut_from_part(const LabelSet& part, int n);

// Keel's quadratic relation: all four pairwise part intersections nonempty.
// Throws AmbientMismatch when the cuts live on different label sets.
bool crosses(const Cut& a, const Cut& b);

// "1,2|3,4,5"
std::string to_string(const Cut& cut);

}  // namespace m0n

#endif  // M0N_CUT_HPP_
