#ifndef M0N_TESTS_FIXTURES_HPP_
#define M0N_TESTS_FIXTURES_HPP_

#include <string>

#include "m0n/loaded_tree.hpp"

namespace m0n::fixtures {

inline const std::string kExampleNine =
    "n=9; d(1,2,3|4,5,6,7,8,9)^3 * d(1,2,3,4,5|6,7,8,9) * d(1,2,3,4,5,8,9|6,7) * "
    "d(1,2,3,4,5,6,7|8,9)";

// {1,2,3} -3- {4,5} -1- {} with pendants {6,7} and {8,9}.
inline LoadedTree example_nine_tree() {
  return {9,
          {LabelSet{1, 2, 3}, LabelSet{4, 5}, LabelSet{}, LabelSet{6, 7}, LabelSet{8, 9}},
          {{0, 1, 3}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}}};
}

// Path {1,2} - {3} - {4,5}.
inline LoadedTree figure_one_left() {
  return {5, {LabelSet{1, 2}, LabelSet{3}, LabelSet{4, 5}}, {{0, 1, 1}, {1, 2, 1}}};
}

// Star on an unlabeled center with pendants {1,2}, {3,4}, {5,6}.
inline LoadedTree figure_one_right() {
  return {6,
          {LabelSet{}, LabelSet{1, 2}, LabelSet{3, 4}, LabelSet{5, 6}},
          {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}}};
}

// 14 labels, 11 edges; vertex weights 1,4,1,0,1 and edge weights 4,2,0,1 so
// that the redundancy forest is {path(1,1), path(1,4,4,2,1)}.
inline LoadedTree minus_thirty_two_tree() {
  return {14,
          {LabelSet{1, 2, 3}, LabelSet{4, 5, 6, 7, 8}, LabelSet{9, 10}, LabelSet{11},
           LabelSet{12, 13, 14}},
          {{0, 1, 5}, {1, 2, 3}, {2, 3, 1}, {3, 4, 2}}};
}

}  // namespace m0n::fixtures

#endif  // M0N_TESTS_FIXTURES_HPP_
