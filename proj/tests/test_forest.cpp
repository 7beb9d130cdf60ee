#include <random>
#include <set>

#include "doctest.h"
#include "m0n/error.hpp"
#include "m0n/expression.hpp"
#include "m0n/forest.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/psi_oracle.hpp"

using namespace m0n;

namespace {

RedundancyTree path(std::vector<std::int64_t> weights) {
  RedundancyTree t;
  t.weights = std::move(weights);
  for (std::size_t i = 0; i < t.weights.size(); ++i) {
    t.origins.push_back(i % 2 == 0 ? Origin::FromVertex : Origin::FromEdge);
    t.source.push_back(i);
    if (i > 0) t.edges.emplace_back(i - 1, i);
  }
  return t;
}

std::vector<std::pair<int, int>> int_edges(const RedundancyTree& t) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : t.edges) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

std::multiset<std::int64_t> vertex_weights(const WeightedTree& w) {
  return {w.vertex_weights.begin(), w.vertex_weights.end()};
}

std::multiset<std::int64_t> edge_weights(const WeightedTree& w) {
  std::multiset<std::int64_t> out;
  for (const auto& e : w.edges) out.insert(e.weight);
  return out;
}

// Random tree with random small weights, not necessarily from a loaded tree.
RedundancyTree random_redundancy_tree(std::mt19937_64& rng) {
  RedundancyTree t;
  const std::size_t nv = 1 + rng() % 12;
  for (std::size_t v = 0; v < nv; ++v) {
    t.weights.push_back(static_cast<std::int64_t>(rng() % 6));
    t.origins.push_back(Origin::FromVertex);
    t.source.push_back(v);
    if (v > 0) t.edges.emplace_back(rng() % v, v);
  }
  return t;
}

}  // namespace

TEST_CASE("brute-force leaf elimination freezes the path values") {
  // Every elimination order of the definition gives the same value.
  CHECK(testing::all_elimination_values({1, 2, 1}, {{0, 1}, {1, 2}}) == std::set<Integer>{2});
  CHECK(testing::all_elimination_values({1, 4, 4, 2, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}) ==
        std::set<Integer>{32});
  CHECK(testing::all_elimination_values({1, 1}, {{0, 1}}) == std::set<Integer>{1});
}

TEST_CASE("to_weighted: examples") {
  const WeightedTree nine = to_weighted(fixtures::example_nine_tree());
  CHECK(nine.vertex_weights == std::vector<std::int64_t>{1, 1, 0, 0, 0});
  CHECK(edge_weights(nine) == std::multiset<std::int64_t>{2, 0, 0, 0});
  CHECK(nine.edges[0].weight == 2);

  const WeightedTree fig3 = to_weighted(fixtures::minus_thirty_two_tree());
  CHECK(vertex_weights(fig3) == std::multiset<std::int64_t>{1, 1, 4, 0, 1});
  CHECK(edge_weights(fig3) == std::multiset<std::int64_t>{2, 4, 0, 1});
  CHECK(fig3.vertex_weight_sum() == 7);
  CHECK(fig3.edge_weight_sum() == 7);

  const WeightedTree single = to_weighted(LoadedTree{3, {LabelSet{1, 2, 3}}, {}});
  CHECK(single.vertex_weights == std::vector<std::int64_t>{0});
  CHECK(single.edges.empty());
}

TEST_CASE("sign_of: examples") {
  CHECK(sign_of(to_weighted(fixtures::minus_thirty_two_tree())) == -1);
  CHECK(sign_of(to_weighted(fixtures::example_nine_tree())) == 1);
  CHECK(sign_of(to_weighted(fixtures::figure_one_left())) == 1);
  // Not proper: degree 4 on six labels.
  CHECK_THROWS_WITH_AS(sign_of(to_weighted(fixtures::figure_one_right())),
                       doctest::Contains("WeightIdentityViolation"), Error);
}

TEST_CASE("weight identity holds for every proper tree") {
  for (int n = 3; n <= 14; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const WeightedTree w = to_weighted(random_proper_tree(n, seed));
      CHECK(w.vertex_weight_sum() == w.edge_weight_sum());
      for (auto x : w.vertex_weights) CHECK(x >= 0);
    }
  }
}

TEST_CASE("to_redundancy: subdivision") {
  const WeightedTree uv{{1, 1}, {{0, 1, 2}}, {}};
  const RedundancyTree r = to_redundancy(uv);
  CHECK(r.weights == std::vector<std::int64_t>{1, 1, 2});
  CHECK(r.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {2, 1}});
  CHECK(r.origins == std::vector<Origin>{Origin::FromLeafVertex, Origin::FromLeafVertex,
                                         Origin::FromEdge});

  const RedundancyTree nine = to_redundancy(to_weighted(fixtures::example_nine_tree()));
  CHECK(nine.vertex_count() == 9);
  CHECK(nine.edges.size() == 8);
  CHECK(nine.weights == std::vector<std::int64_t>{1, 1, 0, 0, 0, 2, 0, 0, 0});
  CHECK(nine.origins[2] == Origin::FromVertex);
  CHECK(nine.origins[3] == Origin::FromLeafVertex);
  CHECK(nine.origins[5] == Origin::FromEdge);
}

TEST_CASE("prune: examples") {
  const LoadedTree clever = monomial_to_tree(parse_monomial("n=5; d(1,2|3,4,5) * d(1,2,3|4,5)"));
  CHECK(prune(to_redundancy(to_weighted(clever))).trees.empty());

  const RedundancyForest nine = prune(to_redundancy(to_weighted(fixtures::example_nine_tree())));
  REQUIRE(nine.trees.size() == 1);
  const RedundancyTree& p = nine.trees[0];
  CHECK(p.source == std::vector<std::size_t>{0, 1, 5});
  CHECK(p.weights == std::vector<std::int64_t>{1, 1, 2});
  CHECK(p.edges.size() == 2);
  CHECK(testing::all_elimination_values(p.weights, int_edges(p)) == std::set<Integer>{2});

  const RedundancyForest fig4 =
      prune(to_redundancy(to_weighted(fixtures::minus_thirty_two_tree())));
  REQUIRE(fig4.trees.size() == 2);
  std::multiset<std::size_t> sizes{fig4.trees[0].vertex_count(), fig4.trees[1].vertex_count()};
  CHECK(sizes == std::multiset<std::size_t>{2, 5});
}

TEST_CASE("eval_redundancy_tree: examples") {
  CHECK(eval_redundancy_tree(path({1, 2, 1})) == 2);
  CHECK(eval_redundancy_tree(path({1, 4, 4, 2, 1})) == 32);
  CHECK(eval_redundancy_tree(path({2, 1})) == 0);
  CHECK(eval_redundancy_tree(path({0})) == 1);
  CHECK(eval_redundancy_tree(path({3})) == 0);
  CHECK(eval_redundancy_tree(RedundancyTree{}) == 1);
}

TEST_CASE("eval_redundancy_tree: agrees with exhaustive elimination") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    RedundancyTree t = random_redundancy_tree(rng);
    if (t.vertex_count() > 7) continue;
    const auto values = testing::all_elimination_values(t.weights, int_edges(t));
    // Orders reaching an exceeding leaf stop early; the definition is
    // confluent, so at most one distinct value appears.
    REQUIRE(values.size() == 1);
    CHECK(eval_redundancy_tree(t) == *values.begin());
  }
}

TEST_CASE("eval_redundancy_tree: random leaf orders agree") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const RedundancyTree t = random_redundancy_tree(rng);
    const Integer expected = eval_redundancy_tree(t);
    for (int k = 0; k < 10; ++k) CHECK(eval_redundancy_tree(t, rng) == expected);
  }
}

TEST_CASE("eval_forest: examples") {
  CHECK(eval_forest(RedundancyForest{}) == 1);
  CHECK(eval_forest(RedundancyForest{{path({1, 1}), path({1, 4, 4, 2, 1})}}) == 32);
  CHECK(eval_forest(RedundancyForest{{path({1, 2, 1}), path({5})}}) == 0);
}

TEST_CASE("eval: examples") {
  CHECK(eval(parse_monomial("n=5; d(1,2|3,4,5) * d(1,4|2,3,5)")) == 0);
  CHECK(eval(parse_monomial(fixtures::kExampleNine)) == 2);
  CHECK(eval(Monomial(3)) == 1);
  CHECK(eval_tree(fixtures::minus_thirty_two_tree()) == -32);
  CHECK(eval(tree_to_monomial(fixtures::minus_thirty_two_tree())) == -32);
  CHECK(eval(parse_monomial("n=5; d(1,2|3,4,5)^2")) == -1);
  CHECK(eval(parse_monomial("n=6; d(1,2|3,4,5,6)")) == 0);
  CHECK(eval_tree(LoadedTree{4, {LabelSet{1, 2, 3, 4}}, {}}) == 0);
}

TEST_CASE("eval: trace records every stage and elimination") {
  std::vector<std::string> stages;
  std::vector<std::pair<std::int64_t, std::int64_t>> binomials;
  eval(parse_monomial(fixtures::kExampleNine), [&](const TraceEvent& e) {
    stages.push_back(e.stage);
    if (e.binomial) binomials.push_back(*e.binomial);
  });
  CHECK(stages == std::vector<std::string>{"classify:TreeMonomial", "loaded_tree",
                                           "weighted_tree", "redundancy_tree",
                                           "redundancy_forest", "eliminate", "eliminate"});
  CHECK(binomials == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {1, 1}});
}

TEST_CASE("eval agrees with the psi-class enumeration, and the sign law holds") {
  for (int n = 3; n <= 11; ++n) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const LoadedTree t = random_proper_tree(n, seed);
      const Integer value = eval_tree(t);
      CHECK(value == testing::psi_oracle(t));
      if (value != 0) CHECK((value > 0 ? 1 : -1) == sign_of(to_weighted(t)));
    }
  }
}

TEST_CASE("evaluation scales to large trees") {
  // Path of k+1 vertices with two labels inside and three at the ends, all
  // edges of multiplicity 2 except one of multiplicity 3.
  const std::size_t k = 20000;
  LoadedTree t;
  t.n = static_cast<int>(2 * k + 4);
  Label next = 1;
  for (std::size_t v = 0; v <= k; ++v) {
    const int count = (v == 0 || v == k) ? 3 : 2;
    std::vector<Label> h;
    for (int i = 0; i < count; ++i) h.push_back(next++);
    t.labels.emplace_back(std::move(h));
    if (v > 0) t.edges.push_back({v - 1, v, 2});
  }
  t.edges[k / 2].multiplicity = 3;
  REQUIRE(t.is_proper());
  CHECK(eval_tree(t) != 0);
}
