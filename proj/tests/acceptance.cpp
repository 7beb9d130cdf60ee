// Acceptance suite: one line per criterion, nonzero exit on any hard failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "m0n/expression.hpp"
#include "m0n/forest.hpp"
#include "m0n/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace m0n;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

void keel_vanishing() {
  const auto start = Clock::now();
  const Integer value = eval(parse_monomial("n=5; d(1,2|3,4,5)*d(1,4|2,3,5)"));
  const double ms = ms_since(start);
  report(1, value == 0 && ms < 10.0, "keel vanishing",
         fmt("value %s in %.3f ms (limit 10 ms)", value.str().c_str(), ms));
}

void clever_is_one() {
  const auto start = Clock::now();
  bool ok = true;
  std::string counts;
  const std::size_t expected[] = {15, 105, 945};
  for (int n = 5; n <= 7; ++n) {
    const auto monomials = testing::all_clever_monomials(n);
    ok = ok && monomials.size() == expected[n - 5];
    for (const Monomial& m : monomials) {
      const LoadedTree t = monomial_to_tree(m);
      const bool simple = std::all_of(t.edges.begin(), t.edges.end(),
                                      [](const TreeEdge& e) { return e.multiplicity == 1; });
      ok = ok && simple && t.is_proper() && eval(m) == 1 && eval_tree(t) == 1;
    }
    counts += fmt("%sn=%d: %zu", counts.empty() ? "" : ", ", n, monomials.size());
  }
  const double ms = ms_since(start);
  ok = ok && ms < 10000.0;
  report(2, ok, "clever monomials evaluate to 1",
         fmt("%s trees, %.1f ms (limit 10 s)", counts.c_str(), ms));
}

void worked_example() {
  const Monomial m = parse_monomial(fixtures::kExampleNine);
  const LoadedTree t = monomial_to_tree(m);
  const LoadedTree expected = fixtures::example_nine_tree();
  std::multiset<std::int64_t> mult;
  for (const auto& e : t.edges) mult.insert(e.multiplicity);
  const bool shape = t.vertex_count() == 5 && canonical_form(t) == canonical_form(expected) &&
                     mult == std::multiset<std::int64_t>{3, 1, 1, 1};
  const bool round_trip = tree_to_monomial(t) == m;
  const Integer forest = eval(m);
  const Integer oracle = oracle::oracle_eval(t);
  report(3, shape && round_trip && forest == 2 && oracle == 2, "nine-label round trip",
         fmt("tree %s, round trip %s, forest %s, oracle %s", shape ? "ok" : "wrong",
             round_trip ? "ok" : "wrong", forest.str().c_str(), oracle.str().c_str()));
}

void minus_thirty_two() {
  const LoadedTree t = fixtures::minus_thirty_two_tree();
  const WeightedTree w = to_weighted(t);
  std::multiset<std::int64_t> vw(w.vertex_weights.begin(), w.vertex_weights.end());
  std::multiset<std::int64_t> ew;
  for (const auto& e : w.edges) ew.insert(e.weight);
  const bool weights = t.n == 14 && t.is_proper() &&
                       vw == std::multiset<std::int64_t>{1, 1, 4, 0, 1} &&
                       ew == std::multiset<std::int64_t>{2, 4, 0, 1};
  const Integer forest = eval_tree(t);
  const Integer oracle = oracle::oracle_eval(t);
  report(4, weights && forest == -32 && oracle == -32, "fourteen-label fixture",
         fmt("weights %s, forest %s, oracle %s", weights ? "ok" : "wrong", forest.str().c_str(),
             oracle.str().c_str()));
}

// Criteria 5 and 7 share one sample.
void differential_and_sign_law() {
  const int samples = 10000;
  const auto start = Clock::now();
  int mismatches = 0;
  int identity_failures = 0;
  int sign_failures = 0;
  int nonzero = 0;
  for (int i = 0; i < samples; ++i) {
    const int n = 3 + i % 10;
    const LoadedTree t = random_proper_tree(n, static_cast<std::uint64_t>(i));
    const WeightedTree w = to_weighted(t);
    if (w.vertex_weight_sum() != w.edge_weight_sum()) ++identity_failures;
    const Integer forest = eval_tree(t);
    const Integer oracle = oracle::oracle_eval(t);
    if (forest != oracle) ++mismatches;
    if (forest != 0) {
      ++nonzero;
      const int expected = w.edge_weight_sum() % 2 == 0 ? 1 : -1;
      if ((forest > 0 ? 1 : -1) != expected) ++sign_failures;
    }
  }
  const double ms = ms_since(start);
  report(5, mismatches == 0 && ms < 60000.0, "forest equals oracle",
         fmt("%d trees (n=3..12, %d nonzero), %d mismatches, %.1f ms (limit 60 s)", samples,
             nonzero, mismatches, ms));
  report(7, identity_failures == 0 && sign_failures == 0, "weight identity and sign law",
         fmt("%d trees, %d identity violations, %d sign violations among %d nonzero values",
             samples, identity_failures, sign_failures, nonzero));
}

void confluence() {
  const int trees = 1000;
  const int orders = 20;
  std::mt19937_64 rng(2024);
  int disagreements = 0;
  int nonzero = 0;
  for (int i = 0; i < trees; ++i) {
    const int n = 5 + i % 12;
    const RedundancyTree r = to_redundancy(to_weighted(random_proper_tree(n, 900000 + i)));
    const Integer expected = eval_redundancy_tree(r);
    if (expected != 0) ++nonzero;
    for (int k = 0; k < orders; ++k) {
      if (eval_redundancy_tree(r, rng) != expected) ++disagreements;
    }
  }
  report(6, disagreements == 0, "leaf elimination order independence",
         fmt("%d trees x %d random orders (%d nonzero), %d disagreements", trees, orders,
             nonzero, disagreements));
}

void single_edge_multiplicativity() {
  int samples = 0;
  int failures_here = 0;
  int nonzero = 0;
  for (std::uint64_t seed = 0; samples < 2000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 11);
    const LoadedTree t = random_proper_tree(n, 500000 + seed);
    const auto it = std::find_if(t.edges.begin(), t.edges.end(),
                                 [](const TreeEdge& e) { return e.multiplicity == 1; });
    if (it == t.edges.end()) continue;
    const auto step = oracle::single_edge_cut(t, static_cast<std::size_t>(it - t.edges.begin()));
    const Integer whole = abs(eval_tree(t));
    const Integer parts =
        abs(eval_tree(step.children->first)) * abs(eval_tree(step.children->second));
    if (whole != parts) ++failures_here;
    if (whole != 0) ++nonzero;
    ++samples;
  }
  report(8, failures_here == 0, "single-edge cut multiplicativity",
         fmt("%d trees (%d nonzero), %d failures", samples, nonzero, failures_here));
}

void cut_contract() {
  int samples = 0;
  int failures_here = 0;
  int nonzero = 0;
  for (std::uint64_t seed = 0; samples < 2000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 11);
    const LoadedTree t = random_proper_tree(n, 700000 + seed);
    const Integer whole = eval_tree(t);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      const auto step = oracle::multi_edge_cut(t, e);
      const Integer rhs = step.children ? step.binomial * eval_tree(step.children->first) *
                                              eval_tree(step.children->second)
                                        : Integer(0);
      if (whole != rhs) ++failures_here;
      if (rhs != 0) ++nonzero;
      ++samples;
    }
  }
  report(9, failures_here == 0, "edge cut contract",
         fmt("%d (tree, edge) samples (%d nonzero), %d failures", samples, nonzero,
             failures_here));
}

// Path with k edges: end vertices carry three labels, inner vertices two, every
// edge multiplicity 2 except one of multiplicity 3.
LoadedTree scaling_path(std::size_t k) {
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
  return t;
}

void linear_scaling() {
  const std::size_t sizes[] = {1000, 10000, 100000};
  double times[3];
  bool nonzero = true;
  for (int i = 0; i < 3; ++i) {
    const LoadedTree t = scaling_path(sizes[i]);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      const Integer value = eval_tree(t);
      best = std::min(best, ms_since(start));
      nonzero = nonzero && value != 0;
    }
    times[i] = best;
  }
  // Least-squares fit of t = b * edges.
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += static_cast<double>(sizes[i]) * times[i];
    sxx += static_cast<double>(sizes[i]) * static_cast<double>(sizes[i]);
  }
  const double b = sxy / sxx;
  bool within = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const double fit = b * static_cast<double>(sizes[i]);
    const double ratio = times[i] / fit;
    within = within && ratio >= 0.5 && ratio <= 2.0;
    detail += fmt("%s%zu edges %.2f ms (fit %.2f, %.0f ns/edge)", detail.empty() ? "" : "; ",
                  sizes[i], times[i], fit, 1e6 * times[i] / static_cast<double>(sizes[i]));
  }
  // Soft criterion: reported, never counted as a failure.
  std::printf("[%s] 10 linear scaling (report only): %s\n",
              within && nonzero ? "PASS" : "WARN", detail.c_str());
}

}  // namespace

int main() {
  keel_vanishing();
  clever_is_one();
  worked_example();
  minus_thirty_two();
  differential_and_sign_law();
  confluence();
  single_edge_multiplicativity();
  cut_contract();
  linear_scaling();
  std::printf("%d hard failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
