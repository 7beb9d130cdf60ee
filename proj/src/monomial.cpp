#include "m0n/monomial.hpp"

#include <vector>

#include "m0n/error.hpp"

namespace m0n {

Monomial::Monomial(int n) : ambient_(n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "monomials need n >= 3");
}

Monomial& Monomial::multiply(const Cut& cut, std::int64_t exponent) {
  if (cut.ambient() != ambient_) {
    throw Error(ErrorCode::AmbientMismatch,
                "cut " + to_string(cut) + " is not a cut of {1.." + std::to_string(ambient_) + "}");
  }
  if (exponent < 1) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  factors_[cut] += exponent;
  return *this;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& [cut, e] : factors_) d += e;
  return d;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::ZeroByKeel: return "ZeroByKeel";
    case Classification::Clever: return "Clever";
    case Classification::TreeMonomial: return "TreeMonomial";
    case Classification::DegreeMismatch: return "DegreeMismatch";
  }
  return "Unknown";
}

bool is_tree_monomial(const Monomial& m) {
  std::vector<const Cut*> cuts;
  for (const auto& [cut, e] : m.factors()) cuts.push_back(&cut);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (crosses(*cuts[i], *cuts[j])) return false;
    }
  }
  return true;
}

Classification classify(const Monomial& m) {
  if (m.degree() != m.ambient() - 3) return Classification::DegreeMismatch;
  if (!is_tree_monomial(m)) return Classification::ZeroByKeel;
  for (const auto& [cut, e] : m.factors()) {
    if (e != 1) return Classification::TreeMonomial;
  }
  return Classification::Clever;
}

}  // namespace m0n
