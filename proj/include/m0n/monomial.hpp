#ifndef M0N_MONOMIAL_HPP_
#define M0N_MONOMIAL_HPP_

#include <cstdint>
#include <map>
#include <string_view>

#include "m0n/cut.hpp"

namespace m0n {

// Product of boundary generators on {1..n}: distinct cuts with positive
// exponents. The factorless monomial is the empty monomial (value 1 iff n = 3).
class Monomial {
 public:
  using Factors = std::map<Cut, std::int64_t>;

  explicit Monomial(int n);

  // Multiplies by cut^exponent. Throws AmbientMismatch or InvalidArgument
  // (exponent < 1).
  Monomial& multiply(const Cut& cut, std::int64_t exponent = 1);

  int ambient() const { return ambient_; }
  const Factors& factors() const { return factors_; }
  std::int64_t degree() const;
  bool empty() const { return factors_.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int ambient_;
  Factors factors_;
};

enum class Classification { ZeroByKeel, Clever, TreeMonomial, DegreeMismatch };

std::string_view to_string(Classification c);

// Single pass over factor pairs. DegreeMismatch takes priority, then
// ZeroByKeel; Clever means distinct non-crossing factors of degree n - 3.
Classification classify(const Monomial& m);

// True when no two factors cross (degree is not checked).
bool is_tree_monomial(const Monomial& m);

}  // namespace m0n

#endif  // M0N_MONOMIAL_HPP_
