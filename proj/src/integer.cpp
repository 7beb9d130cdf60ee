#include "m0n/integer.hpp"

#include <algorithm>
#include <numeric>

namespace m0n {

Integer binomial(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  const std::int64_t k = std::min(bottom, top - bottom);
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Exact: result is C(top - k + i - 1, i - 1) here.
    result *= top - k + i;
    result /= i;
  }
  return result;
}

Integer multinomial(std::int64_t total, std::span<const std::int64_t> parts) {
  std::int64_t remaining = total;
  std::vector<Integer> factors;
  factors.reserve(parts.size());
  for (std::int64_t part : parts) {
    if (part < 0 || part > remaining) return 0;
    factors.push_back(binomial(remaining, part));
    remaining -= part;
  }
  if (remaining != 0) return 0;
  return product(std::move(factors));
}

Integer product(std::vector<Integer> factors) {
  if (factors.empty()) return 1;
  for (const auto& f : factors) {
    if (f == 0) return 0;
  }
  std::erase_if(factors, [](const Integer& f) { return f == 1; });
  while (factors.size() > 1) {
    std::vector<Integer> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
      next.push_back(factors[i] * factors[i + 1]);
    }
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return factors.empty() ? Integer(1) : factors.front();
}

}  // namespace m0n
