#ifndef M0N_INTEGER_HPP_
#define M0N_INTEGER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace m0n {

using Integer = boost::multiprecision::cpp_int;

// C(top, bottom); zero whenever bottom < 0, bottom > top or top < 0.
Integer binomial(std::int64_t top, std::int64_t bottom);

// total! / (parts[0]! ... parts[k-1]!) if the parts are nonnegative and sum to
// total, zero otherwise.
Integer multinomial(std::int64_t total, std::span<const std::int64_t> parts);

// Product of all factors, multiplied pairwise so that long products of small
// numbers stay close to linear cost. Empty product is 1.
Integer product(std::vector<Integer> factors);

}  // namespace m0n

#endif  // M0N_INTEGER_HPP_
