#ifndef ORE_SRC_INTEGER_FACTOR_HPP
#define ORE_SRC_INTEGER_FACTOR_HPP

#include "ore/rational.hpp"

#include <vector>

namespace ore::detail {

/// All positive divisors of n > 0, ascending.
std::vector<Integer> divisors(const Integer& n);

}  // namespace ore::detail

#endif  // ORE_SRC_INTEGER_FACTOR_HPP
