#pragma once

// Canonical enumeration of the hyperoctahedral group W = S_n x {1,-1}^n
// (2^n n! signed permutations): permutations in lexicographic one-line
// order, sign vectors as binary counters, identity first.

#include <vector>

#include "toda/types.hpp"

namespace toda {

std::vector<SignedPermutation> group_enumerate(int n);

}  // namespace toda
