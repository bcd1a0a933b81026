#include "toda/group.hpp"

#include <algorithm>
#include <numeric>

namespace toda {

std::vector<SignedPermutation> group_enumerate(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPermutation w;
            w.sigma = sigma;
            w.eps.resize(size_t(n));
            for (int j = 0; j < n; ++j) w.eps[size_t(j)] = (mask >> j) & 1u ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace toda
