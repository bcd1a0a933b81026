#include "toda/cone.hpp"

#include <algorithm>

#include "toda/types.hpp"

namespace toda {

namespace {

// The partial sums s_k = nu_1 + ... + nu_k put the level-m slice of the cone
// in bijection with compositions of m into n nonnegative parts:
// <nu,rho> = s_1 + ... + s_n.  Enumerate compositions, map back, sort lex.
void compositions(int n, int m, std::vector<int>& s, size_t pos,
                  std::vector<std::vector<int>>& out) {
    if (pos + 1 == size_t(n)) {
        s[pos] = m;
        std::vector<int> nu(static_cast<size_t>(n));
        nu[0] = s[0];
        for (size_t k = 1; k < size_t(n); ++k) nu[k] = s[k] - s[k - 1];
        out.push_back(std::move(nu));
        return;
    }
    for (int v = 0; v <= m; ++v) {
        s[pos] = v;
        compositions(n, m - v, s, pos + 1, out);
    }
}

}  // namespace

ConeTable::ConeTable(int n, int max_level) : n_(n), max_level_(max_level) {
    levels_.resize(size_t(max_level) + 1);
    offsets_.resize(size_t(max_level) + 2);
    for (int m = 0; m <= max_level; ++m) {
        std::vector<std::vector<int>> lvl;
        std::vector<int> s(static_cast<size_t>(n));
        compositions(n, m, s, 0, lvl);
        std::sort(lvl.begin(), lvl.end());
        offsets_[size_t(m)] = flat_.size();
        for (auto& nu : lvl) {
            flat_.push_back(nu);
            level_of_.push_back(m);
        }
        levels_[size_t(m)] = std::move(lvl);
    }
    offsets_[size_t(max_level) + 1] = flat_.size();
}

std::size_t ConeTable::index_of(const std::vector<int>& nu) const {
    if (!is_dominant(nu)) return npos;
    const int m = cone_level(nu);
    if (m < 0 || m > max_level_) return npos;
    const auto& lvl = levels_[size_t(m)];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), nu);
    if (it == lvl.end() || *it != nu) return npos;
    return offsets_[size_t(m)] + std::size_t(it - lvl.begin());
}

}  // namespace toda
