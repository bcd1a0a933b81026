#pragma once

// Enumeration of the dominant cone {nu in Z^n : nu_1 + ... + nu_k >= 0}
// graded by the level <nu, rho>, rho = (n, n-1, ..., 1).  Level m holds
// exactly binomial(n+m-1, m) vectors; within a level the order is
// lexicographic so sums over the cone are reproducible bit for bit.

#include <cstddef>
#include <vector>

namespace toda {

class ConeTable {
  public:
    ConeTable(int n, int max_level);

    int dim() const { return n_; }
    int max_level() const { return max_level_; }
    std::size_t size() const { return flat_.size(); }

    const std::vector<std::vector<int>>& level(int m) const { return levels_[size_t(m)]; }
    const std::vector<int>& at(std::size_t flat_index) const { return flat_[flat_index]; }
    int level_of_index(std::size_t flat_index) const { return level_of_[flat_index]; }
    std::size_t level_offset(int m) const { return offsets_[size_t(m)]; }

    // Flat index of nu, or npos when nu is out of range or not dominant.
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t index_of(const std::vector<int>& nu) const;

  private:
    int n_;
    int max_level_;
    std::vector<std::vector<std::vector<int>>> levels_;
    std::vector<std::vector<int>> flat_;
    std::vector<int> level_of_;
    std::vector<std::size_t> offsets_;
};

}  // namespace toda
