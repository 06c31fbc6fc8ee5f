#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

namespace braidquot {

// All unordered pairs {i,j}, 1 <= i < j <= n, in lexicographic order.
std::vector<std::pair<int, int>> all_pairs(int n);

// Integer vector indexed by unordered pairs {i,j} of {1,...,n}.
// Used both for crossing numbers and for exponent vectors on the A-basis.
class PairVector {
 public:
  explicit PairVector(int n);

  int degree() const { return n_; }
  std::size_t size() const { return v_.size(); }

  // Accessors normalize the pair order; i == j is invalid.
  long long at(int i, int j) const { return v_[index(n_, i, j)]; }
  long long& at(int i, int j) { return v_[index(n_, i, j)]; }

  bool is_zero() const;

  PairVector operator+(const PairVector&) const;
  PairVector operator-(const PairVector&) const;
  PairVector operator-() const;

  // Adds c to every entry (the all-ones direction is invariant under any
  // relabeling of pairs, so this shifts each orbit's free parameter by c).
  PairVector shifted(long long c) const;

  // Nonzero entries as (i, j, value), lexicographic in (i, j).
  std::vector<std::tuple<int, int, long long>> nonzero() const;

  bool operator==(const PairVector&) const = default;

  // Flat index of {i,j} among the lexicographically ordered pairs.
  static std::size_t index(int n, int i, int j);

 private:
  int n_;
  std::vector<long long> v_;
};

}  // namespace braidquot
