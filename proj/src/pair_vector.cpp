#include "braidquot/pair_vector.hpp"

#include <algorithm>

#include "braidquot/errors.hpp"

namespace braidquot {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

PairVector::PairVector(int n) : n_(n) {
  if (n < 2) throw DomainError("pair vector needs degree >= 2");
  v_.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
}

std::size_t PairVector::index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j)
    throw IndexError("pair {" + std::to_string(i) + "," + std::to_string(j) +
                     "} out of range for n=" + std::to_string(n));
  // Pairs with first entry < i come first: (i-1)(2n-i)/2 of them.
  return static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

bool PairVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](long long x) { return x == 0; });
}

PairVector PairVector::operator+(const PairVector& o) const {
  if (n_ != o.n_) throw SizeMismatch("adding pair vectors of different degrees");
  PairVector out(n_);
  for (size_t t = 0; t < v_.size(); ++t) out.v_[t] = v_[t] + o.v_[t];
  return out;
}

PairVector PairVector::operator-(const PairVector& o) const {
  if (n_ != o.n_) throw SizeMismatch("subtracting pair vectors of different degrees");
  PairVector out(n_);
  for (size_t t = 0; t < v_.size(); ++t) out.v_[t] = v_[t] - o.v_[t];
  return out;
}

PairVector PairVector::operator-() const {
  PairVector out(n_);
  for (size_t t = 0; t < v_.size(); ++t) out.v_[t] = -v_[t];
  return out;
}

PairVector PairVector::shifted(long long c) const {
  PairVector out(n_);
  for (size_t t = 0; t < v_.size(); ++t) out.v_[t] = v_[t] + c;
  return out;
}

std::vector<std::tuple<int, int, long long>> PairVector::nonzero() const {
  std::vector<std::tuple<int, int, long long>> out;
  for (auto [i, j] : all_pairs(n_)) {
    long long v = at(i, j);
    if (v != 0) out.emplace_back(i, j, v);
  }
  return out;
}

}  // namespace braidquot
