#include "braidquot/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "braidquot/errors.hpp"

namespace braidquot {

Permutation::Permutation(int n) {
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw DomainError("image list is not a bijection of {1,...,n}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
  Permutation p(n);
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  const size_t k = cycle.size();
  for (size_t t = 0; t < k; ++t) {
    int a = cycle[t], b = cycle[(t + 1) % k];
    if (a < 1 || a > n)
      throw IndexError("cycle entry " + std::to_string(a) +
                       " out of range for n=" + std::to_string(n));
    if (seen[static_cast<size_t>(a)])
      throw DomainError("cycle entry " + std::to_string(a) + " repeats");
    seen[static_cast<size_t>(a)] = true;
    p.img_[static_cast<size_t>(a) - 1] = b;
  }
  return from_images(std::move(p.img_));
}

Permutation Permutation::then(const Permutation& b) const {
  if (degree() != b.degree())
    throw SizeMismatch("composing permutations of different degrees");
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = b(img_[i]);
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    out[static_cast<size_t>(img_[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation acc(degree());
  while (e) {
    if (e & 1) acc = acc.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Permutation::commutes_with(const Permutation& b) const {
  return then(b) == b.then(*this);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i) - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[static_cast<size_t>(j) - 1] = 1;
      j = (*this)(j);
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

long long Permutation::order() const {
  long long m = 1;
  for (const auto& c : cycles()) m = std::lcm(m, static_cast<long long>(c.size()));
  return m;
}

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += '(';
    for (size_t t = 0; t < c.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(c[t]);
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

}  // namespace braidquot
