#pragma once

#include <string>
#include <vector>

#include "braidquot/errors.hpp"

namespace braidquot {

// Permutation of {1,...,n}. Composition is left-to-right throughout the
// library: (a.then(b))(i) = b(a(i)).
class Permutation {
 public:
  // Identity on {1,...,n}.
  explicit Permutation(int n);

  // images[t] = pi(t+1); must be a bijection of {1,...,n}.
  static Permutation from_images(std::vector<int> images);

  // Single cycle (c[0] c[1] ... c[k-1]) on {1,...,n}; entries distinct.
  static Permutation from_cycle(int n, const std::vector<int>& cycle);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const {
    if (i < 1 || i > degree())
      throw IndexError("permutation applied to " + std::to_string(i) +
                       " with degree " + std::to_string(degree()));
    return img_[static_cast<size_t>(i) - 1];
  }

  // Left-to-right composition: result(i) = b(this(i)).
  Permutation then(const Permutation& b) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  bool commutes_with(const Permutation& b) const;

  // Cycles (fixed points included), each rotated to start at its least
  // element, listed in increasing order of least element.
  std::vector<std::vector<int>> cycles() const;

  // Cycle lengths sorted descending (fixed points included).
  std::vector<int> cycle_type() const;

  // Order of the permutation (lcm of cycle lengths).
  long long order() const;

  // Cycle notation, e.g. "(1 3 2)" or "id".
  std::string str() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

}  // namespace braidquot
