#include "braidquot/orbits.hpp"

#include <algorithm>
#include <deque>

#include "braidquot/errors.hpp"

namespace braidquot {

std::pair<int, int> pair_action(const Permutation& theta, std::pair<int, int> p) {
  int a = theta(p.first), b = theta(p.second);
  if (a > b) std::swap(a, b);
  if (a == b) throw DomainError("pair collapsed under a non-permutation");
  return {a, b};
}

OrbitDecomposition::OrbitDecomposition(const Permutation& theta) : theta_(theta) {
  const int n = theta.degree();
  if (n < 2) throw DomainError("orbit decomposition needs degree >= 2");
  orbit_of_.assign(static_cast<size_t>(n) * (n - 1) / 2, -1);
  // Scanning pairs lexicographically guarantees the first unvisited pair of
  // each orbit is its lexicographic minimum.
  for (auto start : all_pairs(n)) {
    if (orbit_of_[PairVector::index(n, start.first, start.second)] != -1) continue;
    std::vector<std::pair<int, int>> orbit;
    std::pair<int, int> p = start;
    do {
      orbit_of_[PairVector::index(n, p.first, p.second)] =
          static_cast<int>(orbits_.size());
      orbit.push_back(p);
      p = pair_action(theta_, p);
    } while (p != start);
    orbits_.push_back(std::move(orbit));
  }
}

std::vector<std::pair<int, int>> OrbitDecomposition::transversal() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(orbits_.size());
  for (const auto& o : orbits_) out.push_back(o.front());
  return out;
}

int OrbitDecomposition::orbit_index(int i, int j) const {
  return orbit_of_[PairVector::index(degree(), i, j)];
}

std::pair<int, int> OrbitDecomposition::representative(int i, int j) const {
  return orbits_[static_cast<size_t>(orbit_index(i, j))].front();
}

std::vector<long long> OrbitDecomposition::orbit_sums(const PairVector& v) const {
  if (v.degree() != degree())
    throw SizeMismatch("orbit sums of a vector with mismatched degree");
  std::vector<long long> sums(orbits_.size(), 0);
  for (size_t t = 0; t < orbits_.size(); ++t)
    for (auto [i, j] : orbits_[t]) sums[t] += v.at(i, j);
  return sums;
}

PairVector OrbitDecomposition::at_representatives(
    const std::vector<long long>& per_orbit) const {
  if (per_orbit.size() != orbits_.size())
    throw SizeMismatch("one value per orbit required");
  PairVector out(degree());
  for (size_t t = 0; t < orbits_.size(); ++t) {
    auto [i, j] = orbits_[t].front();
    out.at(i, j) = per_orbit[t];
  }
  return out;
}

bool OrbitDecomposition::supported_on_transversal(const PairVector& v) const {
  if (v.degree() != degree()) return false;
  for (size_t t = 0; t < orbits_.size(); ++t)
    for (size_t s = 1; s < orbits_[t].size(); ++s) {
      auto [i, j] = orbits_[t][s];
      if (v.at(i, j) != 0) return false;
    }
  return true;
}

std::optional<PairVector> solve_translation_system(const Permutation& theta,
                                                   const PairVector& d) {
  if (theta.degree() != d.degree())
    throw SizeMismatch("translation system degree mismatch");
  OrbitDecomposition dec(theta);
  for (long long s : dec.orbit_sums(d))
    if (s != 0) return std::nullopt;

  PairVector x(d.degree());
  for (const auto& orbit : dec.orbits()) {
    long long acc = 0;  // x at the representative
    for (size_t t = 0; t + 1 < orbit.size(); ++t) {
      acc += d.at(orbit[t].first, orbit[t].second);
      x.at(orbit[t + 1].first, orbit[t + 1].second) = acc;
    }
  }
  // Substitution check (the wrap-around equation closes by the sum test,
  // but verify everything anyway).
  for (auto [i, j] : all_pairs(d.degree())) {
    auto [a, b] = pair_action(theta, {i, j});
    if (x.at(a, b) - x.at(i, j) != d.at(i, j))
      throw InternalError("translation solver postcondition failed");
  }
  return x;
}

std::vector<std::vector<std::pair<int, int>>> joint_components(
    int n, const std::vector<Permutation>& thetas) {
  std::vector<std::vector<std::pair<int, int>>> comps;
  std::vector<int> comp_of(static_cast<size_t>(n) * (n - 1) / 2, -1);
  for (auto start : all_pairs(n)) {
    if (comp_of[PairVector::index(n, start.first, start.second)] != -1) continue;
    std::vector<std::pair<int, int>> comp;
    std::deque<std::pair<int, int>> queue{start};
    comp_of[PairVector::index(n, start.first, start.second)] =
        static_cast<int>(comps.size());
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      comp.push_back(p);
      for (const Permutation& th : thetas) {
        for (auto q : {pair_action(th, p), pair_action(th.inverse(), p)}) {
          int& c = comp_of[PairVector::index(n, q.first, q.second)];
          if (c == -1) {
            c = static_cast<int>(comps.size());
            queue.push_back(q);
          }
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<PairVector> solve_joint_translation_system(
    int n, const std::vector<TranslationConstraint>& constraints) {
  for (const auto& c : constraints)
    if (c.theta.degree() != n || c.d.degree() != n)
      throw SizeMismatch("joint translation system degree mismatch");

  PairVector x(n);
  std::vector<char> assigned(static_cast<size_t>(n) * (n - 1) / 2, 0);
  for (auto start : all_pairs(n)) {
    if (assigned[PairVector::index(n, start.first, start.second)]) continue;
    assigned[PairVector::index(n, start.first, start.second)] = 1;
    std::deque<std::pair<int, int>> queue{start};  // root value stays 0
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      long long xp = x.at(p.first, p.second);
      for (const auto& c : constraints) {
        auto fwd = pair_action(c.theta, p);
        if (!assigned[PairVector::index(n, fwd.first, fwd.second)]) {
          x.at(fwd.first, fwd.second) = xp + c.d.at(p.first, p.second);
          assigned[PairVector::index(n, fwd.first, fwd.second)] = 1;
          queue.push_back(fwd);
        }
        auto bwd = pair_action(c.theta.inverse(), p);
        if (!assigned[PairVector::index(n, bwd.first, bwd.second)]) {
          x.at(bwd.first, bwd.second) = xp - c.d.at(bwd.first, bwd.second);
          assigned[PairVector::index(n, bwd.first, bwd.second)] = 1;
          queue.push_back(bwd);
        }
      }
    }
  }
  // Every equation must hold for the propagated assignment; conflicts mean
  // the system is unsolvable.
  for (const auto& c : constraints)
    for (auto [i, j] : all_pairs(n)) {
      auto [a, b] = pair_action(c.theta, {i, j});
      if (x.at(a, b) - x.at(i, j) != c.d.at(i, j)) return std::nullopt;
    }
  return x;
}

}  // namespace braidquot
