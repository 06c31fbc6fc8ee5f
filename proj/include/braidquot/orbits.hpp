#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "braidquot/pair_vector.hpp"
#include "braidquot/permutation.hpp"

namespace braidquot {

// Image of the unordered pair {i,j} under theta, returned with i < j.
std::pair<int, int> pair_action(const Permutation& theta, std::pair<int, int> p);

// Orbits of <theta> on unordered pairs. Each orbit starts at its
// lexicographically least pair (the representative) and follows successive
// theta-images; orbits are listed in increasing order of representative.
class OrbitDecomposition {
 public:
  explicit OrbitDecomposition(const Permutation& theta);

  const Permutation& theta() const { return theta_; }
  int degree() const { return theta_.degree(); }

  const std::vector<std::vector<std::pair<int, int>>>& orbits() const { return orbits_; }
  std::vector<std::pair<int, int>> transversal() const;

  int orbit_index(int i, int j) const;
  std::pair<int, int> representative(int i, int j) const;

  // Sum of v over each orbit, indexed like orbits().
  std::vector<long long> orbit_sums(const PairVector& v) const;

  // v restricted to the representatives: entries off the transversal zeroed.
  // Throws DomainError in strict mode if such entries are nonzero.
  PairVector at_representatives(const std::vector<long long>& per_orbit) const;
  bool supported_on_transversal(const PairVector& v) const;

 private:
  Permutation theta_;
  std::vector<std::vector<std::pair<int, int>>> orbits_;
  std::vector<int> orbit_of_;  // pair index -> orbit index
};

// Solves x(theta{i,j}) - x{i,j} = d{i,j} for all pairs. Solvable iff every
// orbit sum of d vanishes; the returned solution is the unique one with
// x = 0 at every orbit representative (values telescope forward along each
// orbit). Verified by substitution before returning.
std::optional<PairVector> solve_translation_system(const Permutation& theta,
                                                   const PairVector& d);

// Simultaneous systems x(theta_t{i,j}) - x{i,j} = d_t{i,j} for a list of
// translation constraints. Solved by propagating values across the combined
// constraint graph from the least unassigned pair of each joint component
// (roots get 0), then checking every equation by substitution.
struct TranslationConstraint {
  Permutation theta;
  PairVector d;
};
std::optional<PairVector> solve_joint_translation_system(
    int n, const std::vector<TranslationConstraint>& constraints);

// Components of the pair set under the group generated by the given
// permutations (same traversal order as the joint solver).
std::vector<std::vector<std::pair<int, int>>> joint_components(
    int n, const std::vector<Permutation>& thetas);

}  // namespace braidquot
