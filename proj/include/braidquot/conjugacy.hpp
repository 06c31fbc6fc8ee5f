#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "braidquot/element.hpp"
#include "braidquot/orbits.hpp"

namespace braidquot {

// Coordinates of u in the fiber over its permutation, relative to a chosen
// base element with the same permutation: u = base * from_pure(a).
struct FiberCoordinates {
  Element base;
  PairVector a;
};
FiberCoordinates fiber_coordinates(const Element& u, const Element& base);

// Deterministic enumeration of the centralizer of a permutation in S_n.
// Elements permute equal-length cycles blockwise and rotate each cycle;
// index 0 is the identity (all rotation offsets zero, trivial block
// permutations) and the offsets vary fastest.
class CentralizerEnumeration {
 public:
  explicit CentralizerEnumeration(const Permutation& theta);

  unsigned long long size() const;
  Permutation operator[](unsigned long long idx) const;

  // Convenience for small centralizers.
  std::vector<Permutation> all() const;

 private:
  int n_;
  // Cycles grouped by length (lengths ascending; cycles within a group
  // ordered by least element, each starting at its least element).
  std::vector<std::vector<std::vector<int>>> groups_;
};

// Orbit-sum normal form of u in the fiber of base: the unique element
// base * prod_{reps} A^{S} (S = per-orbit sums of u's fiber coordinates,
// placed at orbit representatives) together with a pure witness w with
// w * u * w^{-1} == nf. Throws FiberMismatch if perm(u) != perm(base).
struct NormalForm {
  Element nf;
  Element witness;
};
NormalForm orbit_normal_form(const Element& u, const Element& base);

// Decision predicate for "is v = conj of (base * A^z-at-reps) by some lift
// of C times a pure element", phrased on transversal exponent vectors:
// for every orbit o with representative (t,q),
//   orbit_sum_o(c) + z[rep of the orbit of {C(t),C(q)}] == b[(t,q)]
// where c is the fiber coordinate vector of C~ * base * C~^{-1}. z and b
// must be supported on the transversal of the orbit decomposition.
bool conjugation_condition_check(const Element& base, const Permutation& C,
                                 const PairVector& z, const PairVector& b);

// Conjugacy decision with certificate. When conjugate, witness satisfies
// witness * u * witness^{-1} == v (verified before returning). When not,
// the refutation states which stage was exhausted.
enum class Refutation { cycle_type_mismatch, centralizer_exhausted };

struct ConjugacyCertificate {
  bool conjugate;
  std::optional<Element> witness;
  std::optional<Refutation> refutation;
  unsigned long long tested_centralizer_elements;

  // {"verdict": "conjugate"|"not_conjugate",
  //  "witness_word": string|null, "tested_centralizer_elements": int}
  nlohmann::ordered_json to_json() const;
};
ConjugacyCertificate are_conjugate(const Element& u, const Element& v);

// Exact order: the permutation order m when u^m == 1, otherwise nullopt
// (infinite order).
std::optional<long long> order_of(const Element& u);

// Independent finiteness criterion: u has finite order iff every orbit sum
// of its crossing vector under <perm(u)> vanishes.
bool finite_order_by_orbit_sums(const Element& u);

// The permutation with the same cycle type whose cycles sit on consecutive
// blocks (longest first); used as the target frame for canonical forms.
Permutation canonical_cycle_permutation(const Permutation& pi);

// A permutation rho with rho * from * rho^{-1} == to (left-to-right), built
// by aligning cycles sorted by (length desc, least element asc). Throws
// DomainError if the cycle types differ.
Permutation conjugating_permutation(const Permutation& from, const Permutation& to);

// Unique class representative: base * prod A^S where base is the section of
// the canonical cycle permutation and S is the lexicographically least
// transversal sum vector over the centralizer scan. Two elements are
// conjugate iff their canonical representatives are equal.
Element canonical_representative(const Element& u);

}  // namespace braidquot
