#pragma once

#include <json.hpp>

#include "braidquot/pair_vector.hpp"
#include "braidquot/permutation.hpp"
#include "braidquot/word.hpp"

namespace braidquot {

// Element of the braid quotient group on n strands in which the commutator
// subgroup of the pure braids is collapsed. The pair
// (permutation, signed pairwise crossing counts) is a complete invariant, so
// equality of Elements is equality in the group.
//
// Conventions: strands are labeled 1..n by starting position; composition is
// left-to-right, i.e. (g*h).perm()(i) = h.perm()(g.perm()(i)) and words act
// first-letter-first. cross().at(i,j) counts signed crossings between the
// strands *starting* at positions i and j.
class Element {
 public:
  // Identity on n strands.
  explicit Element(int n);

  Element(Permutation perm, PairVector cross);

  // Evaluates a word by strand simulation.
  static Element from_word(const BraidWord& w);
  static Element from_word(const std::string& text, int n) {
    return from_word(BraidWord::parse(text, n));
  }

  // Pure element with the given exponents on the A-basis (crossings 2m).
  static Element from_pure(const PairVector& exponents);

  int degree() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }
  const PairVector& cross() const { return cross_; }

  Element operator*(const Element&) const;
  Element inverse() const;
  Element pow(long long k) const;

  bool is_identity() const;
  bool is_pure() const { return perm_.is_identity(); }

  // Exponents of a pure element on the free-abelian A-basis; throws NotPure
  // for elements with nontrivial permutation.
  PairVector pure_exponents() const;

  // True iff cross(i,j) is odd exactly when strands i and j end in swapped
  // relative order. Holds for every element produced by the group
  // operations; exposed for property tests.
  bool parity_consistent() const;

  // A word evaluating to this element: A-letters of the pure part (in
  // lexicographic pair order) followed by a positive permutation word.
  BraidWord to_word() const;

  // {"n": .., "perm": [images], "cross": [[i,j,c] for nonzero c, lex]}
  nlohmann::ordered_json to_json() const;
  static Element from_json(const nlohmann::json&);

  bool operator==(const Element&) const = default;

 private:
  Permutation perm_;
  PairVector cross_;
};

inline Element conjugate(const Element& g, const Element& u) {
  return g * u * g.inverse();
}

// Positive word of adjacent transpositions realizing pi, read left to right:
// the swaps an insertion sort performs to sort the image list, in the order
// it performs them. perm(section(pi)) == pi.
BraidWord section_word(const Permutation& pi);
Element section(const Permutation& pi);

// Finite-order elements: delta(r,p,n) has order p and underlying cycle
// (r+1, r+2, ..., r+p); p odd, p >= 3, r >= 0, r + p <= n.
BraidWord delta_word(int r, int p, int n);
Element delta(int r, int p, int n);

// alpha(r,p,n) = s_{r+1} s_{r+2} ... s_{r+p-1}: positive word with the
// inverse cycle, infinite order for p >= 2.
BraidWord alpha_word(int r, int p, int n);
Element alpha(int r, int p, int n);

}  // namespace braidquot
