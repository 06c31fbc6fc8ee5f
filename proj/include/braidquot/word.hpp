#pragma once

#include <string>
#include <vector>

namespace braidquot {

// One word letter: a power of an Artin generator s_i or of a band generator
// A_{i,j} (i < j after normalization). Exponents are never zero.
struct Letter {
  enum class Kind { artin, pure };
  Kind kind;
  int i;  // artin: generator index; pure: smaller strand
  int j;  // pure: larger strand (unused for artin)
  long long exponent;

  bool operator==(const Letter&) const = default;
};

// Word in the generators s_1..s_{n-1} and A_{i,j}, stored as a letter list
// with exponents. Construction drops zero exponents; no other rewriting is
// performed (adjacent letters are kept as written).
class BraidWord {
 public:
  explicit BraidWord(int n);

  // Grammar: token := s<i> | s<i>^<e> | A<i>,<j> | A<i>,<j>^<e>.
  // Tokens are separated by runs of spaces or by a single '.'; the empty
  // string is the identity. A<i>,<j> with i > j is normalized to A<j>,<i>.
  static BraidWord parse(const std::string& text, int n);

  int degree() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  // Canonical text form: letters joined by single spaces, "^e" omitted
  // when e == 1. parse(str(), n) reproduces the word letter-for-letter.
  std::string str() const;

  // Same element written in Artin generators only:
  // A_{i,j}^e -> s_{j-1} ... s_{i+1} s_i^{2e} s_{i+1}^-1 ... s_{j-1}^-1.
  BraidWord expanded() const;

  // Builders; exponent 0 is silently dropped, bad indices throw IndexError.
  void push_artin(int i, long long exponent);
  void push_pure(int i, int j, long long exponent);

  // Concatenation (words on the same strand count).
  BraidWord operator+(const BraidWord&) const;

  // Formal inverse: letters reversed with negated exponents.
  BraidWord inverse() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

}  // namespace braidquot
