#pragma once

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "braidquot/element.hpp"

namespace braidquot {

// Explicit realization of an infinite virtually cyclic group inside the
// braid quotient: torsion generators plus an infinite-order element B whose
// conjugation action on the torsion part is the requested automorphism.
// relations_verified is true only if every defining relation (orders,
// commutation, action, infinite order of B) was checked by exact arithmetic.
struct VcPresentation {
  enum class Kind { zp_by_z, z3z3_by_z };
  Kind kind;
  int n = 0;
  int p = 0;  // torsion order parameter (3 for the z3z3 kind)
  int k = 0;  // action parameter
  std::vector<Element> torsion;
  Element infinite_generator{2};
  BraidWord gamma_word{2};   // permutation-level part of B
  PairVector pure_part{2};   // exponents of the pure part of B
  bool relations_verified = false;

  nlohmann::ordered_json to_json() const;
};

// Z_p semidirect Z inside the n-strand quotient, with B A B^{-1} = A^k:
// A = delta(0,p,n); gamma realigns the cycle so conjugation powers it by k;
// the pure part of B solves the resulting translation system, shifted by
// the all-ones homogeneous solution so B generates an infinite factor.
// Preconditions: p an odd prime, 3 <= p <= n, 1 <= k <= p-1.
VcPresentation realize_zp_by_z(int n, int p, int k);

// (Z_3 x Z_3) semidirect Z inside the 6-strand quotient, torsion generators
// A1 = delta(0,3,6) and A2 = s5 s4^-1, action given by the k-th of the six
// order-classifying automorphism matrices (k in 1..6). For k in {5,6} no
// permutation-level conjugator exists and the result reports failure.
struct Z3z3Result {
  std::optional<VcPresentation> presentation;
  int gamma_candidates_tried = 0;
  std::string obstruction;  // set when unrealizable
};
Z3z3Result realize_z3z3_by_z(int k);

// The automorphism matrix for k in 1..6: row i gives the exponents of the
// image of the i-th torsion generator on the basis (A1, A2).
std::array<std::array<int, 2>, 2> z3z3_action_matrix(int k);

// --- Bundled realization tables -------------------------------------------

// One claimed realization row: torsion generator words with stated orders,
// the action exponent matrix, and the infinite generator written as
// (pure word) * (gamma word).
struct TableRow {
  int table = 0;
  int row = 0;
  int n = 0;
  std::string group;
  std::string action;
  std::vector<std::string> torsion_words;
  std::vector<int> torsion_orders;
  std::vector<std::vector<int>> action_exponents;
  std::string pure_word;
  std::string gamma_word;
};

struct RowCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RowReport {
  TableRow row;
  std::vector<RowCheck> checks;
  bool pass = false;

  nlohmann::ordered_json to_json() const;
};

// Rows transcribed from the bundled data file (loadable override provided
// for the CLI). Throws DomainError if the data is malformed.
std::vector<TableRow> bundled_table_rows();
std::vector<TableRow> parse_table_rows(const nlohmann::json& data);

// Checks every stated relation of a row by exact arithmetic. Rows are never
// auto-corrected: a transcription that fails its own relations is reported
// as a failed (flagged) row.
RowReport verify_table_row(const TableRow& row);

// table == 0 verifies everything; otherwise only the given table.
std::vector<RowReport> verify_tables(int table = 0);
std::vector<RowReport> verify_tables(const std::vector<TableRow>& rows, int table = 0);

}  // namespace braidquot
