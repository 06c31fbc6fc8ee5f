#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "braidquot/conjugacy.hpp"
#include "braidquot/element.hpp"
#include "braidquot/errors.hpp"
#include "braidquot/vc.hpp"

namespace {

using braidquot::Element;

std::string cross_line(const braidquot::PairVector& v, const char* unit) {
  std::string out;
  for (auto [i, j, c] : v.nonzero()) {
    if (!out.empty()) out += ' ';
    out += '{' + std::to_string(i) + ',' + std::to_string(j) + "}:" + std::to_string(c);
  }
  if (out.empty()) return std::string("(all zero ") + unit + ")";
  return out;
}

void print_element(const Element& g, bool json) {
  if (json) {
    std::cout << g.to_json().dump() << '\n';
    return;
  }
  std::cout << "perm: [";
  for (int i = 1; i <= g.degree(); ++i)
    std::cout << (i > 1 ? ", " : "") << g.perm()(i);
  std::cout << "]\n";
  std::cout << "cross: " << cross_line(g.cross(), "crossings") << '\n';
  std::cout << "word: " << g.to_word().str() << '\n';
}

// Warns about (and optionally refuses) conjugacy searches whose centralizer
// scan is large; the scan is exponential in the number of equal-length
// cycles.
void guard_centralizer(const braidquot::Permutation& theta, bool force) {
  braidquot::CentralizerEnumeration cent(theta);
  unsigned long long size = cent.size();
  if (theta.is_identity() && theta.degree() > 8)
    std::cerr << "warning: pure-permutation input scans all " << size
              << " permutations; expect this to take a while\n";
  else if (size > 1000000ULL)
    std::cerr << "warning: centralizer scan has " << size << " elements\n";
  if (size > 100000000ULL && !force)
    throw braidquot::DomainError(
        "centralizer scan has " + std::to_string(size) +
        " elements; pass --force to run it anyway");
}

struct CommonArgs {
  int n = 0;
  bool json = false;
  bool force = false;
};

void add_common(CLI::App* sub, CommonArgs& args, bool need_n = true) {
  auto* opt = sub->add_option("--n", args.n, "strand count (2..16)")
                  ->check(CLI::Range(2, 16));
  if (need_n) opt->required();
  sub->add_flag("--json", args.json, "emit JSON instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and conjugacy in the crystallographic braid quotient"};
  app.require_subcommand(1);

  try {
    CommonArgs args;
    std::string word1, word2, base_word, tables_file;
    long long exponent = 0;
    int opt_p = 0, opt_k = 0, opt_table = 0;

    auto* eval = app.add_subcommand("eval", "evaluate a word");
    add_common(eval, args);
    eval->add_option("word", word1, "word to evaluate")->required();
    eval->callback([&] { print_element(Element::from_word(word1, args.n), args.json); });

    auto* mul = app.add_subcommand("mul", "multiply two words");
    add_common(mul, args);
    mul->add_option("left", word1)->required();
    mul->add_option("right", word2)->required();
    mul->callback([&] {
      print_element(Element::from_word(word1, args.n) * Element::from_word(word2, args.n),
                    args.json);
    });

    auto* inv = app.add_subcommand("inv", "invert a word");
    add_common(inv, args);
    inv->add_option("word", word1)->required();
    inv->callback([&] { print_element(Element::from_word(word1, args.n).inverse(), args.json); });

    auto* powc = app.add_subcommand("pow", "raise a word to an integer power");
    add_common(powc, args);
    powc->add_option("word", word1)->required();
    powc->add_option("exponent", exponent)->required();
    powc->callback(
        [&] { print_element(Element::from_word(word1, args.n).pow(exponent), args.json); });

    auto* permc = app.add_subcommand("perm", "underlying permutation of a word");
    add_common(permc, args);
    permc->add_option("word", word1)->required();
    permc->callback([&] {
      Element g = Element::from_word(word1, args.n);
      if (args.json) {
        nlohmann::ordered_json j;
        std::vector<int> img;
        for (int i = 1; i <= g.degree(); ++i) img.push_back(g.perm()(i));
        j["images"] = img;
        j["cycles"] = g.perm().cycles();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "images: [";
        for (int i = 1; i <= g.degree(); ++i)
          std::cout << (i > 1 ? ", " : "") << g.perm()(i);
        std::cout << "]\ncycles: " << g.perm().str() << '\n';
      }
    });

    auto* coords = app.add_subcommand("coords", "exponents of a pure word on the A-basis");
    add_common(coords, args);
    coords->add_option("word", word1)->required();
    coords->callback([&] {
      braidquot::PairVector m = Element::from_word(word1, args.n).pure_exponents();
      if (args.json) {
        nlohmann::ordered_json j;
        j["n"] = args.n;
        auto arr = nlohmann::ordered_json::array();
        for (auto [i, jj, v] : m.nonzero()) arr.push_back({i, jj, v});
        j["exponents"] = arr;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "exponents: " << cross_line(m, "exponents") << '\n';
      }
    });

    auto* nf = app.add_subcommand("nf", "orbit-sum normal form in the fiber of a base");
    add_common(nf, args);
    nf->add_option("word", word1)->required();
    nf->add_option("--base", base_word,
                   "base word with the same permutation (default: positive "
                   "permutation word)");
    nf->callback([&] {
      Element u = Element::from_word(word1, args.n);
      Element base = nf->count("--base") ? Element::from_word(base_word, args.n)
                                         : braidquot::section(u.perm());
      auto res = braidquot::orbit_normal_form(u, base);
      bool ok = braidquot::conjugate(res.witness, u) == res.nf;
      if (args.json) {
        nlohmann::ordered_json j;
        j["normal_form_word"] = res.nf.to_word().str();
        j["witness_word"] = res.witness.to_word().str();
        j["normal_form"] = res.nf.to_json();
        j["verified"] = ok;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "normal_form: " << res.nf.to_word().str() << '\n'
                  << "witness: " << res.witness.to_word().str() << '\n'
                  << "verified: " << (ok ? "true" : "false") << '\n';
      }
    });

    auto* conj = app.add_subcommand("conj", "decide conjugacy of two words");
    add_common(conj, args);
    conj->add_option("left", word1)->required();
    conj->add_option("right", word2)->required();
    conj->add_flag("--force", args.force, "run even when the scan is huge");
    conj->callback([&] {
      Element u = Element::from_word(word1, args.n);
      Element v = Element::from_word(word2, args.n);
      if (u.perm().cycle_type() == v.perm().cycle_type())
        guard_centralizer(v.perm().inverse(), args.force);
      auto cert = braidquot::are_conjugate(u, v);
      if (args.json) {
        std::cout << cert.to_json().dump() << '\n';
      } else {
        std::cout << "verdict: " << (cert.conjugate ? "conjugate" : "not_conjugate") << '\n';
        if (cert.witness)
          std::cout << "witness: " << cert.witness->to_word().str() << '\n';
        if (cert.refutation)
          std::cout << "refutation: "
                    << (*cert.refutation == braidquot::Refutation::cycle_type_mismatch
                            ? "cycle_type_mismatch"
                            : "centralizer_exhausted")
                    << '\n';
        std::cout << "tested_centralizer_elements: " << cert.tested_centralizer_elements
                  << '\n';
      }
    });

    auto* order = app.add_subcommand("order", "exact order of a word");
    add_common(order, args);
    order->add_option("word", word1)->required();
    order->callback([&] {
      auto ord = braidquot::order_of(Element::from_word(word1, args.n));
      if (args.json) {
        nlohmann::ordered_json j;
        j["order"] = ord ? nlohmann::ordered_json(*ord) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "order: " << (ord ? std::to_string(*ord) : "infinite") << '\n';
      }
    });

    auto* canon = app.add_subcommand("canon", "canonical conjugacy-class representative");
    add_common(canon, args);
    canon->add_option("word", word1)->required();
    canon->add_flag("--force", args.force, "run even when the scan is huge");
    canon->callback([&] {
      Element u = Element::from_word(word1, args.n);
      guard_centralizer(braidquot::canonical_cycle_permutation(u.perm()).inverse(),
                        args.force);
      Element rep = braidquot::canonical_representative(u);
      if (args.json) {
        nlohmann::ordered_json j;
        j["canonical_word"] = rep.to_word().str();
        j["canonical"] = rep.to_json();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "canonical: " << rep.to_word().str() << '\n';
        print_element(rep, false);
      }
    });

    auto* vczp = app.add_subcommand("vc-zp", "realize Z_p semidirect Z with B A B^-1 = A^k");
    add_common(vczp, args);
    vczp->add_option("--p", opt_p, "odd prime torsion order, p <= n")->required();
    vczp->add_option("--k", opt_k, "action exponent, 1..p-1")->required();
    vczp->callback([&] {
      auto pres = braidquot::realize_zp_by_z(args.n, opt_p, opt_k);
      if (args.json) {
        std::cout << pres.to_json().dump() << '\n';
      } else {
        std::cout << "group: Z" << pres.p << " x| Z  (n=" << pres.n << ", k=" << pres.k
                  << ")\n"
                  << "A: " << pres.torsion[0].to_word().str() << '\n'
                  << "B: " << pres.infinite_generator.to_word().str() << '\n'
                  << "gamma: " << pres.gamma_word.str() << '\n'
                  << "pure_part: " << cross_line(pres.pure_part, "exponents") << '\n'
                  << "relations: verified (order(A)=" << pres.p << ", B A B^-1 = A^"
                  << pres.k << ", order(B)=infinite)\n";
      }
    });

    auto* vcz33 = app.add_subcommand("vc-z3z3",
                                     "realize (Z3 x Z3) semidirect Z in the 6-strand group");
    add_common(vcz33, args, /*need_n=*/false);
    vcz33->add_option("--k", opt_k, "action index, 1..6")->required();
    vcz33->callback([&] {
      if (vcz33->count("--n") && args.n != 6)
        throw braidquot::DomainError("the (Z3 x Z3) realizations live on 6 strands");
      auto res = braidquot::realize_z3z3_by_z(opt_k);
      if (args.json) {
        nlohmann::ordered_json j;
        j["realizable"] = res.presentation.has_value();
        j["gamma_candidates_tried"] = res.gamma_candidates_tried;
        if (res.presentation)
          j["presentation"] = res.presentation->to_json();
        else
          j["obstruction"] = res.obstruction;
        std::cout << j.dump() << '\n';
      } else if (res.presentation) {
        const auto& pres = *res.presentation;
        std::cout << "group: (Z3 x Z3) x| Z  (k=" << pres.k << ")\n"
                  << "A1: " << pres.torsion[0].to_word().str() << '\n'
                  << "A2: " << pres.torsion[1].to_word().str() << '\n'
                  << "B: " << pres.infinite_generator.to_word().str() << '\n'
                  << "gamma: " << pres.gamma_word.str() << '\n'
                  << "pure_part: " << cross_line(pres.pure_part, "exponents") << '\n'
                  << "gamma_candidates_tried: " << res.gamma_candidates_tried << '\n'
                  << "relations: verified\n";
      } else {
        std::cout << "unrealizable: " << res.obstruction << '\n'
                  << "gamma_candidates_tried: " << res.gamma_candidates_tried << '\n';
      }
    });

    auto* vt = app.add_subcommand("verify-tables", "check the bundled realization tables");
    add_common(vt, args, /*need_n=*/false);
    vt->add_option("--table", opt_table, "restrict to one table (1..4)")
        ->check(CLI::Range(1, 4));
    vt->add_option("--tables-file", tables_file, "override the bundled table data");
    vt->callback([&] {
      std::vector<braidquot::TableRow> rows;
      if (!tables_file.empty()) {
        std::ifstream in(tables_file);
        if (!in) throw braidquot::DomainError("cannot open " + tables_file);
        rows = braidquot::parse_table_rows(nlohmann::json::parse(in));
      } else {
        rows = braidquot::bundled_table_rows();
      }
      auto reports = braidquot::verify_tables(rows, opt_table);
      if (args.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << arr.dump() << '\n';
      } else {
        int passed = 0;
        for (const auto& r : reports) {
          std::cout << 'T' << r.row.table << '.' << r.row.row << "  " << r.row.group
                    << "  " << r.row.action << "  " << (r.pass ? "PASS" : "FAIL");
          if (!r.pass) {
            std::cout << "  [flagged:";
            for (const auto& c : r.checks)
              if (!c.ok) std::cout << " {" << c.name << "}";
            std::cout << "]";
          }
          std::cout << '\n';
          passed += r.pass;
        }
        std::cout << "summary: " << passed << '/' << reports.size() << " rows pass, "
                  << (reports.size() - static_cast<size_t>(passed)) << " flagged\n";
      }
    });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const braidquot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
