#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

// Runs the CLI with the given arguments, capturing stdout; stderr is
// dropped so warnings do not leak into golden comparisons.
RunResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(BRAIDQUOT_CLI_PATH);
  for (const auto& a : args) cmd += ' ' + shell_quote(a);
  cmd += " 2>/dev/null";

  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string golden_path(const std::string& name) {
  return std::string(BRAIDQUOT_GOLDEN_DIR) + "/" + name;
}

bool update_mode() { return std::getenv("BRAIDQUOT_UPDATE_GOLDEN") != nullptr; }

// Compares stdout against the checked-in transcript (or rewrites it when
// BRAIDQUOT_UPDATE_GOLDEN is set) and checks the exit code.
void golden_case(const std::string& name, const std::vector<std::string>& args,
                 int want_exit = 0) {
  CAPTURE(name);
  RunResult res = run_cli(args);
  CHECK(res.exit_code == want_exit);
  std::string file = golden_path(name + ".txt");
  if (update_mode()) {
    std::ofstream(file, std::ios::binary) << res.out;
    return;
  }
  std::ifstream in(file, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << file);
  std::stringstream want;
  want << in.rdbuf();
  CHECK(res.out == want.str());
}

}  // namespace

TEST_CASE("cli: element arithmetic transcripts") {
  golden_case("eval_basic", {"eval", "--n", "3", "s1 s2"});
  golden_case("eval_json", {"eval", "--n", "3", "--json", "s1 s2"});
  golden_case("eval_identity", {"eval", "--n", "4", "s1 s1^-1"});
  golden_case("eval_dots", {"eval", "--n", "3", "s1.s2.A1,2^-1"});
  golden_case("mul_basic", {"mul", "--n", "3", "s1 A1,2", "s2^-1 A1,3"});
  golden_case("inv_basic", {"inv", "--n", "3", "s1 s2"});
  golden_case("pow_torsion", {"pow", "--n", "3", "s2 s1^-1", "3"});
  golden_case("pow_negative", {"pow", "--n", "3", "s1 s2", "-2"});
  golden_case("perm_basic", {"perm", "--n", "6", "s1 s2 s4"});
  golden_case("perm_json", {"perm", "--n", "6", "--json", "s1 s2 s4"});
  golden_case("coords_basic", {"coords", "--n", "3", "s1 s1 s2 s2"});
  golden_case("coords_json", {"coords", "--n", "3", "--json", "s1 s1 s2 s2"});
}

TEST_CASE("cli: normal form and conjugacy transcripts") {
  golden_case("nf_basic", {"nf", "--n", "6", "s1 s2 A2,3^2 A1,4 A3,4^-1"});
  golden_case("nf_base", {"nf", "--n", "3", "--base", "s2 s1 s2", "s2 s1 s2 A1,3^5"});
  golden_case("nf_json", {"nf", "--n", "6", "--json", "s1 s2 A2,3^2 A1,4 A3,4^-1"});
  golden_case("conj_yes", {"conj", "--n", "3", "s2 s1 s2 s1 A1,3 s2^-1", "s1 s2 s1 A1,3"});
  golden_case("conj_yes_json",
              {"conj", "--n", "3", "--json", "s2 s1 s2 s1 A1,3 s2^-1", "s1 s2 s1 A1,3"});
  golden_case("conj_no", {"conj", "--n", "3", "s1 A1,2", "s1 s2 s1 A1,3"});
  golden_case("conj_no_json", {"conj", "--n", "3", "--json", "s1 A1,2", "s1 s2 s1 A1,3"});
  golden_case("conj_type_mismatch", {"conj", "--n", "3", "s1", "s1 s2"});
  golden_case("order_torsion", {"order", "--n", "6", "s5 s4^-1"});
  golden_case("order_infinite", {"order", "--n", "3", "s1 s2"});
  golden_case("order_json", {"order", "--n", "5", "--json", "s4 s3 s2^-1 s1^-1"});
  golden_case("canon_torsion", {"canon", "--n", "3", "s2 s1^-1"});
  golden_case("canon_pure", {"canon", "--n", "3", "A2,3^4 A1,3^-2 A1,2"});
  golden_case("canon_json", {"canon", "--n", "3", "--json", "s2 s1^-1"});
}

TEST_CASE("cli: realization transcripts") {
  golden_case("vc_zp_551", {"vc-zp", "--n", "5", "--p", "5", "--k", "2"});
  golden_case("vc_zp_json", {"vc-zp", "--n", "3", "--p", "3", "--k", "1", "--json"});
  golden_case("vc_z3z3_swap", {"vc-z3z3", "--k", "2"});
  golden_case("vc_z3z3_identity_json", {"vc-z3z3", "--k", "1", "--json"});
  golden_case("vc_z3z3_obstructed", {"vc-z3z3", "--k", "5"});
  golden_case("verify_tables", {"verify-tables"});
  golden_case("verify_tables_t1_json", {"verify-tables", "--table", "1", "--json"});
}

TEST_CASE("cli: custom tables file") {
  std::string path =
      (std::filesystem::temp_directory_path() / "braidquot_custom_tables.json").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << R"({"rows": [
      {"table": 1, "row": 1, "n": 3, "group": "Z3xZ", "action": "alpha1",
       "torsion": [{"word": "s2 s1^-1", "order": 5}],
       "action_exponents": [[1]],
       "pure_word": "A1,2 A1,3 A2,3", "gamma_word": ""}
    ]})";
  }
  golden_case("verify_tables_custom", {"verify-tables", "--tables-file", path});
  RunResult missing = run_cli({"verify-tables", "--tables-file", "/nonexistent.json"});
  CHECK(missing.exit_code == 1);
}

TEST_CASE("cli: domain errors exit with code 1 and print nothing on stdout") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"eval", "--n", "3", "s7"},
           {"eval", "--n", "3", "s1..s2"},
           {"coords", "--n", "3", "s1"},
           {"mul", "--n", "3", "s1", "x"},
           {"vc-zp", "--n", "4", "--p", "5", "--k", "1"},
           {"vc-zp", "--n", "6", "--p", "6", "--k", "1"},
           {"vc-z3z3", "--n", "5", "--k", "1"},
       }) {
    CAPTURE(args[0]);
    RunResult res = run_cli(args);
    CHECK(res.exit_code == 1);
    CHECK(res.out.empty());
  }
}

TEST_CASE("cli: usage errors exit with code 2") {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"eval", "s1"},                    // missing --n
           {"eval", "--n", "1", "s1"},        // n below range
           {"eval", "--n", "17", "s1"},       // n above range
           {"conj", "--n", "3", "s1"},        // missing second word
           {"vc-zp", "--n", "5", "--p", "5"}, // missing --k
           {"verify-tables", "--table", "9"},
       }) {
    CAPTURE(args.empty() ? "<none>" : args[0]);
    RunResult res = run_cli(args);
    CHECK(res.exit_code == 2);
  }
}

TEST_CASE("cli: help exits zero") {
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"conj", "--help"}).exit_code == 0);
}
