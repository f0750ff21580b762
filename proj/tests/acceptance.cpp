// End-to-end gate: runs the verification suite behind each headline claim and
// demands a clean PASS on every check (an INCONCLUSIVE counts as a miss here,
// even though the report format treats it as a mere status). Prints one line
// per claim and enforces the overall runtime budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "deca/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  struct Gate {
    const char* suite;
    const char* label;
  };
  const std::vector<Gate> gates = {
      {"structure", "validators accept the corpus; the one-sided shifts are opposite-dual"},
      {"pi0dec", "vertical components of the degree shift recover the object"},
      {"constants", "totals of the constant inflations recover the object"},
      {"sections", "shift counits split on standard simplices with prism homotopies"},
      {"ez", "diagonal-to-total comparison is a homology equivalence"},
      {"unit", "unit into the total of the shift is a split homology equivalence"},
      {"duskin", "classifying object matches the total of the nerve"},
      {"dnwbar", "nerve-diagonal twist map is a homology equivalence"},
      {"kpi1", "collapsed shift rows: free edge groups, no higher homology"},
      {"kan", "loop object level zero presents the fundamental group"},
      {"wbarhom", "classifying-object homology matches the reference tables"},
      {"dstar", "grid-map object evaluates along the diagonal quasi-isomorphically"},
  };

  auto start = clock::now();
  bool all_ok = true;
  for (size_t i = 0; i < gates.size(); ++i) {
    bool ok = false;
    std::string detail;
    try {
      deca::SuiteReport rep = deca::run_suite(gates[i].suite);
      ok = rep.all_pass();
      int misses = 0;
      for (const deca::CheckResult& c : rep.checks)
        if (c.status != deca::CheckStatus::pass) ++misses;
      detail = std::to_string(rep.checks.size() - misses) + "/" + std::to_string(rep.checks.size());
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    all_ok &= ok;
    std::printf("%s  %2zu  %-12s %s  (%s)\n", ok ? "PASS" : "FAIL", i + 1, gates[i].suite,
                gates[i].label, detail.c_str());
    std::fflush(stdout);
  }

  double secs = std::chrono::duration<double>(clock::now() - start).count();
  const double budget = 300.0;
  bool in_budget = secs < budget;
  std::printf("%s  --  runtime %.1fs (budget %.0fs)\n", in_budget ? "PASS" : "FAIL", secs, budget);
  all_ok &= in_budget;
  std::printf("%s\n", all_ok ? "acceptance: all gates passed" : "acceptance: FAILED");
  return all_ok ? 0 : 1;
}
