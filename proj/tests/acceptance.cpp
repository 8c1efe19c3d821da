// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failed criteria.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "brd/algebra.hpp"
#include "brd/connector.hpp"
#include "brd/error.hpp"
#include "brd/normal_form.hpp"
#include "brd/text.hpp"
#include "brd/verify.hpp"
#include "brd/weyl.hpp"

using namespace brd;

namespace {

int g_failures = 0;

int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  if (hc < 1) hc = 1;
  if (hc > 8) hc = 8;
  return static_cast<int>(hc);
}

void report(int idx, bool ok, const std::string& what,
            const std::string& detail) {
  if (ok) {
    std::cout << "PASS " << idx << ": " << what << "\n";
  } else {
    std::cout << "FAIL " << idx << ": " << what << " -- " << detail << "\n";
    ++g_failures;
  }
}

// Runs a suite and folds the result into (ok, detail).
bool suite_ok(const std::string& name, int n, std::int64_t budget,
              std::string& detail) {
  try {
    SuiteReport rep = run_suite(name, n, budget, kDefaultSeed, default_jobs());
    if (rep.failures.empty()) return true;
    detail += dump_failures(rep);
    return false;
  } catch (const Error& e) {
    detail += name + " n=" + std::to_string(n) + ": " + e.what() + "\n";
    return false;
  }
}

}  // namespace

int main() {
  int jobs = default_jobs();

  {  // 1: dimension counts, closed form against enumeration, n = 2..6
    std::string detail;
    bool ok = true;
    const std::int64_t want_d[] = {9, 105, 1569, 29145, 651915};
    for (int n = 2; n <= 6; ++n) {
      ok = suite_ok("counts", n, 0, detail) && ok;
      if (count_connectors(n).d != want_d[n - 2]) {
        ok = false;
        detail += "d(" + std::to_string(n) + ") mismatch\n";
      }
    }
    report(1, ok, "dimension counts match closed forms and enumeration, n=2..6",
           detail);
  }

  {  // 2: defining relations
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 6; ++n) ok = suite_ok("relations", n, 0, detail) && ok;
    report(2, ok, "all 11 relation families hold for n=2..6", detail);
  }

  {  // 3: the f/g diagram identities
    std::string detail;
    bool ok = true;
    for (int n = 3; n <= 5; ++n) ok = suite_ok("lemma-f", n, 0, detail) && ok;
    report(3, ok, "crossing-pair diagram identities (4 cases each) for n=3..5",
           detail);
  }

  {  // 4: shift identities and the horizontal chaining law
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) ok = suite_ok("remark-vi", n, 0, detail) && ok;
    ok = suite_ok("remark-v", 3, 0, detail) && ok;
    // the single-root shift identity, checked separately at n = 5
    for (const Root& a : positive_roots(5)) {
      AlgebraElement lhs = eval_word(
          5, {GeneratorSymbol::r_beta(mate(a)), GeneratorSymbol::e_beta(a)},
          Mode::Strict);
      AlgebraElement base =
          eval_word(5, {GeneratorSymbol::e_beta(a)}, Mode::Strict);
      AlgebraElement want = AlgebraElement::zero(5, Mode::Strict);
      for (const auto& [d, c] : base.terms()) {
        ClassProduct cp = class_mul(LambdaClass::Xi, d.cls);
        want.add_term(make_basis_diagram(cp.cls, d.conn, Mode::Strict),
                      c * LaurentPoly::delta_power(cp.delta_shift - 1));
      }
      if (lhs != want) {
        ok = false;
        detail += "shift identity failed at n=5 for " + to_string(a) + "\n";
      }
    }
    report(4, ok,
           "shift identities (n<=5 single, n<=4 paired) and chaining law",
           detail);
  }

  {  // 5: associativity
    std::string detail;
    bool ok = suite_ok("associativity", 2, 0, detail);
    ok = suite_ok("associativity", 3, 10000, detail) && ok;
    ok = suite_ok("associativity", 4, 10000, detail) && ok;
    report(5, ok,
           "associativity: exhaustive n=2 (729), 10^4 samples each n=3,4",
           detail);
  }

  {  // 6: closure
    std::string detail;
    bool ok = suite_ok("closure", 2, 0, detail);
    ok = suite_ok("closure", 3, 0, detail) && ok;
    ok = suite_ok("closure", 4, 10000, detail) && ok;
    report(6, ok,
           "closure: every product is d^k times a basis diagram "
           "(exhaustive n=2,3; 10^4 at n=4)",
           detail);
  }

  {  // 7: normal form round trip
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) ok = suite_ok("roundtrip", n, 0, detail) && ok;
    report(7, ok, "normal form round trip on all of n=2,3,4 (9/105/1569)",
           detail);
  }

  {  // 8: independent type-A oracle
    std::string detail;
    bool ok = suite_ok("pi-oracle", 3, 0, detail);
    ok = suite_ok("pi-oracle", 5, 10000, detail) && ok;
    report(8, ok,
           "decoration-forgetting products match the independent oracle "
           "(all pairs n=3; 10^4 at n=5)",
           detail);
  }

  {  // 9: opposition plus pole flip, with the homomorphism status spelled out
    std::string detail;
    bool ok = suite_ok("opposition", 3, 0, detail);
    ok = suite_ok("opposition", 4, 10000, detail) && ok;
    ok = suite_ok("pole-flip", 3, 0, detail) && ok;
    std::string flip_status = "PASS";
    {
      std::string fdetail;
      if (!suite_ok("pole-flip", 4, 10000, fdetail)) {
        flip_status = "FAIL";
        detail += fdetail;
        ok = false;
      }
    }
    report(9, ok,
           "opposition anti-automorphism and pole-flip generator mapping; "
           "pole-flip homomorphism on 10^4 samples: " +
               flip_status,
           detail);
  }

  {  // 10: extended-mode scalar relations and counts
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) ok = suite_ok("extended", n, 0, detail) && ok;
    report(10, ok,
           "extended mode: xi/theta absorption at n=2..4 and counts "
           "15/135/1785",
           detail);
  }

  {  // 11: byte determinism of the structure constant dump
    std::string detail;
    std::string a = sc_to_csv(structure_constants(3, Mode::Strict, 1));
    std::string b = sc_to_csv(structure_constants(3, Mode::Strict, 1));
    std::string c = sc_to_csv(structure_constants(3, Mode::Strict, jobs));
    std::string d = sc_to_csv(structure_constants(3, Mode::Strict, 3));
    bool ok = !a.empty() && a == b && a == c && a == d;
    if (!ok) detail = "structure constant dumps differ across runs or jobs";
    report(11, ok,
           "structure constant dump is byte-identical across runs and "
           "thread counts",
           detail);
  }

  if (g_failures > 0) std::cout << g_failures << " criteria failed\n";
  return g_failures;
}
