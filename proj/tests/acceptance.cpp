// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "skewlr/checks.hpp"
#include "skewlr/hopf.hpp"
#include "skewlr/kschur.hpp"
#include "skewlr/notation.hpp"
#include "skewlr/omega.hpp"
#include "skewlr/ribbon.hpp"
#include "skewlr/schur.hpp"

using namespace skewlr;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<CheckResult()> run;
};

CheckResult all_of(std::string name, const std::vector<std::function<CheckResult()>>& parts) {
  CheckResult total{std::move(name), true, 0, {}};
  for (const auto& part : parts) {
    const CheckResult r = part();
    total.cases += r.cases;
    if (!r.passed) {
      total.passed = false;
      total.counterexample = r.name + ": " + r.counterexample;
      break;
    }
  }
  return total;
}

CheckResult expect(std::string name, bool ok, std::string witness) {
  return CheckResult{std::move(name), ok, 1, ok ? std::string() : std::move(witness)};
}

CheckResult golden_kpieri() {
  const auto basis = kschur_basis(2);
  SkewSum expected;
  expected.add(SkewIndex{Parts{2, 2, 1, 1}, Parts{1}}, Rational(1));
  expected.add(SkewIndex{Parts{2, 1, 1, 1}, Parts{}}, Rational(-1));
  const SkewSum sum = skew_k_pieri(Parts{1}, Parts{2, 1, 1}, 2, 2);
  Element s211;
  s211.add(Parts{2, 1}, Rational(1));
  s211.add(Parts{1, 1, 1}, Rational(1));
  Element s2211;
  s2211.add(Parts{2, 1, 1, 1}, Rational(2));
  s2211.add(Parts{2, 2, 1}, Rational(1));
  const Element lhs = skew_product_oracle(Parts{1}, Parts{2, 1, 1}, Parts{}, Parts{2}, *basis);
  return all_of("golden", {
                              [&] { return expect("k-pieri sum", sum == expected, format_skew_sum(sum, *basis)); },
                              [&] {
                                return expect("s211/1", skew_kschur(Parts{2, 1, 1}, Parts{1}, 2) == s211,
                                              "s^(2)_{211/1}");
                              },
                              [&] {
                                return expect("s2211/1", skew_kschur(Parts{2, 2, 1, 1}, Parts{1}, 2) == s2211,
                                              "s^(2)_{2211/1}");
                              },
                              [&] {
                                return expect("both sides", evaluate_skew_sum(sum, *basis) == lhs,
                                              "expansions differ");
                              },
                          });
}

CheckResult golden_ribbon() {
  Element r2_r11;
  r2_r11.add(Parts{2}, Rational(1));
  r2_r11.add(Parts{1, 1}, Rational(1));
  return all_of("ribbon golden",
                {
                    [] {
                      return expect("descent", descent_composition({1, 4, 8, 6, 2, 3, 7, 9, 5}) == Parts{3, 1, 4, 1},
                                    "d(148623795)");
                    },
                    [] {
                      return expect("section",
                                    word_section(Parts{3, 1, 4, 1}) == Permutation{7, 8, 9, 6, 2, 3, 4, 5, 1},
                                    "w((3,1,4,1))");
                    },
                    [] {
                      return expect("conjugate", ribbon_conjugate(Parts{3, 1, 4, 1}) == Parts{2, 1, 1, 3, 1, 1},
                                    "conjugate((3,1,4,1))");
                    },
                    [&] {
                      return expect("skew", skew_ribbon(Parts{2, 2, 1}, Parts{1, 1, 1}) == r2_r11,
                                    "R_{(2,2,1)/(1,1,1)}");
                    },
                });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "k-Pieri golden example", 5, golden_kpieri},
      {2, "ribbon golden values", 1, golden_ribbon},
      {3, "engine == oracle (schur, q <= 5; ribbon <= 6; kschur k=2,3 <= 7)", 600,
       [] {
         return all_of("engine",
                       {
                           [] { return check_skew_lr(*schur_basis(), 5); },
                           [] { return check_skew_lr(*q_basis(), 5); },
                           [] { return check_skew_lr(*ribbon_basis(), 6); },
                           [] { return check_skew_lr(*kschur_basis(2), 7); },
                           [] { return check_skew_lr(*kschur_basis(3), 7); },
                       });
       }},
      {4, "combinatorial rule == algebraic rule (schur <= 4)", 0, [] { return check_combinatorial_rule(4); }},
      {5, "harpoon identities (schur, degree <= 5, 100 random)", 0,
       [] { return check_lemma1(schur_basis(), 5, 100, 20240611); }},
      {6, "Hopf axioms (schur 8, q 7, ribbon 6, kschur k=2,3 6)", 0,
       [] {
         return all_of("axioms", {
                                     [] { return check_axioms(*schur_basis(), 8); },
                                     [] { return check_axioms(*q_basis(), 7); },
                                     [] { return check_axioms(*ribbon_basis(), 6); },
                                     [] { return check_axioms(*kschur_basis(2), 6); },
                                     [] { return check_axioms(*kschur_basis(3), 6); },
                                 });
       }},
      {7, "Omega duality, scaling and constructions (<= 8)", 0, [] { return check_duality(8); }},
      {8, "LR agreement and symmetries (<= 6)", 0, [] { return check_lr_agreement(6); }},
      {9, "k-Schur stabilization (k = 5, <= 5)", 0, [] { return check_stabilization(5, 5); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = CheckResult{c.title, false, 0, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds <= 0 || seconds < c.budget_seconds;
    const bool ok = r.passed && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%ld cases, %.2fs)", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), r.cases,
                seconds);
    if (!r.passed) std::printf(" counterexample: %s", r.counterexample.c_str());
    if (!in_time) std::printf(" over budget of %.0fs", c.budget_seconds);
    std::printf("\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
