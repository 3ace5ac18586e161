#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "skewlr/checks.hpp"
#include "skewlr/hopf.hpp"
#include "skewlr/notation.hpp"
#include "skewlr/schur.hpp"

using namespace skewlr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string algebra = "schur";
  int k = 0;
  std::string format = "text";
  int max_degree = 16;
  long max_terms = 100000;
};

void add_common(CLI::App* sub, Common& c, bool guards) {
  sub->add_option("--algebra", c.algebra, "schur, q, p, ribbon, fundamental or kschur")
      ->check(CLI::IsMember({"schur", "q", "p", "ribbon", "fundamental", "kschur"}));
  sub->add_option("--k", c.k, "k for the k-Schur algebra")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  if (guards) {
    sub->add_option("--max-degree", c.max_degree, "refuse results above this degree");
    sub->add_option("--max-terms", c.max_terms, "refuse results with more terms");
  }
}

void guard_degree(int degree, const Common& c) {
  if (degree > c.max_degree)
    throw GuardError("degree " + std::to_string(degree) + " exceeds --max-degree " + std::to_string(c.max_degree));
}

template <class Combination>
void guard_terms(const Combination& x, const Common& c) {
  if (static_cast<long>(x.size()) > c.max_terms)
    throw GuardError(std::to_string(x.size()) + " terms exceed --max-terms " + std::to_string(c.max_terms));
}

int max_degree_of(const Element& x) {
  int d = 0;
  for (const auto& [index, c] : x) d = std::max(d, index.degree());
  return d;
}

Parts parse_index(const std::string& text, const HopfBasis& basis) {
  const Parts p = parse_parts(text);
  if (!basis.is_index(p)) throw ParseError("'" + text + "' is not an index of algebra '" + basis.tag() + "'");
  return p;
}

SkewIndex parse_skew(const std::string& text, const HopfBasis& basis) {
  SkewIndex s = parse_skew_index(text, basis);
  if (!basis.composition_indexed() && !contains(s.outer, s.inner))
    throw ParseError("'" + text + "': inner shape is not contained in the outer shape");
  return s;
}

int cmd_product(const Common& c, const std::string& x_text, const std::string& y_text) {
  const auto basis = algebra_by_name(c.algebra, c.k);
  const Element x = parse_element(x_text, *basis);
  const Element y = parse_element(y_text, *basis);
  guard_degree(max_degree_of(x) + max_degree_of(y), c);
  const Element xy = multiply(x, y, *basis);
  guard_terms(xy, c);
  std::cout << (c.format == "json" ? element_to_json(xy, *basis) : format_element(xy, *basis)) << '\n';
  return kExitOk;
}

int cmd_skew_product(const Common& c, const std::string& left, const std::string& right, bool combinatorial) {
  if (combinatorial && c.algebra != "schur") throw UsageError("--combinatorial is only available for schur");
  const auto basis = algebra_by_name(c.algebra, c.k);
  const SkewIndex a = parse_skew(left, *basis);
  const SkewIndex b = parse_skew(right, *basis);
  guard_degree(a.outer.degree() + b.outer.degree(), c);
  const SkewSum sum = combinatorial ? skew_lr_combinatorial(Partition(a.inner), Partition(a.outer),
                                                            Partition(b.inner), Partition(b.outer))
                                    : skew_product_theorem(a.inner, a.outer, b.inner, b.outer, *basis);
  guard_terms(sum, c);
  const Element expansion = evaluate_skew_sum(sum, *basis);
  guard_terms(expansion, c);
  if (c.format == "json") {
    const nlohmann::json doc{{"sum", nlohmann::json::parse(skew_sum_to_json(sum, *basis))},
                             {"expansion", nlohmann::json::parse(element_to_json(expansion, *basis))}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << format_skew_sum(sum, *basis) << "\n---\n" << format_element(expansion, *basis) << '\n';
  }
  return kExitOk;
}

int cmd_lr(const Common& c, const std::string& l, const std::string& m, const std::string& n) {
  const auto basis = algebra_by_name(c.algebra, c.k);
  const Parts lambda = parse_index(l, *basis);
  const Parts mu = parse_index(m, *basis);
  const Parts nu = parse_index(n, *basis);
  guard_degree(nu.degree(), c);
  const Rational value = basis->product(lambda, mu).coefficient(nu);
  std::ostringstream os;
  os << value;
  if (c.format == "json")
    std::cout << nlohmann::json{{"value", os.str()}}.dump() << '\n';
  else
    std::cout << os.str() << '\n';
  return kExitOk;
}

int cmd_verify(const Common& c, int degree, const std::string& check) {
  const auto basis = algebra_by_name(c.algebra, c.k);
  const bool omega = c.algebra == "q" || c.algebra == "p";
  const bool kschur = c.algebra == "kschur";
  if (check == "duality" && !omega) throw UsageError("--check duality needs algebra q or p");
  if (check == "pieri" && !kschur) throw UsageError("--check pieri needs algebra kschur");
  if (degree < 0) throw UsageError("--max-degree must be nonnegative");
  if (degree > 12) throw GuardError("--max-degree above 12 is refused for verify");

  const bool all = check == "all";
  std::vector<CheckResult> results;
  auto run = [&](const CheckResult& r) {
    results.push_back(r);
    return r.passed;
  };
  bool ok = true;
  if (ok && (all || check == "axioms")) ok = run(check_axioms(*basis, degree));
  if (ok && (all || check == "lemma1")) ok = run(check_lemma1(basis, degree));
  if (ok && (all || check == "skew-lr")) {
    ok = run(check_skew_lr(*basis, degree));
    if (ok && c.algebra == "schur") ok = run(check_combinatorial_rule(degree));
    if (ok && c.algebra == "ribbon") ok = run(check_ribbon_direct(degree));
  }
  if (ok && omega && (all || check == "duality")) ok = run(check_duality(degree));
  if (ok && kschur && (all || check == "pieri")) ok = run(check_pieri(c.k, degree));

  if (c.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json entry{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
      if (!r.passed) entry["counterexample"] = r.counterexample;
      checks.push_back(entry);
    }
    std::cout << nlohmann::json{{"passed", ok}, {"checks", checks}}.dump() << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.cases << " cases";
      if (!r.passed) std::cout << "\tcounterexample: " << r.counterexample;
      std::cout << '\n';
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew Littlewood-Richardson rules in combinatorial Hopf algebras"};
  app.require_subcommand(1);

  Common c;
  std::string x, y;
  auto* product = app.add_subcommand("product", "Multiply two elements");
  add_common(product, c, true);
  product->add_option("x", x)->required();
  product->add_option("y", y)->required();

  bool combinatorial = false;
  auto* skew = app.add_subcommand("skew-product", "Expand a product of two skew elements");
  add_common(skew, c, true);
  skew->add_option("left", x, "outer/inner")->required();
  skew->add_option("right", y, "outer/inner")->required();
  skew->add_flag("--combinatorial", combinatorial, "use the tableau rule (schur only)");

  std::string lambda, mu, nu;
  auto* lr = app.add_subcommand("lr", "One structure constant: coefficient of nu in lambda * mu");
  add_common(lr, c, true);
  lr->add_option("lambda", lambda)->required();
  lr->add_option("mu", mu)->required();
  lr->add_option("nu", nu)->required();

  int verify_degree = 4;
  std::string check = "all";
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  add_common(verify, c, false);
  verify->add_option("--max-degree", verify_degree, "sweep bound");
  verify->add_option("--check", check)->check(CLI::IsMember({"axioms", "lemma1", "skew-lr", "duality", "pieri", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if ((c.algebra == "kschur") != (c.k > 0)) throw UsageError("--k is required iff --algebra kschur");
    if (*product) return cmd_product(c, x, y);
    if (*skew) return cmd_skew_product(c, x, y, combinatorial);
    if (*lr) return cmd_lr(c, lambda, mu, nu);
    return cmd_verify(c, verify_degree, check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const CapacityError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitGuard;
  }
}
