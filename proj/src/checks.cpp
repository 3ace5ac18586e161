#include "skewlr/checks.hpp"

#include <random>
#include <stdexcept>

#include "skewlr/hopf.hpp"
#include "skewlr/kschur.hpp"
#include "skewlr/notation.hpp"
#include "skewlr/omega.hpp"
#include "skewlr/ribbon.hpp"
#include "skewlr/schur.hpp"
#include "skewlr/shapes.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

namespace {

std::string quad(const Parts& lambda, const Parts& mu, const Parts& sigma, const Parts& tau, const HopfBasis& b) {
  return format_skew_index({mu, lambda}, b) + " * " + format_skew_index({tau, sigma}, b);
}

bool fail(CheckResult& r, std::string witness) {
  r.passed = false;
  r.counterexample = std::move(witness);
  return false;
}

Element random_element(std::mt19937& rng, const HopfBasis& basis, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  Element x;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const auto& indices = basis.basis_cached(degree(rng));
    x.add(indices[rng() % indices.size()], Rational(num(rng), den(rng)));
  }
  return x;
}

}  // namespace

std::shared_ptr<const HopfBasis> algebra_by_name(const std::string& name, int k) {
  if (name == "kschur") {
    if (k < 1) throw std::invalid_argument("algebra 'kschur' needs --k ≥ 1");
    return kschur_basis(k);
  }
  if (k != 0) throw std::invalid_argument("--k is only meaningful for algebra 'kschur'");
  if (name == "schur") return schur_basis();
  if (name == "q") return q_basis();
  if (name == "p") return p_basis();
  if (name == "ribbon") return ribbon_basis();
  if (name == "fundamental") return fundamental_basis();
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::pair<Parts, Parts>> skew_pairs(const HopfBasis& basis, int max_degree) {
  std::vector<std::pair<Parts, Parts>> out;
  for (int n = 0; n <= max_degree; ++n)
    for (const Parts& outer : basis.basis_cached(n))
      for (int m = 0; m <= n; ++m)
        for (const Parts& inner : basis.basis_cached(m))
          if (basis.composition_indexed() || contains(outer, inner)) out.emplace_back(inner, outer);
  return out;
}

CheckResult check_axioms(const HopfBasis& basis, int max_degree) {
  CheckResult r{"axioms", true, 0, {}};
  const AxiomReport report = verify_hopf_axioms(basis, max_degree);
  r.cases = report.cases;
  if (!report.passed) fail(r, report.failed_check + " at " + report.witness);
  return r;
}

CheckResult check_skew_lr(const HopfBasis& basis, int max_degree) {
  CheckResult r{"skew-lr", true, 0, {}};
  const auto pairs = skew_pairs(basis, max_degree);
  for (const auto& [lambda, mu] : pairs)
    for (const auto& [sigma, tau] : pairs) {
      ++r.cases;
      const Element engine = evaluate_skew_sum(skew_product_theorem(lambda, mu, sigma, tau, basis), basis);
      if (!(engine == skew_product_oracle(lambda, mu, sigma, tau, basis))) {
        fail(r, quad(lambda, mu, sigma, tau, basis));
        return r;
      }
    }
  return r;
}

CheckResult check_combinatorial_rule(int max_degree) {
  CheckResult r{"skew-lr-combinatorial", true, 0, {}};
  const auto& basis = *schur_basis();
  const auto pairs = skew_pairs(basis, max_degree);
  for (const auto& [lambda, mu] : pairs)
    for (const auto& [sigma, tau] : pairs) {
      ++r.cases;
      const SkewSum combinatorial =
          skew_lr_combinatorial(Partition(lambda), Partition(mu), Partition(sigma), Partition(tau));
      if (!(combinatorial == skew_product_theorem(lambda, mu, sigma, tau, basis))) {
        fail(r, quad(lambda, mu, sigma, tau, basis));
        return r;
      }
    }
  return r;
}

CheckResult check_ribbon_direct(int max_degree) {
  CheckResult r{"skew-lr-direct", true, 0, {}};
  const auto& basis = *ribbon_basis();
  const auto pairs = skew_pairs(basis, max_degree);
  for (const auto& [alpha, beta] : pairs)
    for (const auto& [sigma, tau] : pairs) {
      ++r.cases;
      if (!(skew_ribbon_product(alpha, beta, sigma, tau) == skew_ribbon_product_direct(alpha, beta, sigma, tau))) {
        fail(r, quad(alpha, beta, sigma, tau, basis));
        return r;
      }
    }
  return r;
}

CheckResult check_lemma1(std::shared_ptr<const HopfBasis> primal, int max_degree, int random_trials, unsigned seed) {
  CheckResult r{"lemma1", true, 0, {}};
  const DualBasis dual(primal->tag() + "*", primal);
  const HopfBasis& h = *primal;
  for (int total = 0; total <= max_degree; ++total)
    for (int dg = 0; dg <= total; ++dg)
      for (int dh = 0; dg + dh <= total; ++dh)
        for (const Parts& g : h.basis_cached(dg))
          for (const Parts& x : h.basis_cached(dh))
            for (const Parts& a : h.basis_cached(total - dg - dh)) {
              ++r.cases;
              if (!verify_lemma_one(Element(g), Element(x), Element(a), h, dual).ok()) {
                fail(r, "g=" + format_term(g, h) + " h=" + format_term(x, h) + " a=" + format_term(a, h));
                return r;
              }
            }
  std::mt19937 rng(seed);
  const int spread = std::min(max_degree, 3);
  for (int trial = 0; trial < random_trials; ++trial) {
    ++r.cases;
    const Element g = random_element(rng, h, spread);
    const Element x = random_element(rng, h, spread);
    const Element a = random_element(rng, h, spread);
    const Element b = random_element(rng, h, spread);
    if (!verify_lemma_one(g, x, a, b, h, dual).ok() || !verify_module_algebra(x, a, b, h, dual)) {
      fail(r, "random trial " + std::to_string(trial));
      return r;
    }
  }
  return r;
}

CheckResult check_duality(int max_degree) {
  CheckResult r{"duality", true, 0, {}};
  const auto& q = *q_basis();
  for (int n = 0; n <= max_degree; ++n)
    for (const Parts& lambda : q.basis_cached(n)) {
      ++r.cases;
      const Element built = build_Q(lambda);
      if (!(built == build_Q_orthogonal(lambda))) {
        fail(r, "constructions differ at " + format_term(lambda, q));
        return r;
      }
      const Element p = built * Rational::pow2(-static_cast<int>(lambda.size()));
      for (const Parts& mu : q.basis_cached(n)) {
        ++r.cases;
        if (omega_pair(p, build_Q(mu)) != Rational(lambda == mu ? 1 : 0)) {
          fail(r, "<P" + format_parts(lambda) + ", " + format_term(mu, q) + "> != delta");
          return r;
        }
      }
    }
  for (int n = 0; n <= max_degree; ++n)
    for (int a = 0; a <= n; ++a)
      for (const Parts& lambda : q.basis_cached(a))
        for (const Parts& mu : q.basis_cached(n - a)) {
          const Element g = g_constants(lambda, mu);
          const Element f = f_constants(lambda, mu);
          for (const Parts& nu : q.basis_cached(n)) {
            ++r.cases;
            const Rational gv = g.coefficient(nu);
            const Rational fv = f.coefficient(nu);
            const int shift = static_cast<int>(lambda.size() + mu.size()) - static_cast<int>(nu.size());
            if (!gv.is_integer() || !fv.is_integer() || gv.sign() < 0 || fv.sign() < 0 ||
                gv != Rational::pow2(shift) * fv) {
              fail(r, "g/f scaling fails for " + format_term(lambda, q) + " * " + format_term(mu, q) + " -> " +
                          format_term(nu, q));
              return r;
            }
          }
        }
  return r;
}

CheckResult check_lr_agreement(int max_degree) {
  CheckResult r{"lr-agreement", true, 0, {}};
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& nu : enumerate_partitions(n))
      for (const auto& lambda : enumerate_subpartitions(nu))
        for (const auto& mu : enumerate_partitions(n - lambda.size())) {
          ++r.cases;
          const long c = lr_coefficient(lambda, mu, nu);
          if (c != lr_coefficient_yamanouchi(lambda, mu, nu) || c != lr_coefficient(mu, lambda, nu) ||
              c != lr_coefficient(conjugate(lambda), conjugate(mu), conjugate(nu))) {
            fail(r, "c^" + format_parts(nu.parts()) + "_" + format_parts(lambda.parts()) + "," +
                        format_parts(mu.parts()));
            return r;
          }
        }
  return r;
}

CheckResult check_pieri(int k, int max_degree) {
  CheckResult r{"pieri", true, 0, {}};
  const auto& basis = *kschur_basis(k);
  if (k == 2 && max_degree >= 4) {
    ++r.cases;
    SkewSum golden;
    golden.add(SkewIndex{Parts{2, 2, 1, 1}, Parts{1}}, Rational(1));
    golden.add(SkewIndex{Parts{2, 1, 1, 1}, Parts{}}, Rational(-1));
    if (!(skew_k_pieri(Parts{1}, Parts{2, 1, 1}, 2, 2) == golden)) {
      fail(r, "golden case [2,1,1]/[1] * h_2");
      return r;
    }
  }
  for (const auto& [lambda, mu] : skew_pairs(basis, max_degree))
    for (int rr = 0; rr <= k; ++rr) {
      ++r.cases;
      const Parts tau = rr == 0 ? Parts{} : Parts{rr};
      const Element literal = evaluate_skew_sum(skew_k_pieri(lambda, mu, rr, k), basis);
      const Element engine = evaluate_skew_sum(skew_product_theorem(lambda, mu, Parts{}, tau, basis), basis);
      if (!(literal == engine) || !(literal == skew_product_oracle(lambda, mu, Parts{}, tau, basis))) {
        fail(r, format_skew_index({mu, lambda}, basis) + " * h_" + std::to_string(rr));
        return r;
      }
    }
  return r;
}

CheckResult check_stabilization(int k, int max_degree) {
  CheckResult r{"stabilization", true, 0, {}};
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      if (lambda[0] > k) continue;
      ++r.cases;
      if (!(kschur_in_h(lambda.parts(), k) == basis_convert(classical('s', lambda.parts()), 'h').terms)) {
        fail(r, "s^(" + std::to_string(k) + ")" + format_parts(lambda.parts()));
        return r;
      }
    }
  return r;
}

}  // namespace skewlr
