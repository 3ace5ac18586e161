#include "skewlr/hopf.hpp"

#include <map>
#include <tuple>

#include "skewlr/notation.hpp"

namespace skewlr {

Element unit_element() { return Element(Parts{}); }

Element basis_element(const Parts& index, Rational coefficient) { return Element(index, std::move(coefficient)); }

Rational counit(const Element& x) { return x.coefficient(Parts{}); }

Element multiply(const Element& x, const Element& y, const HopfBasis& basis) {
  Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(basis.product(a, b), ca * cb);
  return out;
}

Tensor comultiply(const Element& x, const HopfBasis& basis) {
  Tensor out;
  for (const auto& [nu, c] : x)
    for (const auto& [right, left] : basis.coproduct_by_right(nu))
      for (const auto& [l, cl] : left) out.add({l, right}, c * cl);
  return out;
}

Tensor multiply(const Tensor& x, const Tensor& y, const HopfBasis& basis) {
  Tensor out;
  for (const auto& [ab, cx] : x)
    for (const auto& [cd, cy] : y) {
      const Rational scale = cx * cy;
      const Element& left = basis.product(ab.first, cd.first);
      const Element& right = basis.product(ab.second, cd.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) out.add({l, r}, scale * cl * cr);
    }
  return out;
}

Element antipode(const Element& x, const HopfBasis& basis) {
  Element out;
  for (const auto& [rho, c] : x) {
    const int e = basis.antipode_sign_exponent(rho);
    out.add(basis.antipode_index(rho), e % 2 == 0 ? c : -c);
  }
  return out;
}

Element skew_expand(const SkewIndex& index, const HopfBasis& basis) { return basis.skew(index.outer, index.inner); }

Element harpoon(const Element& a, const Element& h, const HopfBasis& basis) {
  Element out;
  for (const auto& [lambda, ca] : a)
    for (const auto& [mu, ch] : h) out.add_scaled(basis.skew(mu, lambda), ca * ch);
  return out;
}

Tensor triple_coproduct(const Parts& tau, const Parts& sigma, const HopfBasis& basis) {
  return comultiply(basis.skew(tau, sigma), basis);
}

Rational triple_coproduct_constant(const Parts& pi, const Parts& rho, const Parts& sigma, const Parts& tau,
                                   const HopfBasis& basis) {
  if (pi.degree() + rho.degree() + sigma.degree() != tau.degree()) return Rational(0);
  Rational total(0);
  for (const auto& [upsilon, c] : basis.skew(tau, sigma)) total += c * basis.coproduct_constant(pi, rho, upsilon);
  return total;
}

SkewSum skew_product_theorem(const Parts& lambda, const Parts& mu, const Parts& sigma, const Parts& tau,
                             const HopfBasis& basis) {
  SkewSum out;
  for (const auto& [pi_rho, c] : triple_coproduct(tau, sigma, basis)) {
    const auto& [pi, rho] = pi_rho;
    const Rational signed_c = basis.antipode_sign_exponent(rho) % 2 == 0 ? c : -c;
    const Element& lower = basis.dual_skew(lambda, basis.antipode_index(rho));
    if (lower.empty()) continue;
    const Element& upper = basis.product(mu, pi);
    for (const auto& [lambda_minus, b_lower] : lower) {
      const Rational scale = signed_c * b_lower;
      for (const auto& [mu_plus, b_upper] : upper) out.add(SkewIndex{mu_plus, lambda_minus}, scale * b_upper);
    }
  }
  return out;
}

Element evaluate_skew_sum(const SkewSum& sum, const HopfBasis& basis) {
  Element out;
  for (const auto& [index, c] : sum) out.add_scaled(basis.skew(index.outer, index.inner), c);
  return out;
}

Element skew_product_oracle(const Parts& lambda, const Parts& mu, const Parts& sigma, const Parts& tau,
                            const HopfBasis& basis) {
  return multiply(basis.skew(mu, lambda), basis.skew(tau, sigma), basis);
}

LemmaOneResult verify_lemma_one(const Element& g, const Element& h, const Element& a, const Element& b,
                                const HopfBasis& primal, const HopfBasis& dual) {
  LemmaOneResult result;
  const Tensor delta_h = comultiply(h, primal);

  // (Two): (a⇀g)·h = Σ (S(h₂)⇀a) ⇀ (g·h₁)
  {
    const Element lhs = multiply(harpoon(a, g, primal), h, primal);
    Element rhs;
    for (const auto& [pair, c] : delta_h) {
      const Element s_h2 = antipode(basis_element(pair.second), primal);
      const Element acting = harpoon(s_h2, a, dual);
      const Element g_h1 = multiply(g, basis_element(pair.first), primal);
      rhs.add_scaled(harpoon(acting, g_h1, primal), c);
    }
    result.identity_two = lhs == rhs;
  }
  // (One): (h⇀b)·a = Σ h₁ ⇀ (b·(S(h₂)⇀a))
  {
    const Element lhs = multiply(harpoon(h, b, dual), a, dual);
    Element rhs;
    for (const auto& [pair, c] : delta_h) {
      const Element s_h2 = antipode(basis_element(pair.second), primal);
      const Element inner = multiply(b, harpoon(s_h2, a, dual), dual);
      rhs.add_scaled(harpoon(basis_element(pair.first), inner, dual), c);
    }
    result.identity_one = lhs == rhs;
  }
  return result;
}

LemmaOneResult verify_lemma_one(const Element& g, const Element& h, const Element& a, const HopfBasis& primal,
                                const HopfBasis& dual) {
  return verify_lemma_one(g, h, a, g, primal, dual);
}

bool verify_module_algebra(const Element& h, const Element& a, const Element& b, const HopfBasis& primal,
                           const HopfBasis& dual) {
  const Element lhs = harpoon(h, multiply(a, b, dual), dual);
  Element rhs;
  for (const auto& [pair, c] : comultiply(h, primal))
    rhs.add_scaled(multiply(harpoon(basis_element(pair.first), a, dual), harpoon(basis_element(pair.second), b, dual),
                            dual),
                   c);
  return lhs == rhs;
}

namespace {

struct TripleLess {
  bool operator()(const std::tuple<Parts, Parts, Parts>& x, const std::tuple<Parts, Parts, Parts>& y) const {
    return x < y;
  }
};
using TripleTensor = LinearCombination<std::tuple<Parts, Parts, Parts>, TripleLess>;

}  // namespace

AxiomReport verify_hopf_axioms(const HopfBasis& basis, int degree_bound) {
  AxiomReport report;
  auto fail = [&](std::string check, std::string witness) {
    report.passed = false;
    report.failed_check = std::move(check);
    report.witness = std::move(witness);
    return report;
  };
  const Parts empty;
  if (!(comultiply(unit_element(), basis) == Tensor({empty, empty}))) return fail("unit", "Δ(1) ≠ 1⊗1");

  for (int n = 0; n <= degree_bound; ++n) {
    for (const Parts& x : basis.basis_cached(n)) {
      ++report.cases;
      const std::string name = format_term(x, basis);
      const Element ex = basis_element(x);
      if (!(basis.product(empty, x) == ex) || !(basis.product(x, empty) == ex)) return fail("unit", name);

      const Parts t = basis.antipode_index(x);
      if (t.degree() != n || !basis.is_index(t)) return fail("antipode index", name);

      const Tensor delta = basis.coproduct(x);
      Element left_counit;
      Element right_counit;
      for (const auto& [pair, c] : delta) {
        if (pair.second.empty()) left_counit.add(pair.first, c);
        if (pair.first.empty()) right_counit.add(pair.second, c);
      }
      if (!(left_counit == ex) || !(right_counit == ex)) return fail("counit", name);

      TripleTensor left_assoc;
      TripleTensor right_assoc;
      for (const auto& [pair, c] : delta) {
        for (const auto& [inner, cc] : basis.coproduct(pair.first))
          left_assoc.add({inner.first, inner.second, pair.second}, c * cc);
        for (const auto& [inner, cc] : basis.coproduct(pair.second))
          right_assoc.add({pair.first, inner.first, inner.second}, c * cc);
      }
      if (!(left_assoc == right_assoc)) return fail("coassociativity", name);

      Element s_left;
      Element s_right;
      for (const auto& [pair, c] : delta) {
        s_left.add_scaled(multiply(antipode(basis_element(pair.first), basis), basis_element(pair.second), basis), c);
        s_right.add_scaled(multiply(basis_element(pair.first), antipode(basis_element(pair.second), basis), basis), c);
      }
      const Element expected = n == 0 ? unit_element() : Element();
      if (!(s_left == expected) || !(s_right == expected)) return fail("antipode", name);

      if (!(antipode(antipode(ex, basis), basis) == ex)) return fail("antipode involution", name);
    }
  }

  for (int n = 0; n <= degree_bound; ++n)
    for (int left = 0; left <= n; ++left)
      for (const Parts& a : basis.basis_cached(left))
        for (const Parts& b : basis.basis_cached(n - left)) {
          ++report.cases;
          const Tensor lhs = comultiply(basis.product(a, b), basis);
          const Tensor rhs = multiply(basis.coproduct(a), basis.coproduct(b), basis);
          if (!(lhs == rhs)) return fail("bialgebra", format_term(a, basis) + " * " + format_term(b, basis));
        }
  return report;
}

}  // namespace skewlr
