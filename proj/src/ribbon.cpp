#include "skewlr/ribbon.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewlr/hopf.hpp"
#include "skewlr/shapes.hpp"

namespace skewlr {

namespace {

std::vector<Parts> compositions_of(int n) {
  std::vector<Parts> out;
  for (const Composition& c : enumerate_compositions(n)) out.push_back(c.parts());
  return out;
}

// Positions i (1-based) with a descent between letters i and i+1.
std::vector<bool> descent_mask(const Parts& gamma) {
  std::vector<bool> mask(gamma.degree() + 1, false);
  int sum = 0;
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
    sum += gamma[i];
    mask[sum] = true;
  }
  return mask;
}

void check_composition(const Parts& alpha) {
  if (!is_composition(alpha)) throw std::invalid_argument("ribbon index must be a composition");
}

}  // namespace

Parts descent_composition(const Permutation& u) {
  std::vector<bool> seen(u.size() + 1, false);
  for (int x : u) {
    if (x < 1 || x > static_cast<int>(u.size()) || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
  Parts out;
  int run = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++run;
    if (i + 1 == u.size() || u[i] > u[i + 1]) {
      out.push_back(run);
      run = 0;
    }
  }
  return out;
}

Permutation word_section(const Parts& alpha) {
  check_composition(alpha);
  Permutation out(alpha.degree());
  int next = 1;
  int end = alpha.degree();
  for (std::size_t i = alpha.size(); i-- > 0;) {
    const int start = end - alpha[i];
    for (int j = start; j < end; ++j) out[j] = next++;
    end = start;
  }
  return out;
}

Parts ribbon_conjugate(const Parts& alpha) {
  check_composition(alpha);
  const int n = alpha.degree();
  if (n == 0) return {};
  const std::vector<bool> mask = descent_mask(alpha);
  Parts out;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    // i ∈ D(α̃) iff n − i ∉ D(α)
    if (!mask[n - i]) {
      out.push_back(i - last);
      last = i;
    }
  }
  out.push_back(n - last);
  return out;
}

std::vector<Parts> ribbon_extensions(const Parts& alpha, const Parts& beta) {
  check_composition(alpha);
  check_composition(beta);
  if (alpha.empty()) return {beta};
  if (beta.empty()) return {alpha};
  Parts near = alpha;
  near.set(near.size() - 1, alpha.back() + beta.front());
  for (std::size_t i = 1; i < beta.size(); ++i) near.push_back(beta[i]);
  Parts cat = alpha;
  for (int part : beta) cat.push_back(part);
  return {near, cat};
}

std::vector<std::pair<Parts, Parts>> ribbon_factorizations(const Parts& gamma) {
  check_composition(gamma);
  std::vector<std::pair<Parts, Parts>> out;
  out.emplace_back(Parts{}, gamma);
  Parts head;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (int x = 1; x <= gamma[i]; ++x) {
      if (i + 1 == gamma.size() && x == gamma[i]) break;
      Parts left = head;
      left.push_back(x);
      Parts right;
      if (x < gamma[i]) right.push_back(gamma[i] - x);
      for (std::size_t j = i + 1; j < gamma.size(); ++j) right.push_back(gamma[j]);
      out.emplace_back(left, right);
    }
    head.push_back(gamma[i]);
  }
  if (!gamma.empty()) out.emplace_back(gamma, Parts{});
  return out;
}

std::vector<Word> shifted_shuffle(const Permutation& u, const Permutation& v) {
  std::vector<Word> out;
  const int shift = static_cast<int>(u.size());
  Word current;
  auto recurse = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.push_back(current);
      return;
    }
    if (i < u.size()) {
      current.push_back(u[i]);
      self(self, i + 1, j);
      current.pop_back();
    }
    if (j < v.size()) {
      current.push_back(v[j] + shift);
      self(self, i, j + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

long shuffle_count(const std::vector<Parts>& factors, const Parts& gamma) {
  int total = 0;
  for (const Parts& f : factors) total += f.degree();
  if (total != gamma.degree()) return 0;
  if (total == 0) return 1;
  const std::size_t k = factors.size();
  std::vector<std::vector<int>> letters(k);
  int shift = 0;
  for (std::size_t t = 0; t < k; ++t) {
    for (int x : word_section(factors[t])) letters[t].push_back(x + shift);
    shift += factors[t].degree();
  }
  const std::vector<bool> descent = descent_mask(gamma);
  // Mixed-radix state over positions, plus the source of the last letter.
  std::vector<std::size_t> radix(k);
  std::size_t states = 1;
  for (std::size_t t = 0; t < k; ++t) {
    radix[t] = states;
    states *= letters[t].size() + 1;
  }
  std::vector<long> count(states * k, 0);
  std::vector<std::size_t> pos(k);
  auto decode = [&](std::size_t s) {
    int placed = 0;
    for (std::size_t t = 0; t < k; ++t) {
      pos[t] = (s / radix[t]) % (letters[t].size() + 1);
      placed += static_cast<int>(pos[t]);
    }
    return placed;
  };
  for (std::size_t t = 0; t < k; ++t)
    if (!letters[t].empty()) count[radix[t] * k + t] = 1;
  long result = 0;
  // States are visited in increasing index, which respects the placement order.
  for (std::size_t s = 0; s < states; ++s) {
    const int placed = decode(s);
    for (std::size_t last = 0; last < k; ++last) {
      const long c = count[s * k + last];
      if (c == 0) continue;
      if (placed == total) {
        result += c;
        continue;
      }
      const int previous = letters[last][pos[last] - 1];
      for (std::size_t t = 0; t < k; ++t) {
        if (pos[t] == letters[t].size()) continue;
        const int next = letters[t][pos[t]];
        if ((previous > next) != descent[placed]) continue;
        count[(s + radix[t]) * k + t] += c;
      }
    }
  }
  return result;
}

Tensor ribbon_coproduct_constants(const Parts& gamma) {
  check_composition(gamma);
  Tensor out;
  const int n = gamma.degree();
  for (int m = 0; m <= n; ++m)
    for (const Parts& alpha : compositions_of(m))
      for (const Parts& beta : compositions_of(n - m)) {
        const long c = shuffle_count({alpha, beta}, gamma);
        if (c != 0) out.add({alpha, beta}, Rational(c));
      }
  return out;
}

std::vector<Parts> RibbonBasis::basis(int degree) const { return compositions_of(degree); }

bool RibbonBasis::is_index(const Parts& index) const { return is_composition(index); }

Element RibbonBasis::compute_product(const Parts& a, const Parts& b) const {
  Element out;
  for (const Parts& gamma : ribbon_extensions(a, b)) out.add(gamma, Rational(1));
  return out;
}

Tensor RibbonBasis::compute_coproduct(const Parts& nu) const { return ribbon_coproduct_constants(nu); }

Element RibbonBasis::compute_skew(const Parts& outer, const Parts& inner) const {
  require_index(outer);
  require_index(inner);
  Element out;
  for (const Parts& alpha : compositions_of(outer.degree() - inner.degree()))
    out.add(alpha, Rational(shuffle_count({alpha, inner}, outer)));
  return out;
}

std::shared_ptr<const RibbonBasis> ribbon_basis() {
  static const auto instance = std::make_shared<const RibbonBasis>();
  return instance;
}

std::shared_ptr<const DualBasis> fundamental_basis() {
  static const auto instance = std::make_shared<const DualBasis>("F", ribbon_basis());
  return instance;
}

Element skew_ribbon(const Parts& gamma, const Parts& beta) {
  check_composition(gamma);
  check_composition(beta);
  return ribbon_basis()->skew(gamma, beta);
}

SkewSum skew_ribbon_product(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau) {
  for (const Parts* x : {&alpha, &beta, &sigma, &tau}) check_composition(*x);
  return skew_product_theorem(alpha, beta, sigma, tau, *ribbon_basis());
}

SkewSum skew_ribbon_product_direct(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau) {
  for (const Parts* x : {&alpha, &beta, &sigma, &tau}) check_composition(*x);
  SkewSum out;
  const int free_cells = tau.degree() - sigma.degree();
  if (free_cells < 0) return out;
  for (const auto& [alpha_minus, tail] : ribbon_factorizations(alpha)) {
    const Parts rho = ribbon_conjugate(tail);
    if (rho.degree() > free_cells) continue;
    const Rational sign = rho.degree() % 2 == 0 ? Rational(1) : Rational(-1);
    for (const Parts& pi : compositions_of(free_cells - rho.degree())) {
      const long words = shuffle_count({pi, rho, sigma}, tau);
      if (words == 0) continue;
      for (const Parts& beta_plus : ribbon_extensions(beta, pi))
        out.add(SkewIndex{beta_plus, alpha_minus}, sign * Rational(words));
    }
  }
  return out;
}

Element fundamental_skew(const Parts& beta, const Parts& alpha) {
  check_composition(beta);
  check_composition(alpha);
  if (alpha.degree() > beta.degree()) return {};
  const auto cuts = ribbon_factorizations(beta);
  const auto& [omega, tail] = cuts[beta.degree() - alpha.degree()];
  if (tail != alpha) return {};
  return Element(omega);
}

bool verify_curious_identity(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau) {
  const HopfBasis& f = *fundamental_basis();
  const Element direct = multiply(fundamental_skew(beta, alpha), fundamental_skew(tau, sigma), f);
  const Element engine = evaluate_skew_sum(skew_product_theorem(alpha, beta, sigma, tau, f), f);
  return direct == engine;
}

}  // namespace skewlr
