#include "skewlr/kschur.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "skewlr/linalg.hpp"
#include "skewlr/shapes.hpp"

namespace skewlr {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

void check_kbounded(const Parts& lambda, int k) {
  if (!is_kbounded(lambda, k))
    throw std::invalid_argument("partition is not " + std::to_string(k) + "-bounded");
}

std::vector<Parts> kbounded_partitions(int n, int k) {
  std::vector<Parts> out;
  for (const Partition& p : enumerate_partitions(n, {.max_part = k, .max_length = std::nullopt, .strict = false})) out.push_back(p.parts());
  return out;
}

int hook(const Parts& lambda, const Parts& conj, std::size_t i, std::size_t j) {
  return (lambda[i] - static_cast<int>(j) - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
}

Parts sorted_parts(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Parts out;
  for (int p : parts)
    if (p > 0) out.push_back(p);
  return out;
}

struct Transition {
  std::vector<Parts> basis;
  std::map<Parts, std::size_t> position;
  Matrix h_in_k;  // column μ: h_μ in the s^(k)-basis
  Matrix k_in_h;  // column λ: s^(k)_λ in the h-basis
};

const Transition& transition(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Transition> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({k, n});
    if (it != cache.end()) return it->second;
  }
  Transition t;
  t.basis = kbounded_partitions(n, k);
  for (std::size_t i = 0; i < t.basis.size(); ++i) t.position[t.basis[i]] = i;
  const std::size_t size = t.basis.size();
  t.h_in_k = Matrix(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    std::map<Parts, long> current{{Parts{}, 1}};
    for (int r : t.basis[j]) {
      std::map<Parts, long> next;
      for (const auto& [lambda, c] : current)
        for (const Parts& mu : k_pieri(lambda, r, k)) next[mu] += c;
      current = std::move(next);
    }
    for (const auto& [lambda, c] : current) {
      const std::size_t i = t.position.at(lambda);
      if (c < 0 || (c != 0 && !dominates(lambda, t.basis[j])))
        throw std::logic_error("k-Kostka matrix is not unitriangular in dominance order");
      t.h_in_k(i, j) = Rational(c);
    }
    if (t.h_in_k(j, j) != Rational(1)) throw std::logic_error("k-Kostka matrix has a non-unit diagonal");
  }
  auto inv = inverse(t.h_in_k);
  if (!inv) throw std::logic_error("k-Kostka matrix is singular");
  t.k_in_h = std::move(*inv);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(k, n), std::move(t)).first->second;
}

Rational require_integer(const Rational& x) {
  if (!x.is_integer()) throw IntegralityError("k-Schur structure constant is not an integer: " + x.to_string());
  return x;
}

// Σ c_μ h_μ ↦ s^(k)-basis
Element h_to_kschur(const Element& x, int k) {
  Element out;
  for (const auto& [mu, c] : x) out.add_scaled(h_in_kschur(mu, k), c);
  for (const auto& [lambda, c] : out) require_integer(c);
  return out;
}

}  // namespace

bool is_kbounded(const Parts& lambda, int k) { return is_partition(lambda) && lambda.part(0) <= k; }

bool is_core(const Parts& kappa, int k_plus_one) {
  if (!is_partition(kappa)) return false;
  const Parts conj = conjugate(kappa);
  for (std::size_t i = 0; i < kappa.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(kappa[i]); ++j)
      if (hook(kappa, conj, i, j) == k_plus_one) return false;
  return true;
}

Parts core_from_kbounded(const Parts& lambda, int k) {
  check_k(k);
  check_kbounded(lambda, k);
  std::vector<int> rows(lambda.size());  // core row lengths
  for (std::size_t i = lambda.size(); i-- > 0;) {
    const int length = lambda[i];
    int shift = 0;
    while (true) {
      int leg = 0;
      for (std::size_t below = i + 1; below < lambda.size(); ++below)
        if (rows[below] > shift) ++leg;
      if (length + leg <= k) break;
      ++shift;
    }
    rows[i] = shift + length;
  }
  Parts core;
  for (int r : rows) core.push_back(r);
  if (!is_partition(core) || !is_core(core, k + 1)) throw std::logic_error("core construction failed");
  return core;
}

Parts kbounded_from_core(const Parts& kappa, int k) {
  check_k(k);
  if (!is_core(kappa, k + 1)) throw std::invalid_argument("shape is not a (k+1)-core");
  const Parts conj = conjugate(kappa);
  Parts out;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    int count = 0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(kappa[i]); ++j)
      if (hook(kappa, conj, i, j) <= k) ++count;
    out.push_back(count);
  }
  out.trim();
  return out;
}

Parts k_conjugate(const Parts& lambda, int k) {
  return kbounded_from_core(conjugate(core_from_kbounded(lambda, k)), k);
}

bool is_weak_strip(const Parts& lambda, const Parts& mu, int r, int k) {
  check_k(k);
  if (r < 0 || r > k || !is_kbounded(lambda, k) || !is_kbounded(mu, k)) return false;
  if (!is_horizontal_strip(Partition(lambda), Partition(mu), r)) return false;
  return is_vertical_strip(Partition(k_conjugate(lambda, k)), Partition(k_conjugate(mu, k)), r);
}

std::vector<Parts> k_pieri(const Parts& lambda, int r, int k) {
  check_k(k);
  check_kbounded(lambda, k);
  if (r < 0 || r > k) throw std::invalid_argument("k-Pieri needs 0 ≤ r ≤ k");
  std::vector<Parts> out;
  for (const Partition& mu : horizontal_strip_extensions(Partition(lambda), r, k))
    if (is_weak_strip(lambda, mu.parts(), r, k)) out.push_back(mu.parts());
  return out;
}

Element kschur_in_h(const Parts& lambda, int k) {
  check_k(k);
  check_kbounded(lambda, k);
  const Transition& t = transition(k, lambda.degree());
  const std::size_t j = t.position.at(lambda);
  Element out;
  for (std::size_t i = 0; i < t.basis.size(); ++i) out.add(t.basis[i], t.k_in_h(i, j));
  return out;
}

Element h_in_kschur(const Parts& mu, int k) {
  check_k(k);
  check_kbounded(mu, k);
  const Transition& t = transition(k, mu.degree());
  const std::size_t j = t.position.at(mu);
  Element out;
  for (std::size_t i = 0; i < t.basis.size(); ++i) out.add(t.basis[i], t.h_in_k(i, j));
  return out;
}

KSchurBasis::KSchurBasis(int k) : HopfBasis("sk" + std::to_string(k)), k_(k) { check_k(k); }

std::vector<Parts> KSchurBasis::basis(int degree) const { return kbounded_partitions(degree, k_); }

Element KSchurBasis::compute_product(const Parts& a, const Parts& b) const {
  require_index(a);
  require_index(b);
  Element in_h;
  for (const auto& [x, cx] : kschur_in_h(a, k_))
    for (const auto& [y, cy] : kschur_in_h(b, k_)) {
      std::vector<int> parts = x.to_vector();
      for (int p : y) parts.push_back(p);
      in_h.add(sorted_parts(parts), cx * cy);
    }
  return h_to_kschur(in_h, k_);
}

Tensor KSchurBasis::compute_coproduct(const Parts& nu) const {
  require_index(nu);
  // Δh_μ = Σ_{0 ≤ i ≤ μ} h_i ⊗ h_{μ−i}, componentwise.
  std::map<std::pair<Parts, Parts>, Rational> in_h;
  for (const auto& [mu, c] : kschur_in_h(nu, k_)) {
    std::vector<int> take(mu.size(), 0);
    while (true) {
      std::vector<int> rest(mu.size());
      for (std::size_t i = 0; i < mu.size(); ++i) rest[i] = mu[i] - take[i];
      in_h[{sorted_parts(take), sorted_parts(rest)}] += c;
      std::size_t i = 0;
      while (i < mu.size() && take[i] == mu[i]) take[i++] = 0;
      if (i == mu.size()) break;
      ++take[i];
    }
  }
  std::map<Parts, Element> converted;
  auto convert = [&](const Parts& h) -> const Element& {
    auto it = converted.find(h);
    if (it != converted.end()) return it->second;
    return converted.emplace(h, h_in_kschur(h, k_)).first->second;
  };
  Tensor out;
  for (const auto& [pair, c] : in_h) {
    if (c.is_zero()) continue;
    for (const auto& [l, cl] : convert(pair.first))
      for (const auto& [r, cr] : convert(pair.second)) out.add({l, r}, c * cl * cr);
  }
  for (const auto& [pair, c] : out) require_integer(c);
  return out;
}

std::shared_ptr<const KSchurBasis> kschur_basis(int k) {
  check_k(k);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KSchurBasis>> instances;
  std::lock_guard lock(mutex);
  auto& slot = instances[k];
  if (!slot) slot = std::make_shared<const KSchurBasis>(k);
  return slot;
}

Element kschur_constants(const Parts& lambda, const Parts& mu, int k) { return kschur_basis(k)->product(lambda, mu); }

Tensor kschur_coproduct_constants(const Parts& nu, int k) { return kschur_basis(k)->coproduct(nu); }

Element skew_kschur(const Parts& mu, const Parts& lambda, int k) {
  const auto basis = kschur_basis(k);
  basis->require_index(mu);
  basis->require_index(lambda);
  return basis->skew(mu, lambda);
}

SkewSum skew_k_pieri(const Parts& lambda, const Parts& mu, int r, int k) {
  check_k(k);
  check_kbounded(lambda, k);
  check_kbounded(mu, k);
  if (r < 0 || r > k) throw std::invalid_argument("skew k-Pieri needs 0 ≤ r ≤ k");
  SkewSum out;
  if (!contains(mu, lambda)) return out;
  const Parts lambda_omega = k_conjugate(lambda, k);
  for (int j = 0; j <= r && j <= lambda.degree(); ++j) {
    const int i = r - j;
    const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
    for (const Parts& lambda_minus : kbounded_partitions(lambda.degree() - j, k)) {
      if (!is_weak_strip(k_conjugate(lambda_minus, k), lambda_omega, j, k)) continue;
      for (const Parts& mu_plus : k_pieri(mu, i, k)) out.add(SkewIndex{mu_plus, lambda_minus}, sign);
    }
  }
  return out;
}

}  // namespace skewlr
