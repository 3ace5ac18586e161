#pragma once

#include <memory>
#include <vector>

#include "skewlr/hopf_basis.hpp"

namespace skewlr {

/// Partition with λ₁ ≤ k.
bool is_kbounded(const Parts& lambda, int k);
/// No cell of hook length exactly k + 1.
bool is_core(const Parts& kappa, int k_plus_one);

/// The (k+1)-core of a k-bounded partition: rows placed bottom-up, each shifted
/// right until its leftmost cell has hook length ≤ k.
Parts core_from_kbounded(const Parts& lambda, int k);
/// Inverse bijection: row i keeps its cells of hook length ≤ k. Throws
/// std::invalid_argument unless kappa is a (k+1)-core.
Parts kbounded_from_core(const Parts& kappa, int k);
/// λ^{ω_k} = kbounded_from_core(core_from_kbounded(λ)').
Parts k_conjugate(const Parts& lambda, int k);

/// λ ⇒_r μ: μ/λ is a horizontal r-strip and μ^{ω_k}/λ^{ω_k} a vertical
/// r-strip. False whenever r > k.
bool is_weak_strip(const Parts& lambda, const Parts& mu, int r, int k);
/// Every μ with λ ⇒_r μ, reverse-lexicographic. Throws std::invalid_argument if r > k.
std::vector<Parts> k_pieri(const Parts& lambda, int r, int k);

/// s^(k)_λ in the h-basis (indices are the partitions of h products).
Element kschur_in_h(const Parts& lambda, int k);
/// h_μ in the s^(k)-basis, μ k-bounded.
Element h_in_kschur(const Parts& mu, int k);

/// Λ_(k) in the k-Schur basis. Constants are computed by multiplying and
/// comultiplying h-expansions; S(s^(k)_λ) = (−1)^{|λ|} s^(k)_{λ^{ω_k}}.
class KSchurBasis : public HopfBasis {
 public:
  explicit KSchurBasis(int k);

  int k() const { return k_; }
  std::vector<Parts> basis(int degree) const override;
  bool is_index(const Parts& index) const override { return is_kbounded(index, k_); }
  int antipode_sign_exponent(const Parts& index) const override { return index.degree(); }
  Parts antipode_index(const Parts& index) const override { return k_conjugate(index, k_); }

 protected:
  Element compute_product(const Parts& a, const Parts& b) const override;
  Tensor compute_coproduct(const Parts& nu) const override;

 private:
  int k_;
};

/// Shared instance per k ≥ 1.
std::shared_ptr<const KSchurBasis> kschur_basis(int k);

Element kschur_constants(const Parts& lambda, const Parts& mu, int k);
Tensor kschur_coproduct_constants(const Parts& nu, int k);
/// s^(k)_{μ/λ}
Element skew_kschur(const Parts& mu, const Parts& lambda, int k);

/// s^(k)_{μ/λ}·h_r as Σ_{i+j=r} (−1)^j [μ⁺/λ⁻] over μ ⇒_i μ⁺ and
/// (λ⁻)^{ω_k} ⇒_j λ^{ω_k}.
SkewSum skew_k_pieri(const Parts& lambda, const Parts& mu, int r, int k);

}  // namespace skewlr
