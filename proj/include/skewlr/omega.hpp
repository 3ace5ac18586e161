#pragma once

#include <memory>

#include "skewlr/hopf_basis.hpp"
#include "skewlr/shapes.hpp"

namespace skewlr {

/// q_n = Σ_{i+j=n} h_i e_j in the s-basis.
Element q_generator(int n);

/// Q_λ in the s-basis by the Pfaffian of two-row values.
Element build_Q_pfaffian(const Parts& lambda);
/// Q_λ in the s-basis by orthogonalizing products of q's under omega_pair.
Element build_Q_orthogonal(const Parts& lambda);
/// Q_λ in the s-basis. Builds both ways and throws std::logic_error if they differ.
Element build_Q(const Parts& lambda);

/// True when the p-expansion of x (given in the s-basis) uses only odd parts.
bool in_omega(const Element& x);
/// ⟨p_λ, p_μ⟩ = δ_{λμ} z_λ 2^{−ℓ(λ)} on odd-part power sums. Arguments in the
/// s-basis; throws std::invalid_argument if either lies outside Ω.
Rational omega_pair(const Element& x, const Element& y);

/// Ω in the basis {Q_λ : λ strict}. Product constants g, coproduct constants
/// f, S(Q_ρ) = (−1)^{|ρ|} Q_ρ. Constants come from Λ by exact solves back to
/// the Q-basis; non-integral values raise IntegralityError.
class QBasis : public HopfBasis {
 public:
  QBasis() : HopfBasis("Q") {}

  std::vector<Parts> basis(int degree) const override;
  bool is_index(const Parts& index) const override { return is_strict_partition(index); }
  int antipode_sign_exponent(const Parts& index) const override { return index.degree(); }
  Parts antipode_index(const Parts& index) const override { return index; }

 protected:
  Element compute_product(const Parts& a, const Parts& b) const override;
  Tensor compute_coproduct(const Parts& nu) const override;
};

std::shared_ptr<const QBasis> q_basis();
/// The dual basis {P_λ = 2^{−ℓ(λ)} Q_λ}: product constants f, coproduct constants g.
std::shared_ptr<const DualBasis> p_basis();

/// Σ_ν g^ν_{λμ} ν
Element g_constants(const Parts& lambda, const Parts& mu);
/// Σ_ν f^ν_{λμ} ν
Element f_constants(const Parts& lambda, const Parts& mu);

/// Q_{ν/μ} = Σ_λ f^ν_{λμ} Q_λ
Element skew_Q(const Parts& nu, const Parts& mu);

/// Q_{μ/λ}·Q_{τ/σ} as a signed skew sum; with p_side the same for P.
SkewSum skew_product_Q(const Parts& lambda, const Parts& mu, const Parts& sigma, const Parts& tau,
                       bool p_side = false);

}  // namespace skewlr
