#pragma once

#include <memory>

#include "skewlr/hopf_basis.hpp"
#include "skewlr/shapes.hpp"

namespace skewlr {

/// Λ in the Schur basis {s_λ}. Self-dual: product and coproduct constants are
/// both Littlewood-Richardson coefficients. S(s_ρ) = (−1)^{|ρ|} s_{ρ'}.
class SchurBasis : public HopfBasis {
 public:
  SchurBasis() : HopfBasis("s") {}

  std::vector<Parts> basis(int degree) const override;
  bool is_index(const Parts& index) const override { return is_partition(index); }
  int antipode_sign_exponent(const Parts& index) const override { return index.degree(); }
  Parts antipode_index(const Parts& index) const override { return conjugate(index); }

 protected:
  Element compute_product(const Parts& a, const Parts& b) const override;
  Tensor compute_coproduct(const Parts& nu) const override;
  Element compute_skew(const Parts& outer, const Parts& inner) const override;
};

/// Process-wide instance.
std::shared_ptr<const SchurBasis> schur_basis();

/// A symmetric function in one of the classical bases: m, h, e, p or s.
struct ClassicalElement {
  char tag = 's';
  Element terms;
  friend bool operator==(const ClassicalElement&, const ClassicalElement&) = default;
};

bool is_classical_tag(char tag);
ClassicalElement classical(char tag, const Parts& index, Rational coefficient = Rational(1));

/// Re-expresses x in the target basis. Exact; throws std::invalid_argument on an unknown tag.
ClassicalElement basis_convert(const ClassicalElement& x, char target);
/// Shorthand for basis_convert(x, 's').terms.
Element to_schur(const ClassicalElement& x);

/// Hall inner product: ⟨s_λ, s_μ⟩ = δ_{λμ}.
Rational hall_pair(const ClassicalElement& x, const ClassicalElement& y);

/// Product of two symmetric functions, returned in the s-basis.
Element schur_multiply(const Element& x, const Element& y);

/// Signed sum over triples (S⁻, S⁺, S) of tableaux of shapes (λ/λ⁻)', μ⁺/μ and
/// σ with S⁻*S⁺*S Knuth-equivalent to the Yamanouchi tableau of τ, each
/// contributing (−1)^{|S⁻|}[μ⁺/λ⁻]. Empty unless λ ⊆ μ and σ ⊆ τ.
SkewSum skew_lr_combinatorial(const Partition& lambda, const Partition& mu, const Partition& sigma,
                              const Partition& tau);

/// Δ(s_{τ/σ}) through triples (R⁻, R⁺, S) with sh(S) = σ and
/// R⁻*R⁺*S ≡_K T_τ. Empty unless σ ⊆ τ.
Tensor coproduct_skew(const Partition& tau, const Partition& sigma);

}  // namespace skewlr
