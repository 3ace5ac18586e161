#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "skewlr/hopf_basis.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

/// A word on {1..n} using each letter once.
using Permutation = std::vector<int>;

/// Lengths of the maximal ascending runs of u. Throws std::invalid_argument
/// if u is not a permutation.
Parts descent_composition(const Permutation& u);
/// The permutation whose ribbon rows are filled left to right, bottom to top:
/// the last part receives the smallest letters. d(word_section(α)) = α.
Permutation word_section(const Parts& alpha);
/// Composition of the transposed ribbon. An involution.
Parts ribbon_conjugate(const Parts& alpha);

/// {α◁β, α△β}: near-concatenation (last part of α merged with the first of β)
/// then concatenation. A single entry when either operand is empty.
std::vector<Parts> ribbon_extensions(const Parts& alpha, const Parts& beta);
/// The |γ|+1 cuts (α, β) of γ, with γ ∈ α◇β, ordered by |α|.
std::vector<std::pair<Parts, Parts>> ribbon_factorizations(const Parts& gamma);

/// Every interleaving of u with v shifted up by |u|.
std::vector<Word> shifted_shuffle(const Permutation& u, const Permutation& v);
/// Number of words in the iterated shifted shuffle of the word sections of
/// `factors` whose descent composition is gamma.
long shuffle_count(const std::vector<Parts>& factors, const Parts& gamma);

/// c^γ_{α,β} for every α, β with |α| + |β| = |γ|.
Tensor ribbon_coproduct_constants(const Parts& gamma);

/// NSym in the ribbon basis {R_α}. b^γ_{α,β} = [γ ∈ α◇β], c^γ_{α,β} counts
/// shuffle words with descent composition γ, S(R_α) = (−1)^{|α|} R_{α̃}.
class RibbonBasis : public HopfBasis {
 public:
  RibbonBasis() : HopfBasis("R") {}

  std::vector<Parts> basis(int degree) const override;
  bool is_index(const Parts& index) const override;
  int antipode_sign_exponent(const Parts& index) const override { return index.degree(); }
  Parts antipode_index(const Parts& index) const override { return ribbon_conjugate(index); }
  bool composition_indexed() const override { return true; }

 protected:
  Element compute_product(const Parts& a, const Parts& b) const override;
  Tensor compute_coproduct(const Parts& nu) const override;
  Element compute_skew(const Parts& outer, const Parts& inner) const override;
};

std::shared_ptr<const RibbonBasis> ribbon_basis();
/// QSym in the fundamental basis {F_α}, the graded dual of the ribbon basis.
std::shared_ptr<const DualBasis> fundamental_basis();

/// R_{γ/β} = Σ_α c^γ_{α,β} R_α
Element skew_ribbon(const Parts& gamma, const Parts& beta);

/// R_{β/α}·R_{τ/σ} as a signed skew sum, through the generic engine.
SkewSum skew_ribbon_product(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau);
/// The same sum enumerated literally: cuts α = α⁻◇ρ̃, extensions β⁺ ∈ β◇π and
/// triple-shuffle words with descent composition τ, each with sign (−1)^{|ρ|}.
SkewSum skew_ribbon_product_direct(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau);

/// F_{β/α}: F_ω when β ∈ ω◇α, otherwise zero.
Element fundamental_skew(const Parts& beta, const Parts& alpha);

/// F_{β/α}·F_{τ/σ} computed as a product in QSym and through the signed skew
/// sum of the engine; true when both agree.
bool verify_curious_identity(const Parts& alpha, const Parts& beta, const Parts& sigma, const Parts& tau);

}  // namespace skewlr
