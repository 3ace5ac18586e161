#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewlr/hopf_basis.hpp"

namespace skewlr {

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string counterexample;
};

/// "schur", "q", "p", "ribbon", "fundamental" or "kschur" (k ≥ 1 required
/// for kschur and rejected otherwise). Throws std::invalid_argument.
std::shared_ptr<const HopfBasis> algebra_by_name(const std::string& name, int k = 0);

/// Index pairs (inner, outer) with |outer| ≤ max_degree over which skew
/// sweeps run: containment for partition indices, every pair with
/// |inner| ≤ |outer| for composition indices.
std::vector<std::pair<Parts, Parts>> skew_pairs(const HopfBasis& basis, int max_degree);

CheckResult check_axioms(const HopfBasis& basis, int max_degree);
/// Engine ≡ oracle for every pair of skew pairs up to max_degree.
CheckResult check_skew_lr(const HopfBasis& basis, int max_degree);
/// Combinatorial Schur rule ≡ engine, formally.
CheckResult check_combinatorial_rule(int max_degree);
/// Literal shuffle form of the ribbon rule ≡ engine, formally.
CheckResult check_ribbon_direct(int max_degree);
/// Both harpoon identities on all basis triples of total degree ≤ max_degree
/// and on `random_trials` rational combinations drawn with a fixed seed.
CheckResult check_lemma1(std::shared_ptr<const HopfBasis> primal, int max_degree, int random_trials = 100,
                         unsigned seed = 20240611);
/// ⟨P_λ,Q_μ⟩ = δ, g = 2^{ℓ+ℓ−ℓ} f with f, g ∈ ℕ, and agreement of the two Q constructions.
CheckResult check_duality(int max_degree);
/// Pair counting ≡ Yamanouchi counting and both LR symmetries for |ν| ≤ max_degree.
CheckResult check_lr_agreement(int max_degree);
/// Skew k-Pieri ≡ engine ≡ oracle for λ ⊆ μ, |μ| ≤ max_degree, 0 ≤ r ≤ k,
/// plus the golden k = 2 example.
CheckResult check_pieri(int k, int max_degree);
/// s^(k)_λ in h ≡ s_λ in h for |λ| ≤ max_degree.
CheckResult check_stabilization(int k, int max_degree);

}  // namespace skewlr
