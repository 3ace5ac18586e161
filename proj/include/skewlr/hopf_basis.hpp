#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewlr/linear_combination.hpp"

namespace skewlr {

/// Raised when a computation predicted to be integral is not. Indicates a
/// construction bug, never bad user input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A graded, connected Hopf algebra H presented through a distinguished basis
/// {L_λ} and its dual basis {R_λ} of H*:
///
///   L_λ · L_μ = Σ b^ν_{λμ} L_ν        Δ(L_ν) = Σ c^ν_{λμ} L_λ ⊗ L_μ
///   S(L_ρ)   = (−1)^{e(ρ)} L_{ρ^T}
///
/// Subclasses supply the basis, the validity test, the antipode data and the
/// raw constants. Constants are memoized; concurrent read-only use from
/// several threads is safe.
class HopfBasis {
 public:
  explicit HopfBasis(std::string tag) : tag_(std::move(tag)) {}
  virtual ~HopfBasis() = default;
  HopfBasis(const HopfBasis&) = delete;
  HopfBasis& operator=(const HopfBasis&) = delete;

  /// Short term prefix used in printed output ("s", "Q", "R", "sk2", ...).
  const std::string& tag() const { return tag_; }

  /// Basis indices of the given degree, in canonical order.
  virtual std::vector<Parts> basis(int degree) const = 0;
  virtual bool is_index(const Parts& index) const = 0;
  virtual int antipode_sign_exponent(const Parts& index) const = 0;
  virtual Parts antipode_index(const Parts& index) const = 0;
  /// Compositions print as (a,b); partitions as [a,b].
  virtual bool composition_indexed() const { return false; }

  /// L_a · L_b in the L-basis.
  const Element& product(const Parts& a, const Parts& b) const;
  /// b^ν_{a,b}
  Rational product_constant(const Parts& a, const Parts& b, const Parts& nu) const {
    return product(a, b).coefficient(nu);
  }
  /// Δ(L_ν) = Σ_μ L_{ν/μ} ⊗ L_μ, keyed by the right factor μ.
  const std::map<Parts, Element, GradedRevLex>& coproduct_by_right(const Parts& nu) const;
  Tensor coproduct(const Parts& nu) const;
  /// c^ν_{a,b}
  Rational coproduct_constant(const Parts& a, const Parts& b, const Parts& nu) const;
  /// L_{outer/inner} = Σ_λ c^outer_{λ,inner} L_λ.
  const Element& skew(const Parts& outer, const Parts& inner) const;
  /// R_{outer/inner} expressed through indices: Σ_κ b^outer_{κ,inner} κ.
  /// This is the skew element of the dual algebra.
  const Element& dual_skew(const Parts& outer, const Parts& inner) const;

  /// Δ*(R_ν) = Σ_μ R_{ν/μ} ⊗ R_μ keyed by μ; the table behind dual_skew.
  const std::map<Parts, Element, GradedRevLex>& dual_coproduct_by_right(const Parts& nu) const;

  /// basis(degree), cached.
  const std::vector<Parts>& basis_cached(int degree) const;

  /// Checks an index and throws std::invalid_argument naming this algebra.
  void require_index(const Parts& index) const;

 protected:
  virtual Element compute_product(const Parts& a, const Parts& b) const = 0;
  /// Must return every (λ, μ) ↦ c^ν_{λμ} term of Δ(L_ν).
  virtual Tensor compute_coproduct(const Parts& nu) const = 0;
  /// L_{outer/inner} alone. The default reads the full coproduct of outer.
  virtual Element compute_skew(const Parts& outer, const Parts& inner) const;

 private:
  using SkewTable = std::map<Parts, Element, GradedRevLex>;
  void fill_dual_coproducts(int degree) const;

  std::string tag_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::pair<Parts, Parts>, Element, PartsHash> products_;
  mutable std::unordered_map<Parts, SkewTable, PartsHash> coproducts_;
  mutable std::unordered_map<Parts, SkewTable, PartsHash> dual_coproducts_;
  mutable std::unordered_map<std::pair<Parts, Parts>, Element, PartsHash> skews_;
  mutable std::map<int, std::vector<Parts>> bases_;
  mutable std::map<int, bool> dual_degrees_done_;
};

/// The graded dual H* with basis {R_λ}: its product constants are the
/// coproduct constants of H and vice versa. The antipode of H* is the
/// transpose of that of H.
class DualBasis : public HopfBasis {
 public:
  DualBasis(std::string tag, std::shared_ptr<const HopfBasis> primal);

  const HopfBasis& primal() const { return *primal_; }
  std::vector<Parts> basis(int degree) const override { return primal_->basis(degree); }
  bool is_index(const Parts& index) const override { return primal_->is_index(index); }
  int antipode_sign_exponent(const Parts& index) const override;
  Parts antipode_index(const Parts& index) const override;
  bool composition_indexed() const override { return primal_->composition_indexed(); }

 protected:
  Element compute_product(const Parts& a, const Parts& b) const override;
  Tensor compute_coproduct(const Parts& nu) const override;

 private:
  Parts transpose_preimage(const Parts& index) const;
  std::shared_ptr<const HopfBasis> primal_;
};

}  // namespace skewlr
