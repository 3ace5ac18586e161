#include "skewlr/hopf_basis.hpp"

#include <mutex>
#include <stdexcept>

namespace skewlr {

namespace {

const Element& empty_element() {
  static const Element zero;
  return zero;
}

}  // namespace

void HopfBasis::require_index(const Parts& index) const {
  if (!is_index(index)) throw std::invalid_argument("index is not a basis index of algebra '" + tag_ + "'");
}

const std::vector<Parts>& HopfBasis::basis_cached(int degree) const {
  {
    std::shared_lock lock(mutex_);
    auto it = bases_.find(degree);
    if (it != bases_.end()) return it->second;
  }
  auto computed = basis(degree);
  std::unique_lock lock(mutex_);
  return bases_.try_emplace(degree, std::move(computed)).first->second;
}

const Element& HopfBasis::product(const Parts& a, const Parts& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  Element computed = compute_product(a, b);
  for (const auto& [nu, c] : computed)
    if (nu.degree() != a.degree() + b.degree())
      throw std::logic_error("algebra '" + tag_ + "': product constants are not graded");
  std::unique_lock lock(mutex_);
  return products_.try_emplace(key, std::move(computed)).first->second;
}

const std::map<Parts, Element, GradedRevLex>& HopfBasis::coproduct_by_right(const Parts& nu) const {
  {
    std::shared_lock lock(mutex_);
    auto it = coproducts_.find(nu);
    if (it != coproducts_.end()) return it->second;
  }
  SkewTable table;
  for (const auto& [pair, c] : compute_coproduct(nu)) {
    if (pair.first.degree() + pair.second.degree() != nu.degree())
      throw std::logic_error("algebra '" + tag_ + "': coproduct constants are not graded");
    table[pair.second].add(pair.first, c);
  }
  std::unique_lock lock(mutex_);
  return coproducts_.try_emplace(nu, std::move(table)).first->second;
}

Tensor HopfBasis::coproduct(const Parts& nu) const {
  Tensor out;
  for (const auto& [right, left] : coproduct_by_right(nu))
    for (const auto& [l, c] : left) out.add({l, right}, c);
  return out;
}

Rational HopfBasis::coproduct_constant(const Parts& a, const Parts& b, const Parts& nu) const {
  return skew(nu, b).coefficient(a);
}

Element HopfBasis::compute_skew(const Parts& outer, const Parts& inner) const {
  const auto& table = coproduct_by_right(outer);
  auto it = table.find(inner);
  return it == table.end() ? Element() : it->second;
}

const Element& HopfBasis::skew(const Parts& outer, const Parts& inner) const {
  if (inner.degree() > outer.degree()) return empty_element();
  const auto key = std::make_pair(outer, inner);
  {
    std::shared_lock lock(mutex_);
    auto it = skews_.find(key);
    if (it != skews_.end()) return it->second;
    auto full = coproducts_.find(outer);
    if (full != coproducts_.end()) {
      auto row = full->second.find(inner);
      return row == full->second.end() ? empty_element() : row->second;
    }
  }
  Element computed = compute_skew(outer, inner);
  for (const auto& [lambda, c] : computed)
    if (lambda.degree() + inner.degree() != outer.degree())
      throw std::logic_error("algebra '" + tag_ + "': coproduct constants are not graded");
  std::unique_lock lock(mutex_);
  return skews_.try_emplace(key, std::move(computed)).first->second;
}

void HopfBasis::fill_dual_coproducts(int degree) const {
  std::unordered_map<Parts, SkewTable, PartsHash> tables;
  for (const Parts& nu : basis_cached(degree)) tables[nu];
  for (int left = 0; left <= degree; ++left)
    for (const Parts& a : basis_cached(left))
      for (const Parts& b : basis_cached(degree - left))
        for (const auto& [nu, c] : product(a, b)) tables[nu][b].add(a, c);
  std::unique_lock lock(mutex_);
  for (auto& [nu, table] : tables) dual_coproducts_.try_emplace(nu, std::move(table));
  dual_degrees_done_[degree] = true;
}

const std::map<Parts, Element, GradedRevLex>& HopfBasis::dual_coproduct_by_right(const Parts& nu) const {
  for (int attempt = 0; attempt < 2; ++attempt) {
    {
      std::shared_lock lock(mutex_);
      auto it = dual_coproducts_.find(nu);
      if (it != dual_coproducts_.end()) return it->second;
      if (dual_degrees_done_.count(nu.degree())) break;
    }
    fill_dual_coproducts(nu.degree());
  }
  // nu is not a basis index: treat as zero.
  static const SkewTable empty;
  return empty;
}

const Element& HopfBasis::dual_skew(const Parts& outer, const Parts& inner) const {
  const auto& table = dual_coproduct_by_right(outer);
  auto it = table.find(inner);
  return it == table.end() ? empty_element() : it->second;
}

DualBasis::DualBasis(std::string tag, std::shared_ptr<const HopfBasis> primal)
    : HopfBasis(std::move(tag)), primal_(std::move(primal)) {}

Parts DualBasis::transpose_preimage(const Parts& index) const {
  for (const Parts& rho : primal_->basis_cached(index.degree()))
    if (primal_->antipode_index(rho) == index) return rho;
  throw std::logic_error("algebra '" + tag() + "': antipode index map is not a bijection");
}

int DualBasis::antipode_sign_exponent(const Parts& index) const {
  return primal_->antipode_sign_exponent(transpose_preimage(index));
}

Parts DualBasis::antipode_index(const Parts& index) const { return transpose_preimage(index); }

Element DualBasis::compute_product(const Parts& a, const Parts& b) const {
  Element out;
  for (const Parts& nu : primal_->basis_cached(a.degree() + b.degree()))
    out.add(nu, primal_->coproduct_constant(a, b, nu));
  return out;
}

Tensor DualBasis::compute_coproduct(const Parts& nu) const {
  Tensor out;
  for (const auto& [right, left] : primal_->dual_coproduct_by_right(nu))
    for (const auto& [l, c] : left) out.add({l, right}, c);
  return out;
}

}  // namespace skewlr
