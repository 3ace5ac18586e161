#pragma once

#include <map>
#include <utility>

#include "skewlr/parts.hpp"
#include "skewlr/rational.hpp"

namespace skewlr {

/// Finite formal combination Σ c_k · k with exact coefficients.
/// Zero coefficients are never stored.
template <class Key, class Compare>
class LinearCombination {
 public:
  using Map = std::map<Key, Rational, Compare>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, Rational coefficient = Rational(1)) {
    add(key, coefficient);
  }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [key, c] : other.terms_) add(key, c * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, Rational(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, Rational(-1));
    return *this;
  }
  LinearCombination& operator*=(const Rational& scale) {
    if (scale.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) c *= scale;
    }
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  LinearCombination operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

struct PairGradedRevLex {
  bool operator()(const std::pair<Parts, Parts>& a, const std::pair<Parts, Parts>& b) const {
    GradedRevLex less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Index of a skew element L_{outer/inner}.
struct SkewIndex {
  Parts outer;
  Parts inner;
  friend bool operator==(const SkewIndex&, const SkewIndex&) = default;
};

/// Display order for skew sums: larger outer degree first, reverse-lex within a
/// degree; ties broken the same way on the inner index.
struct SkewDisplayOrder {
  static bool before(const Parts& a, const Parts& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return b < a;
  }
  bool operator()(const SkewIndex& a, const SkewIndex& b) const {
    if (a.outer != b.outer) return before(a.outer, b.outer);
    return before(a.inner, b.inner);
  }
};

/// Element of a graded Hopf algebra in its distinguished basis.
using Element = LinearCombination<Parts, GradedRevLex>;
/// Element of H ⊗ H in the tensor-square basis.
using Tensor = LinearCombination<std::pair<Parts, Parts>, PairGradedRevLex>;
/// Formal signed combination of skew indices; kept unexpanded.
using SkewSum = LinearCombination<SkewIndex, SkewDisplayOrder>;

}  // namespace skewlr
