#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <vector>

#include "skewlr/parts.hpp"

namespace skewlr {

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros. The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(const Parts& parts);
  Partition(std::initializer_list<int> parts) : Partition(Parts(parts)) {}

  const Parts& parts() const { return parts_; }
  /// |λ|
  int size() const { return parts_.degree(); }
  /// ℓ(λ)
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero beyond the length.
  int operator[](std::size_t i) const { return parts_.part(i); }
  bool is_strict() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  Parts parts_;
};

/// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument on a nonpositive part.
  explicit Composition(const Parts& parts);
  Composition(std::initializer_list<int> parts) : Composition(Parts(parts)) {}

  const Parts& parts() const { return parts_; }
  int size() const { return parts_.degree(); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  Parts parts_;
};

/// outer/inner with inner ⊆ outer. inner == outer is the empty skew shape.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner);
  /// Straight shape λ/∅.
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.length(); }
  /// Number of cells in row i.
  int row_length(std::size_t i) const { return outer_[i] - inner_[i]; }
  bool is_straight() const { return inner_.empty(); }
  /// (outer/inner)' = outer'/inner'
  SkewShape conjugate() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

bool is_partition(const Parts& parts);
bool is_strict_partition(const Parts& parts);
bool is_composition(const Parts& parts);

Partition conjugate(const Partition& lambda);
Parts conjugate(const Parts& lambda);

/// inner_i ≤ outer_i for every i.
bool contains(const Partition& outer, const Partition& inner);
bool contains(const Parts& outer, const Parts& inner);

/// inner ⊆ outer, |outer| − |inner| = r and at most one cell per column.
bool is_horizontal_strip(const Partition& inner, const Partition& outer, int r);
/// inner ⊆ outer, |outer| − |inner| = r and at most one cell per row.
bool is_vertical_strip(const Partition& inner, const Partition& outer, int r);

/// Dominance order: a ≥ b iff every partial sum of a is at least that of b.
bool dominates(const Parts& a, const Parts& b);

struct PartitionConstraints {
  std::optional<int> max_part;
  std::optional<int> max_length;
  bool strict = false;
};

/// All partitions of n meeting the constraints, reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& constraints = {});
/// All partitions contained in `outer` (including ∅ and outer), graded then reverse-lex.
std::vector<Partition> enumerate_subpartitions(const Partition& outer);
/// All 2^(n-1) compositions of n (one for n = 0), reverse-lexicographic.
std::vector<Composition> enumerate_compositions(int n);

/// Horizontal strips: every μ ⊇ λ with μ/λ a horizontal r-strip and μ₁ ≤ max_part
/// (when given), reverse-lexicographic.
std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int r,
                                                   std::optional<int> max_part = std::nullopt);

}  // namespace skewlr
