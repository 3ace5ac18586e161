#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "skewlr/shapes.hpp"

namespace skewlr {

/// Finite sequence of positive letters.
using Word = std::vector<int>;

/// Semistandard filling of a (possibly skew) shape. rows()[i][j] is the entry
/// in row i, column inner_i + j (English convention, row 0 on top).
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument if the filling does not match the shape or
  /// breaks row-weak / column-strict monotonicity.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight-shape tableau from its rows.
  static Tableau straight(std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  /// content()[i] = number of cells holding letter i + 1.
  std::vector<int> content() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Rows read left to right, bottom row first.
Word row_word(const Tableau& t);

/// Schensted row insertion of the letters of w, in order.
Tableau insert(std::span<const int> w);

/// insert(row_word(t)); the straight tableau Knuth-equivalent to t.
Tableau rectify(const Tableau& t);

/// a placed strictly southwest of b, sharing no row or column.
/// row_word(star(a, b)) = row_word(a) followed by row_word(b).
Tableau star(const Tableau& a, const Tableau& b);

bool knuth_equivalent(const Tableau& s, const Tableau& t);

/// The tableau of shape τ whose i-th row holds only the letter i.
Tableau yamanouchi_tableau(const Partition& tau);

/// All semistandard fillings of `shape` with content[i] copies of letter i + 1.
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, std::span<const int> content);

/// Visits every semistandard filling of `shape` whose content is bounded
/// componentwise by `max_content` (letters beyond its length are not used).
void for_each_tableau_bounded(const SkewShape& shape, std::span<const int> max_content,
                              const std::function<void(const Tableau&)>& visit);

/// Number of standard Young tableaux of shape λ, by enumeration.
long count_standard_tableaux(const Partition& lambda);

/// c^ν_{λ,μ}: pairs (R, S) of shapes λ, μ with R*S ≡_K the Yamanouchi tableau of ν.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^ν_{λ,μ}: skew tableaux of shape ν/λ and content μ whose reverse reading
/// word is a lattice word.
long lr_coefficient_yamanouchi(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^τ_{π,ρ,σ}: triples (P, R, S) with P*R*S ≡_K the Yamanouchi tableau of τ.
long lr_triple(const Partition& pi, const Partition& rho, const Partition& sigma, const Partition& tau);

/// Visits the content of every Littlewood-Richardson filling of outer/inner
/// (semistandard, reverse reading word lattice). The content is a partition.
void for_each_lr_filling(const Parts& outer, const Parts& inner, const std::function<void(const Parts&)>& visit);

/// Rows top to bottom, one per line, "." for inner cells.
std::string to_string(const Tableau& t);

}  // namespace skewlr
