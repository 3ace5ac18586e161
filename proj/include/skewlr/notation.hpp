#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "skewlr/hopf_basis.hpp"

namespace skewlr {

/// Malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "[3,1]" for partitions, "(3,1,4,1)" for compositions; "[]" / "()" when empty.
std::string format_parts(const Parts& parts, bool composition = false);
/// Accepts either bracket style. Throws ParseError.
Parts parse_parts(std::string_view text);

/// "s[2,1]", "R(3,1,4,1)", "sk2[2,1]"
std::string format_term(const Parts& index, const HopfBasis& basis);
/// "[2,1]/[1]"
std::string format_skew_index(const SkewIndex& index, const HopfBasis& basis);
/// Parses "outer/inner"; a bare shape means inner = ∅.
SkewIndex parse_skew_index(std::string_view text, const HopfBasis& basis);

/// One "coefficient<TAB>term" line per term in canonical order, joined by
/// '\n'; "0" for the zero element.
std::string format_element(const Element& x, const HopfBasis& basis);
std::string format_skew_sum(const SkewSum& x, const HopfBasis& basis);

/// {"terms":[{"coeff":"p/q","index":"s[2,1]"}, ...]}
std::string element_to_json(const Element& x, const HopfBasis& basis);
std::string skew_sum_to_json(const SkewSum& x, const HopfBasis& basis);
Element element_from_json(std::string_view json, const HopfBasis& basis);

/// Parses a signed sum of terms such as "s[2,1] - 2 s[3] + 1/2*s[]".
/// Every term must carry this algebra's tag and a valid index.
Element parse_element(std::string_view text, const HopfBasis& basis);

}  // namespace skewlr
