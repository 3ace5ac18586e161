#include "skewlr/notation.hpp"

#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>

namespace skewlr {

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Reads a bracketed shape starting at pos.
Parts read_parts(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size() || (text[pos] != '[' && text[pos] != '('))
    throw ParseError("expected '[' or '(' in '" + std::string(text) + "'");
  const char close = text[pos] == '[' ? ']' : ')';
  ++pos;
  Parts parts;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == close) {
    ++pos;
    return parts;
  }
  while (true) {
    skip_space(text, pos);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a part in '" + std::string(text) + "'");
    const long value = std::stol(std::string(text.substr(start, pos - start)));
    if (value > Parts::kMaxPart) throw CapacityError("part exceeds 255");
    parts.push_back(static_cast<int>(value));
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == close) {
      ++pos;
      return parts;
    }
    throw ParseError("unterminated shape in '" + std::string(text) + "'");
  }
}

}  // namespace

std::string format_parts(const Parts& parts, bool composition) {
  std::string out(1, composition ? '(' : '[');
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  out += composition ? ')' : ']';
  return out;
}

Parts parse_parts(std::string_view text) {
  std::size_t pos = 0;
  Parts p = read_parts(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'");
  return p;
}

std::string format_term(const Parts& index, const HopfBasis& basis) {
  return basis.tag() + format_parts(index, basis.composition_indexed());
}

std::string format_skew_index(const SkewIndex& index, const HopfBasis& basis) {
  return format_parts(index.outer, basis.composition_indexed()) + "/" +
         format_parts(index.inner, basis.composition_indexed());
}

SkewIndex parse_skew_index(std::string_view text, const HopfBasis& basis) {
  std::size_t pos = 0;
  SkewIndex out;
  out.outer = read_parts(text, pos);
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    out.inner = read_parts(text, pos);
    skip_space(text, pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'");
  if (!basis.is_index(out.outer) || !basis.is_index(out.inner))
    throw ParseError("'" + std::string(text) + "' is not a skew index of algebra '" + basis.tag() + "'");
  return out;
}

std::string format_element(const Element& x, const HopfBasis& basis) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : x) {
    if (!first) os << '\n';
    first = false;
    os << c << '\t' << format_term(index, basis);
  }
  return os.str();
}

std::string format_skew_sum(const SkewSum& x, const HopfBasis& basis) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, c] : x) {
    if (!first) os << '\n';
    first = false;
    os << c << '\t' << format_skew_index(index, basis);
  }
  return os.str();
}

std::string element_to_json(const Element& x, const HopfBasis& basis) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : x) terms.push_back({{"coeff", c.to_string()}, {"index", format_term(index, basis)}});
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string skew_sum_to_json(const SkewSum& x, const HopfBasis& basis) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : x)
    terms.push_back({{"coeff", c.to_string()}, {"index", format_skew_index(index, basis)}});
  return nlohmann::json{{"terms", terms}}.dump();
}

Element element_from_json(std::string_view json, const HopfBasis& basis) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw ParseError("JSON element must be an object with a 'terms' array");
  Element out;
  for (const auto& term : doc["terms"]) {
    if (!term.contains("coeff") || !term.contains("index") || !term["coeff"].is_string() ||
        !term["index"].is_string())
      throw ParseError("JSON term needs string fields 'coeff' and 'index'");
    Rational c;
    try {
      c = Rational::parse(term["coeff"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    out.add_scaled(parse_element(term["index"].get<std::string>(), basis), c);
  }
  return out;
}

Element parse_element(std::string_view text, const HopfBasis& basis) {
  Element out;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty expression");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_space(text, pos);
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    skip_space(text, pos);
    Rational coefficient(1);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      try {
        coefficient = Rational::parse(text.substr(start, pos - start));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip_space(text, pos);
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view tag = text.substr(start, pos - start);
    if (tag != basis.tag())
      throw ParseError("term tag '" + std::string(tag) + "' does not belong to algebra '" + basis.tag() + "'");
    const Parts index = read_parts(text, pos);
    if (!basis.is_index(index))
      throw ParseError(format_parts(index, basis.composition_indexed()) + " is not an index of algebra '" +
                       basis.tag() + "'");
    out.add(index, sign < 0 ? -coefficient : coefficient);
    skip_space(text, pos);
  }
  return out;
}

}  // namespace skewlr
