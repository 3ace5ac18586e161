#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace skewlr {

/// Thrown when a shape exceeds the fixed inline capacity of Parts.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A short sequence of small nonnegative integers stored inline.
///
/// This is the raw index type shared by partitions, strict partitions,
/// compositions and k-bounded partitions. Slots past size() are kept zero so
/// that comparison and hashing can work on the whole buffer.
class Parts {
 public:
  static constexpr std::size_t kMaxLength = 30;
  static constexpr int kMaxPart = 255;

  Parts() = default;
  Parts(std::initializer_list<int> values) {
    for (int v : values) push_back(v);
  }
  explicit Parts(std::span<const int> values) {
    for (int v : values) push_back(v);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int degree() const { return degree_; }

  int operator[](std::size_t i) const { return data_[i]; }
  /// i-th part, or zero beyond the length.
  int part(std::size_t i) const { return i < size_ ? data_[i] : 0; }
  int front() const { return data_[0]; }
  int back() const { return data_[size_ - 1]; }

  void push_back(int value) {
    if (size_ == kMaxLength) throw CapacityError("shape longer than 30 parts");
    if (value < 0 || value > kMaxPart) throw CapacityError("part outside [0,255]");
    data_[size_++] = static_cast<std::uint8_t>(value);
    degree_ = static_cast<std::uint16_t>(degree_ + value);
  }
  void pop_back() {
    degree_ = static_cast<std::uint16_t>(degree_ - data_[size_ - 1]);
    data_[--size_] = 0;
  }
  void set(std::size_t i, int value) {
    if (value < 0 || value > kMaxPart) throw CapacityError("part outside [0,255]");
    degree_ = static_cast<std::uint16_t>(degree_ - data_[i] + value);
    data_[i] = static_cast<std::uint8_t>(value);
  }
  /// Removes trailing zero parts.
  void trim() {
    while (size_ > 0 && data_[size_ - 1] == 0) --size_;
  }

  const std::uint8_t* begin() const { return data_.data(); }
  const std::uint8_t* end() const { return data_.data() + size_; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const Parts& a, const Parts& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }
  /// Lexicographic order on the part sequence.
  friend std::strong_ordering operator<=>(const Parts& a, const Parts& b) {
    const int c = std::memcmp(a.data_.data(), b.data_.data(), kMaxLength);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.size_ <=> b.size_;
  }

  std::size_t hash() const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(data_.data()), size_));
  }

 private:
  std::array<std::uint8_t, kMaxLength> data_{};
  std::uint8_t size_ = 0;
  std::uint16_t degree_ = 0;
};

/// Canonical order on indices: graded by degree, reverse-lexicographic
/// within a degree, so (2) precedes (1,1) and (2,1) precedes (1,2).
struct GradedRevLex {
  bool operator()(const Parts& a, const Parts& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return b < a;
  }
};

struct PartsHash {
  std::size_t operator()(const Parts& p) const { return p.hash(); }
  std::size_t operator()(const std::pair<Parts, Parts>& p) const {
    return p.first.hash() * 1000003u ^ p.second.hash();
  }
};

/// Prints "[3,1]".
inline std::ostream& operator<<(std::ostream& os, const Parts& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  return os << ']';
}

}  // namespace skewlr
