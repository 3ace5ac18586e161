#include "skewlr/shapes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewlr {

bool is_partition(const Parts& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_strict_partition(const Parts& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] >= parts[i - 1]) return false;
  }
  return true;
}

bool is_composition(const Parts& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; });
}

Partition::Partition(const Parts& parts) : parts_(parts) {
  if (!is_partition(parts)) throw std::invalid_argument("not a partition");
}

bool Partition::is_strict() const { return is_strict_partition(parts_); }

Composition::Composition(const Parts& parts) : parts_(parts) {
  if (!is_composition(parts)) throw std::invalid_argument("not a composition");
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) throw std::invalid_argument("skew shape: inner not contained in outer");
}

SkewShape SkewShape::conjugate() const { return {skewlr::conjugate(outer_), skewlr::conjugate(inner_)}; }

Parts conjugate(const Parts& lambda) {
  Parts result;
  if (lambda.empty()) return result;
  for (int c = 0; c < lambda[0]; ++c) {
    int height = 0;
    while (static_cast<std::size_t>(height) < lambda.size() && lambda[height] > c) ++height;
    result.push_back(height);
  }
  return result;
}

Partition conjugate(const Partition& lambda) { return Partition(conjugate(lambda.parts())); }

bool contains(const Parts& outer, const Parts& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool contains(const Partition& outer, const Partition& inner) { return contains(outer.parts(), inner.parts()); }

bool is_horizontal_strip(const Partition& inner, const Partition& outer, int r) {
  if (!contains(outer, inner) || outer.size() - inner.size() != r) return false;
  for (int i = 1; i < outer.length(); ++i)
    if (outer[i] > inner[i - 1]) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer, int r) {
  if (!contains(outer, inner) || outer.size() - inner.size() != r) return false;
  for (int i = 0; i < outer.length(); ++i)
    if (outer[i] - inner[i] > 1) return false;
  return true;
}

bool dominates(const Parts& a, const Parts& b) {
  int sa = 0;
  int sb = 0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& constraints) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Parts current;
  const int top = constraints.max_part ? std::min(*constraints.max_part, n) : n;
  const int max_len = constraints.max_length.value_or(n);
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int p = std::min(bound, remaining); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, constraints.strict ? p - 1 : p);
      current.pop_back();
    }
  };
  rec(n, top);
  return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  for (int n = 0; n <= outer.size(); ++n) {
    for (auto& p : enumerate_partitions(n, {.max_part = outer[0], .max_length = outer.length()}))
      if (contains(outer, p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  Parts current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int r, std::optional<int> max_part) {
  std::vector<Partition> out;
  if (r < 0) return out;
  // Row i may grow up to lambda[i-1] (row 0 unbounded except by max_part);
  // one new row of length ≤ lambda's last part may appear.
  const int rows = lambda.length() + 1;
  Parts current;
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == rows) {
      if (remaining == 0) {
        Parts trimmed = current;
        trimmed.trim();
        out.emplace_back(trimmed);
      }
      return;
    }
    const int base = lambda[row];
    int cap = row == 0 ? base + remaining : lambda[row - 1];
    if (row == 0 && max_part) cap = std::min(cap, *max_part);
    for (int len = std::min(cap, base + remaining); len >= base; --len) {
      current.push_back(len);
      rec(row + 1, remaining - (len - base));
      current.pop_back();
    }
  };
  rec(0, r);
  return out;
}

}  // namespace skewlr
