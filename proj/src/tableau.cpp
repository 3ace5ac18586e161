#include "skewlr/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewlr {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
  return lengths;
}

}  // namespace

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto& outer = shape_.outer();
  const auto& inner = shape_.inner();
  if (static_cast<int>(rows_.size()) != shape_.rows()) throw std::invalid_argument("tableau: row count mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.row_length(i))
      throw std::invalid_argument("tableau: row length mismatch");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] <= 0) throw std::invalid_argument("tableau: letters must be positive");
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) throw std::invalid_argument("tableau: row not weakly increasing");
      const int col = inner[i] + static_cast<int>(j);
      if (i > 0 && col >= inner[i - 1] && col < outer[i - 1]) {
        if (rows_[i - 1][col - inner[i - 1]] >= rows_[i][j])
          throw std::invalid_argument("tableau: column not strictly increasing");
      }
    }
  }
}

Tableau Tableau::straight(std::vector<std::vector<int>> rows) {
  Parts p;
  for (int len : row_lengths(rows)) p.push_back(len);
  return Tableau(SkewShape(Partition(p)), std::move(rows));
}

std::vector<int> Tableau::content() const {
  std::vector<int> counts;
  for (const auto& r : rows_)
    for (int x : r) {
      if (static_cast<int>(counts.size()) < x) counts.resize(x, 0);
      ++counts[x - 1];
    }
  return counts;
}

Word row_word(const Tableau& t) {
  Word w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Tableau insert(std::span<const int> w) {
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    if (x <= 0) throw std::invalid_argument("insert: letters must be positive");
    int bump = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({bump});
        break;
      }
      auto& row = rows[r];
      auto pos = std::upper_bound(row.begin(), row.end(), bump);
      if (pos == row.end()) {
        row.push_back(bump);
        break;
      }
      std::swap(*pos, bump);
    }
  }
  return Tableau::straight(std::move(rows));
}

Tableau rectify(const Tableau& t) {
  const Word w = row_word(t);
  return insert(w);
}

Tableau star(const Tableau& a, const Tableau& b) {
  if (a.shape().size() == 0 && a.shape().rows() == 0) return b;
  if (b.shape().size() == 0 && b.shape().rows() == 0) return a;
  const int shift = a.shape().outer()[0];
  Parts outer;
  Parts inner;
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < b.shape().rows(); ++i) {
    outer.push_back(b.shape().outer()[i] + shift);
    inner.push_back(b.shape().inner()[i] + shift);
    rows.push_back(b.rows()[i]);
  }
  for (int i = 0; i < a.shape().rows(); ++i) {
    outer.push_back(a.shape().outer()[i]);
    inner.push_back(a.shape().inner()[i]);
    rows.push_back(a.rows()[i]);
  }
  inner.trim();
  return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

bool knuth_equivalent(const Tableau& s, const Tableau& t) { return rectify(s) == rectify(t); }

Tableau yamanouchi_tableau(const Partition& tau) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < tau.length(); ++i) rows.emplace_back(tau[i], i + 1);
  return Tableau::straight(std::move(rows));
}

namespace {

// Fills letters 1, 2, ... as successive horizontal strips. lo/hi bound the
// number of copies of each letter.
class StripFiller {
 public:
  StripFiller(const SkewShape& shape, std::vector<int> lo, std::vector<int> hi,
              const std::function<void(const Tableau&)>& visit)
      : shape_(shape), lo_(std::move(lo)), hi_(std::move(hi)), visit_(visit) {
    const int n = shape.rows();
    current_.resize(n);
    rows_.resize(n);
    for (int i = 0; i < n; ++i) {
      current_[i] = shape.inner()[i];
      rows_[i].assign(shape.row_length(i), 0);
    }
    suffix_hi_.assign(hi_.size() + 1, 0);
    for (int i = static_cast<int>(hi_.size()) - 1; i >= 0; --i) suffix_hi_[i] = suffix_hi_[i + 1] + hi_[i];
  }

  void run() { letter(0, shape_.size()); }

 private:
  void letter(std::size_t index, int remaining) {
    if (remaining == 0) {
      for (std::size_t i = index; i < lo_.size(); ++i)
        if (lo_[i] > 0) return;
      visit_(Tableau(shape_, rows_));
      return;
    }
    if (index == hi_.size() || suffix_hi_[index] < remaining) return;
    previous_ = current_;
    strip(index, 0, 0, remaining);
  }

  // Chooses the new length of row `row` for the strip of letter index + 1.
  void strip(std::size_t index, int row, int used, int remaining) {
    const int n = static_cast<int>(current_.size());
    if (row == n) {
      if (used < lo_[index]) return;
      const std::vector<int> saved = previous_;
      letter(index + 1, remaining - used);
      previous_ = saved;
      return;
    }
    const int base = previous_[row];
    int cap = shape_.outer()[row];
    if (row > 0) cap = std::min(cap, previous_[row - 1]);
    cap = std::min(cap, base + (hi_[index] - used));
    for (int len = cap; len >= base; --len) {
      const int inner = shape_.inner()[row];
      for (int c = base; c < len; ++c) rows_[row][c - inner] = static_cast<int>(index) + 1;
      current_[row] = len;
      strip(index, row + 1, used + (len - base), remaining);
      current_[row] = base;
    }
  }

  const SkewShape& shape_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> suffix_hi_;
  const std::function<void(const Tableau&)>& visit_;
  std::vector<int> current_;
  std::vector<int> previous_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, std::span<const int> content) {
  std::vector<Tableau> out;
  int total = 0;
  for (int c : content) total += c;
  if (total != shape.size()) return out;
  std::vector<int> counts(content.begin(), content.end());
  std::function<void(const Tableau&)> visit = [&](const Tableau& t) { out.push_back(t); };
  StripFiller(shape, counts, counts, visit).run();
  return out;
}

void for_each_tableau_bounded(const SkewShape& shape, std::span<const int> max_content,
                              const std::function<void(const Tableau&)>& visit) {
  std::vector<int> hi(max_content.begin(), max_content.end());
  StripFiller(shape, std::vector<int>(hi.size(), 0), hi, visit).run();
}

long count_standard_tableaux(const Partition& lambda) {
  return static_cast<long>(enumerate_tableaux(SkewShape(lambda), std::vector<int>(lambda.size(), 1)).size());
}

namespace {

std::vector<int> to_counts(const Partition& p) {
  std::vector<int> v;
  for (int i = 0; i < p.length(); ++i) v.push_back(p[i]);
  return v;
}

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  const Tableau target = yamanouchi_tableau(nu);
  const std::vector<int> bound = to_counts(nu);
  long count = 0;
  for_each_tableau_bounded(SkewShape(lambda), bound, [&](const Tableau& r) {
    std::vector<int> rest = bound;
    const auto used = r.content();
    for (std::size_t i = 0; i < used.size(); ++i) rest[i] -= used[i];
    for (const Tableau& s : enumerate_tableaux(SkewShape(mu), rest))
      if (rectify(star(r, s)) == target) ++count;
  });
  return count;
}

long lr_triple(const Partition& pi, const Partition& rho, const Partition& sigma, const Partition& tau) {
  if (pi.size() + rho.size() + sigma.size() != tau.size()) return 0;
  const Tableau target = yamanouchi_tableau(tau);
  const std::vector<int> bound = to_counts(tau);
  long count = 0;
  for_each_tableau_bounded(SkewShape(pi), bound, [&](const Tableau& p) {
    std::vector<int> rest = bound;
    const auto used_p = p.content();
    for (std::size_t i = 0; i < used_p.size(); ++i) rest[i] -= used_p[i];
    for_each_tableau_bounded(SkewShape(rho), rest, [&](const Tableau& r) {
      std::vector<int> last = rest;
      const auto used_r = r.content();
      for (std::size_t i = 0; i < used_r.size(); ++i) last[i] -= used_r[i];
      for (const Tableau& s : enumerate_tableaux(SkewShape(sigma), last))
        if (rectify(star(star(p, r), s)) == target) ++count;
    });
  });
  return count;
}

void for_each_lr_filling(const Parts& outer, const Parts& inner, const std::function<void(const Parts&)>& visit) {
  if (!contains(outer, inner)) return;
  struct Cell {
    int row;
    int col;
  };
  // Reverse reading order: rows top to bottom, each right to left.
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < outer.size(); ++r)
    for (int c = outer[r] - 1; c >= inner.part(r); --c) cells.push_back({static_cast<int>(r), c});
  std::vector<std::vector<int>> grid(outer.size());
  for (std::size_t r = 0; r < outer.size(); ++r) grid[r].assign(outer[r], 0);
  std::vector<int> counts(outer.size() + 1, 0);
  int distinct = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Parts content;
      for (int i = 0; i < distinct; ++i) content.push_back(counts[i]);
      visit(content);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (r > 0 && c >= inner.part(r - 1)) lo = grid[r - 1][c] + 1;
    int hi = distinct + 1;
    if (c + 1 < outer[r]) hi = std::min(hi, grid[r][c + 1]);
    for (int x = lo; x <= hi; ++x) {
      if (x > 1 && counts[x - 2] < counts[x - 1] + 1) continue;
      grid[r][c] = x;
      ++counts[x - 1];
      const int saved = distinct;
      if (x > distinct) distinct = x;
      rec(k + 1);
      distinct = saved;
      --counts[x - 1];
    }
    grid[r][c] = 0;
  };
  rec(0);
}

long lr_coefficient_yamanouchi(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !contains(nu, lambda)) return 0;
  long count = 0;
  for_each_lr_filling(nu.parts(), lambda.parts(), [&](const Parts& content) {
    if (content == mu.parts()) ++count;
  });
  return count;
}

std::string to_string(const Tableau& t) {
  std::ostringstream os;
  for (int i = 0; i < t.shape().rows(); ++i) {
    if (i > 0) os << '\n';
    bool first = true;
    for (int c = 0; c < t.shape().inner()[i]; ++c) {
      os << (first ? "" : " ") << '.';
      first = false;
    }
    for (int x : t.rows()[i]) {
      os << (first ? "" : " ") << x;
      first = false;
    }
  }
  return os.str();
}

}  // namespace skewlr
