#include "skewlr/schur.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "skewlr/hopf.hpp"
#include "skewlr/linalg.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

namespace {

std::vector<Parts> partitions_of(int n) {
  std::vector<Parts> out;
  for (const Partition& p : enumerate_partitions(n)) out.push_back(p.parts());
  return out;
}

Parts single_row(int n) { return n == 0 ? Parts{} : Parts{n}; }

Parts single_column(int n) {
  Parts p;
  for (int i = 0; i < n; ++i) p.push_back(1);
  return p;
}

// p_n = Σ_b (−1)^b s_{(n−b,1^b)}
Element power_sum_in_s(int n) {
  Element out;
  if (n == 0) return Element(Parts{});
  for (int b = 0; b < n; ++b) {
    Parts hook{n - b};
    for (int i = 0; i < b; ++i) hook.push_back(1);
    out.add(hook, b % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return out;
}

struct DegreeTable {
  std::vector<Parts> basis;
  std::map<Parts, std::size_t> position;
  Matrix to_s;    // column j: basis[j] in the s-basis
  Matrix from_s;  // column j: s_{basis[j]} in this basis
};

class ClassicalTables {
 public:
  const DegreeTable& get(char tag, int n) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(tag, n);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(key, build(tag, n)).first->second;
  }

 private:
  static DegreeTable build(char tag, int n) {
    DegreeTable t;
    t.basis = partitions_of(n);
    for (std::size_t i = 0; i < t.basis.size(); ++i) t.position[t.basis[i]] = i;
    const std::size_t size = t.basis.size();
    auto column_matrix = [&](auto&& generator) {
      Matrix m(size, size);
      for (std::size_t j = 0; j < size; ++j) {
        Element x = unit_element();
        for (int part : t.basis[j]) x = schur_multiply(x, generator(part));
        for (const auto& [lambda, c] : x) m(t.position.at(lambda), j) = c;
      }
      return m;
    };
    switch (tag) {
      case 's':
        t.to_s = Matrix::identity(size);
        break;
      case 'h':
        t.to_s = column_matrix([](int r) { return Element(single_row(r)); });
        break;
      case 'e':
        t.to_s = column_matrix([](int r) { return Element(single_column(r)); });
        break;
      case 'p':
        t.to_s = column_matrix(power_sum_in_s);
        break;
      case 'm': {
        // s_λ = Σ_μ K_{λμ} m_μ, with K_{λμ} the coefficient of s_λ in h_μ.
        const Matrix kostka = column_matrix([](int r) { return Element(single_row(r)); });
        t.to_s = inverse(kostka)->transpose();
        break;
      }
      default:
        throw std::invalid_argument(std::string("unknown classical basis '") + tag + "'");
    }
    auto inv = inverse(t.to_s);
    if (!inv) throw std::logic_error("classical transition matrix is singular");
    t.from_s = std::move(*inv);
    return t;
  }

  std::mutex mutex_;
  std::map<std::pair<char, int>, DegreeTable> tables_;
};

ClassicalTables& tables() {
  static ClassicalTables instance;
  return instance;
}


}  // namespace

std::vector<Parts> SchurBasis::basis(int degree) const { return partitions_of(degree); }

Element SchurBasis::compute_product(const Parts& a, const Parts& b) const {
  require_index(a);
  require_index(b);
  Element out;
  const int n = a.degree() + b.degree();
  PartitionConstraints bounds;
  bounds.max_part = a.part(0) + b.part(0);
  bounds.max_length = static_cast<int>(a.size() + b.size());
  for (const Partition& nu : enumerate_partitions(n, bounds)) {
    if (!contains(nu.parts(), a) || !contains(nu.parts(), b)) continue;
    long count = 0;
    for_each_lr_filling(nu.parts(), a, [&](const Parts& content) {
      if (content == b) ++count;
    });
    out.add(nu.parts(), Rational(count));
  }
  return out;
}

Tensor SchurBasis::compute_coproduct(const Parts& nu) const {
  require_index(nu);
  Tensor out;
  for (const Partition& mu : enumerate_subpartitions(Partition(nu)))
    for_each_lr_filling(nu, mu.parts(), [&](const Parts& lambda) { out.add({lambda, mu.parts()}, Rational(1)); });
  return out;
}

Element SchurBasis::compute_skew(const Parts& outer, const Parts& inner) const {
  require_index(outer);
  require_index(inner);
  Element out;
  if (!contains(outer, inner)) return out;
  for_each_lr_filling(outer, inner, [&](const Parts& lambda) { out.add(lambda, Rational(1)); });
  return out;
}

std::shared_ptr<const SchurBasis> schur_basis() {
  static const auto instance = std::make_shared<const SchurBasis>();
  return instance;
}

bool is_classical_tag(char tag) {
  return tag == 'm' || tag == 'h' || tag == 'e' || tag == 'p' || tag == 's';
}

ClassicalElement classical(char tag, const Parts& index, Rational coefficient) {
  if (!is_classical_tag(tag)) throw std::invalid_argument(std::string("unknown classical basis '") + tag + "'");
  if (!is_partition(index)) throw std::invalid_argument("classical basis index must be a partition");
  return {tag, Element(index, std::move(coefficient))};
}

ClassicalElement basis_convert(const ClassicalElement& x, char target) {
  if (!is_classical_tag(x.tag) || !is_classical_tag(target))
    throw std::invalid_argument("unknown classical basis tag");
  if (x.tag == target) return x;
  Element in_s;
  if (x.tag == 's') {
    in_s = x.terms;
  } else {
    for (const auto& [mu, c] : x.terms) {
      const DegreeTable& t = tables().get(x.tag, mu.degree());
      const std::size_t j = t.position.at(mu);
      for (std::size_t i = 0; i < t.basis.size(); ++i) in_s.add(t.basis[i], c * t.to_s(i, j));
    }
  }
  if (target == 's') return {'s', in_s};
  ClassicalElement out{target, {}};
  for (const auto& [lambda, c] : in_s) {
    const DegreeTable& t = tables().get(target, lambda.degree());
    const std::size_t j = t.position.at(lambda);
    for (std::size_t i = 0; i < t.basis.size(); ++i) out.terms.add(t.basis[i], c * t.from_s(i, j));
  }
  return out;
}

Element to_schur(const ClassicalElement& x) { return basis_convert(x, 's').terms; }

Rational hall_pair(const ClassicalElement& x, const ClassicalElement& y) {
  const Element a = to_schur(x);
  const Element b = to_schur(y);
  Rational total(0);
  for (const auto& [lambda, c] : a) total += c * b.coefficient(lambda);
  return total;
}

Element schur_multiply(const Element& x, const Element& y) { return multiply(x, y, *schur_basis()); }

SkewSum skew_lr_combinatorial(const Partition& lambda, const Partition& mu, const Partition& sigma,
                              const Partition& tau) {
  SkewSum out;
  if (!contains(mu, lambda) || !contains(tau, sigma)) return out;
  const Tableau target = yamanouchi_tableau(tau);
  const std::vector<int> bound = tau.parts().to_vector();
  const int free_cells = tau.size() - sigma.size();

  std::vector<Word> s_words;
  for_each_tableau_bounded(SkewShape(sigma), bound, [&](const Tableau& t) { s_words.push_back(row_word(t)); });

  for (const Partition& lambda_minus : enumerate_subpartitions(lambda)) {
    const int minus_cells = lambda.size() - lambda_minus.size();
    if (minus_cells > free_cells) continue;
    std::vector<Word> minus_words;
    for_each_tableau_bounded(SkewShape(conjugate(lambda), conjugate(lambda_minus)), bound,
                             [&](const Tableau& t) { minus_words.push_back(row_word(t)); });
    const Rational sign = minus_cells % 2 == 0 ? Rational(1) : Rational(-1);
    for (const Partition& mu_plus : enumerate_partitions(mu.size() + free_cells - minus_cells)) {
      if (!contains(mu_plus, mu)) continue;
      std::vector<Word> plus_words;
      for_each_tableau_bounded(SkewShape(mu_plus, mu), bound,
                               [&](const Tableau& t) { plus_words.push_back(row_word(t)); });
      long count = 0;
      for (const Word& a : minus_words)
        for (const Word& b : plus_words)
          for (const Word& c : s_words) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            w.insert(w.end(), c.begin(), c.end());
            if (insert(w) == target) ++count;
          }
      out.add(SkewIndex{mu_plus.parts(), lambda_minus.parts()}, sign * Rational(count));
    }
  }
  return out;
}

Tensor coproduct_skew(const Partition& tau, const Partition& sigma) {
  Tensor out;
  if (!contains(tau, sigma)) return out;
  const int n = tau.size() - sigma.size();
  for (int left = 0; left <= n; ++left)
    for (const Partition& pi : enumerate_partitions(left))
      for (const Partition& rho : enumerate_partitions(n - left))
        out.add({pi.parts(), rho.parts()}, Rational(lr_triple(pi, rho, sigma, tau)));
  return out;
}

}  // namespace skewlr
