#include "skewlr/omega.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "skewlr/hopf.hpp"
#include "skewlr/linalg.hpp"
#include "skewlr/schur.hpp"

namespace skewlr {

namespace {

std::vector<Parts> strict_partitions(int n) {
  PartitionConstraints strict;
  strict.strict = true;
  std::vector<Parts> out;
  for (const Partition& p : enumerate_partitions(n, strict)) out.push_back(p.parts());
  return out;
}

std::vector<Parts> partitions_of(int n) {
  std::vector<Parts> out;
  for (const Partition& p : enumerate_partitions(n)) out.push_back(p.parts());
  return out;
}

Rational z_factor(const Parts& lambda) {
  Rational z(1);
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  for (const auto& [part, m] : mult)
    for (int i = 1; i <= m; ++i) z *= Rational(static_cast<long>(part) * i);
  return z;
}

Element q_product(const Parts& lambda) {
  Element x = unit_element();
  for (int part : lambda) x = schur_multiply(x, q_generator(part));
  return x;
}

class QCache {
 public:
  std::mutex mutex;
  std::map<std::pair<int, int>, Element> two_row;
  std::map<Parts, Element> pfaffian;
  std::map<int, std::map<Parts, Element>> orthogonal;
  std::map<Parts, Element> checked;
  struct DegreeSystem {
    std::vector<Parts> rows;
    std::map<Parts, std::size_t> row_position;
    std::vector<Parts> cols;
    Matrix m;
    Matrix left;
  };
  std::map<int, DegreeSystem> systems;
};

QCache& cache() {
  static QCache instance;
  return instance;
}

// Q_(a,b) = q_a q_b + 2 Σ_{i=1}^{b} (−1)^i q_{a+i} q_{b−i}
Element two_row(int a, int b) {
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().two_row.find({a, b});
    if (it != cache().two_row.end()) return it->second;
  }
  Element out = schur_multiply(q_generator(a), q_generator(b));
  for (int i = 1; i <= b; ++i)
    out.add_scaled(schur_multiply(q_generator(a + i), q_generator(b - i)), Rational(i % 2 == 0 ? 2 : -2));
  std::lock_guard lock(cache().mutex);
  return cache().two_row.emplace(std::make_pair(a, b), std::move(out)).first->second;
}

Element pfaffian(const std::vector<int>& parts) {
  if (parts.empty()) return unit_element();
  if (parts.size() == 2) return parts[1] == 0 ? q_generator(parts[0]) : two_row(parts[0], parts[1]);
  Element out;
  for (std::size_t j = 1; j < parts.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (i != j) rest.push_back(parts[i]);
    const Element pair = parts[j] == 0 ? q_generator(parts[0]) : two_row(parts[0], parts[j]);
    out.add_scaled(schur_multiply(pair, pfaffian(rest)), Rational(j % 2 == 1 ? 1 : -1));
  }
  return out;
}

const std::map<Parts, Element>& orthogonal_degree(int n) {
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().orthogonal.find(n);
    if (it != cache().orthogonal.end()) return it->second;
  }
  std::map<Parts, Element> built;
  std::vector<std::pair<Element, Rational>> previous;
  for (const Parts& lambda : strict_partitions(n)) {
    const Element q = q_product(lambda);
    Element Q = q;
    for (const auto& [prior, norm] : previous) Q.add_scaled(prior, -omega_pair(q, prior) / norm);
    const Rational norm = omega_pair(Q, Q);
    if (norm != Rational::pow2(static_cast<int>(lambda.size())))
      throw std::logic_error("orthogonalized Q has the wrong norm");
    previous.emplace_back(Q, norm);
    built.emplace(lambda, std::move(Q));
  }
  std::lock_guard lock(cache().mutex);
  return cache().orthogonal.emplace(n, std::move(built)).first->second;
}

const QCache::DegreeSystem& system(int n) {
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().systems.find(n);
    if (it != cache().systems.end()) return it->second;
  }
  QCache::DegreeSystem s;
  s.rows = partitions_of(n);
  for (std::size_t i = 0; i < s.rows.size(); ++i) s.row_position[s.rows[i]] = i;
  s.cols = strict_partitions(n);
  s.m = Matrix(s.rows.size(), s.cols.size());
  for (std::size_t j = 0; j < s.cols.size(); ++j)
    for (const auto& [kappa, c] : build_Q(s.cols[j])) s.m(s.row_position.at(kappa), j) = c;
  s.left = left_inverse(s.m);
  std::lock_guard lock(cache().mutex);
  return cache().systems.emplace(n, std::move(s)).first->second;
}

Rational require_integer(const Rational& x) {
  if (!x.is_integer()) throw IntegralityError("Ω structure constant is not an integer: " + x.to_string());
  return x;
}

}  // namespace

Element q_generator(int n) {
  if (n < 0) throw std::invalid_argument("q_generator: negative degree");
  Element out;
  for (int i = 0; i <= n; ++i) {
    const Parts h = i == 0 ? Parts{} : Parts{i};
    Parts e;
    for (int j = 0; j < n - i; ++j) e.push_back(1);
    out += schur_multiply(Element(h), Element(e));
  }
  return out;
}

Element build_Q_pfaffian(const Parts& lambda) {
  if (!is_strict_partition(lambda)) throw std::invalid_argument("Q_λ needs a strict partition");
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().pfaffian.find(lambda);
    if (it != cache().pfaffian.end()) return it->second;
  }
  std::vector<int> parts = lambda.to_vector();
  if (parts.size() % 2 == 1) parts.push_back(0);
  Element out = pfaffian(parts);
  std::lock_guard lock(cache().mutex);
  return cache().pfaffian.emplace(lambda, std::move(out)).first->second;
}

Element build_Q_orthogonal(const Parts& lambda) {
  if (!is_strict_partition(lambda)) throw std::invalid_argument("Q_λ needs a strict partition");
  return orthogonal_degree(lambda.degree()).at(lambda);
}

Element build_Q(const Parts& lambda) {
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().checked.find(lambda);
    if (it != cache().checked.end()) return it->second;
  }
  Element a = build_Q_pfaffian(lambda);
  if (!(a == build_Q_orthogonal(lambda)))
    throw std::logic_error("the two constructions of Q disagree at a strict partition of size " +
                           std::to_string(lambda.degree()));
  for (const auto& [kappa, c] : a)
    if (!c.is_integer()) throw IntegralityError("Q has a non-integral Schur coefficient");
  std::lock_guard lock(cache().mutex);
  return cache().checked.emplace(lambda, std::move(a)).first->second;
}

bool in_omega(const Element& x) {
  for (const auto& [lambda, c] : basis_convert({'s', x}, 'p').terms)
    for (int part : lambda)
      if (part % 2 == 0) return false;
  return true;
}

Rational omega_pair(const Element& x, const Element& y) {
  const Element px = basis_convert({'s', x}, 'p').terms;
  const Element py = basis_convert({'s', y}, 'p').terms;
  for (const Element* e : {&px, &py})
    for (const auto& [lambda, c] : *e)
      for (int part : lambda)
        if (part % 2 == 0) throw std::invalid_argument("omega_pair: argument lies outside Ω");
  Rational total(0);
  for (const auto& [lambda, c] : px) {
    const Rational d = py.coefficient(lambda);
    if (d.is_zero()) continue;
    total += c * d * z_factor(lambda) / Rational::pow2(static_cast<int>(lambda.size()));
  }
  return total;
}

std::vector<Parts> QBasis::basis(int degree) const { return strict_partitions(degree); }

Element QBasis::compute_product(const Parts& a, const Parts& b) const {
  require_index(a);
  require_index(b);
  const int n = a.degree() + b.degree();
  const auto& s = system(n);
  std::vector<Rational> y(s.rows.size(), Rational(0));
  for (const auto& [kappa, c] : schur_multiply(build_Q(a), build_Q(b))) y[s.row_position.at(kappa)] = c;
  const std::vector<Rational> x = s.left * y;
  if (s.m * x != y) throw std::logic_error("product of Q's left Ω");
  Element out;
  for (std::size_t j = 0; j < x.size(); ++j) out.add(s.cols[j], require_integer(x[j]));
  return out;
}

Tensor QBasis::compute_coproduct(const Parts& nu) const {
  require_index(nu);
  const int n = nu.degree();
  const Tensor in_s = comultiply(build_Q(nu), *schur_basis());
  Tensor out;
  for (int left = 0; left <= n; ++left) {
    const auto& a = system(left);
    const auto& b = system(n - left);
    Matrix y(a.rows.size(), b.rows.size());
    for (const auto& [pair, c] : in_s)
      if (pair.first.degree() == left) y(a.row_position.at(pair.first), b.row_position.at(pair.second)) = c;
    const Matrix x = a.left * y * b.left.transpose();
    if (a.m * x * b.m.transpose() != y) throw std::logic_error("coproduct of Q left Ω ⊗ Ω");
    for (std::size_t i = 0; i < a.cols.size(); ++i)
      for (std::size_t j = 0; j < b.cols.size(); ++j) out.add({a.cols[i], b.cols[j]}, require_integer(x(i, j)));
  }
  return out;
}

std::shared_ptr<const QBasis> q_basis() {
  static const auto instance = std::make_shared<const QBasis>();
  return instance;
}

std::shared_ptr<const DualBasis> p_basis() {
  static const auto instance = std::make_shared<const DualBasis>("P", q_basis());
  return instance;
}

Element g_constants(const Parts& lambda, const Parts& mu) { return q_basis()->product(lambda, mu); }

Element f_constants(const Parts& lambda, const Parts& mu) {
  const auto& q = *q_basis();
  q.require_index(lambda);
  q.require_index(mu);
  Element out;
  for (const Parts& nu : q.basis_cached(lambda.degree() + mu.degree()))
    out.add(nu, q.coproduct_constant(lambda, mu, nu));
  return out;
}

Element skew_Q(const Parts& nu, const Parts& mu) {
  q_basis()->require_index(nu);
  q_basis()->require_index(mu);
  return q_basis()->skew(nu, mu);
}

SkewSum skew_product_Q(const Parts& lambda, const Parts& mu, const Parts& sigma, const Parts& tau, bool p_side) {
  const HopfBasis& basis = p_side ? static_cast<const HopfBasis&>(*p_basis()) : *q_basis();
  for (const Parts* x : {&lambda, &mu, &sigma, &tau}) basis.require_index(*x);
  return skew_product_theorem(lambda, mu, sigma, tau, basis);
}

}  // namespace skewlr
