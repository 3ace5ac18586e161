#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skewlr/checks.hpp"
#include "skewlr/hopf.hpp"
#include "skewlr/kschur.hpp"
#include "skewlr/notation.hpp"
#include "skewlr/ribbon.hpp"
#include "skewlr/schur.hpp"
#include "skewlr/tableau.hpp"

namespace py = pybind11;
using namespace skewlr;

namespace {

using Index = std::vector<int>;
using Terms = std::vector<std::pair<Index, std::string>>;
using TensorTerms = std::vector<std::tuple<Index, Index, std::string>>;

Index to_index(const Parts& p) { return Index(p.begin(), p.end()); }

Parts to_parts(const Index& v) {
  Parts p;
  for (int x : v) p.push_back(x);
  return p;
}

Parts checked(const Index& v, const HopfBasis& basis) {
  Parts p = to_parts(v);
  basis.require_index(p);
  return p;
}

Terms to_terms(const Element& x) {
  Terms out;
  for (const auto& [index, c] : x) out.emplace_back(to_index(index), c.to_string());
  return out;
}

Element from_terms(const Terms& terms, const HopfBasis& basis) {
  Element x;
  for (const auto& [index, c] : terms) x.add(checked(index, basis), Rational::parse(c));
  return x;
}

TensorTerms to_tensor_terms(const Tensor& t) {
  TensorTerms out;
  for (const auto& [pair, c] : t) out.emplace_back(to_index(pair.first), to_index(pair.second), c.to_string());
  return out;
}

TensorTerms to_skew_terms(const SkewSum& s) {
  TensorTerms out;
  for (const auto& [index, c] : s) out.emplace_back(to_index(index.outer), to_index(index.inner), c.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hopf-algebra kernels: skew Littlewood-Richardson rules";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

  py::class_<HopfBasis, std::shared_ptr<HopfBasis>>(m, "Algebra")
      .def_property_readonly("tag", &HopfBasis::tag)
      .def_property_readonly("composition_indexed", &HopfBasis::composition_indexed)
      .def("basis", [](const HopfBasis& b, int degree) {
        std::vector<Index> out;
        for (const Parts& p : b.basis_cached(degree)) out.push_back(to_index(p));
        return out;
      })
      .def("parse", [](const HopfBasis& b, const std::string& text) { return to_terms(parse_element(text, b)); })
      .def("format", [](const HopfBasis& b, const Terms& x) { return format_element(from_terms(x, b), b); })
      .def("product",
           [](const HopfBasis& b, const Terms& x, const Terms& y) {
             return to_terms(multiply(from_terms(x, b), from_terms(y, b), b));
           })
      .def("coproduct",
           [](const HopfBasis& b, const Terms& x) { return to_tensor_terms(comultiply(from_terms(x, b), b)); })
      .def("antipode", [](const HopfBasis& b, const Terms& x) { return to_terms(antipode(from_terms(x, b), b)); })
      .def("skew",
           [](const HopfBasis& b, const Index& outer, const Index& inner) {
             return to_terms(b.skew(checked(outer, b), checked(inner, b)));
           })
      .def("skew_product",
           [](const HopfBasis& b, const Index& lambda, const Index& mu, const Index& sigma, const Index& tau) {
             return to_skew_terms(
                 skew_product_theorem(checked(lambda, b), checked(mu, b), checked(sigma, b), checked(tau, b), b));
           })
      .def("evaluate_skew_sum",
           [](const HopfBasis& b, const TensorTerms& sum) {
             SkewSum s;
             for (const auto& [outer, inner, c] : sum)
               s.add(SkewIndex{checked(outer, b), checked(inner, b)}, Rational::parse(c));
             return to_terms(evaluate_skew_sum(s, b));
           })
      .def("skew_product_oracle",
           [](const HopfBasis& b, const Index& lambda, const Index& mu, const Index& sigma, const Index& tau) {
             return to_terms(
                 skew_product_oracle(checked(lambda, b), checked(mu, b), checked(sigma, b), checked(tau, b), b));
           });

  m.def(
      "algebra",
      [](const std::string& name, int k) { return std::const_pointer_cast<HopfBasis>(algebra_by_name(name, k)); },
      py::arg("name"), py::arg("k") = 0);

  m.def("lr_coefficient", [](const Index& lambda, const Index& mu, const Index& nu) {
    return lr_coefficient(Partition(to_parts(lambda)), Partition(to_parts(mu)), Partition(to_parts(nu)));
  });
  m.def("skew_lr_combinatorial", [](const Index& lambda, const Index& mu, const Index& sigma, const Index& tau) {
    return to_skew_terms(skew_lr_combinatorial(Partition(to_parts(lambda)), Partition(to_parts(mu)),
                                               Partition(to_parts(sigma)), Partition(to_parts(tau))));
  });

  m.def("descent_composition", [](const std::vector<int>& u) { return to_index(descent_composition(u)); });
  m.def("word_section", [](const Index& alpha) { return word_section(to_parts(alpha)); });
  m.def("ribbon_conjugate", [](const Index& alpha) { return to_index(ribbon_conjugate(to_parts(alpha))); });

  m.def("core_from_kbounded", [](const Index& lambda, int k) { return to_index(core_from_kbounded(to_parts(lambda), k)); });
  m.def("k_conjugate", [](const Index& lambda, int k) { return to_index(k_conjugate(to_parts(lambda), k)); });
  m.def("k_pieri", [](const Index& lambda, int r, int k) {
    std::vector<Index> out;
    for (const Parts& mu : k_pieri(to_parts(lambda), r, k)) out.push_back(to_index(mu));
    return out;
  });
  m.def("skew_k_pieri", [](const Index& lambda, const Index& mu, int r, int k) {
    return to_skew_terms(skew_k_pieri(to_parts(lambda), to_parts(mu), r, k));
  });
  m.def("kschur_in_h", [](const Index& lambda, int k) { return to_terms(kschur_in_h(to_parts(lambda), k)); });

  m.def(
      "verify",
      [](const std::string& name, const std::string& check, int max_degree, int k) {
        const auto basis = algebra_by_name(name, k);
        std::vector<CheckResult> out;
        if (check == "axioms") out.push_back(check_axioms(*basis, max_degree));
        else if (check == "lemma1") out.push_back(check_lemma1(basis, max_degree));
        else if (check == "skew-lr") out.push_back(check_skew_lr(*basis, max_degree));
        else if (check == "duality") out.push_back(check_duality(max_degree));
        else if (check == "pieri") out.push_back(check_pieri(k, max_degree));
        else throw std::invalid_argument("unknown check '" + check + "'");
        std::vector<std::tuple<std::string, bool, long, std::string>> rows;
        for (const auto& r : out) rows.emplace_back(r.name, r.passed, r.cases, r.counterexample);
        return rows;
      },
      py::arg("algebra"), py::arg("check"), py::arg("max_degree"), py::arg("k") = 0);
}
