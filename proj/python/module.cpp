// Python bindings for the main operations: exact values cross the boundary
// as strings or integer-string arrays so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/errors.hpp"
#include "hecke/formulas.hpp"
#include "hecke/fusion.hpp"
#include "hecke/intertwiner.hpp"
#include "hecke/representations.hpp"
#include "hecke/serialize.hpp"
#include "hecke/suites.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

py::dict wire_dict(const RatFunc& f) {
  RatFuncWire w = to_wire(f);
  py::dict d;
  d["num"] = w.num;
  d["den"] = w.den;
  d["scale"] = w.scale;
  d["text"] = f.str();
  return d;
}

IndexSequence seq_of(const std::vector<int>& values, IndexSequence::Kind kind) {
  return {values, kind};
}

py::dict report_dict(const Report& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["claim"] = r.claim;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  py::list cases;
  for (const CaseResult& c : r.cases) {
    py::dict jc;
    jc["id"] = c.id;
    jc["pass"] = c.pass;
    if (!c.pass) jc["detail"] = c.detail;
    cases.append(jc);
  }
  d["cases"] = cases;
  d["failures"] = r.failures();
  d["pass"] = r.pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations with symmetric group intertwiners and hook lengths";

  py::register_exception<ParseError>(m, "HeckeParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<MultiplicityError>(m, "MultiplicityError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

  m.def("conjugate", [](const std::string& p) {
    return Partition::parse(p).conjugate().str();
  }, py::arg("partition"), "Conjugate partition, comma-separated text in and out.");

  m.def("hooks", [](const std::string& shape) {
    Partition p = Partition::parse(shape);
    std::vector<int> hooks;
    for (const Box& b : p.boxes()) hooks.push_back(hook_length(p, b));
    py::dict d;
    d["hooks"] = hooks;
    d["product"] = hook_product(p);
    d["dim"] = hook_dimension(p);
    return d;
  }, py::arg("shape"), "Hook lengths in row-reading order, their product and l!/h.");

  m.def("standard_tableaux", [](const std::string& shape) {
    std::vector<std::string> out;
    for (const StandardTableau& t : enumerate_standard(Partition::parse(shape)))
      out.push_back(t.str());
    return out;
  }, py::arg("shape"));

  m.def("column_tableau", [](const std::string& shape) {
    return column_tableau(Partition::parse(shape)).str();
  }, py::arg("shape"));

  m.def("gamma_tableau",
        [](const std::string& lam, const std::string& mu, const std::vector<int>& a,
           const std::string& M) {
          StandardTableau Mtab = M.empty() ? StandardTableau() : StandardTableau::parse(M);
          return build_Gamma(Partition::parse(lam), Partition::parse(mu),
                             seq_of(a, IndexSequence::Kind::Rows), Mtab)
              .str();
        },
        py::arg("lam"), py::arg("mu"), py::arg("a"), py::arg("M"));

  m.def("r_gamma",
        [](const std::string& lam, const std::string& mu, const std::vector<int>& a) {
          return wire_dict(theorem1_value(Partition::parse(lam), Partition::parse(mu),
                                          seq_of(a, IndexSequence::Kind::Rows)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("a"),
        "Closed-form eigenvalue on the gamma component.");

  m.def("r_delta",
        [](const std::string& lam, const std::string& mu, const std::vector<int>& b) {
          return wire_dict(theorem2_value(Partition::parse(lam), Partition::parse(mu),
                                          seq_of(b, IndexSequence::Kind::Columns)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("b"),
        "Closed-form eigenvalue on the delta component.");

  m.def("h_ratio", [](const std::string& lam, const std::string& mu) {
    return wire_dict(corollary_h(Partition::parse(lam), Partition::parse(mu)));
  }, py::arg("lam"), py::arg("mu"), "Mixed-hook eigenvalue ratio.");

  m.def("prop4_rhs", [](const std::string& lam, const std::string& mu) {
    return wire_dict(prop4_rhs(Partition::parse(lam), Partition::parse(mu)));
  }, py::arg("lam"), py::arg("mu"));

  m.def("r_theta", [](const std::string& lam, int m) {
    return wire_dict(rtheta_value(Partition::parse(lam), m));
  }, py::arg("lam"), py::arg("m"));

  m.def("dset", [](const std::string& lam, const std::string& mu) {
    DSet d = compute_dset(Partition::parse(lam), Partition::parse(mu));
    return std::vector<long>(d.points.begin(), d.points.end());
  }, py::arg("lam"), py::arg("mu"), "Integer zeros and poles over all components.");

  m.def("matrix_element_F", [](const std::string& tableau) {
    RationalElement f = matrix_element_F(StandardTableau::parse(tableau));
    std::vector<std::pair<std::string, std::string>> terms;
    for (const auto& [perm, coeff] : f.terms()) terms.emplace_back(perm.str(), coeff.str());
    return terms;
  }, py::arg("tableau"), "Sparse diagonal matrix element as (permutation, coefficient) pairs.");

  m.def("fused_F_matches", [](const std::string& tableau) {
    StandardTableau t = StandardTableau::parse(tableau);
    return fused_F(t).value == matrix_element_F(t);
  }, py::arg("tableau"), "Fusion value at the origin against the direct matrix element.");

  m.def("eigenvalue_at",
        [](const std::string& lam, const std::string& mu, const std::string& nu,
           const std::string& u) {
          Realization<Rational> real = make_realization<Rational>(
              column_tableau(Partition::parse(lam)), column_tableau(Partition::parse(mu)),
              Rational::parse(u));
          return eigenvalue(Partition::parse(nu), real).value.str();
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("u"),
        "Brute-force eigenvalue of J on the nu component at a rational point.");

  m.def("multiplicity",
        [](const std::string& lam, const std::string& mu, const std::string& nu) {
          Partition mup = Partition::parse(mu);
          StandardTableau M = mup.empty() ? StandardTableau() : column_tableau(mup);
          return multiplicity_in_W(Partition::parse(nu),
                                   column_tableau(Partition::parse(lam)), M);
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));

  m.def("run_suite",
        [](const std::string& name, int max_size, std::uint64_t seed, int samples, int jobs,
           bool symbolic) {
          SuiteOptions opt;
          opt.max_size = max_size;
          opt.seed = seed;
          opt.samples = samples;
          opt.jobs = jobs;
          opt.symbolic = symbolic;
          return report_dict(run_suite(name, opt));
        },
        py::arg("name"), py::arg("max_size") = 0, py::arg("seed") = 1, py::arg("samples") = 20,
        py::arg("jobs") = 1, py::arg("symbolic") = false);

  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (const SuiteInfo& s : suite_catalog()) names.push_back(s.name);
    return names;
  });
}
