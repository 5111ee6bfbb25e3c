// Python bindings: a thin layer over the library, with strings for field elements.

#include "skr/asymptotics.hpp"
#include "skr/lweights.hpp"
#include "skr/repmodules.hpp"
#include "skr/rmatrix.hpp"
#include "skr/youngcomb.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace skr;

namespace {

Scalar sc(const std::string& s) { return Scalar::parse(s); }

Weight weightOf(int M, int N, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != M + N) throw py::value_error("weight needs M+N entries");
  return Weight(M, N, c);
}

std::vector<std::pair<std::string, long>> terms(const QCharacter& chi) {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& [w, m] : chi.terms) out.emplace_back(w.str(), m);
  return out;
}

QCharacter normalized(const QCharacter& chi) {
  QCharacter n = normalize(chi);
  try {
    return toAMonomials(n);
  } catch (const Error&) {
    return n;
  }
}

Variant variantOf(const std::string& v) {
  if (v == "minus") return Variant::minus;
  if (v == "plus") return Variant::plus;
  throw py::value_error("variant is 'minus' or 'plus'");
}

}  // namespace

PYBIND11_MODULE(_skr, m) {
  m.doc() = "Kirillov-Reshetikhin modules of quantum affine gl(M,N)";
  py::register_exception<Error>(m, "SkrError", PyExc_RuntimeError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& s) { return Scalar::parse(s); }))
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& x) { return "Scalar('" + x.str() + "')"; })
      .def("__eq__", [](const Scalar& x, const Scalar& y) { return x == y; })
      .def("__add__", [](const Scalar& x, const Scalar& y) { return x + y; })
      .def("__sub__", [](const Scalar& x, const Scalar& y) { return x - y; })
      .def("__mul__", [](const Scalar& x, const Scalar& y) { return x * y; })
      .def("__truediv__", [](const Scalar& x, const Scalar& y) { return x / y; })
      .def("substitute", [](const Scalar& x, const std::string& v, const Scalar& y) { return x.substitute(v, y); })
      .def("is_zero", &Scalar::isZero);

  py::class_<Representation>(m, "Representation")
      .def_readonly("M", &Representation::M)
      .def_readonly("N", &Representation::N)
      .def_property_readonly("dim", &Representation::dim)
      .def("json", &Representation::json)
      .def_static("from_json", &Representation::fromJson)
      .def("__repr__", [](const Representation& r) {
        return "<Representation gl(" + std::to_string(r.M) + "," + std::to_string(r.N) + ") dim " +
               std::to_string(r.dim()) + ">";
      });

  m.def("character", [](int M, int N, const std::vector<int>& lam) {
    py::dict out;
    for (const auto& [w, k] : character(weightOf(M, N, lam)).mult) out[py::tuple(py::cast(w.c))] = k;
    return out;
  });
  m.def("gt_patterns", [](int M, int N, const std::vector<int>& lam) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : gtPatterns(weightOf(M, N, lam))) {
      std::vector<std::vector<int>> lv;
      for (size_t k = 0; k < p.levels.size(); ++k) {
        lv.emplace_back(p.levels[k].c.begin(), p.levels[k].c.begin() + static_cast<long>(k) + 1);
      }
      out.push_back(lv);
    }
    return out;
  });
  m.def("lowest_weight", [](int M, int N, const std::vector<int>& lam) { return lowestWeight(weightOf(M, N, lam)).c; });

  m.def("verify_ybe", [](int M, int N) {
    auto R = perkSchultz(M, N);
    auto y = probeYangBaxter(R);
    std::map<std::string, bool> out{{"ice", checkIceRule(R).pass},
                                    {"graded", y.gradedPass},
                                    {"plain", y.plainPass},
                                    {"linear_decomposition", checkLinearDecomposition(R)}};
    return out;
  });

  m.def("qcharacter", [](int M, int N, const std::vector<int>& lam, const std::string& a, bool normalize_) {
    auto chi = qcharEval(weightOf(M, N, lam), sc(a));
    return terms(normalize_ ? normalized(chi) : chi);
  }, py::arg("M"), py::arg("N"), py::arg("lam"), py::arg("a") = "a", py::arg("normalize") = true);
  m.def("kr_qcharacter", [](int M, int N, int r, int k, const std::string& a) {
    return terms(toAMonomials(krNormalized(M, N, r, k, sc(a))));
  }, py::arg("M"), py::arg("N"), py::arg("r"), py::arg("k"), py::arg("a") = "a");

  m.def("natural", [](int M, int N, const std::string& a) { return evaluate(naturalRepFinite(M, N), sc(a)); },
        py::arg("M"), py::arg("N"), py::arg("a") = "a");
  m.def("evaluation_module", [](int M, int N, const std::vector<int>& lam, const std::string& a) {
    return evaluationModule(weightOf(M, N, lam), sc(a));
  }, py::arg("M"), py::arg("N"), py::arg("lam"), py::arg("a") = "a");
  m.def("kr_module", [](int M, int N, int r, int k, const std::string& a) { return krModule(M, N, r, k, sc(a)); },
        py::arg("M"), py::arg("N"), py::arg("r"), py::arg("k"), py::arg("a") = "a");
  m.def("gl11_module", [](const std::string& a, const std::string& b) { return gl11Family(sc(a), sc(b)); },
        py::arg("a") = "a", py::arg("b") = "b");
  m.def("gl21_family", [](const std::string& variant, std::optional<int> k, const std::string& a) {
    auto p = gl21Family(variantOf(variant), sc(a));
    return k ? atLevel(p, *k) : p.rep;
  }, py::arg("variant"), py::arg("k") = py::none(), py::arg("a") = "a");
  m.def("limit", [](const std::string& which, const std::string& a, const std::string& b) {
    if (which == "minus") return limitMinus(gl21Family(Variant::minus, sc(a)));
    if (which == "plus") return limitPlus(gl21Family(Variant::plus, sc(a)));
    if (which == "generic") return genericEval(gl21Family(Variant::plus, sc(a)), sc(b));
    throw py::value_error("limit is 'minus', 'plus' or 'generic'");
  }, py::arg("which"), py::arg("a") = "a", py::arg("b") = "b");
  m.def("tensor", [](const Representation& V, const Representation& W) { return tensor(V, W); });
  m.def("dual", [](const Representation& V) { return dual(V); });

  m.def("check_rtt", [](const Representation& V) {
    auto r = checkRTT(V);
    return py::dict(py::arg("pass") = r.pass, py::arg("relation") = r.relation, py::arg("residual") = r.residual);
  });
  m.def("check_centrality", [](const Representation& V) {
    for (int k = 1; k <= V.n(); ++k) {
      if (!checkCentrality(V, k).pass) return false;
    }
    return true;
  });
  m.def("ell_decompose", [](const Representation& V, bool normalize_) {
    auto chi = ellDecompose(V);
    return terms(normalize_ ? normalized(chi) : chi);
  }, py::arg("rep"), py::arg("normalize") = true);
  m.def("highest_l_weights", [](const Representation& V) {
    std::vector<std::vector<std::string>> out;
    for (const auto& h : highestLWeightVectors(V)) {
      std::vector<std::string> row;
      for (const auto& s : h.sDiag) row.push_back(s.str());
      out.push_back(row);
    }
    return out;
  });
  m.def("decompose_restriction", [](const Representation& V, int k) {
    auto d = decomposeRestriction(V, k);
    return py::dict(py::arg("semisimple") = d.semisimple, py::arg("summands") = d.summands,
                    py::arg("exact") = d.exact);
  });
  m.def("kappa_audit", [](const std::string& variant, bool flip) {
    auto p = gl21Family(variantOf(variant), Scalar::var(var::a));
    if (flip) p = flipMN(p);
    auto au = kappaDegreeAudit(p);
    return py::dict(py::arg("pass") = au.pass, py::arg("lo") = au.lo, py::arg("hi") = au.hi,
                    py::arg("window") = std::make_pair(au.windowLo, au.windowHi));
  }, py::arg("variant"), py::arg("flip") = false);
  m.def("cyclic_fundamental", [](int M, int N, int r, int k) {
    auto c = fundamentalChain(M, N, r, k, Scalar::var(var::a));
    return cyclicityCheck(c.rep, c.top);
  });
  m.def("cyclic_kr", [](int M, int N, int r, std::array<int, 3> l) {
    auto c = krChain(M, N, r, l, Scalar::var(var::a));
    return cyclicityCheck(c.rep, c.top);
  });
  m.def("factorization_obstruction", [](int M, int N, int r, int k, const std::string& b) {
    auto o = factorizationObstruction(M, N, r, k, Scalar::var(var::a), sc(b));
    return py::dict(py::arg("pass") = o.pass, py::arg("triples") = o.triples, py::arg("witnesses") = o.witnesses);
  });
}
