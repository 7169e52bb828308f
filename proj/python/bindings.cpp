// Python bindings: poset construction and queries, matching enumeration,
// monoid closures, idempotent analysis, and the frozen reproduction claims.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "matchmonoid/builtin.hpp"
#include "matchmonoid/endo.hpp"
#include "matchmonoid/idempotent_analysis.hpp"
#include "matchmonoid/json_io.hpp"
#include "matchmonoid/matching.hpp"
#include "matchmonoid/poset.hpp"
#include "matchmonoid/repro.hpp"

namespace py = pybind11;
using namespace matchmonoid;

namespace {

// Carrier handle: the C++ side shares immutable posets through
// shared_ptr-to-const, which is wrapped rather than used as a holder.
struct PyPoset {
  PosetPtr p;
};

py::object integer_to_py(const Integer& v) {
  if (fits_int64(v)) return py::cast(static_cast<long long>(v.get_si()));
  return py::module_::import("builtins").attr("int")(v.get_str());
}

PyPoset py_builtin(const std::string& spec) { return {builtin_poset(spec)}; }

PyPoset py_build(int n, const std::vector<std::pair<int, int>>& covers,
                 const std::vector<std::string>& labels) {
  return {build_poset(n, covers, labels)};
}

std::vector<std::vector<std::int32_t>> py_special_matchings(const PyPoset& p) {
  std::vector<std::vector<std::int32_t>> out;
  for (const Matching& m : enumerate_special_matchings(p.p))
    out.push_back(m.partner);
  return out;
}

std::vector<std::vector<std::int32_t>> py_special_partial_matchings(
    const PyPoset& p) {
  std::vector<std::vector<std::int32_t>> out;
  for (const PartialMatching& m : enumerate_special_partial_matchings(p.p))
    out.push_back(m.partner);
  return out;
}

MonoidClosure closure_from_matchings(const PyPoset& p, bool partial) {
  std::vector<Endo> gens;
  if (partial)
    for (const auto& m : enumerate_special_partial_matchings(p.p))
      gens.push_back(idempotent_from_partial(m));
  else
    for (const auto& m : enumerate_special_matchings(p.p))
      gens.push_back(idempotent_from_matching(m));
  return generate_closure(p.p, gens);
}

py::dict py_monoid_summary(const PyPoset& p, bool partial) {
  MonoidClosure cl = closure_from_matchings(p, partial);
  py::dict d;
  d["size"] = cl.elements.size();
  d["idempotents"] = cl.idempotents.size();
  return d;
}

py::dict py_analyze(const PyPoset& p, const std::vector<std::int32_t>& image) {
  Endo e = make_endo(p.p, image);
  IdempotentReport rep = analyze(e);
  py::dict d;
  d["image"] = rep.image;
  d["interval_retract"] = rep.retract.ok;
  d["projection"] = rep.projection.ok;
  d["report"] = dump_json(idempotent_report_json(rep), false);
  return d;
}

py::list py_reproduce(const std::string& claim, int n) {
  py::list out;
  for (const ReproReport& r : reproduce(claim, n)) {
    py::dict d;
    d["claim"] = r.claim;
    d["pass"] = r.pass;
    d["seconds"] = r.seconds;
    d["expected"] = dump_json(r.expected, false);
    d["computed"] = dump_json(r.computed, false);
    d["notes"] = r.notes;
    out.append(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regressive order-preserving monoids over finite graded posets";

  py::class_<PyPoset>(m, "Poset")
      .def_property_readonly("n", [](const PyPoset& s) { return s.p->n; })
      .def_property_readonly("bottom",
                             [](const PyPoset& s) { return s.p->bottom; })
      .def_property_readonly("top", [](const PyPoset& s) { return s.p->top; })
      .def_property_readonly("covers",
                             [](const PyPoset& s) { return s.p->covers; })
      .def("rank", [](const PyPoset& s, int x) { return s.p->rank.at(x); })
      .def("max_rank", [](const PyPoset& s) { return s.p->max_rank(); })
      .def("leq", [](const PyPoset& s, int x, int y) { return s.p->leq(x, y); })
      .def("label", [](const PyPoset& s, int x) { return s.p->label(x); })
      .def("eulerian", [](const PyPoset& s) { return s.p->eulerian(); })
      .def("mobius",
           [](const PyPoset& s, int x, int y) {
             return integer_to_py(mobius(*s.p, x, y));
           })
      .def("__repr__", [](const PyPoset& s) {
        return "<Poset n=" + std::to_string(s.p->n) + ">";
      });

  m.def("builtin_poset", &py_builtin, py::arg("spec"),
        "Parse a builtin spec such as 'chain:4' or 'product:(chain:2,chain:2)'");
  m.def("build_poset", &py_build, py::arg("n"), py::arg("covers"),
        py::arg("labels") = std::vector<std::string>{});
  m.def("special_matchings", &py_special_matchings, py::arg("poset"),
        "Partner tables of all special perfect matchings");
  m.def("special_partial_matchings", &py_special_partial_matchings,
        py::arg("poset"));
  m.def("matching_monoid", &py_monoid_summary, py::arg("poset"),
        py::arg("partial") = false,
        "Size and idempotent count of the generated monoid");
  m.def("analyze_idempotent", &py_analyze, py::arg("poset"), py::arg("image"),
        "Structure report for an idempotent given by its image table");
  m.def("reproduce", &py_reproduce, py::arg("claim"), py::arg("n") = -1,
        "Run frozen-expectation reproduction claims ('all' for every one)");
  m.def("claim_ids", [] { return repro_claim_ids(); });
}
