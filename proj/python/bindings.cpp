#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssg/analysis.hpp"
#include "ssg/correspondence.hpp"
#include "ssg/errors.hpp"
#include "ssg/io.hpp"
#include "ssg/katsura.hpp"

namespace py = pybind11;
using namespace ssg;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

IntMatrix from_py(const std::vector<std::vector<py::int_>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (const auto& v : r) row.emplace_back(py::str(v).cast<std::string>(), 10);
    m.push_back(std::move(row));
  }
  return m;
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (const auto& r : m) {
    py::list row;
    for (const auto& v : r) row.append(to_py(v));
    rows.append(row);
  }
  return rows;
}

std::string analyze(const std::string& doc, std::size_t bound) {
  const Triple t = parse_triple(doc);
  const Analyzer an(t, bound);
  return report_to_json(t, an.analyze()).dump();
}

std::string katsura(const std::vector<std::vector<py::int_>>& a, const std::vector<std::vector<py::int_>>& b, bool ktheory) {
  return katsura_to_json(summarize_katsura({from_py(a), from_py(b)}, ktheory)).dump();
}

py::dict minimal_fixed(const std::string& doc, const std::string& g, std::size_t bound) {
  const Triple t = parse_triple(doc);
  const Analyzer an(t, bound);
  const MinFixedSet m = an.minimal_strongly_fixed_paths(t.group().parse(g));
  py::dict out;
  const char* kinds[] = {"finite", "infinite", "unknown"};
  out["kind"] = kinds[static_cast<int>(m.kind)];
  py::list paths;
  for (const auto& p : m.paths) paths.append(t.graph().format(p));
  out["paths"] = paths;
  if (m.witness) {
    const Graph& E = t.graph();
    out["witness"] = py::dict(py::arg("g") = t.group().name(m.witness->g), py::arg("prefix") = E.format(m.witness->prefix),
                              py::arg("loop") = E.format(m.witness->loop), py::arg("completion") = E.format(m.witness->completion));
  }
  return out;
}

py::tuple smith(const std::vector<std::vector<py::int_>>& m) {
  const SmithForm f = smith_normal_form(from_py(m));
  return py::make_tuple(to_py(f.U), to_py(f.S), to_py(f.V));
}

py::tuple ktheory(const std::vector<std::vector<py::int_>>& a, const std::vector<std::vector<py::int_>>& b) {
  const KGroups k = k_theory({from_py(a), from_py(b)});
  return py::make_tuple(k.K0.to_string(), k.K1.to_string());
}

std::vector<py::tuple> correspondence(const std::string& doc) {
  const Triple t = parse_triple(doc);
  const CorrespondenceReport r = verify_relations(CorrespondenceModel(t));
  std::vector<py::tuple> out;
  for (const auto& c : r.checks) out.push_back(py::make_tuple(c.name, c.passed, c.witness));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "SsgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.detail());
      exc.attr("kind") = std::string(kind_name(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });
  m.def("validate", [](const std::string& doc) { parse_triple(doc); }, py::arg("document"));
  m.def("normalize", [](const std::string& doc) { return triple_to_json(parse_triple(doc)).dump(); }, py::arg("document"));
  m.def("analyze", &analyze, py::arg("document"), py::arg("bound") = kDefaultBound);
  m.def("katsura", &katsura, py::arg("A"), py::arg("B"), py::arg("ktheory") = false);
  m.def("minimal_strongly_fixed_paths", &minimal_fixed, py::arg("document"), py::arg("g"), py::arg("bound") = kDefaultBound);
  m.def("smith_normal_form", &smith, py::arg("M"));
  m.def("k_theory", &ktheory, py::arg("A"), py::arg("B"));
  m.def("verify_correspondence", &correspondence, py::arg("document"));
}
