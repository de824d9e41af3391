#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arcext/oracle.hpp"
#include "arcext/report.hpp"
#include "arcext/sweep.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace arcext;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

class PySurface {
 public:
  explicit PySurface(const std::string& document) : s_(Surface::load(document)) {}

  py::object quiver() const { return json_to_py(quiver_json(s_)); }

  std::string validate(const std::string& word) const {
    return print_word(s_.T, canonicalize(s_.T, parse_word(s_, word)));
  }

  py::object snake(const std::string& word) const {
    return json_to_py(snake_json(s_.T, snake_graph_of_string(s_, parse_word(s_, word))));
  }

  py::object snake_of_sequence(const std::vector<std::string>& seq) const {
    std::vector<EdgeIx> s;
    for (const auto& lab : seq) s.push_back(s_.T.edge(lab));
    return json_to_py(snake_json(s_.T, build_snake_graph(s_, s)));
  }

  std::string string_of_sequence(const std::vector<std::string>& seq) const {
    std::vector<EdgeIx> s;
    for (const auto& lab : seq) s.push_back(s_.T.edge(lab));
    return print_word(s_.T, crossing_sequence_to_string(s_.Q, s));
  }

  py::object crossings(const std::string& w1, const std::string& w2) const {
    auto cr = enumerate_crossings(s_, parse_word(s_, w1), parse_word(s_, w2));
    json out = json::array();
    for (size_t i = 0; i < cr.size(); ++i)
      out.push_back(crossing_json(s_, static_cast<int>(i), cr[i]));
    return json_to_py(out);
  }

  py::object smooth_crossing(const std::string& w1, const std::string& w2,
                             int index) const {
    auto cr = enumerate_crossings(s_, parse_word(s_, w1), parse_word(s_, w2));
    if (index < 0 || index >= static_cast<int>(cr.size()))
      throw ValidationError("bad-index", "crossing index out of range");
    return json_to_py(smoothing_json(s_, smooth(s_, cr[index])));
  }

  py::object ext(const std::string& w1, const std::string& w2) const {
    return json_to_py(ext_report_json(s_, parse_word(s_, w1), parse_word(s_, w2)));
  }

  py::tuple oracle_ext(const std::string& w1, const std::string& w2) const {
    OracleCache cache(s_);
    StringWord a = parse_word(s_, w1), b = parse_word(s_, w2);
    long mn = cache.ext1(a, b);
    long nm = same_module(s_.T, a, b) ? mn : cache.ext1(b, a);
    return py::make_tuple(mn, nm);
  }

  py::object check(int max_len, int parallel) const {
    SweepResult r = check_surface(s_, {max_len, parallel});
    json issues = json::array();
    for (const auto& i : r.issues)
      issues.push_back({{"kind", i.kind}, {"detail", i.detail}});
    json j = {{"strings", r.strings}, {"pairs", r.pairs},
              {"crossings", r.crossings}, {"seconds", r.seconds},
              {"issues", issues}, {"ok", r.ok()}};
    return json_to_py(j);
  }

  std::vector<std::string> strings(int max_len) const {
    std::vector<std::string> out;
    for (const auto& w : enumerate_strings(s_, max_len))
      out.push_back(print_word(s_.T, w));
    return out;
  }

 private:
  Surface s_;
};

}  // namespace

PYBIND11_MODULE(_arcext, m) {
  m.doc() = "extension spaces of string modules over gentle surface algebras";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<InternalFault>(m, "InternalFault");

  py::class_<PySurface>(m, "Surface")
      .def(py::init<const std::string&>(), py::arg("document"),
           "load a triangulation from its JSON document")
      .def("quiver", &PySurface::quiver)
      .def("validate", &PySurface::validate, py::arg("word"))
      .def("snake", &PySurface::snake, py::arg("word"))
      .def("snake_of_sequence", &PySurface::snake_of_sequence, py::arg("sequence"))
      .def("string_of_sequence", &PySurface::string_of_sequence, py::arg("sequence"))
      .def("crossings", &PySurface::crossings, py::arg("w1"), py::arg("w2"))
      .def("smooth", &PySurface::smooth_crossing, py::arg("w1"), py::arg("w2"),
           py::arg("index"))
      .def("ext", &PySurface::ext, py::arg("w1"), py::arg("w2"))
      .def("oracle_ext", &PySurface::oracle_ext, py::arg("w1"), py::arg("w2"))
      .def("check", &PySurface::check, py::arg("max_len") = 4, py::arg("parallel") = 1)
      .def("strings", &PySurface::strings, py::arg("max_len"));
}
