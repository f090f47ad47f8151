#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kflag/app/commands.hpp"
#include "kflag/error.hpp"

namespace py = pybind11;
using namespace kflag;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.str())); }

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::tuple word_tuple(const WeylElement& w) {
  py::tuple t(w.word.size());
  for (std::size_t k = 0; k < w.word.size(); ++k) t[k] = w.word[k] + 1;
  return t;
}

// Wraps one group with its model and ring. Words are 1-based tuples.
class Flag {
 public:
  Flag(const app::JobConfig& c) : s_(app::Session::open(c)) {}

  int rank() const { return s_.group->rank(); }
  std::size_t weyl_order() const { return s_.group->size(); }
  int dim() const { return s_.model->dim(); }
  std::string label() const { return s_.group->datum().label(); }
  std::vector<std::string> warnings() const { return s_.warnings; }

  py::list elements() const {
    py::list out;
    for (const auto& w : s_.group->elements()) out.append(word_tuple(w));
    return out;
  }

  const WeylElement& el(const std::vector<int>& word) const { return app::resolve_word(*s_.group, word); }

  py::list by_element(const std::vector<Integer>& c) const {
    py::list out;
    for (const auto& w : s_.group->elements())
      if (c[w.index] != 0) out.append(py::make_tuple(word_tuple(w), to_py(c[w.index])));
    return out;
  }

  py::list structure_constants(const std::vector<int>& u, const std::vector<int>& v) const {
    return by_element(s_.ring->structure_constants(el(u), el(v)));
  }

  py::list line_bundle_coeffs(const std::vector<int>& v, const std::vector<int>& lambda) const {
    return by_element(s_.ring->line_bundle_coeffs(el(v), app::resolve_weight(s_.group->datum(), lambda)));
  }

  py::list richardson_class(const std::vector<int>& u, const std::vector<int>& v) const {
    return by_element(s_.ring->richardson_class(el(u), el(v)).coeffs);
  }

  py::int_ euler_characteristic(const std::vector<int>& lambda) const {
    const Weight l = app::resolve_weight(s_.group->datum(), lambda);
    return to_py(s_.model->euler_characteristic(s_.model->line_bundle_class(l)));
  }

  py::list schubert_euler_characteristics() const {
    std::vector<Integer> out;
    for (const auto& w : s_.group->elements()) out.push_back(s_.model->euler_characteristic(s_.model->schubert_class(w)));
    return to_py(out);
  }

 private:
  app::Session s_;
};

app::JobConfig config_from(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad job document: ") + e.what());
  }
  return app::job_config_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "K-theoretic Schubert calculus on G/P";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto config = py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", config.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());

  m.attr("EXIT_OK") = static_cast<int>(app::kOk);
  m.attr("EXIT_VIOLATIONS") = static_cast<int>(app::kViolations);
  m.attr("EXIT_CONFIG") = static_cast<int>(app::kConfigError);
  m.attr("EXIT_INTEGRITY") = static_cast<int>(app::kIntegrityError);

  m.def(
      "run",
      [](const std::string& job) {
        const app::JobConfig c = config_from(job);
        app::CommandResult r;
        {
          py::gil_scoped_release release;
          r = app::run_command(c);
        }
        return py::make_tuple(r.exit_code, r.text, r.warnings);
      },
      py::arg("job"),
      "Runs a job document (the CLI's JSON config layout). Returns (exit_code, output, warnings).");

  py::class_<Flag>(m, "Flag")
      .def(py::init([](const std::string& job) { return std::make_unique<Flag>(config_from(job)); }), py::arg("job"))
      .def_property_readonly("rank", &Flag::rank)
      .def_property_readonly("weyl_order", &Flag::weyl_order)
      .def_property_readonly("dim", &Flag::dim)
      .def_property_readonly("label", &Flag::label)
      .def_property_readonly("warnings", &Flag::warnings)
      .def("elements", &Flag::elements)
      .def("structure_constants", &Flag::structure_constants, py::arg("u"), py::arg("v"))
      .def("line_bundle_coeffs", &Flag::line_bundle_coeffs, py::arg("v"), py::arg("weight"))
      .def("richardson_class", &Flag::richardson_class, py::arg("u"), py::arg("v"))
      .def("euler_characteristic", &Flag::euler_characteristic, py::arg("weight"))
      .def("schubert_euler_characteristics", &Flag::schubert_euler_characteristics);
}
