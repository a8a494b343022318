#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhc/json_io.hpp"

namespace py = pybind11;

namespace {

using dhc::cplx;

py::array_t<cplx> tensor_to_numpy(const dhc::Tensor& t) {
  std::vector<py::ssize_t> shape(t.shape().begin(), t.shape().end());
  py::array_t<cplx> arr(shape);
  std::copy(t.data().begin(), t.data().end(),
            static_cast<cplx*>(arr.request().ptr));
  return arr;
}

dhc::Tensor tensor_from_numpy(const py::array_t<cplx, py::array::c_style |
                                                          py::array::forcecast>& arr) {
  const auto info = arr.request();
  std::vector<std::size_t> shape(info.shape.begin(), info.shape.end());
  const auto* src = static_cast<const cplx*>(info.ptr);
  return dhc::Tensor(shape, std::vector<cplx>(src, src + info.size));
}

py::object json_to_py(const dhc::ordered_json& j) {
  const py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

std::vector<std::size_t> as_labels(const std::vector<std::size_t>& slits) {
  return slits;
}

}  // namespace

PYBIND11_MODULE(_dhc, m) {
  m.doc() = "density hypercube numerics: states and maps of the doubled "
            "theory, decoherence idempotents, classical/quantum recovery "
            "and multi-slit interference";

  py::class_<dhc::ClassicalStructure>(m, "ClassicalStructure")
      .def(py::init([](std::size_t d, const dhc::CMat& basis,
                       const std::string& label) {
             return dhc::ClassicalStructure(d, basis, label);
           }),
           py::arg("dim"), py::arg("basis"), py::arg("label") = "custom")
      .def_readonly("dim", &dhc::ClassicalStructure::dim)
      .def_readonly("basis", &dhc::ClassicalStructure::basis)
      .def_readonly("label", &dhc::ClassicalStructure::label)
      .def("is_computational", &dhc::ClassicalStructure::is_computational);

  py::class_<dhc::DHState>(m, "DHState")
      .def_property_readonly("dim",
                             [](const dhc::DHState& s) { return s.dim; })
      .def_property_readonly(
          "tensor", [](const dhc::DHState& s) { return tensor_to_numpy(s.tensor); })
      .def_property_readonly(
          "certificate",
          [](const dhc::DHState& s) { return s.certificate; })
      .def("has_certificate", &dhc::DHState::has_certificate);

  py::class_<dhc::DHMap>(m, "DHMap")
      .def_property_readonly("in_dim",
                             [](const dhc::DHMap& f) { return f.in_dim; })
      .def_property_readonly("out_dim",
                             [](const dhc::DHMap& f) { return f.out_dim; })
      .def_property_readonly(
          "tensor", [](const dhc::DHMap& f) { return tensor_to_numpy(f.tensor); });

  py::class_<dhc::StochasticExtract>(m, "StochasticExtract")
      .def_readonly("rows", &dhc::StochasticExtract::rows)
      .def_readonly("cols", &dhc::StochasticExtract::cols)
      .def_readonly("mat", &dhc::StochasticExtract::mat);

  m.def("computational_structure", &dhc::computational_structure,
        py::arg("dim"));
  m.def("fourier_structure", &dhc::fourier_structure, py::arg("dim"));

  m.def("state_from_psd_family", &dhc::dh_state_from_psd_family,
        py::arg("members"),
        "Certified state sum_g M^g (x) conj(M^g) from PSD matrices");
  m.def("uniform_state", &dhc::uniform_state, py::arg("dim"));
  m.def("point_state", &dhc::point_state, py::arg("structure"), py::arg("x"));
  m.def("random_state", &dhc::random_dh_state, py::arg("dim"),
        py::arg("members"), py::arg("seed"));
  m.def("identity_map", &dhc::identity_dh_map, py::arg("dim"));
  m.def("doubled_map", &dhc::doubled_map, py::arg("operator"));
  m.def(
      "map_from_generator",
      [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& f,
         std::size_t g_dim, std::size_t e_dim,
         const dhc::ClassicalStructure& bridge) {
        return dhc::dh_map_from_generator(tensor_from_numpy(f), g_dim, e_dim,
                                          bridge);
      },
      py::arg("f"), py::arg("g_dim"), py::arg("e_dim"), py::arg("bridge"));

  m.def("apply", &dhc::dh_apply, py::arg("map"), py::arg("state"));
  m.def("compose", &dhc::dh_compose, py::arg("second"), py::arg("first"));
  m.def("tensor_map",
        py::overload_cast<const dhc::DHMap&, const dhc::DHMap&>(&dhc::dh_tensor),
        py::arg("a"), py::arg("b"));
  m.def("tensor_state",
        py::overload_cast<const dhc::DHState&, const dhc::DHState&>(
            &dhc::dh_tensor),
        py::arg("a"), py::arg("b"));

  m.def("forest_effect", &dhc::forest_effect, py::arg("state"),
        py::arg("tol") = dhc::default_tol());
  m.def("tree_on_bridge_effect", &dhc::tree_on_bridge_effect, py::arg("state"),
        py::arg("structure"), py::arg("tol") = dhc::default_tol());
  m.def("extension_effect", &dhc::extension_effect, py::arg("state"),
        py::arg("structure"), py::arg("tol") = dhc::default_tol());
  m.def(
      "pair_states",
      [](const dhc::DHState& effect_state, const dhc::DHState& state) {
        return dhc::pair_effect(dhc::effect_of_state(effect_state), state);
      },
      py::arg("effect_state"), py::arg("state"),
      "Pairing of the dagger effect of one state against another");
  m.def("is_normalised_map", &dhc::is_normalised_map, py::arg("map"),
        py::arg("tol") = dhc::default_tol());
  m.def(
      "check_symmetry",
      [](const dhc::DHState& s) {
        const dhc::SymmetryReport rep = dhc::check_symmetry(s);
        py::dict d;
        d["column_swap"] = rep.column_swap_dev;
        d["row_swap"] = rep.row_swap_dev;
        d["rotation"] = rep.rotation_dev;
        d["max"] = rep.max();
        return d;
      },
      py::arg("state"));
  m.def("rotate_state", &dhc::rotate_state, py::arg("state"),
        py::arg("structure"));

  m.def("decoh_map", &dhc::decoh_map, py::arg("structure"), py::arg("dim"));
  m.def("hypdecoh_map", &dhc::hypdecoh_map, py::arg("structure"),
        py::arg("dim"));
  m.def("classical_extract", &dhc::classical_extract, py::arg("map"),
        py::arg("zin"), py::arg("zout"), py::arg("tol") = dhc::default_tol());
  m.def("classical_embed", &dhc::classical_embed, py::arg("matrix"),
        py::arg("zin"), py::arg("zout"));
  m.def(
      "quantum_extract_state",
      [](const dhc::DHState& s) { return dhc::quantum_extract_state(s).mat; },
      py::arg("state"));
  m.def(
      "quantum_lift_state",
      [](const dhc::CMat& sigma, const dhc::ClassicalStructure& z) {
        return dhc::quantum_lift_state(
            dhc::DensityMatrix(static_cast<std::size_t>(sigma.rows()), sigma),
            z);
      },
      py::arg("sigma"), py::arg("structure"));
  m.def("quantum_extract_map", &dhc::quantum_extract_map, py::arg("map"),
        "Choi matrix of the extracted superoperator");

  m.def("random_density_matrix",
        [](std::size_t d, std::size_t rank, std::uint64_t seed) {
          return dhc::random_density_matrix(d, rank, seed).mat;
        },
        py::arg("dim"), py::arg("rank"), py::arg("seed"));
  m.def(
      "kraus_choi",
      [](std::size_t in_dim, std::size_t out_dim,
         const std::vector<dhc::CMat>& kraus) {
        return dhc::choi(dhc::KrausMap(in_dim, out_dim, kraus));
      },
      py::arg("in_dim"), py::arg("out_dim"), py::arg("kraus"));

  m.def(
      "projector",
      [](std::size_t d, const std::vector<std::size_t>& slits) {
        return dhc::projector(dhc::SlitConfig(d, as_labels(slits)));
      },
      py::arg("dim"), py::arg("slits"));
  m.def(
      "slit_probability",
      [](std::size_t d, const std::vector<std::size_t>& slits) {
        return dhc::slit_probability(dhc::SlitConfig(d, as_labels(slits)));
      },
      py::arg("dim"), py::arg("slits"));
  m.def(
      "shape_census",
      [](std::size_t d, const std::vector<std::size_t>& slits) {
        return dhc::shape_census(dhc::SlitConfig(d, as_labels(slits)));
      },
      py::arg("dim"), py::arg("slits"));
  m.def(
      "sorkin_interference",
      [](std::size_t d, const std::vector<std::size_t>& slits) {
        return dhc::sorkin_interference(dhc::SlitConfig(d, as_labels(slits)));
      },
      py::arg("dim"), py::arg("slits"));
  m.def(
      "hierarchy_report",
      [](std::size_t d, std::size_t kmax) {
        return json_to_py(
            dhc::interference_to_json(dhc::hierarchy_report(d, kmax)));
      },
      py::arg("dim"), py::arg("max_order"));
  m.def("quantum_sorkin", &dhc::quantum_sorkin, py::arg("dim"),
        py::arg("order"));
  m.def("classical_sorkin", &dhc::classical_sorkin, py::arg("dim"),
        py::arg("order"));

  m.def(
      "orbit_census",
      [](std::size_t d) { return json_to_py(dhc::census_to_json(dhc::orbit_census(d))); },
      py::arg("dim"));
  m.def("span_rank", &dhc::span_rank, py::arg("dim"), py::arg("samples"),
        py::arg("seed"));

  m.def(
      "run_suite",
      [](const std::string& suite, std::size_t dim, std::size_t trials,
         std::uint64_t seed, double tol) {
        return json_to_py(
            dhc::verify_to_json(dhc::run_suite(suite, dim, trials, seed, tol)));
      },
      py::arg("suite"), py::arg("dim"), py::arg("trials") = 100,
      py::arg("seed") = 1, py::arg("tol") = 0.0);

  m.attr("__version__") = "0.1.0";
}
