// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entcap/acceptance.hpp"
#include "entcap/capability.hpp"
#include "entcap/errors.hpp"
#include "entcap/io.hpp"
#include "entcap/operator_entanglement.hpp"
#include "entcap/self_inverse.hpp"
#include "entcap/state_space.hpp"

namespace py = pybind11;
using namespace entcap;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return ComplexMatrix(rows, cols, std::vector<Complex>(a.data(), a.data() + rows * cols));
}

ComplexArray to_array(const ComplexMatrix& m) {
  ComplexArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

ComplexArray to_array(std::span<const Complex> v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

BipartiteState to_state(const ComplexArray& amplitudes, std::size_t dA, std::size_t dB) {
  const ComplexVector v(amplitudes.data(), amplitudes.data() + amplitudes.size());
  return BipartiteState::from_unnormalized(dA, dB, v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement capability of self-inverse product Hamiltonians";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NotHermitianError>(m, "NotHermitianError", base.ptr());
  py::register_exception<NotUnitaryError>(m, "NotUnitaryError", base.ptr());
  py::register_exception<NotInvolutionError>(m, "NotInvolutionError", base.ptr());
  py::register_exception<TrivialFactorError>(m, "TrivialFactorError", base.ptr());
  py::register_exception<RankError>(m, "RankError", base.ptr());
  py::register_exception<NumericalConsistencyError>(m, "NumericalConsistencyError", base.ptr());
  py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());

  py::class_<BipartiteState>(m, "State")
      .def(py::init(&to_state), py::arg("amplitudes"), py::arg("dA"), py::arg("dB"),
           "Bipartite pure state; amplitudes are renormalized.")
      .def_property_readonly("dA", &BipartiteState::dA)
      .def_property_readonly("dB", &BipartiteState::dB)
      .def_property_readonly("amplitudes", [](const BipartiteState& s) { return to_array(s.amplitudes()); })
      .def("schmidt_coefficients", [](const BipartiteState& s) { return schmidt(s).coefficients; })
      .def("entropy", [](const BipartiteState& s) { return entropy(s); })
      .def("concurrence", [](const BipartiteState& s) { return pure_concurrence(s); })
      .def("to_json", [](const BipartiteState& s) { return state_to_json(s).dump(); });

  py::class_<SelfInverseFactor>(m, "Factor")
      .def(py::init([](const ComplexArray& a) { return make_factor(to_matrix(a)); }), py::arg("matrix"))
      .def_property_readonly("dim", &SelfInverseFactor::dim)
      .def_property_readonly("matrix", [](const SelfInverseFactor& x) { return to_array(x.matrix()); });

  m.def("pauli_z", &pauli_z);
  m.def("parity", [](double j) { return parity(Spin::from_value(j)); }, py::arg("j"));
  m.def("boson_parity", &boson_parity, py::arg("d"));

  py::class_<ProductHamiltonian>(m, "ProductHamiltonian")
      .def(py::init<SelfInverseFactor, SelfInverseFactor>(), py::arg("factor_a"), py::arg("factor_b"))
      .def_property_readonly("dA", &ProductHamiltonian::dA)
      .def_property_readonly("dB", &ProductHamiltonian::dB)
      .def_property_readonly("matrix", [](const ProductHamiltonian& h) { return to_array(h.matrix()); })
      .def("evolution", [](const ProductHamiltonian& h, double t) { return to_array(evolution(h, t)); },
           py::arg("t"))
      .def("evolve", [](const ProductHamiltonian& h, const BipartiteState& s, double t) {
        return evolve_state(h, s, t);
      }, py::arg("state"), py::arg("t"));

  m.def("two_term_rate", &two_term_rate, py::arg("x"));
  m.def("capability_bound", [] {
    const CapabilityResult c = capability_bound();
    return py::dict(py::arg("beta") = c.beta, py::arg("x0") = c.x0, py::arg("evaluations") = c.evaluations);
  });
  m.def("capability", [](const SelfInverseFactor& a, const SelfInverseFactor& b) {
    const CapabilityResult c = capability_self_inverse(a, b);
    return py::make_tuple(c.beta, *c.optimalState);
  }, py::arg("factor_a"), py::arg("factor_b"), "Returns (beta, optimal state).");
  m.def("optimal_input", &optimal_input, py::arg("factor_a"), py::arg("factor_b"), py::arg("x"));
  m.def("ecs", [](double j, Complex eta, double x) { return ecs(Spin::from_value(j), eta, x); },
        py::arg("j"), py::arg("eta"), py::arg("x"));

  m.def("rate", [](const ComplexArray& h, const BipartiteState& s) { return rate_zero_general(to_matrix(h), s); },
        py::arg("hamiltonian"), py::arg("state"), "Entanglement rate at t = 0 (bits per unit time).");
  m.def("rate_commutator", [](const ComplexArray& h, const BipartiteState& s, double t) {
    return rate_commutator(to_matrix(h), s, t);
  }, py::arg("hamiltonian"), py::arg("state"), py::arg("t"));
  m.def("rate_finite_difference", [](const ComplexArray& h, const BipartiteState& s, double t, double step) {
    return rate_finite_difference(to_matrix(h), s, t, step);
  }, py::arg("hamiltonian"), py::arg("state"), py::arg("t") = 0.0, py::arg("step") = 1e-5);
  m.def("gate_capability", &gate_capability, py::arg("factor_a"), py::arg("factor_b"), py::arg("t"),
        py::arg("trials") = 20, py::arg("seed") = 1);

  m.def("op_entanglement", [](const ComplexArray& v, std::size_t dA, std::size_t dB) {
    return op_entanglement(to_matrix(v), dA, dB);
  }, py::arg("unitary"), py::arg("dA"), py::arg("dB"));
  m.def("op_schmidt_coefficients", [](const ComplexArray& v, std::size_t dA, std::size_t dB) {
    return op_schmidt(to_matrix(v), dA, dB).coefficients;
  }, py::arg("operator"), py::arg("dA"), py::arg("dB"));
  m.def("op_rate", &op_rate, py::arg("hamiltonian"), py::arg("t"));
  m.def("op_rate_max", [](const ProductHamiltonian& h) {
    const OperatorRateCurve c = op_rate_max(h);
    return py::make_tuple(c.rMax, c.tStar);
  }, py::arg("hamiltonian"), "Returns (rMax, tStar).");

  m.def("verify", [](std::uint64_t seed, std::size_t ceiling_samples) {
    acceptance::Options o;
    o.seed = seed;
    o.ceilingSamples = ceiling_samples;
    py::list rows;
    for (const auto& c : acceptance::run_all(o).criteria) {
      rows.append(py::dict(py::arg("id") = c.id, py::arg("name") = c.name, py::arg("passed") = c.passed,
                           py::arg("measured") = c.measured, py::arg("tolerance") = c.tolerance));
    }
    return rows;
  }, py::arg("seed") = acceptance::Options{}.seed, py::arg("ceiling_samples") = acceptance::Options{}.ceilingSamples);
}
