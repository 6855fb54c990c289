// Copyright 2026 The jarlskog Authors
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

#include "jarlskog/decompose.hpp"
#include "jarlskog/gates.hpp"
#include "jarlskog/io.hpp"
#include "jarlskog/random.hpp"
#include "jarlskog/synthesis.hpp"

namespace py = pybind11;

namespace {

using namespace jarlskog;

using NumpyMatrix = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_array(const CMatrix& m) {
    const int n = m.dim();
    py::array_t<Complex> out({n, n});
    auto buf = out.mutable_unchecked<2>();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) buf(r, c) = m(r, c);
    }
    return out;
}

CMatrix to_matrix(const NumpyMatrix& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1) || arr.shape(0) < 1) {
        throw std::invalid_argument("expected a square 2-D array");
    }
    const int n = static_cast<int>(arr.shape(0));
    auto buf = arr.unchecked<2>();
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) entries.push_back(buf(r, c));
    }
    return CMatrix(n, std::move(entries));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Module parametrization of unitary matrices and qudit gate synthesis";

    py::register_exception<UnsupportedDimensionError>(m, "UnsupportedDimensionError",
                                                      PyExc_ValueError);
    py::register_exception<NonUnitaryError>(m, "NonUnitaryError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    // Matrix utilities.
    m.def("mat_mul", [](const NumpyMatrix& a, const NumpyMatrix& b) {
        return to_array(mat_mul(to_matrix(a), to_matrix(b)));
    });
    m.def("dagger", [](const NumpyMatrix& a) { return to_array(dagger(to_matrix(a))); });
    m.def(
        "unitary_error", [](const NumpyMatrix& u) { return unitary_error(to_matrix(u)); },
        "Max absolute entry of U†U - I.");
    m.def("max_abs_diff", [](const NumpyMatrix& a, const NumpyMatrix& b) {
        return max_abs_diff(to_matrix(a), to_matrix(b));
    });
    m.def(
        "mat_exp_series",
        [](const NumpyMatrix& x, int terms) { return to_array(mat_exp_series(to_matrix(x), terms)); },
        py::arg("x"), py::arg("terms") = 64,
        "Plain Taylor-series matrix exponential (reference oracle).");

    // Gates.
    m.def("primitive_root", &primitive_root, py::arg("n"));
    m.def("sigma1", [](int n) { return to_array(sigma1(n)); }, py::arg("n"));
    m.def("sigma3", [](int n) { return to_array(sigma3(n)); }, py::arg("n"));
    m.def("pauli_power", [](int n, int a, int b) { return to_array(pauli_power(n, a, b)); },
          py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("walsh", [](int n) { return to_array(walsh(n)); }, py::arg("n"));
    m.def("walsh_dagger", [](int n) { return to_array(walsh_dagger(n)); }, py::arg("n"));
    m.def("k_matrix", [](int n) { return to_array(k_matrix(n)); }, py::arg("n"));

    py::enum_<GateKind>(m, "GateKind")
        .value("SIGMA1", GateKind::Sigma1)
        .value("SIGMA3", GateKind::Sigma3)
        .value("PAULI_POWER", GateKind::PauliPower)
        .value("WALSH_HADAMARD", GateKind::WalshHadamard)
        .value("K_MATRIX", GateKind::KMatrix);

    py::class_<GateId>(m, "GateId")
        .def(py::init([](GateKind kind, int n, int a, int b) {
                 return GateId{kind, n, a, b};
             }),
             py::arg("kind"), py::arg("n"), py::arg("a") = 0, py::arg("b") = 0)
        .def_readonly("kind", &GateId::kind)
        .def_readonly("n", &GateId::n)
        .def_readonly("a", &GateId::a)
        .def_readonly("b", &GateId::b)
        .def("__repr__", [](const GateId& id) {
            return "GateId(" + gate_name(id.kind) + ", n=" + std::to_string(id.n) + ")";
        });
    m.def("gate_matrix", [](const GateId& id) { return to_array(gate_matrix(id)); });

    // Modules and factor sequences.
    py::class_<PhaseModule>(m, "PhaseModule")
        .def(py::init([](std::vector<double> thetas) { return PhaseModule{std::move(thetas)}; }),
             py::arg("thetas"))
        .def_readwrite("thetas", &PhaseModule::thetas)
        .def("__repr__", [](const PhaseModule& p) {
            return "PhaseModule(" + std::to_string(p.thetas.size()) + " angles)";
        });

    py::class_<BlockModule>(m, "BlockModule")
        .def(py::init([](int j, std::vector<Complex> z_tilde, double beta) {
                 return BlockModule{j, std::move(z_tilde), beta};
             }),
             py::arg("j"), py::arg("z_tilde"), py::arg("beta"))
        .def_readwrite("j", &BlockModule::j)
        .def_readwrite("z_tilde", &BlockModule::z_tilde)
        .def_readwrite("beta", &BlockModule::beta)
        .def("__repr__", [](const BlockModule& b) {
            return "BlockModule(j=" + std::to_string(b.j) + ", beta=" + std::to_string(b.beta) +
                   ")";
        });

    py::class_<FactorSequence>(m, "FactorSequence")
        .def(py::init([](int n, std::vector<ModuleParams> factors) {
                 return FactorSequence{n, std::move(factors)};
             }),
             py::arg("n"), py::arg("factors") = std::vector<ModuleParams>{})
        .def_readwrite("n", &FactorSequence::n)
        .def_readwrite("factors", &FactorSequence::factors)
        .def("__len__", [](const FactorSequence& s) { return s.factors.size(); })
        .def("__repr__", [](const FactorSequence& s) {
            return "FactorSequence(n=" + std::to_string(s.n) + ", " +
                   std::to_string(s.factors.size()) + " factors)";
        });

    m.def("make_phase_module",
          [](const std::vector<double>& thetas) { return to_array(make_phase_module(thetas)); },
          py::arg("thetas"));
    m.def("make_block_module",
          [](int n, int j, const std::vector<Complex>& z_tilde, double beta) {
              return to_array(make_block_module(n, j, z_tilde, beta));
          },
          py::arg("n"), py::arg("j"), py::arg("z_tilde"), py::arg("beta"));
    m.def("exp_skew_block",
          [](int n, int j, const std::vector<Complex>& z) {
              return to_array(exp_skew_block(n, j, z));
          },
          py::arg("n"), py::arg("j"), py::arg("z"));
    m.def("factor_matrix",
          [](int n, const ModuleParams& factor) { return to_array(factor_matrix(n, factor)); },
          py::arg("n"), py::arg("factor"));
    m.def("compose_sequence",
          [](const FactorSequence& seq) { return to_array(compose_sequence(seq)); },
          py::arg("sequence"));
    m.def(
        "euler_u2",
        [](double theta1, double theta2, Complex z) {
            const EulerU2 e = euler_u2(theta1, theta2, z);
            return py::make_tuple(to_array(e.matrix),
                                  py::make_tuple(e.phi_left1, e.phi_left2, e.rot, e.phi_right));
        },
        py::arg("theta1"), py::arg("theta2"), py::arg("z"),
        "Returns (matrix, (phi_left1, phi_left2, rot, phi_right)).");

    // Synthesis.
    py::class_<Recipe>(m, "Recipe")
        .def_readonly("target", &Recipe::target)
        .def_readonly("sequence", &Recipe::sequence)
        .def_readonly("module_count", &Recipe::module_count)
        .def_readonly("provenance", &Recipe::provenance)
        .def("__repr__", [](const Recipe& r) {
            return "Recipe(" + gate_name(r.target.kind) + ", n=" + std::to_string(r.target.n) +
                   ", modules=" + std::to_string(r.module_count) + ")";
        });

    m.def("recipe_sigma1", &recipe_sigma1, py::arg("n"));
    m.def("recipe_sigma3", &recipe_sigma3, py::arg("n"));
    m.def("recipe_k", &recipe_k, py::arg("n"));
    m.def("recipe_walsh", &recipe_walsh, py::arg("n"));
    m.def(
        "verify_recipe",
        [](const Recipe& r) {
            const RecipeCheck check = verify_recipe(r);
            return py::make_tuple(check.error, check.pass);
        },
        "Returns (error, pass) against the direct gate constructor.");

    // Decomposition.
    py::class_<DecompositionResult>(m, "DecompositionResult")
        .def_readonly("sequence", &DecompositionResult::sequence)
        .def_readonly("residual", &DecompositionResult::residual)
        .def("__repr__", [](const DecompositionResult& d) {
            return "DecompositionResult(n=" + std::to_string(d.sequence.n) + ")";
        });

    m.def("decompose", [](const NumpyMatrix& u) { return decompose(to_matrix(u)); },
          py::arg("u"));
    m.def("roundtrip_error", [](const NumpyMatrix& u) { return roundtrip_error(to_matrix(u)); },
          py::arg("u"));
    m.def(
        "haar_random_unitary",
        [](int n, unsigned long long seed) { return to_array(haar_random_unitary(n, seed)); },
        py::arg("n"), py::arg("seed"));

    // File I/O.
    m.def("save_matrix",
          [](const std::string& path, const NumpyMatrix& u) { save_matrix(path, to_matrix(u)); },
          py::arg("path"), py::arg("matrix"));
    m.def("load_matrix",
          [](const std::string& path) { return to_array(load_matrix(path)); }, py::arg("path"));
    m.def("save_factors",
          [](const std::string& path, const FactorSequence& seq) { save_factors(path, seq); },
          py::arg("path"), py::arg("sequence"));
    m.def("load_factors",
          [](const std::string& path) { return load_factors(path).sequence; }, py::arg("path"));

#ifdef JARLSKOG_VERSION
    m.attr("__version__") = JARLSKOG_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
