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

// Command-line front end: gen, recipe, compose, decompose, verify.
//
// Data goes to files, diagnostics to stderr. Exit codes: 0 success,
// 1 verification/tolerance failure, 2 usage or parse error,
// 3 unsupported dimension, 4 non-unitary input.

#include <cstdio>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "jarlskog/decompose.hpp"
#include "jarlskog/gates.hpp"
#include "jarlskog/io.hpp"
#include "jarlskog/synthesis.hpp"

namespace {

using namespace jarlskog;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedDim = 3;
constexpr int kExitNonUnitary = 4;

constexpr double kResidualTol = 1e-9;

GateId parse_gate(const std::string& name, int n, int a, int b) {
    if (name == "sigma1") return GateId{GateKind::Sigma1, n};
    if (name == "sigma3") return GateId{GateKind::Sigma3, n};
    if (name == "pauli") return GateId{GateKind::PauliPower, n, a, b};
    if (name == "walsh") return GateId{GateKind::WalshHadamard, n};
    if (name == "k") return GateId{GateKind::KMatrix, n};
    throw std::invalid_argument("unknown gate \"" + name +
                                "\" (expected sigma1, sigma3, pauli, walsh or k)");
}

struct Options {
    std::string gate;
    int n = 2;
    int a = 0;
    int b = 0;
    std::string out;
    std::string factors;
    std::string matrix;
    std::string path_a;
    std::string path_b;
    double tol = 1e-11;
};

int run_gen(const Options& opt) {
    const GateId id = parse_gate(opt.gate, opt.n, opt.a, opt.b);
    save_matrix(opt.out, gate_matrix(id));
    return kExitOk;
}

int run_recipe(const Options& opt) {
    const GateId id = parse_gate(opt.gate, opt.n, opt.a, opt.b);
    Recipe recipe;
    switch (id.kind) {
        case GateKind::Sigma1: recipe = recipe_sigma1(opt.n); break;
        case GateKind::Sigma3: recipe = recipe_sigma3(opt.n); break;
        case GateKind::KMatrix: recipe = recipe_k(opt.n); break;
        case GateKind::WalshHadamard: recipe = recipe_walsh(opt.n); break;
        default:
            throw std::invalid_argument("no recipe for gate \"" + opt.gate + "\"");
    }
    const RecipeCheck check = verify_recipe(recipe);
    FactorFileMeta meta;
    meta.target = gate_name(recipe.target.kind);
    meta.provenance = recipe.provenance;
    save_factors(opt.out, recipe.sequence, meta);
    std::fprintf(stderr, "modules: %d\nverification error: %.3e\n", recipe.module_count,
                 check.error);
    if (!check.pass) {
        std::fprintf(stderr, "verification FAILED (tolerance 1e-11); trace:\n%s\n",
                     diagnose_recipe(recipe).c_str());
        return kExitFail;
    }
    return kExitOk;
}

int run_compose(const Options& opt) {
    const FactorFile file = load_factors(opt.factors);
    const CMatrix m = compose_sequence(file.sequence);
    save_matrix(opt.out, m);
    std::fprintf(stderr, "unitary error: %.3e\n", unitary_error(m));
    return kExitOk;
}

int run_decompose(const Options& opt) {
    const CMatrix m = load_matrix(opt.matrix);
    const DecompositionResult result = decompose(m);
    FactorFileMeta meta;
    meta.residual = result.residual;
    save_factors(opt.out, result.sequence, meta);
    std::fprintf(stderr, "residual: %.3e\n", result.residual);
    return result.residual <= kResidualTol ? kExitOk : kExitFail;
}

int run_verify(const Options& opt) {
    const CMatrix a = load_matrix(opt.path_a);
    const CMatrix b = load_matrix(opt.path_b);
    if (a.dim() != b.dim()) {
        std::fprintf(stderr, "dimension mismatch: %d vs %d\n", a.dim(), b.dim());
        return kExitUsage;
    }
    const double diff = max_abs_diff(a, b);
    std::fprintf(stderr, "max |diff|: %.3e (tolerance %.3e)\n", diff, opt.tol);
    return diff <= opt.tol ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitary module factorization and qudit gate synthesis"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* gen = app.add_subcommand("gen", "Write a named gate matrix to a file");
    gen->add_option("--gate", opt.gate, "sigma1, sigma3, pauli, walsh or k")->required();
    gen->add_option("--n", opt.n, "dimension (>= 2)")->required();
    gen->add_option("--a", opt.a, "shift exponent (pauli only)");
    gen->add_option("--b", opt.b, "clock exponent (pauli only)");
    gen->add_option("--out", opt.out, "output matrix file")->required();

    CLI::App* recipe = app.add_subcommand("recipe", "Write a module factor sequence for a gate");
    recipe->add_option("--gate", opt.gate, "sigma1, sigma3, walsh or k")->required();
    recipe->add_option("--n", opt.n, "dimension (>= 2)")->required();
    recipe->add_option("--out", opt.out, "output factor file")->required();

    CLI::App* compose = app.add_subcommand("compose", "Multiply out a factor file");
    compose->add_option("--factors", opt.factors, "input factor file")->required();
    compose->add_option("--out", opt.out, "output matrix file")->required();

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "Factor a unitary matrix into modules");
    decompose_cmd->add_option("--matrix", opt.matrix, "input matrix file")->required();
    decompose_cmd->add_option("--out", opt.out, "output factor file")->required();

    CLI::App* verify = app.add_subcommand("verify", "Compare two matrix files entrywise");
    verify->add_option("--a", opt.path_a, "first matrix file")->required();
    verify->add_option("--b", opt.path_b, "second matrix file")->required();
    verify->add_option("--tol", opt.tol, "max |diff| tolerance (default 1e-11)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(opt);
        if (recipe->parsed()) return run_recipe(opt);
        if (compose->parsed()) return run_compose(opt);
        if (decompose_cmd->parsed()) return run_decompose(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const UnsupportedDimensionError& e) {
        std::fprintf(stderr, "error: unsupported dimension: %s\n", e.what());
        return kExitUnsupportedDim;
    } catch (const NonUnitaryError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNonUnitary;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
