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

#include "jarlskog/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jarlskog {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVerifyTol = 1e-11;

void require_dim(int n, const char* op) {
    if (n < 2) {
        throw std::invalid_argument(std::string(op) + ": dimension must be >= 2, got " +
                                    std::to_string(n));
    }
}

// Unit basis vector of the given length with a 1 at `pos` (1-based).
std::vector<Complex> basis_vector(int length, int pos) {
    std::vector<Complex> z(length, Complex{0.0, 0.0});
    z[pos - 1] = 1.0;
    return z;
}

BlockModule quarter_turn(int j, int pos) {
    return BlockModule{j, basis_vector(j - 1, pos), kPi / 2.0};
}

Recipe finish(GateId target, std::vector<ModuleParams> factors, std::string provenance) {
    Recipe r;
    r.target = target;
    r.sequence = FactorSequence{target.n, std::move(factors)};
    r.module_count = static_cast<int>(r.sequence.factors.size());
    r.provenance = std::move(provenance);
    return r;
}

}  // namespace

Recipe recipe_sigma3(int n) {
    require_dim(n, "recipe_sigma3");
    std::vector<double> thetas(n);
    for (int k = 0; k < n; ++k) thetas[k] = 2.0 * kPi * k / n;
    return finish(GateId{GateKind::Sigma3, n}, {PhaseModule{std::move(thetas)}}, "Eq. 31");
}

Recipe recipe_sigma1(int n) {
    require_dim(n, "recipe_sigma1");
    std::vector<ModuleParams> factors;
    factors.reserve(n);
    std::vector<double> thetas(n, kPi);
    thetas[0] = 0.0;
    factors.emplace_back(PhaseModule{std::move(thetas)});
    for (int j = 2; j <= n; ++j) {
        factors.emplace_back(quarter_turn(j, j - 1));
    }
    return finish(GateId{GateKind::Sigma1, n}, std::move(factors), "Eq. 35");
}

Recipe recipe_k(int n) {
    require_dim(n, "recipe_k");
    if (n == 2) {
        // K is already the identity; nothing to compose.
        return finish(GateId{GateKind::KMatrix, 2}, {}, "Eq. 37");
    }
    // The reversal pairs coordinate m with coordinate n+2-m; one
    // quarter-turn block per pair, then a phase factor fixes the signs.
    const int j_min = (n % 2 == 0) ? n / 2 + 2 : (n + 3) / 2;
    std::vector<double> thetas(n, 0.0);
    for (int k = j_min - 1; k < n; ++k) thetas[k] = kPi;
    std::vector<ModuleParams> factors;
    factors.emplace_back(PhaseModule{std::move(thetas)});
    for (int j = j_min; j <= n; ++j) {
        factors.emplace_back(quarter_turn(j, n + 2 - j));
    }
    return finish(GateId{GateKind::KMatrix, n}, std::move(factors),
                  (n % 2 == 0) ? "Eq. 37" : "Eq. 38");
}

namespace {

Recipe walsh_recipe_3() {
    const double s2 = std::sqrt(2.0);
    std::vector<ModuleParams> factors = {
        PhaseModule{{0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0}},
        BlockModule{3, {Complex{1.0 / s2, 0.0}, Complex{1.0 / s2, 0.0}},
                    std::acos(1.0 / std::sqrt(3.0))},
        BlockModule{2, {std::polar(1.0, -kPi / 2.0)}, kPi / 4.0},
        PhaseModule{{-kPi / 12.0, 7.0 * kPi / 12.0, 0.0}},
    };
    return finish(GateId{GateKind::WalshHadamard, 3}, std::move(factors), "Eq. 40");
}

Recipe walsh_recipe_4() {
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    // The mid-product swap of coordinates 2 and 3 appears twice and
    // expands into a phase plus a quarter-turn block.
    const PhaseModule swap_phase{{0.0, 0.0, kPi, 0.0}};
    const BlockModule swap_block = quarter_turn(3, 2);
    std::vector<ModuleParams> factors = {
        PhaseModule{{0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0}},
        BlockModule{4, {Complex{1.0 / s3, 0.0}, Complex{1.0 / s3, 0.0}, Complex{1.0 / s3, 0.0}},
                    kPi / 3.0},
        swap_phase,
        swap_block,
        BlockModule{3, {Complex{1.0 / s2, 0.0}, Complex{1.0 / s2, 0.0}}, std::acos(-1.0 / 3.0)},
        BlockModule{2, {std::polar(1.0, kPi / 2.0)}, kPi / 4.0},
        PhaseModule{{kPi / 4.0, 5.0 * kPi / 4.0, 0.0, 0.0}},
        swap_phase,
        swap_block,
    };
    return finish(GateId{GateKind::WalshHadamard, 4}, std::move(factors), "Eq. 41");
}

Recipe walsh_recipe_5() {
    const double s5 = std::sqrt(5.0);
    // Five-level construction constants; the unit vectors below are
    // exact algebraic numbers and the two free angles are recovered
    // from their cosines at run time.
    const double a = std::sin(2.0 * kPi / 5.0);
    const Complex alpha{std::sin(kPi / 5.0), s5 / 2.0};
    const double u = std::sqrt(4.0 + std::cos(2.0 * kPi / 5.0) * std::cos(2.0 * kPi / 5.0));
    const double t = (2.0 * (7.0 * s5 + 1.0) / 61.0) * (1.0 + std::sin(2.0 * kPi / 5.0) / s5);
    const Complex beta_c = std::conj(alpha) + t * a * alpha;
    const double v = std::sqrt(5.0 - (a + t * a * a) * (a + t * a * a));
    const double theta4 = std::acos(-a / s5);
    const double theta3 = std::acos(-(a + t * a * a) / s5);

    std::vector<ModuleParams> factors = {
        PhaseModule{{0.0, 2.0 * kPi / 5.0, 4.0 * kPi / 5.0, 6.0 * kPi / 5.0, 8.0 * kPi / 5.0}},
        BlockModule{5,
                    {Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0}},
                    std::acos(1.0 / s5)},
        BlockModule{4, {Complex{a / u, 0.0}, alpha / u, -std::conj(alpha) / u}, theta4},
        // First mid-product permutation: phase then two quarter turns.
        PhaseModule{{0.0, kPi, kPi, 0.0, 0.0}},
        quarter_turn(2, 1),
        quarter_turn(3, 2),
        BlockModule{3, {-beta_c / v, std::conj(beta_c) / v}, theta3},
        // Second mid-product permutation.
        PhaseModule{{0.0, 0.0, kPi, 0.0, 0.0}},
        quarter_turn(3, 1),
        PhaseModule{{9.0 * kPi / 10.0, 13.0 * kPi / 10.0, -3.0 * kPi / 10.0, kPi / 10.0, 0.0}},
    };
    return finish(GateId{GateKind::WalshHadamard, 5}, std::move(factors), "Eq. 42");
}

}  // namespace

Recipe recipe_walsh(int n) {
    require_dim(n, "recipe_walsh");
    switch (n) {
        case 3: return walsh_recipe_3();
        case 4: return walsh_recipe_4();
        case 5: return walsh_recipe_5();
        default:
            throw UnsupportedDimensionError(
                "recipe_walsh: no explicit construction at n = " + std::to_string(n) +
                "; recipes exist only for n = 3, 4, 5");
    }
}

RecipeCheck verify_recipe(const Recipe& r) {
    const CMatrix composed = compose_sequence(r.sequence);
    const CMatrix direct = gate_matrix(r.target);
    const double error = max_abs_diff(composed, direct);
    return RecipeCheck{error, error <= kVerifyTol};
}

std::string diagnose_recipe(const Recipe& r) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific;
    const int n = r.sequence.n;
    CMatrix partial = CMatrix::identity(n);
    int index = 0;
    int first_bad = -1;
    for (const ModuleParams& factor : r.sequence.factors) {
        partial = mat_mul(partial, factor_matrix(n, factor));
        ++index;
        const double uerr = unitary_error(partial);
        const bool phase = std::holds_alternative<PhaseModule>(factor);
        out << "  after factor " << index << " ("
            << (phase ? "phase" : ("block j=" + std::to_string(std::get<BlockModule>(factor).j)))
            << "): partial-product unitary error " << uerr << "\n";
        if (first_bad < 0 && uerr > kVerifyTol) first_bad = index;
    }
    const CMatrix direct = gate_matrix(r.target);
    double worst = 0.0;
    int wr = 0, wc = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(partial(i, j) - direct(i, j));
            if (d > worst) {
                worst = d;
                wr = i;
                wc = j;
            }
        }
    }
    if (first_bad > 0) {
        out << "  first non-unitary partial product: after factor " << first_bad << "\n";
    }
    out << "  composed vs " << gate_name(r.target.kind) << "(" << r.target.n
        << "): max |diff| = " << worst << " at entry (" << wr + 1 << ", " << wc + 1 << ")";
    return out.str();
}

}  // namespace jarlskog
