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

#include "jarlskog/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jarlskog {

namespace {

using nlohmann::json;

// 17 significant digits: enough to recover any double bit-exactly, and
// the same bytes for the same value every time. Negative zero is
// flattened because JSON integer parsing would drop its sign anyway.
std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_row(std::string& out, const CMatrix& m, int row, bool real_part) {
    out += '[';
    for (int c = 0; c < m.dim(); ++c) {
        if (c > 0) out += ", ";
        const Complex& e = m(row, c);
        out += fmt(real_part ? e.real() : e.imag());
    }
    out += ']';
}

void append_part(std::string& out, const CMatrix& m, const char* key, bool real_part) {
    out += "  \"";
    out += key;
    out += "\": [\n";
    for (int r = 0; r < m.dim(); ++r) {
        out += "    ";
        append_row(out, m, r, real_part);
        out += (r + 1 < m.dim()) ? ",\n" : "\n";
    }
    out += "  ]";
}

double as_finite_double(const json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + ": expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string(what) + ": value must be finite");
    }
    return v;
}

int as_dim(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + ": expected an integer");
    }
    const long long v = j.get<long long>();
    if (v < 1 || v > 1 << 20) {
        throw ParseError(std::string(what) + ": out of range");
    }
    return static_cast<int>(v);
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw ParseError("invalid JSON");
    }
    return j;
}

std::vector<double> read_double_array(const json& j, const char* what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + ": expected an array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(as_finite_double(e, what));
    return out;
}

}  // namespace

std::string matrix_to_json(const CMatrix& m) {
    std::string out;
    out += "{\n  \"n\": " + std::to_string(m.dim()) + ",\n";
    append_part(out, m, "re", true);
    out += ",\n";
    append_part(out, m, "im", false);
    out += "\n}\n";
    return out;
}

CMatrix matrix_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
        throw ParseError("matrix file: expected an object with \"n\", \"re\", \"im\"");
    }
    const int n = as_dim(j["n"], "matrix file: n");
    std::vector<Complex> entries(static_cast<size_t>(n) * n);
    for (const char* key : {"re", "im"}) {
        const json& part = j[key];
        if (!part.is_array() || static_cast<int>(part.size()) != n) {
            throw ParseError(std::string("matrix file: \"") + key + "\" must have n rows");
        }
        for (int r = 0; r < n; ++r) {
            const std::vector<double> row = read_double_array(part[r], key);
            if (static_cast<int>(row.size()) != n) {
                throw ParseError(std::string("matrix file: \"") + key +
                                 "\" row has wrong length");
            }
            for (int c = 0; c < n; ++c) {
                Complex& e = entries[static_cast<size_t>(r) * n + c];
                if (key[0] == 'r') {
                    e = Complex{row[c], e.imag()};
                } else {
                    e = Complex{e.real(), row[c]};
                }
            }
        }
    }
    return CMatrix(n, std::move(entries));
}

std::string factors_to_json(const FactorSequence& seq, const FactorFileMeta& meta) {
    std::string out;
    out += "{\n  \"n\": " + std::to_string(seq.n);
    if (meta.target) out += ",\n  \"target\": \"" + *meta.target + "\"";
    if (meta.provenance) out += ",\n  \"provenance\": \"" + *meta.provenance + "\"";
    if (meta.residual) out += ",\n  \"residual\": " + fmt(*meta.residual);
    out += ",\n  \"factors\": [";
    bool first = true;
    for (const ModuleParams& factor : seq.factors) {
        out += first ? "\n" : ",\n";
        first = false;
        if (const auto* phase = std::get_if<PhaseModule>(&factor)) {
            out += "    {\"kind\": \"phase\", \"thetas\": [";
            for (size_t k = 0; k < phase->thetas.size(); ++k) {
                if (k > 0) out += ", ";
                out += fmt(phase->thetas[k]);
            }
            out += "]}";
        } else {
            const auto& block = std::get<BlockModule>(factor);
            out += "    {\"kind\": \"block\", \"j\": " + std::to_string(block.j);
            out += ", \"z_re\": [";
            for (size_t k = 0; k < block.z_tilde.size(); ++k) {
                if (k > 0) out += ", ";
                out += fmt(block.z_tilde[k].real());
            }
            out += "], \"z_im\": [";
            for (size_t k = 0; k < block.z_tilde.size(); ++k) {
                if (k > 0) out += ", ";
                out += fmt(block.z_tilde[k].imag());
            }
            out += "], \"beta\": " + fmt(block.beta) + "}";
        }
    }
    out += first ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

FactorFile factors_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("factors")) {
        throw ParseError("factor file: expected an object with \"n\" and \"factors\"");
    }
    FactorFile file;
    file.sequence.n = as_dim(j["n"], "factor file: n");
    if (j.contains("target")) {
        if (!j["target"].is_string()) throw ParseError("factor file: \"target\" must be a string");
        file.meta.target = j["target"].get<std::string>();
    }
    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) {
            throw ParseError("factor file: \"provenance\" must be a string");
        }
        file.meta.provenance = j["provenance"].get<std::string>();
    }
    if (j.contains("residual")) {
        file.meta.residual = as_finite_double(j["residual"], "factor file: residual");
    }
    const json& factors = j["factors"];
    if (!factors.is_array()) {
        throw ParseError("factor file: \"factors\" must be an array");
    }
    for (const json& f : factors) {
        if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string()) {
            throw ParseError("factor file: each factor needs a string \"kind\"");
        }
        const std::string kind = f["kind"].get<std::string>();
        if (kind == "phase") {
            if (!f.contains("thetas")) {
                throw ParseError("factor file: phase factor needs \"thetas\"");
            }
            file.sequence.factors.emplace_back(
                PhaseModule{read_double_array(f["thetas"], "thetas")});
        } else if (kind == "block") {
            if (!f.contains("j") || !f.contains("z_re") || !f.contains("z_im") ||
                !f.contains("beta")) {
                throw ParseError(
                    "factor file: block factor needs \"j\", \"z_re\", \"z_im\", \"beta\"");
            }
            BlockModule block;
            block.j = as_dim(f["j"], "factor file: j");
            const std::vector<double> re = read_double_array(f["z_re"], "z_re");
            const std::vector<double> im = read_double_array(f["z_im"], "z_im");
            if (re.size() != im.size()) {
                throw ParseError("factor file: z_re and z_im lengths differ");
            }
            block.z_tilde.reserve(re.size());
            for (size_t k = 0; k < re.size(); ++k) block.z_tilde.emplace_back(re[k], im[k]);
            block.beta = as_finite_double(f["beta"], "beta");
            file.sequence.factors.emplace_back(std::move(block));
        } else {
            throw ParseError("factor file: unknown factor kind \"" + kind + "\"");
        }
    }
    return file;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw ParseError("write failed for " + path);
    }
}

}  // namespace

void save_matrix(const std::string& path, const CMatrix& m) {
    spill(path, matrix_to_json(m));
}

CMatrix load_matrix(const std::string& path) {
    return matrix_from_json(slurp(path));
}

void save_factors(const std::string& path, const FactorSequence& seq,
                  const FactorFileMeta& meta) {
    spill(path, factors_to_json(seq, meta));
}

FactorFile load_factors(const std::string& path) {
    return factors_from_json(slurp(path));
}

}  // namespace jarlskog
