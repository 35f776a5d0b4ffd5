// Copyright 2026 The dstnet Authors
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

// Batch command-line surface for the dstnet library.
//
// Subcommands:
//   plan     --kind K --level L [--out FILE]          build + export a plan
//   apply    (--plan FILE | --kind K --level L)
//            --input FILE [--output FILE] [--inverse] transform a vector file
//   verify   --kind K --level L [--fock]              oracle comparisons
//   count    --kind K --level A..B                    gate census table
//   spectrum --level L                                free-fermion chain
//
// Exit codes: 0 success, 1 verification failure, 2 usage/precondition,
// 3 I/O or parse failure.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dstnet/dstnet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr double kVerifyTolerance = 1e-10;

// Raised for file and format problems (exit 3), as opposed to the
// precondition violations that surface as std::invalid_argument (exit 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dstnet::TransformKind parse_kind(const std::string& s) {
    const auto kind = dstnet::transform_kind_from_string(s);
    if (!kind)
        throw std::invalid_argument("unknown kind '" + s + "' (expected dst1, dst3, or dft)");
    return *kind;
}

unsigned checked_level(std::int64_t level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (level > static_cast<std::int64_t>(dstnet::kMaxPlanLevel))
        throw std::invalid_argument("level exceeds supported maximum " +
                                    std::to_string(dstnet::kMaxPlanLevel));
    return static_cast<unsigned>(level);
}

dstnet::Plan build_plan(dstnet::TransformKind kind, unsigned level) {
    switch (kind) {
        case dstnet::TransformKind::dst1: return dstnet::plan_dst1(level);
        case dstnet::TransformKind::dst3: return dstnet::plan_dst3(level);
        case dstnet::TransformKind::dft: return dstnet::plan_dft(level);
    }
    throw std::invalid_argument("unknown kind");
}

dstnet::DenseMatrix orthonormal_dense(dstnet::TransformKind kind, std::size_t n) {
    switch (kind) {
        case dstnet::TransformKind::dst1: return dstnet::orthonormal_dst1(n);
        case dstnet::TransformKind::dst3: return dstnet::orthonormal_dst3(n);
        case dstnet::TransformKind::dft: return dstnet::orthonormal_dft(n);
    }
    throw std::invalid_argument("unknown kind");
}

// ---------------------------------------------------------------------------
// Vector files: one value per line, real "x" or complex "re,im"; lines whose
// first non-space character is '#' are comments. 17 significant digits out.
// ---------------------------------------------------------------------------

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

double parse_double(const std::string& token, const std::string& path) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        while (pos < token.size() &&
               (token[pos] == ' ' || token[pos] == '\t' || token[pos] == '\r'))
            ++pos;
        if (pos != token.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw IoError(path + ": cannot parse number '" + token + "'");
    }
}

std::vector<dstnet::cplx> read_vector_file(const std::string& path, bool complex_allowed) {
    std::ifstream in(path);
    if (!in) throw IoError(path + ": cannot open input file");
    std::vector<dstnet::cplx> values;
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            values.emplace_back(parse_double(line, path), 0.0);
        } else {
            if (!complex_allowed)
                throw std::invalid_argument(path +
                                            ": complex 're,im' entry in a real-transform input");
            if (line.find(',', comma + 1) != std::string::npos)
                throw IoError(path + ": more than two columns in line '" + line + "'");
            values.emplace_back(parse_double(line.substr(0, comma), path),
                                parse_double(line.substr(comma + 1), path));
        }
    }
    if (in.bad()) throw IoError(path + ": read failure");
    return values;
}

void write_vector(std::ostream& os, const std::vector<dstnet::cplx>& values, bool complex_out) {
    char buf[128];
    for (const dstnet::cplx& v : values) {
        if (complex_out)
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
        else
            std::snprintf(buf, sizeof buf, "%.17g\n", v.real());
        os << buf;
    }
}

// Opens `path` for writing, or falls back to stdout when empty.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw IoError(path + ": cannot open output file");
            path_ = path;
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void finish() {
        stream().flush();
        if (!path_.empty() && !file_) throw IoError(path_ + ": write failure");
    }

  private:
    std::ofstream file_;
    std::string path_;
};

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_plan(const std::string& kind_str, std::int64_t level, const std::string& out_path) {
    const dstnet::TransformKind kind = parse_kind(kind_str);
    const dstnet::Plan plan = build_plan(kind, checked_level(level));
    OutputTarget out(out_path);
    dstnet::write_plan_json(out.stream(), plan);
    out.finish();
    return kExitOk;
}

int run_apply(const std::string& plan_path, const std::string& kind_str, std::int64_t level,
              const std::string& input_path, const std::string& output_path, bool inverse) {
    dstnet::Plan plan;
    if (!plan_path.empty()) {
        std::ifstream in(plan_path);
        if (!in) throw IoError(plan_path + ": cannot open plan file");
        try {
            plan = dstnet::parse_plan_json(in);
        } catch (const std::exception& e) {
            throw IoError(plan_path + ": " + e.what());
        }
    } else {
        if (kind_str.empty() || level < 0)
            throw std::invalid_argument("apply requires either --plan or both --kind and --level");
        plan = build_plan(parse_kind(kind_str), checked_level(level));
    }

    const bool complex_data = plan.kind == dstnet::TransformKind::dft;
    std::vector<dstnet::cplx> input = read_vector_file(input_path, complex_data);
    if (input.size() != plan.n)
        throw std::invalid_argument(input_path + ": expected " + std::to_string(plan.n) +
                                    " values, found " + std::to_string(input.size()));

    std::vector<dstnet::cplx> result;
    if (complex_data) {
        result = inverse ? dstnet::apply_inverse(plan, std::move(input))
                         : dstnet::apply(plan, std::move(input));
    } else {
        std::vector<double> real_input(plan.n);
        for (std::size_t i = 0; i < plan.n; ++i) real_input[i] = input[i].real();
        const std::vector<double> real_result =
            inverse ? dstnet::apply_inverse(plan, std::move(real_input))
                    : dstnet::apply(plan, std::move(real_input));
        result.resize(plan.n);
        for (std::size_t i = 0; i < plan.n; ++i) result[i] = real_result[i];
    }

    OutputTarget out(output_path);
    write_vector(out.stream(), result, complex_data);
    out.finish();
    return kExitOk;
}

int run_verify(const std::string& kind_str, std::int64_t level, bool fock) {
    const dstnet::TransformKind kind = parse_kind(kind_str);
    const unsigned k = checked_level(level);
    const std::size_t n =
        kind == dstnet::TransformKind::dst1 ? (std::size_t{1} << k) - 1 : std::size_t{1} << k;
    if (n > dstnet::kComposeDenseMaxSize)
        throw std::invalid_argument("verify: dense guard exceeded (n <= 4096); level too large");
    if (fock && n > dstnet::kCircuitOperatorMaxModes)
        throw std::invalid_argument("verify: fock guard exceeded (n <= 12 modes); level too large");

    const dstnet::Plan plan = build_plan(kind, k);
    const double dense_dev =
        dstnet::max_abs_diff(dstnet::compose_dense(plan), orthonormal_dense(kind, n));
    std::printf("kind %s  level %u  n %zu\n", dstnet::to_string(kind).c_str(), k, n);
    std::printf("dense deviation      %.3e\n", dense_dev);
    bool ok = dense_dev < kVerifyTolerance;
    if (fock) {
        const double fock_dev =
            dstnet::max_abs_diff(dstnet::circuit_operator(plan),
                                 dstnet::second_quantize_dense(orthonormal_dense(kind, n)));
        std::printf("fock oracle deviation %.3e\n", fock_dev);
        ok = ok && fock_dev < kVerifyTolerance;
    }
    std::printf("%s (tolerance %.0e)\n", ok ? "PASS" : "FAIL", kVerifyTolerance);
    return ok ? kExitOk : kExitVerifyFailed;
}

std::pair<unsigned, unsigned> parse_level_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    std::int64_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            std::size_t pos = 0;
            lo = hi = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
        } else {
            std::size_t pos = 0;
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            lo = std::stoll(a, &pos);
            if (pos != a.size()) throw std::invalid_argument("trailing characters");
            hi = std::stoll(b, &pos);
            if (pos != b.size()) throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid level range '" + text + "' (expected K or A..B)");
    }
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("invalid level range '" + text + "' (need 1 <= A <= B)");
    checked_level(lo);
    checked_level(hi);
    return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

int run_count(const std::string& kind_str, const std::string& range_str) {
    const dstnet::TransformKind kind = parse_kind(kind_str);
    const auto [lo, hi] = parse_level_range(range_str);
    std::printf("kind  level  n         fhat      ghat      rot       scalar    perm      elementary  closed_form  swaps\n");
    bool mismatch = false;
    for (unsigned k = lo; k <= hi; ++k) {
        const dstnet::Plan plan = build_plan(kind, k);
        const dstnet::GateCensus c = dstnet::gate_census(plan);
        std::string closed = "-";
        if (kind == dstnet::TransformKind::dst1)
            closed = std::to_string(dstnet::closed_form_c1(plan.n));
        else if (kind == dstnet::TransformKind::dst3)
            closed = std::to_string(dstnet::closed_form_c3(plan.n));
        if (closed != "-" && closed != std::to_string(c.elementary())) mismatch = true;
        std::printf("%-5s %-6u %-9zu %-9" PRIu64 " %-9" PRIu64 " %-9" PRIu64 " %-9" PRIu64
                    " %-9" PRIu64 " %-11" PRIu64 " %-12s %" PRIu64 "\n",
                    dstnet::to_string(kind).c_str(), k, plan.n, c.fhat, c.ghat, c.rot, c.scalar,
                    c.perm, c.elementary(), closed.c_str(), c.swap_total);
    }
    if (mismatch) std::printf("MISMATCH: measured elementary counts differ from the closed form\n");
    return mismatch ? kExitVerifyFailed : kExitOk;
}

int run_spectrum(std::int64_t level) {
    const unsigned k = checked_level(level);
    const std::size_t n = (std::size_t{1} << k) - 1;
    if (n > dstnet::kComposeDenseMaxSize)
        throw std::invalid_argument("spectrum: guard exceeded (n <= 4095); level too large");
    const std::vector<double> lam = dstnet::spectrum_via_dst(n);
    std::printf("n %zu\n", n);
    for (std::size_t b = 0; b < n; ++b) std::printf("eigenvalue %zu %.17g\n", b, lam[b]);
    const dstnet::Plan plan = dstnet::plan_dst1(k);
    const dstnet::SpectrumResidual r = dstnet::single_particle_residual(plan);
    std::printf("max_offdiag_residual %.3e\n", r.max_offdiag);
    std::printf("max_diag_deviation %.3e\n", r.max_diag_deviation);
    const bool ok = r.max_offdiag < kVerifyTolerance && r.max_diag_deviation < kVerifyTolerance;
    std::printf("%s\n", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dstnet: orthogonal 2x2-gate decompositions of sine and Fourier transforms"};
    app.require_subcommand(1);

    std::string kind_str, out_path, plan_path, input_path, output_path, range_str;
    std::int64_t level = -1;
    bool inverse = false, fock = false;

    CLI::App* sc_plan = app.add_subcommand("plan", "Build a plan and write it as JSON");
    sc_plan->add_option("--kind", kind_str, "Transform kind: dst1, dst3, dft")->required();
    sc_plan->add_option("--level", level, "Recursion level k (size 2^k or 2^k - 1)")->required();
    sc_plan->add_option("--out", out_path, "Output file (default: stdout)");

    CLI::App* sc_apply = app.add_subcommand("apply", "Apply a transform to a vector file");
    auto* apply_plan_opt = sc_apply->add_option("--plan", plan_path, "Plan file to execute");
    auto* apply_kind_opt = sc_apply->add_option("--kind", kind_str, "Transform kind");
    auto* apply_level_opt = sc_apply->add_option("--level", level, "Recursion level");
    apply_plan_opt->excludes(apply_kind_opt)->excludes(apply_level_opt);
    sc_apply->add_option("--input", input_path, "Input vector file")->required();
    sc_apply->add_option("--output", output_path, "Output vector file (default: stdout)");
    sc_apply->add_flag("--inverse", inverse, "Apply the inverse transform");

    CLI::App* sc_verify = app.add_subcommand("verify", "Compare a plan against dense oracles");
    sc_verify->add_option("--kind", kind_str, "Transform kind")->required();
    sc_verify->add_option("--level", level, "Recursion level")->required();
    sc_verify->add_flag("--fock", fock, "Also verify the second-quantized operator");

    CLI::App* sc_count = app.add_subcommand("count", "Gate census vs closed-form complexity");
    sc_count->add_option("--kind", kind_str, "Transform kind")->required();
    sc_count->add_option("--level", range_str, "Level or level range A..B")->required();

    CLI::App* sc_spectrum =
        app.add_subcommand("spectrum", "Eigenvalues of the open hopping chain via the sine plan");
    sc_spectrum->add_option("--level", level, "Recursion level (n = 2^k - 1 sites)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sc_plan->parsed()) return run_plan(kind_str, level, out_path);
        if (sc_apply->parsed())
            return run_apply(plan_path, kind_str, level, input_path, output_path, inverse);
        if (sc_verify->parsed()) return run_verify(kind_str, level, fock);
        if (sc_count->parsed()) return run_count(kind_str, range_str);
        if (sc_spectrum->parsed()) return run_spectrum(level);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
