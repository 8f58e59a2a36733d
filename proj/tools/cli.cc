// Copyright 2026 The symmetric-povm Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "povm/serialize.hpp"

namespace povm::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string family;
    std::size_t m = 0;
    double theta = 0.0;
    double alpha = 0.0;
    double beta_re = 0.0;
    double beta_im = 0.0;
    std::string state;
    std::string amplitudes;
    std::uint64_t shots = 1000;
    std::string seed = "0x5EED";
    std::string format;
    std::string output;
    double tol = kStructuralTol;
    double circuit_tol = kCircuitTol;
    bool no_merge = false;
    bool all = false;
    bool generic = false;
};

std::vector<double> parse_numbers(const std::string &text, std::size_t expected, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw UsageError(fmt::format("{}: cannot parse \"{}\" as a number", what, item));
        }
    }
    if (out.size() != expected) {
        throw UsageError(fmt::format("{} expects {} comma-separated numbers", what, expected));
    }
    return out;
}

std::uint64_t parse_seed(const std::string &text) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used, 0);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(fmt::format("--seed: \"{}\" is not an unsigned integer", text));
}

PovmFamily resolve_family(const Config &cfg, const CLI::App &sub) {
    if (cfg.family.empty()) {
        throw UsageError("--family is required");
    }
    const auto kind = parse_family_kind(cfg.family);
    if (!kind) {
        throw UsageError(fmt::format("unknown family \"{}\"", cfg.family));
    }
    if (is_platonic(*kind)) {
        return PovmFamily::platonic(*kind);
    }
    if (sub.count("--m") == 0) {
        throw UsageError(fmt::format("{} needs --m", to_string(*kind)));
    }
    if (*kind == FamilyKind::Cyclic) {
        return PovmFamily::cyclic(cfg.m);
    }
    const bool polar = sub.count("--theta") > 0;
    const bool explicit_seed = sub.count("--alpha") + sub.count("--beta-re") + sub.count("--beta-im") > 0;
    if (polar && explicit_seed) {
        throw UsageError("give either --theta or --alpha/--beta-re/--beta-im, not both");
    }
    DihedralSeed seed;
    if (polar) {
        seed = DihedralSeed::from_polar(cfg.theta * std::numbers::pi / 180.0);
    } else if (explicit_seed) {
        seed.alpha = cfg.alpha;
        seed.beta = Complex(cfg.beta_re, cfg.beta_im);
    } else {
        const PlatonicConstants k = platonic_constants(FamilyKind::Tetrahedron);
        seed.alpha = k.alpha;
        seed.beta = k.beta;
    }
    return PovmFamily::dihedral(cfg.m, seed);
}

struct StateInput {
    DensityMatrix rho = DensityMatrix::maximally_mixed();
    std::optional<Spinor> pure;
};

StateInput resolve_state(const Config &cfg) {
    const bool has_state = !cfg.state.empty();
    const bool has_amps = !cfg.amplitudes.empty();
    if (has_state == has_amps) {
        throw UsageError("give exactly one of --state or --amplitudes");
    }
    StateInput in;
    if (has_amps) {
        const auto v = parse_numbers(cfg.amplitudes, 4, "--amplitudes");
        const Spinor psi{Complex(v[0], v[1]), Complex(v[2], v[3])};
        in.rho = DensityMatrix::pure(psi);
        in.pure = psi;
    } else if (cfg.state == "mixed") {
        in.rho = DensityMatrix::maximally_mixed();
    } else {
        const auto v = parse_numbers(cfg.state, 3, "--state");
        in.rho = bloch_to_state({v[0], v[1], v[2]});
    }
    return in;
}

std::string resolve_format(const Config &cfg, const std::string &fallback, std::initializer_list<const char *> allowed) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    for (const char *a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw UsageError(fmt::format("--format {} is not supported here", f));
}

VerifyOptions verify_options(const Config &cfg) {
    VerifyOptions o;
    o.structural_tol = cfg.tol;
    o.circuit_tol = cfg.circuit_tol;
    o.seed = parse_seed(cfg.seed);
    o.synthesis.merge = !cfg.no_merge;
    return o;
}

std::vector<PovmFamily> default_verify_set() {
    const PlatonicConstants k = platonic_constants(FamilyKind::Tetrahedron);
    std::vector<PovmFamily> out{PovmFamily::cyclic(5), PovmFamily::dihedral(5, {k.alpha, k.beta})};
    for (FamilyKind kind : {FamilyKind::Tetrahedron, FamilyKind::Cube, FamilyKind::Octahedron, FamilyKind::Dodecahedron,
                            FamilyKind::Icosahedron}) {
        out.push_back(PovmFamily::platonic(kind));
    }
    return out;
}

std::string report_line(const VerificationReport &r) {
    std::string line = fmt::format(
        "{} {} completeness={:.3g} unitarity={:.3g} circuit={:.3g} deviation={:.3g} leakage={:.3g}",
        r.pass() ? "PASS" : "FAIL", r.family, r.completeness_residual, r.unitarity_residual, r.circuit_phase_distance,
        r.max_prob_deviation, r.padding_leakage);
    if (r.failure) {
        line += fmt::format(" error={}", r.failure_message);
    }
    return line;
}

int cmd_verify(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    std::vector<PovmFamily> families;
    if (cfg.all) {
        if (!cfg.family.empty()) {
            throw UsageError("--all and --family are exclusive");
        }
        families = default_verify_set();
    } else {
        families.push_back(resolve_family(cfg, sub));
    }
    const std::string format = resolve_format(cfg, "json", {"json", "text"});
    const VerifyOptions options = verify_options(cfg);
    std::vector<VerificationReport> reports;
    for (const PovmFamily &f : families) {
        reports.push_back(verify_family(f, options));
    }
    if (format == "text") {
        for (const auto &r : reports) {
            out << report_line(r) << "\n";
        }
    } else {
        Json j = Json::array();
        for (const auto &r : reports) {
            j.push_back(to_json(r));
        }
        out << (cfg.all ? j : j[0]).dump(2) << "\n";
    }
    int code = kOk;
    for (const auto &r : reports) {
        if (r.failure && *r.failure == ErrorKind::DegenerateOrbit) {
            return kDegenerateSeed;
        }
        if (!r.pass()) {
            code = kVerifyFailed;
        }
    }
    return code;
}

int cmd_simulate(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const PovmFamily family = resolve_family(cfg, sub);
    const std::string format = resolve_format(cfg, "csv", {"csv", "text", "json"});
    const StateInput in = resolve_state(cfg);
    const Povm p = build_povm(family);
    const DilatedMeasurement d = structured_dilation(family);
    const Circuit c = synthesize_circuit(family, {!cfg.no_merge});
    CircuitRunOptions run;
    run.circuit_tol = std::max(cfg.circuit_tol, 1e-8);
    const ProbabilityVector analytic = in.pure ? analytic_probabilities(p, *in.pure) : analytic_probabilities(p, in.rho);
    const ProbabilityVector circuit =
        in.pure ? circuit_probabilities(d, c, *in.pure, run) : circuit_probabilities(d, c, in.rho, run);
    if (format == "json") {
        out << Json{{"family", to_json(family)}, {"analytic", to_json(analytic)}, {"circuit", to_json(circuit)}}.dump(2)
            << "\n";
    } else {
        out << probability_table_csv(analytic, circuit);
    }
    return kOk;
}

int cmd_sample(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const PovmFamily family = resolve_family(cfg, sub);
    const std::string format = resolve_format(cfg, "json", {"json", "csv", "text"});
    const StateInput in = resolve_state(cfg);
    const DilatedMeasurement d = structured_dilation(family);
    const Circuit c = synthesize_circuit(family, {!cfg.no_merge});
    const ProbabilityVector pv = circuit_probabilities(d, c, in.rho);
    const SampleCounts counts = sample(pv, cfg.shots, parse_seed(cfg.seed));
    if (format == "json") {
        Json j = to_json(counts);
        j["family"] = to_json(family);
        out << j.dump(2) << "\n";
    } else {
        out << "outcome,count,shots,seed\n";
        for (std::size_t k = 0; k < counts.counts.size(); ++k) {
            out << fmt::format("{},{},{},{:#x}\n", k, counts.counts[k], counts.shots, counts.seed);
        }
    }
    return kOk;
}

int cmd_circuit(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const PovmFamily family = resolve_family(cfg, sub);
    const std::string format = resolve_format(cfg, "json", {"json", "text"});
    const Circuit c = synthesize_circuit(family, {!cfg.no_merge});
    if (format == "text") {
        out << render_text(c);
    } else {
        out << to_json(c).dump(2) << "\n";
    }
    return kOk;
}

int cmd_bloch(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const Povm p = build_povm(resolve_family(cfg, sub));
    const std::string format = resolve_format(cfg, "csv", {"csv", "text", "json"});
    if (format == "json") {
        Json rows = Json::array();
        for (std::size_t j = 0; j < p.size(); ++j) {
            const BlochPoint b = povm_element_to_bloch(p.vectors()[j]);
            rows.push_back({{"index", j}, {"x", b.x}, {"y", b.y}, {"z", b.z}});
        }
        out << rows.dump(2) << "\n";
    } else {
        out << bloch_csv(p);
    }
    return kOk;
}

int cmd_build(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const PovmFamily family = resolve_family(cfg, sub);
    resolve_format(cfg, "json", {"json"});
    out << to_json(build_povm(family)).dump(2) << "\n";
    return kOk;
}

int cmd_dilate(const Config &cfg, const CLI::App &sub, std::ostream &out) {
    const PovmFamily family = resolve_family(cfg, sub);
    resolve_format(cfg, "json", {"json"});
    const DilatedMeasurement d = cfg.generic ? generic_completion(build_povm(family)) : structured_dilation(family);
    out << to_json(d).dump(2) << "\n";
    return kOk;
}

void add_family_options(CLI::App &sub, Config &cfg) {
    sub.add_option("--family", cfg.family,
                   "cyclic, dihedral, tetrahedron, cube, octahedron, dodecahedron or icosahedron");
    sub.add_option("--m", cfg.m, "orbit size for cyclic and dihedral");
    sub.add_option("--theta", cfg.theta, "dihedral seed polar angle in degrees (beta real)");
    sub.add_option("--alpha", cfg.alpha, "dihedral seed alpha (real, >= 0)");
    sub.add_option("--beta-re", cfg.beta_re, "dihedral seed Re(beta)");
    sub.add_option("--beta-im", cfg.beta_im, "dihedral seed Im(beta)");
    sub.add_option("--format", cfg.format, "json, csv or text");
    sub.add_option("--output", cfg.output, "write to this file instead of stdout");
    sub.add_flag("--no-merge", cfg.no_merge, "keep the dihedral XOR gate separate");
}

void add_state_options(CLI::App &sub, Config &cfg) {
    sub.add_option("--state", cfg.state, "Bloch vector \"x,y,z\" or \"mixed\"");
    sub.add_option("--amplitudes", cfg.amplitudes, "pure state \"re0,im0,re1,im1\"");
}

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::DegenerateOrbit ? kDegenerateSeed : kError;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Symmetric single-qubit POVMs: construction, dilation, circuits and simulation"};
    app.require_subcommand(1);

    auto *build = app.add_subcommand("build", "emit the POVM vectors as JSON");
    auto *verify = app.add_subcommand("verify", "run the full check pipeline");
    auto *simulate = app.add_subcommand("simulate", "analytic vs circuit probability table");
    auto *sample_cmd = app.add_subcommand("sample", "seeded outcome counts");
    auto *circuit = app.add_subcommand("circuit", "gate-level circuit as JSON or text");
    auto *bloch = app.add_subcommand("bloch", "Bloch points of the elements as CSV");
    auto *dilate = app.add_subcommand("dilate", "dilation unitary and outcome map as JSON");
    for (auto *sub : {build, verify, simulate, sample_cmd, circuit, bloch, dilate}) {
        add_family_options(*sub, cfg);
    }
    add_state_options(*simulate, cfg);
    add_state_options(*sample_cmd, cfg);
    sample_cmd->add_option("--shots", cfg.shots, "number of shots")->capture_default_str();
    for (auto *sub : {verify, sample_cmd}) {
        sub->add_option("--seed", cfg.seed, "RNG seed, decimal or 0x-prefixed")->capture_default_str();
    }
    verify->add_flag("--all", cfg.all, "verify the default set of seven families");
    verify->add_option("--tol", cfg.tol, "structural tolerance")->capture_default_str();
    verify->add_option("--circuit-tol", cfg.circuit_tol, "circuit phase-distance tolerance")->capture_default_str();
    simulate->add_option("--circuit-tol", cfg.circuit_tol, "circuit phase-distance tolerance");
    dilate->add_flag("--generic", cfg.generic, "Gram-Schmidt completion instead of the structured unitary");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const CLI::App &sub = *app.get_subcommands().front();
    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return kError;
        }
        sink = &file;
    }
    try {
        const std::string name = sub.get_name();
        if (name == "build") return cmd_build(cfg, sub, *sink);
        if (name == "verify") return cmd_verify(cfg, sub, *sink);
        if (name == "simulate") return cmd_simulate(cfg, sub, *sink);
        if (name == "sample") return cmd_sample(cfg, sub, *sink);
        if (name == "circuit") return cmd_circuit(cfg, sub, *sink);
        if (name == "bloch") return cmd_bloch(cfg, sub, *sink);
        return cmd_dilate(cfg, sub, *sink);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PovmError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

}  // namespace povm::cli
