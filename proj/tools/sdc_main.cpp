// sdc: superdense-coding capacity laboratory.
//
// Subcommands:
//   capacity  - one capacity query with every applicable closed form and bound
//   sweep     - capacity vs complementarity grid (plot-ready CSV/JSON)
//   verify    - seeded theorem-verification suites with pass/fail lines
//   witness   - certify non-commutativity of a black-box unitary set
//
// Exit codes: 0 ok, 1 verification failure, 2 config error, 3 non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdc/claims.hpp"
#include "sdc/errors.hpp"
#include "sdc/json_io.hpp"
#include "sdc/report.hpp"
#include "sdc/sweep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoConvergence = 3;

struct CommonOpts {
    int d = 2;
    std::string hadamard = "fourier";
    std::string state = "mes";
    std::string channel = "identity";
    std::string out;
    std::string format = "text";
    double tol = sdc::tol::opt;
    uint64_t seed = 20260810;
};

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw sdc::RangeError("cannot open output file: " + out_path);
    f << payload;
}

// Derives the scenario kind tags the report layer keys its applicability on.
sdc::ScenarioSpec resolve_scenario(const CommonOpts& opts) {
    sdc::ScenarioSpec scenario{
        opts.d,
        sdc::parse_hadamard_arg(opts.hadamard, opts.d),
        sdc::parse_state_arg(opts.state, opts.d),
        "raw",
        1.0,
        sdc::parse_channel_arg(opts.channel, opts.d),
        "kraus",
        1.0,
    };
    if (scenario.hadamard.dim() != opts.d)
        throw sdc::DimensionMismatch("hadamard dimension disagrees with --d");
    if (scenario.state.local_dim() != opts.d)
        throw sdc::DimensionMismatch("state dimension disagrees with --d");
    if (scenario.channel.d_in() != opts.d)
        throw sdc::DimensionMismatch("channel dimension disagrees with --d");

    if (opts.state == "mes") {
        scenario.state_kind = "mes";
        scenario.alpha = 1.0;
    } else if (opts.state.rfind("werner:", 0) == 0) {
        scenario.state_kind = "werner";
        scenario.alpha = std::stod(opts.state.substr(7));
    }
    if (opts.channel == "identity") {
        scenario.channel_kind = "identity";
        scenario.beta = 1.0;
    } else if (opts.channel.rfind("depolarising:", 0) == 0) {
        scenario.channel_kind = "depolarising";
        scenario.beta = std::stod(opts.channel.substr(13));
    } else if (opts.channel == "dephasing") {
        scenario.channel_kind = "dephasing";
    }
    return scenario;
}

const char* class_name(sdc::HadamardClass c) {
    switch (c) {
        case sdc::HadamardClass::Full: return "full";
        case sdc::HadamardClass::Zero: return "zero";
        default: return "partial";
    }
}

json bound_to_json(const sdc::BoundReport& b, double optimizer_value) {
    json components = json::object();
    for (const auto& [name, term] : b.components) components[name] = term;
    return json{{"name", b.name},
                {"value", b.value},
                {"applicable", b.applicable},
                {"components", components},
                {"slack", optimizer_value - b.value}};
}

int cmd_capacity(const CommonOpts& opts) {
    const sdc::ScenarioSpec scenario = resolve_scenario(opts);
    const sdc::CapacityReport report = sdc::build_capacity_report(scenario, opts.tol);

    if (opts.format == "json") {
        json j{{"schema", 1},
               {"command", "capacity"},
               {"config",
                {{"d", opts.d},
                 {"hadamard", opts.hadamard},
                 {"state", opts.state},
                 {"channel", opts.channel},
                 {"tol", opts.tol},
                 {"seed", opts.seed}}},
               {"c", report.c_val},
               {"hadamard_class", class_name(report.hadamard_class)},
               {"optimizer",
                {{"value", report.optimizer.value},
                 {"iterations", report.optimizer.iterations},
                 {"converged", report.optimizer.converged},
                 {"certificate_gap", report.optimizer.certificate_gap},
                 {"optimal_p", report.optimizer.optimal_p.values()}}},
               {"classical_bound", report.classical_bound},
               {"advantage", report.advantage}};
        j["closed_forms"] = json::array();
        for (const auto& eq : report.equalities)
            j["closed_forms"].push_back(json{{"name", eq.name},
                                             {"value", eq.value},
                                             {"applicable", eq.applicable},
                                             {"delta", eq.delta}});
        j["bounds"] = json::array();
        for (const auto& b : report.bounds)
            j["bounds"].push_back(bound_to_json(b, report.optimizer.value));
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "d                 " << opts.d << "\n"
           << "hadamard          " << opts.hadamard << " (class " << class_name(report.hadamard_class)
           << ", c " << sdc::format_double(report.c_val) << ")\n"
           << "state             " << opts.state << "\n"
           << "channel           " << opts.channel << "\n"
           << "capacity          " << sdc::format_double(report.optimizer.value) << " bits"
           << " (iterations " << report.optimizer.iterations << ", gap "
           << sdc::format_double(report.optimizer.certificate_gap)
           << (report.optimizer.converged ? ", converged" : ", NOT CONVERGED") << ")\n"
           << "classical bound   " << sdc::format_double(report.classical_bound) << " bits\n"
           << "advantage         " << (report.advantage ? "yes" : "no") << "\n";
        os << "closed forms (delta = optimizer - formula):\n";
        for (const auto& eq : report.equalities)
            os << "  " << eq.name << (eq.applicable ? "" : "  [not applicable]") << "  value "
               << sdc::format_double(eq.value) << "  delta " << sdc::format_double(eq.delta) << "\n";
        os << "lower bounds (slack = optimizer - bound):\n";
        for (const auto& b : report.bounds)
            os << "  " << b.name << (b.applicable ? "" : "  [not applicable]") << "  value "
               << sdc::format_double(b.value) << "  slack "
               << sdc::format_double(report.optimizer.value - b.value) << "\n";
        write_output(opts.out, os.str());
    }
    return report.optimizer.converged ? kExitOk : kExitNoConvergence;
}

struct SweepOpts {
    CommonOpts common;
    std::vector<double> noises{0.0, 0.1, 0.2, 0.253, 0.4};
    int c_steps = 50;
};

int cmd_sweep(const SweepOpts& opts) {
    sdc::SweepSpec spec;
    spec.d = opts.common.d;
    spec.noises = opts.noises;
    spec.c_steps = opts.c_steps;
    const std::vector<sdc::SweepPoint> points = sdc::run_sweep(spec);

    if (opts.common.format == "json") {
        json rows = json::array();
        for (const auto& pt : points) {
            json row{{"c", pt.c},
                     {"noise", pt.noise},
                     {"capacity", pt.capacity},
                     {"classical_bound", pt.classical_bound},
                     {"advantage", pt.advantage}};
            if (spec.d > 2) row["overlap"] = pt.overlap;  // c alone underdetermines c_kl
            rows.push_back(std::move(row));
        }
        json j{{"schema", 1},
               {"command", "sweep"},
               {"config", {{"d", spec.d}, {"noise", spec.noises}, {"c_steps", spec.c_steps}}},
               {"rows", rows}};
        write_output(opts.common.out, j.dump(2) + "\n");
    } else {
        write_output(opts.common.out, sdc::sweep_csv(points));
        if (spec.d > 2 && !opts.common.out.empty()) {
            // CSV cannot carry the full overlap matrix; park it next to the file.
            json sidecar = json::array();
            for (const auto& pt : points)
                sidecar.push_back(json{{"c", pt.c}, {"noise", pt.noise}, {"overlap", pt.overlap}});
            std::ofstream f(opts.common.out + ".sidecar.json");
            f << json{{"schema", 1}, {"rows", sidecar}}.dump(2) << "\n";
        }
    }
    return kExitOk;
}

struct VerifyOpts {
    std::vector<int> dims{2, 3};
    uint64_t seed = 20260810;
    std::string claims = "all";
    std::string format = "text";
    std::string out;
    int samples = 0;
};

int cmd_verify(const VerifyOpts& opts) {
    std::vector<std::string> names;
    if (opts.claims == "all") {
        names = sdc::claim_names();
    } else {
        std::stringstream ss(opts.claims);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) continue;
            const auto& known = sdc::claim_names();
            if (std::find(known.begin(), known.end(), part) == known.end())
                throw sdc::RangeError("unknown claim: " + part);
            names.push_back(part);
        }
        if (names.empty()) throw sdc::RangeError("no claims selected");
    }

    sdc::ClaimConfig cfg;
    cfg.dims = opts.dims;
    cfg.seed = opts.seed;
    cfg.samples = opts.samples;
    const std::vector<sdc::ClaimResult> results = sdc::run_claims(names, cfg);

    bool all_pass = true;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            rows.push_back(json{{"name", r.name},
                                {"pass", r.pass},
                                {"max_deviation", r.max_deviation},
                                {"tolerance", r.tolerance},
                                {"detail", r.detail}});
        }
        json j{{"schema", 1},
               {"command", "verify"},
               {"config", {{"dims", opts.dims}, {"seed", opts.seed}, {"claims", opts.claims}}},
               {"results", rows},
               {"all_pass", all_pass}};
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  max_dev "
               << sdc::format_double(r.max_deviation) << "  tol "
               << sdc::format_double(r.tolerance) << "  (" << r.detail << ")\n";
        }
        os << (all_pass ? "all claims pass" : "CLAIM FAILURES PRESENT") << "\n";
        write_output(opts.out, os.str());
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

struct WitnessOpts {
    CommonOpts common;
    std::string unitaries;  // JSON file with the black-box transcript
};

int cmd_witness(const WitnessOpts& opts) {
    std::ifstream in(opts.unitaries);
    if (!in) throw sdc::RangeError("cannot open unitaries file: " + opts.unitaries);
    json transcript;
    in >> transcript;
    const sdc::UnitarySet set = sdc::unitary_set_from_json(transcript);
    if (set.dim() != opts.common.d)
        throw sdc::DimensionMismatch("unitary set dimension disagrees with --d");

    const sdc::PresharedState state = sdc::parse_state_arg(opts.common.state, opts.common.d);
    const sdc::KrausChannel channel = sdc::parse_channel_arg(opts.common.channel, opts.common.d);
    const sdc::WitnessReport report = sdc::witness_complementarity(set, state, channel);
    const double threshold = sdc::classical_strategy_bound(opts.common.d);
    const char* verdict = report.advantage ? "non-commuting certified" : "not certified";

    if (opts.common.format == "json") {
        json j{{"schema", 1},
               {"command", "witness"},
               {"capacity", report.capacity},
               {"classical_bound", threshold},
               {"advantage", report.advantage},
               {"commuting", report.commuting},
               {"verdict", verdict}};
        write_output(opts.common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "capacity          " << sdc::format_double(report.capacity) << " bits\n"
           << "classical bound   " << sdc::format_double(threshold) << " bits\n"
           << "commuting         " << (report.commuting ? "yes" : "no") << "\n"
           << "verdict           " << verdict << "\n";
        write_output(opts.common.out, os.str());
    }
    return kExitOk;
}

void add_common_flags(CLI::App* cmd, CommonOpts* opts, bool with_scenario) {
    cmd->add_option("--d", opts->d, "qudit dimension")->check(CLI::Range(2, 64));
    if (with_scenario) {
        cmd->add_option("--hadamard", opts->hadamard, "fourier | identity | rotation:<theta> | file");
        cmd->add_option("--state", opts->state, "mes | werner:<alpha> | file");
        cmd->add_option("--channel", opts->channel,
                        "identity | dephasing | depolarising:<beta> | file");
    }
    cmd->add_option("--out", opts->out, "output path (default stdout)");
    cmd->add_option("--format", opts->format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--tol", opts->tol, "optimizer sup-gap tolerance in bits");
    cmd->add_option("--seed", opts->seed, "seed for seeded runs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superdense-coding capacity laboratory"};
    app.require_subcommand(1);

    CommonOpts cap_opts;
    CLI::App* cap = app.add_subcommand("capacity", "single capacity query");
    add_common_flags(cap, &cap_opts, true);

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "capacity vs complementarity grid");
    add_common_flags(sweep, &sweep_opts.common, false);
    sweep->add_option("--noise", sweep_opts.noises, "noise values 1 - alpha*beta")->delimiter(',');
    sweep->add_option("--c-steps", sweep_opts.c_steps, "points per curve")->check(CLI::Range(2, 100000));

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run theorem-verification suites");
    verify->add_option("--d", verify_opts.dims, "dimensions to test")->delimiter(',');
    verify->add_option("--seed", verify_opts.seed, "seed");
    verify->add_option("--claims", verify_opts.claims, "comma list or 'all'");
    verify->add_option("--samples", verify_opts.samples, "samples per dim (0 = default)");
    verify->add_option("--format", verify_opts.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_opts.out, "output path (default stdout)");

    WitnessOpts witness_opts;
    CLI::App* witness = app.add_subcommand("witness", "certify a black-box unitary set");
    add_common_flags(witness, &witness_opts.common, true);
    witness->add_option("--unitaries", witness_opts.unitaries, "JSON array of matrices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (cap->parsed()) return cmd_capacity(cap_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (witness->parsed()) return cmd_witness(witness_opts);
    } catch (const sdc::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const sdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
