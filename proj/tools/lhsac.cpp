// lhsac: experiment harness for the adaptive hermitian-sphere flows.
// Subcommands: simulate, check, verify, fit, plotscript.
#include "lhs/config.hpp"
#include "lhs/textio.hpp"
#include "lhs/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    CsvData csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (line.back() == ',') fields.push_back("");
        if (first) {
            csv.header = fields;
            first = false;
        } else {
            if (fields.size() < csv.header.size() - 1)
                throw std::invalid_argument("malformed CSV row: " + line);
            csv.rows.push_back(fields);
        }
    }
    if (csv.header.empty()) throw std::invalid_argument("empty CSV " + path);
    return csv;
}

std::size_t column_index(const CsvData& csv, const std::string& name) {
    for (std::size_t i = 0; i < csv.header.size(); ++i)
        if (csv.header[i] == name) return i;
    throw std::invalid_argument("CSV has no \"" + name + "\" column");
}

// Envelope applicability: Hebbian small-data regimes certified by the
// hypothesis checker. Returns nullopt when the run has no certified envelope.
struct EnvelopeSpec {
    double D0, kappa_m, kappa_M, lambda0_abs;
};

std::optional<EnvelopeSpec> envelope_for(const lhs::SimConfig& cfg, const lhs::Ensemble& e0) {
    using namespace lhs;
    if (cfg.params.law0 != CouplingLaw::Hebbian) return std::nullopt;
    TheoremTag tag;
    double l0 = 0.0;
    if (cfg.variant == ModelVariant::SLPair) {
        tag = TheoremTag::T32;
    } else if (cfg.variant == ModelVariant::Perturbed) {
        tag = TheoremTag::T34;
        l0 = std::abs(e0.lambda(0, 0));
    } else {
        return std::nullopt;
    }
    try {
        HypothesisReport rep = check_theorem(e0, cfg.params, tag);
        if (!rep.satisfied || !rep.feasible_kappa) return std::nullopt;
        double kap = *rep.feasible_kappa;
        double kM = 2.0 * cfg.params.mu0 * (kap - 2.0 * l0) /
                    (2.0 * cfg.params.mu0 - cfg.params.gamma0 * kap);
        return EnvelopeSpec{diameter_D(e0).first, kap, kM, l0};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_simulate(const std::string& config_path) {
    using namespace lhs;
    SimConfig cfg;
    Ensemble e0;
    try {
        cfg = load_config(config_path);
        e0 = initial_ensemble(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    auto wall_start = std::chrono::steady_clock::now();
    Trajectory traj;
    try {
        traj = simulate(e0, cfg.params, cfg.variant, cfg.integrator);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumerical;
    }
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();

    auto env = envelope_for(cfg, e0);
    bool full_state = std::find(cfg.output_formats.begin(), cfg.output_formats.end(),
                                "full_state") != cfg.output_formats.end();
    std::string csv = csv_header(full_state, e0.size(), e0.dim());
    for (const auto& s : traj.samples) {
        std::optional<double> env_val;
        if (env)
            env_val = riccati_envelope(env->D0, env->kappa_m, env->kappa_M, env->lambda0_abs,
                                       s.ensemble.t);
        DiagnosticsRecord rec = diagnostics_record(s, cfg.params, cfg.variant, env_val);
        csv += csv_row(rec, full_state ? &s.ensemble : nullptr);
    }

    try {
        std::filesystem::path dir(cfg.output_directory);
        std::filesystem::create_directories(dir);
        write_file_atomic(dir / "trajectory.csv", csv);
        std::string manifest;
        manifest += "config_hash=" + config_hash(cfg) + "\n";
        manifest += "seed=" + std::to_string(cfg.seed) + "\n";
        manifest += std::string("build=") + LHSAC_BUILD_ID + "\n";
        manifest += "wall_time_seconds=" + fmt17(wall) + "\n";
        manifest += "samples=" + std::to_string(traj.samples.size()) + "\n";
        write_file_atomic(dir / "manifest.txt", manifest);
        write_file_atomic(dir / "config.json", serialize_config(cfg));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumerical;
    }
    std::cout << "wrote " << traj.samples.size() << " samples to " << cfg.output_directory
              << "/trajectory.csv\n";
    return kExitOk;
}

int cmd_check(const std::string& config_path, const std::string& theorem) {
    using namespace lhs;
    TheoremTag tag;
    if (theorem == "t31") tag = TheoremTag::T31;
    else if (theorem == "t32") tag = TheoremTag::T32;
    else if (theorem == "t33") tag = TheoremTag::T33;
    else if (theorem == "t34") tag = TheoremTag::T34;
    else {
        std::cerr << "error: unknown theorem \"" << theorem << "\"\n";
        return kExitUsage;
    }
    try {
        SimConfig cfg = load_config(config_path);
        Ensemble e0 = initial_ensemble(cfg);
        HypothesisReport rep = check_theorem(e0, cfg.params, tag);
        std::cout << serialize_report(rep);
        return rep.satisfied ? kExitOk : kExitCheckFailed;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

int cmd_verify(const std::string& suite) {
    using namespace lhs;
    std::vector<CheckResult> results;
    try {
        if (suite == "invariants") results = verify_invariants();
        else if (suite == "reductions") results = verify_reductions();
        else if (suite == "theorems") results = verify_theorems();
        else {
            std::cerr << "error: unknown suite \"" << suite << "\"\n";
            return kExitUsage;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumerical;
    }
    bool all = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL")
                  << " measured=" << fmt17(r.measured) << " tol=" << fmt17(r.tolerance) << "\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitCheckFailed;
}

int cmd_fit(const std::string& csv_path, double t_lo, double t_hi) {
    using namespace lhs;
    if (!(t_lo < t_hi)) {
        std::cerr << "error: fit window is empty\n";
        return kExitUsage;
    }
    try {
        CsvData csv = read_csv(csv_path);
        std::size_t ct = column_index(csv, "t"), cD = column_index(csv, "D");
        std::vector<std::pair<double, double>> tD;
        for (const auto& row : csv.rows)
            tD.emplace_back(std::stod(row[ct]), std::stod(row[cD]));
        auto [rate, r2] = fit_decay_rate(tD, t_lo, t_hi);
        std::cout << "rate=" << fmt17(rate) << "\n";
        std::cout << "r2=" << fmt17(r2) << "\n";
        return kExitOk;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "; shrink the window to earlier times\n";
        return kExitCheckFailed;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

int cmd_plotscript(const std::string& csv_path) {
    using namespace lhs;
    CsvData csv;
    std::size_t c_env;
    try {
        csv = read_csv(csv_path);
        column_index(csv, "t");
        column_index(csv, "D");
        column_index(csv, "L_max");
        c_env = column_index(csv, "envelope");
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    bool has_envelope = false;
    for (const auto& row : csv.rows)
        if (row.size() > c_env && !row[c_env].empty()) has_envelope = true;

    std::filesystem::path src(csv_path);
    std::filesystem::path dst = src;
    dst.replace_extension(".gp");
    std::string name = src.filename().string();
    std::string s;
    s += "# gnuplot script; run from the CSV's directory\n";
    s += "set datafile separator ','\n";
    s += "set key outside\n";
    s += "set xlabel 't'\n";
    s += "set logscale y\n";
    s += "set ylabel 'diameter / Lyapunov (log)'\n";
    s += "plot '" + name + "' using 1:2 with lines title 'D', \\\n";
    s += "     '" + name + "' using 1:3 with lines title 'L_max'";
    if (has_envelope) s += ", \\\n     '" + name + "' using 1:8 with lines title 'envelope'";
    s += "\npause -1\n";
    s += "unset logscale y\n";
    s += "set ylabel 'gain extrema'\n";
    s += "plot '" + name + "' using 1:4 with lines title 'kappa_min', \\\n";
    s += "     '" + name + "' using 1:5 with lines title 'kappa_max'\n";
    s += "pause -1\n";
    try {
        write_file_atomic(dst, s);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNumerical;
    }
    std::cout << "wrote " << dst.string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive hermitian-sphere flow harness"};
    app.require_subcommand(1);

    std::string config_path, theorem, suite, csv_path;
    std::vector<double> window;

    auto* sim = app.add_subcommand("simulate", "integrate a configured system");
    sim->add_option("config", config_path, "config file")->required();

    auto* chk = app.add_subcommand("check", "evaluate hypothesis conditions on initial data");
    chk->add_option("config", config_path, "config file")->required();
    chk->add_option("--theorem", theorem, "t31|t32|t33|t34")->required();

    auto* ver = app.add_subcommand("verify", "run a built-in check suite");
    ver->add_option("--suite", suite, "invariants|reductions|theorems")->required();

    auto* fit = app.add_subcommand("fit", "fit an exponential decay rate to the D column");
    fit->add_option("trajectory", csv_path, "trajectory CSV")->required();
    fit->add_option("--window", window, "t_lo t_hi")->expected(2)->required();

    auto* plt = app.add_subcommand("plotscript", "emit a gnuplot script next to a CSV");
    plt->add_option("trajectory", csv_path, "trajectory CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (sim->parsed()) return cmd_simulate(config_path);
    if (chk->parsed()) return cmd_check(config_path, theorem);
    if (ver->parsed()) return cmd_verify(suite);
    if (fit->parsed()) return cmd_fit(csv_path, window[0], window[1]);
    if (plt->parsed()) return cmd_plotscript(csv_path);
    return kExitUsage;
}
