#pragma once

#include "lhs/diagnostics.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace lhs {

struct SimConfig {
    ModelVariant variant = ModelVariant::FullLHS;
    std::size_t N = 0;
    std::size_t d = 0;
    ModelParams params;

    // init
    std::uint64_t seed = 0;
    std::string init_kind = "near_aggregate"; // or "explicit"
    double spread = 0.0;
    double kappa_lo = 1.0, kappa_hi = 1.0;
    LambdaRule lambda_rule = LambdaRule::Range;
    double lambda_lo = 0.0, lambda_hi = 0.0;
    double tilde_value = 0.0;
    std::vector<CVec> explicit_states; // used when init_kind == "explicit"

    IntegratorSettings integrator;

    std::string output_directory = ".";
    std::vector<std::string> output_formats; // may include "full_state"
};

// Strict parse: unknown keys anywhere are hard errors.
SimConfig parse_config(const std::string& json_text);
SimConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const SimConfig& cfg);

Ensemble initial_ensemble(const SimConfig& cfg);

// Whole-file atomic write (temp file in the same directory, then rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string csv_header(bool full_state, std::size_t n, std::size_t dim);
std::string csv_row(const DiagnosticsRecord& rec, const Ensemble* full_state);

// FNV-1a over the serialized config, hex.
std::string config_hash(const SimConfig& cfg);

std::string variant_name(ModelVariant v);
std::string law_name(CouplingLaw law);

} // namespace lhs
