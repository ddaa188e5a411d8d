#include "lhs/config.hpp"
#include "lhs/textio.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace lhs {

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw std::invalid_argument("config: unknown key \"" + it.key() + "\" in " + where);
    }
}

ModelVariant parse_variant(const std::string& s) {
    if (s == "full") return ModelVariant::FullLHS;
    if (s == "sl_pair") return ModelVariant::SLPair;
    if (s == "perturbed") return ModelVariant::Perturbed;
    if (s == "subsystem_a") return ModelVariant::SubsystemA;
    if (s == "subsystem_b") return ModelVariant::SubsystemB;
    throw std::invalid_argument("config: unknown model variant \"" + s + "\"");
}

CouplingLaw parse_law(const std::string& s) {
    if (s == "anti_hebbian") return CouplingLaw::AntiHebbian;
    if (s == "hebbian") return CouplingLaw::Hebbian;
    if (s == "zero") return CouplingLaw::Zero;
    if (s == "neg_half_anti_hebbian") return CouplingLaw::NegHalfAntiHebbian;
    if (s == "neg_half_hebbian") return CouplingLaw::NegHalfHebbian;
    throw std::invalid_argument("config: unknown coupling law \"" + s + "\"");
}

CMat parse_omega(const json& j, std::size_t d1) {
    if (j.is_string()) {
        if (j.get<std::string>() != "zero")
            throw std::invalid_argument("config: omega must be \"zero\" or a matrix");
        return CMat{};
    }
    if (!j.is_array() || j.size() != d1 * d1)
        throw std::invalid_argument("config: omega must have (d+1)^2 row-major entries");
    CMat m(d1);
    for (std::size_t i = 0; i < d1 * d1; ++i) {
        const json& e = j[i];
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("config: omega entries must be [re, im] pairs");
        m.data()[i] = cplx(e[0].get<double>(), e[1].get<double>());
    }
    if (!is_skew_hermitian(m)) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j2 = 0; j2 < d1; ++j2)
                worst = std::max(worst, std::abs(m(i, j2) + std::conj(m(j2, i))));
        throw std::invalid_argument("config: omega is not skew-hermitian (max |O + O*| entry " +
                                    fmt17(worst) + ")");
    }
    return m;
}

std::pair<double, double> parse_range(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("config: " + where + " must be [lo, hi]");
    double lo = j[0].get<double>(), hi = j[1].get<double>();
    if (hi < lo) throw std::invalid_argument("config: " + where + " has hi < lo");
    return {lo, hi};
}

} // namespace

SimConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const std::exception& ex) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + ex.what());
    }
    reject_unknown(root, {"model", "N", "d", "params", "init", "integrator", "output"}, "root");

    SimConfig cfg;
    const json& model = root.at("model");
    reject_unknown(model, {"variant", "law0", "law1"}, "model");
    cfg.variant = parse_variant(model.at("variant").get<std::string>());
    cfg.params.law0 = parse_law(model.at("law0").get<std::string>());
    cfg.params.law1 = parse_law(model.at("law1").get<std::string>());

    cfg.N = root.at("N").get<std::size_t>();
    cfg.d = root.at("d").get<std::size_t>();
    if (cfg.N < 1) throw std::invalid_argument("config: N must be >= 1");

    const json& params = root.at("params");
    reject_unknown(params, {"gamma0", "gamma1", "mu0", "mu1", "omega"}, "params");
    cfg.params.gamma0 = params.at("gamma0").get<double>();
    cfg.params.gamma1 = params.at("gamma1").get<double>();
    cfg.params.mu0 = params.at("mu0").get<double>();
    cfg.params.mu1 = params.at("mu1").get<double>();
    cfg.params.omega = parse_omega(params.at("omega"), cfg.d + 1);

    const json& init = root.at("init");
    reject_unknown(init,
                   {"seed", "kind", "spread", "kappa_range", "lambda_range", "lambda_rule",
                    "tilde_value", "states"},
                   "init");
    cfg.seed = init.at("seed").get<std::uint64_t>();
    cfg.init_kind = init.value("kind", std::string("near_aggregate"));
    if (cfg.init_kind != "near_aggregate" && cfg.init_kind != "explicit")
        throw std::invalid_argument("config: init.kind must be near_aggregate or explicit");
    cfg.spread = init.value("spread", 0.0);
    std::tie(cfg.kappa_lo, cfg.kappa_hi) = parse_range(init.at("kappa_range"), "init.kappa_range");

    bool has_range = init.contains("lambda_range");
    bool has_rule = init.contains("lambda_rule");
    if (has_range && has_rule)
        throw std::invalid_argument("config: give either init.lambda_range or init.lambda_rule");
    if (has_rule) {
        std::string rule = init.at("lambda_rule").get<std::string>();
        if (rule == "sl_pair") {
            cfg.lambda_rule = LambdaRule::SlPair;
        } else if (rule == "uniform_tilde") {
            cfg.lambda_rule = LambdaRule::UniformTilde;
            cfg.tilde_value = init.at("tilde_value").get<double>();
        } else {
            throw std::invalid_argument("config: unknown lambda_rule \"" + rule + "\"");
        }
    } else if (has_range) {
        cfg.lambda_rule = LambdaRule::Range;
        std::tie(cfg.lambda_lo, cfg.lambda_hi) =
            parse_range(init.at("lambda_range"), "init.lambda_range");
    } else {
        throw std::invalid_argument("config: init needs lambda_range or lambda_rule");
    }

    if (cfg.init_kind == "explicit") {
        const json& states = init.at("states");
        if (!states.is_array() || states.size() != cfg.N)
            throw std::invalid_argument("config: init.states must list N states");
        for (const json& s : states) {
            if (!s.is_array() || s.size() != cfg.d + 1)
                throw std::invalid_argument("config: each state needs d+1 entries");
            CVec z(cfg.d + 1);
            for (std::size_t a = 0; a <= cfg.d; ++a) {
                const json& e = s[a];
                if (!e.is_array() || e.size() != 2)
                    throw std::invalid_argument("config: state entries must be [re, im] pairs");
                z[a] = cplx(e[0].get<double>(), e[1].get<double>());
            }
            if (!is_on_sphere(z))
                throw std::invalid_argument("config: explicit state off the unit sphere");
            cfg.explicit_states.push_back(std::move(z));
        }
    } else if (init.contains("states")) {
        throw std::invalid_argument("config: init.states requires kind = explicit");
    }

    const json& integ = root.at("integrator");
    reject_unknown(integ, {"dt", "t_end", "renormalize", "record_every"}, "integrator");
    cfg.integrator.dt = integ.at("dt").get<double>();
    cfg.integrator.t_end = integ.at("t_end").get<double>();
    cfg.integrator.renormalize = integ.value("renormalize", true);
    cfg.integrator.record_every = integ.value("record_every", std::size_t{1});
    if (cfg.integrator.dt <= 0.0) throw std::invalid_argument("config: integrator.dt must be > 0");
    if (cfg.integrator.t_end <= 0.0)
        throw std::invalid_argument("config: integrator.t_end must be > 0");

    const json& output = root.at("output");
    reject_unknown(output, {"directory", "formats"}, "output");
    cfg.output_directory = output.at("directory").get<std::string>();
    if (output.contains("formats"))
        for (const json& f : output.at("formats")) {
            std::string name = f.get<std::string>();
            if (name != "full_state")
                throw std::invalid_argument("config: unknown output format \"" + name + "\"");
            cfg.output_formats.push_back(name);
        }
    return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::FullLHS: return "full";
        case ModelVariant::SLPair: return "sl_pair";
        case ModelVariant::Perturbed: return "perturbed";
        case ModelVariant::SubsystemA: return "subsystem_a";
        case ModelVariant::SubsystemB: return "subsystem_b";
    }
    throw std::logic_error("variant_name: bad tag");
}

std::string law_name(CouplingLaw law) {
    switch (law) {
        case CouplingLaw::AntiHebbian: return "anti_hebbian";
        case CouplingLaw::Hebbian: return "hebbian";
        case CouplingLaw::Zero: return "zero";
        case CouplingLaw::NegHalfAntiHebbian: return "neg_half_anti_hebbian";
        case CouplingLaw::NegHalfHebbian: return "neg_half_hebbian";
    }
    throw std::logic_error("law_name: bad tag");
}

std::string serialize_config(const SimConfig& cfg) {
    json root;
    root["model"] = {{"variant", variant_name(cfg.variant)},
                     {"law0", law_name(cfg.params.law0)},
                     {"law1", law_name(cfg.params.law1)}};
    root["N"] = cfg.N;
    root["d"] = cfg.d;
    json params;
    params["gamma0"] = cfg.params.gamma0;
    params["gamma1"] = cfg.params.gamma1;
    params["mu0"] = cfg.params.mu0;
    params["mu1"] = cfg.params.mu1;
    if (cfg.params.omega.size() == 0) {
        params["omega"] = "zero";
    } else {
        json m = json::array();
        for (const cplx& c : cfg.params.omega.data()) m.push_back({c.real(), c.imag()});
        params["omega"] = m;
    }
    root["params"] = params;

    json init;
    init["seed"] = cfg.seed;
    init["kind"] = cfg.init_kind;
    init["spread"] = cfg.spread;
    init["kappa_range"] = {cfg.kappa_lo, cfg.kappa_hi};
    switch (cfg.lambda_rule) {
        case LambdaRule::Range: init["lambda_range"] = {cfg.lambda_lo, cfg.lambda_hi}; break;
        case LambdaRule::SlPair: init["lambda_rule"] = "sl_pair"; break;
        case LambdaRule::UniformTilde:
            init["lambda_rule"] = "uniform_tilde";
            init["tilde_value"] = cfg.tilde_value;
            break;
    }
    if (cfg.init_kind == "explicit") {
        json states = json::array();
        for (const CVec& z : cfg.explicit_states) {
            json s = json::array();
            for (const cplx& c : z) s.push_back({c.real(), c.imag()});
            states.push_back(s);
        }
        init["states"] = states;
    }
    root["init"] = init;

    root["integrator"] = {{"dt", cfg.integrator.dt},
                          {"t_end", cfg.integrator.t_end},
                          {"renormalize", cfg.integrator.renormalize},
                          {"record_every", cfg.integrator.record_every}};
    root["output"] = {{"directory", cfg.output_directory}, {"formats", cfg.output_formats}};
    return root.dump(2) + "\n";
}

Ensemble initial_ensemble(const SimConfig& cfg) {
    InitRecipe recipe;
    recipe.N = cfg.N;
    recipe.d = cfg.d;
    recipe.sigma = cfg.spread;
    recipe.kappa_lo = cfg.kappa_lo;
    recipe.kappa_hi = cfg.kappa_hi;
    recipe.lambda_lo = cfg.lambda_lo;
    recipe.lambda_hi = cfg.lambda_hi;
    recipe.lambda_rule = cfg.lambda_rule;
    recipe.tilde_value = cfg.tilde_value;
    Ensemble e = sample_initial(recipe, cfg.seed);
    if (cfg.init_kind == "explicit") e.states = cfg.explicit_states;
    return e;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string csv_header(bool full_state, std::size_t n, std::size_t dim) {
    std::string h =
        "t,D,L_max,kappa_min,kappa_max,lambda_tilde_max_abs,sphere_drift_max,envelope";
    if (full_state)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < dim; ++a) {
                std::string base = ",z" + std::to_string(j) + "_" + std::to_string(a);
                h += base + "_re" + base + "_im";
            }
    return h + "\n";
}

std::string csv_row(const DiagnosticsRecord& rec, const Ensemble* full_state) {
    std::string row = fmt17(rec.t) + "," + fmt17(rec.D) + "," + fmt17(rec.L_max) + "," +
                      fmt17(rec.kappa_min) + "," + fmt17(rec.kappa_max) + "," +
                      fmt17(rec.lambda_tilde_max_abs) + "," + fmt17(rec.sphere_drift_max) + ",";
    if (rec.envelope) row += fmt17(*rec.envelope);
    if (full_state)
        for (const CVec& z : full_state->states)
            for (const cplx& c : z) row += "," + fmt17(c.real()) + "," + fmt17(c.imag());
    return row + "\n";
}

std::string config_hash(const SimConfig& cfg) {
    std::string text = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace lhs
