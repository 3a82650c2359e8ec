// finlink: link-level simulator for a microfluidic molecular channel read out
// by a FinFET biosensor. Subcommands emit deterministic CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finlink/config.hpp"
#include "finlink/link.hpp"
#include "finlink/mc_oracle.hpp"
#include "finlink/sweep.hpp"

using namespace finlink;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string preset_name = "table1";
    std::vector<std::string> sets;
    std::string band_spec;
    std::string out_path = "-";
    std::uint64_t seed = 1;
    double n_m = default_probe_ligands;
    int M = 2;
    double tau_p = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void parse_band(const std::string& spec, BandConfig& band) {
    double f_min, f_max;
    int n;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &f_min, &f_max, &n) != 3)
        throw ConfigError("--band expects fmin:fmax:n");
    band = {f_min, f_max, n};
}

std::vector<double> parse_range(const std::string& spec) {
    // start:stop:count[:lin|log]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw ConfigError("--range expects start:stop:count[:lin|log]");
    const double start = parse_quantity(parts[0]);
    const double stop = parse_quantity(parts[1]);
    const int count = std::stoi(parts[2]);
    bool log_spaced = true;
    if (parts.size() == 4) {
        if (parts[3] == "lin")
            log_spaced = false;
        else if (parts[3] != "log")
            throw ConfigError("--range spacing must be lin or log");
    }
    return make_values(start, stop, count, log_spaced);
}

std::vector<double> parse_value_list(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_quantity(item));
    if (out.empty())
        throw ConfigError("--values is empty");
    return out;
}

ParamBundle build_bundle(const GlobalOpts& g) {
    ParamBundle b = preset(g.preset_name);
    if (!g.config_path.empty())
        b = apply_config(b, read_file(g.config_path));
    for (const auto& kv : g.sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        set_param(b, key, parse_quantity(kv.substr(eq + 1)));
    }
    if (!g.band_spec.empty())
        parse_band(g.band_spec, b.band);
    if (auto viol = validate(b); !viol.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto& v : viol)
            msg += "\n  " + v.field + ": " + v.message;
        throw ConfigError(msg);
    }
    return b;
}

void write_table(const Table& t, const std::string& out_path) {
    if (out_path == "-") {
        emit_csv(t, std::cout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    emit_csv(t, out);
}

std::string hash_hex(const ParamBundle& b) {
    char tmp[24];
    std::snprintf(tmp, sizeof tmp, "%016llx",
                  static_cast<unsigned long long>(config_hash(b)));
    return tmp;
}

std::string band_str(const BandConfig& band) {
    return fmt17(band.f_min) + ":" + fmt17(band.f_max) + ":" +
           std::to_string(band.n_points);
}

Table psd_table(const ParamBundle& b, const GlobalOpts& g) {
    const NoiseSpectrum sp = noise_spectrum(b, g.n_m);
    Table t;
    t.metadata = {{"config_hash", hash_hex(b)},
                  {"band", band_str(b.band)},
                  {"seed", std::to_string(g.seed)},
                  {"N_m", fmt17(g.n_m)}};
    t.columns = {"f_Hz", "s_binding", "s_flicker", "s_total"};
    for (std::size_t i = 0; i < sp.freqs.size(); ++i)
        t.rows.push_back({fmt17(sp.freqs[i]), fmt17(sp.s_binding[i]),
                          fmt17(sp.s_flicker[i]), fmt17(sp.s_total[i])});
    return t;
}

Table sep_table(const ParamBundle& b, const GlobalOpts& g) {
    const SymbolStats st = symbol_stats(b, g.M);
    const double pe = sep(st);
    Table t;
    t.metadata = {{"config_hash", hash_hex(b)},
                  {"band", band_str(b.band)},
                  {"seed", std::to_string(g.seed)},
                  {"M", std::to_string(g.M)},
                  {"sep", fmt17(pe)},
                  {"ln_sep", fmt17(log_sep(st))}};
    t.columns = {"m", "N_m", "mu_I", "sigma_I", "lambda_upper"};
    const std::vector<double> levels = csk_levels(b.ligand, g.M);
    for (int m = 0; m < g.M; ++m) {
        t.rows.push_back({std::to_string(m), fmt17(levels[m]), fmt17(st.mu[m]),
                          fmt17(std::sqrt(st.sigma2[m])),
                          m < g.M - 1 ? fmt17(st.thresholds[m]) : "na"});
    }
    return t;
}

Table oracle_table(const ParamBundle& b, const GlobalOpts& g, long long trials) {
    const SymbolStats st = symbol_stats(b, g.M);
    const double analytic = sep(st);
    const SepEstimate est = simulate_sep(st, {trials, g.seed});
    const double z = est.std_err > 0 ? (est.p_hat - analytic) / est.std_err : 0.0;
    Table t;
    t.metadata = {{"config_hash", hash_hex(b)},
                  {"band", band_str(b.band)},
                  {"seed", std::to_string(g.seed)},
                  {"generator", mc_generator_name()}};
    t.columns = {"M", "trials", "sep_analytic", "sep_mc", "std_err", "z"};
    t.rows.push_back({std::to_string(g.M), std::to_string(trials), fmt17(analytic),
                      fmt17(est.p_hat), fmt17(est.std_err), fmt17(z)});
    return t;
}

Table presets_table() {
    Table t;
    t.metadata = {{"presets", "named parameter bundles"}};
    t.columns = {"name", "overrides"};
    t.rows.push_back({"table1", ""});
    t.rows.push_back({"physiological", "device.t_s=5e-07;channel.c_ion=150"});
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finlink: microfluidic molecular link with a FinFET biosensing receiver"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--config", g.config_path, "parameter file (key = value lines)");
    app.add_option("--preset", g.preset_name, "parameter preset (table1, physiological)");
    app.add_option("--set", g.sets, "override, e.g. --set channel.u=5e-6")->take_all();
    app.add_option("--band", g.band_spec, "PSD band fmin:fmax:n");
    app.add_option("--out", g.out_path, "output path, '-' for stdout");
    app.add_option("--seed", g.seed, "PRNG seed");
    app.add_option("--Nm", g.n_m, "release count for snr_db/mu_I/psd");
    app.add_option("--M", g.M, "CSK alphabet size")->check(CLI::Range(2, 64));
    app.add_option("--tau-p", g.tau_p, "passage duration for the equilibrium flag [s]");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter, tabulate a metric");
    std::string var, range_spec, values_spec, metric_str = "snr_db";
    sweep_cmd->add_option("--var", var, "dotted parameter path, or N_m")->required();
    sweep_cmd->add_option("--range", range_spec, "start:stop:count[:lin|log]");
    sweep_cmd->add_option("--values", values_spec, "explicit comma-separated values");
    sweep_cmd->add_option("--metric", metric_str, "snr_db | sep | mu_I | response");

    auto* psd_cmd = app.add_subcommand("psd", "noise PSD components on the band grid");
    auto* response_cmd =
        app.add_subcommand("response", "mean output current vs release count");
    std::string response_range = "1e4:1e7:50:log";
    response_cmd->add_option("--range", response_range, "start:stop:count[:lin|log]");

    auto* sep_cmd = app.add_subcommand("sep", "per-symbol stats and analytic SEP");
    auto* oracle_cmd = app.add_subcommand("oracle", "Monte-Carlo SEP cross-check");
    long long trials = 1000000;
    oracle_cmd->add_option("--trials", trials, "Monte-Carlo trials")
        ->check(CLI::PositiveNumber);

    auto* validate_cmd = app.add_subcommand("validate-config", "check parameters and exit");
    auto* presets_cmd = app.add_subcommand("presets", "list named presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (presets_cmd->parsed()) {
            write_table(presets_table(), g.out_path);
            return 0;
        }

        if (validate_cmd->parsed()) {
            try {
                build_bundle(g);
            } catch (const ConfigError& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            std::cout << "ok\n";
            return 0;
        }

        const ParamBundle b = build_bundle(g);

        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            spec.variable = var;
            if (!range_spec.empty() && !values_spec.empty())
                throw ConfigError("give either --range or --values, not both");
            if (!range_spec.empty())
                spec.values = parse_range(range_spec);
            else if (!values_spec.empty())
                spec.values = parse_value_list(values_spec);
            else
                throw ConfigError("sweep needs --range or --values");
            spec.metric = metric_from_name(metric_str);
            spec.M = g.M;
            spec.N_m_probe = g.n_m;
            spec.tau_p = g.tau_p;
            spec.seed = g.seed;
            write_table(run_sweep(spec, b), g.out_path);
        } else if (psd_cmd->parsed()) {
            write_table(psd_table(b, g), g.out_path);
        } else if (response_cmd->parsed()) {
            SweepSpec spec;
            spec.variable = "N_m";
            spec.values = parse_range(response_range);
            spec.metric = Metric::response;
            spec.M = g.M;
            spec.tau_p = g.tau_p;
            spec.seed = g.seed;
            write_table(run_sweep(spec, b), g.out_path);
        } else if (sep_cmd->parsed()) {
            write_table(sep_table(b, g), g.out_path);
        } else if (oracle_cmd->parsed()) {
            write_table(oracle_table(b, g, trials), g.out_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
