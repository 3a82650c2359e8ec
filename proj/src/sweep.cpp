#include "finlink/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "finlink/config.hpp"
#include "finlink/device.hpp"
#include "finlink/link.hpp"
#include "finlink/receptor.hpp"

namespace finlink {

Metric metric_from_name(std::string_view name) {
    if (name == "snr_db") return Metric::snr_db;
    if (name == "sep") return Metric::sep;
    if (name == "mu_I") return Metric::mu_I;
    if (name == "psd") return Metric::psd;
    if (name == "response") return Metric::response;
    throw ConfigError("unknown metric '" + std::string(name) + "'");
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::snr_db: return "snr_db";
        case Metric::sep: return "sep";
        case Metric::mu_I: return "mu_I";
        case Metric::psd: return "psd";
        case Metric::response: return "response";
    }
    return "?";
}

std::vector<double> make_values(double start, double stop, int count, bool log_spaced) {
    if (count < 1)
        throw ConfigError("sweep needs at least one value");
    if (count == 1)
        return {start};
    if (log_spaced && !(start > 0.0 && stop > 0.0))
        throw ConfigError("log-spaced sweep needs positive endpoints");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        v[i] = log_spaced ? start * std::pow(stop / start, t)
                          : start + (stop - start) * t;
    }
    return v;
}

std::string fmt17(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof tmp, "%.17g", v);
    return tmp;
}

namespace {

// tau_B reported per row: the slowest relaxation among the release counts the
// metric actually evaluates (the smallest nonzero level binds slowest).
double worst_tau_B(const ParamBundle& b, Metric metric, double probe, int M) {
    double level = probe;
    if (metric == Metric::sep) {
        for (double lv : csk_levels(b.ligand, M))
            if (lv > 0.0) { level = lv; break; }
    }
    return bind_at(b, level).tau_B;
}

} // namespace

Table run_sweep(const SweepSpec& spec, const ParamBundle& base) {
    if (spec.values.empty())
        throw ConfigError("sweep has no values");
    if (spec.metric == Metric::psd)
        throw std::domain_error("metric 'psd' emits a spectrum, not a sweep row; "
                                "use the psd command");
    const bool sweeps_release = spec.variable == "N_m";
    if (!sweeps_release && !is_known_param(spec.variable))
        throw ConfigError("unknown sweep variable '" + spec.variable + "'");

    Table t;
    t.metadata = {
        {"config_hash", [&] {
             char tmp[24];
             std::snprintf(tmp, sizeof tmp, "%016llx",
                           static_cast<unsigned long long>(config_hash(base)));
             return std::string(tmp);
         }()},
        {"band", fmt17(base.band.f_min) + ":" + fmt17(base.band.f_max) + ":" +
                     std::to_string(base.band.n_points)},
        {"seed", std::to_string(spec.seed)},
        {"variable", spec.variable},
        {"metric", metric_name(spec.metric)},
    };
    if (spec.metric == Metric::sep)
        t.metadata.push_back({"M", std::to_string(spec.M)});
    else
        t.metadata.push_back({"N_m_probe", fmt17(spec.N_m_probe)});

    t.columns = {spec.variable, metric_name(spec.metric), "tau_B", "equilibrium_ok",
                 "region"};

    for (double value : spec.values) {
        ParamBundle b = base;
        double probe = spec.N_m_probe;
        if (sweeps_release)
            probe = value;
        else
            set_param(b, spec.variable, value);

        // bias-region violations become flagged rows; anything else is a
        // genuine domain error
        for (const auto& viol : validate(b)) {
            if (viol.field == "device.V_SD" || viol.field == "device.V_ov")
                continue;
            throw std::domain_error("sweep value " + fmt17(value) + " violates '" +
                                    viol.field + "': " + viol.message);
        }

        const Region region = operating_region(b.device, b.device.V_ov);
        double metric = std::numeric_limits<double>::quiet_NaN();
        double tau_B = std::numeric_limits<double>::quiet_NaN();
        if (region == Region::linear) {
            switch (spec.metric) {
                case Metric::snr_db:
                    metric = snr(b, probe).db;
                    break;
                case Metric::mu_I:
                case Metric::response:
                    metric = mean_current(b, probe);
                    break;
                case Metric::sep:
                    metric = sep(symbol_stats(b, spec.M));
                    break;
                case Metric::psd:
                    break; // rejected above
            }
            tau_B = worst_tau_B(b, spec.metric, probe, spec.M);
        }

        std::string eq = "na";
        if (spec.tau_p > 0.0 && std::isfinite(tau_B))
            eq = equilibrium_ok(spec.tau_p, tau_B) ? "1" : "0";

        t.rows.push_back({fmt17(value), fmt17(metric), fmt17(tau_B), eq,
                          region == Region::linear ? "linear" : "invalid"});
    }
    return t;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n") != std::string::npos;
}

std::string quoted(const std::string& field) {
    if (!needs_quoting(field))
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::size_t emit_csv(const Table& t, std::ostream& out) {
    const std::string s = csv_string(t);
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
    return s.size();
}

std::string csv_string(const Table& t) {
    std::string out;
    for (const auto& [k, v] : t.metadata)
        out += "# " + k + "=" + v + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += quoted(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += quoted(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(std::string_view text) {
    Table t;
    std::stringstream ss{std::string(text)};
    std::string line;
    bool have_header = false;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::size_t start = line.find_first_not_of(" \t", 1);
            if (start == std::string::npos)
                continue;
            std::size_t eq = line.find('=', start);
            if (eq == std::string::npos)
                t.metadata.push_back({line.substr(start), ""});
            else
                t.metadata.push_back({line.substr(start, eq - start), line.substr(eq + 1)});
            continue;
        }
        if (!have_header) {
            t.columns = split_csv_line(line);
            have_header = true;
        } else {
            t.rows.push_back(split_csv_line(line));
        }
    }
    return t;
}

ParamBundle preset(std::string_view name) {
    if (name == "table1")
        return defaults();
    if (name == "physiological") {
        ParamBundle b = defaults();
        b.device.t_s = 5e-7;
        b.channel.c_ion = 150.0;
        return b;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
    return {"table1", "physiological"};
}

} // namespace finlink
