#include "finlink/config.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "finlink/constants.hpp"

namespace finlink {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Scalar parameter registry: canonical dotted key plus accessors. Order here
// is the serialization order.
struct ParamEntry {
    const char* key;
    double (*get)(const ParamBundle&);
    void (*set)(ParamBundle&, double);
};

constexpr std::array param_table = {
    ParamEntry{"channel.h_ch", [](const ParamBundle& b) { return b.channel.h_ch; },
               [](ParamBundle& b, double v) { b.channel.h_ch = v; }},
    ParamEntry{"channel.l_ch", [](const ParamBundle& b) { return b.channel.l_ch; },
               [](ParamBundle& b, double v) { b.channel.l_ch = v; }},
    ParamEntry{"channel.u", [](const ParamBundle& b) { return b.channel.u; },
               [](ParamBundle& b, double v) { b.channel.u = v; }},
    ParamEntry{"channel.D0", [](const ParamBundle& b) { return b.channel.D0; },
               [](ParamBundle& b, double v) { b.channel.D0 = v; }},
    ParamEntry{"channel.x_R", [](const ParamBundle& b) { return b.channel.x_R; },
               [](ParamBundle& b, double v) { b.channel.x_R = v; }},
    ParamEntry{"channel.T", [](const ParamBundle& b) { return b.channel.T; },
               [](ParamBundle& b, double v) { b.channel.T = v; }},
    ParamEntry{"channel.c_ion", [](const ParamBundle& b) { return b.channel.c_ion; },
               [](ParamBundle& b, double v) { b.channel.c_ion = v; }},
    ParamEntry{"channel.eps_M", [](const ParamBundle& b) { return b.channel.eps_M; },
               [](ParamBundle& b, double v) { b.channel.eps_M = v; }},
    ParamEntry{"device.W", [](const ParamBundle& b) { return b.device.W; },
               [](ParamBundle& b, double v) { b.device.W = v; }},
    ParamEntry{"device.t_s", [](const ParamBundle& b) { return b.device.t_s; },
               [](ParamBundle& b, double v) { b.device.t_s = v; }},
    ParamEntry{"device.L_eff", [](const ParamBundle& b) { return b.device.L_eff; },
               [](ParamBundle& b, double v) { b.device.L_eff = v; }},
    ParamEntry{"device.t_ox", [](const ParamBundle& b) { return b.device.t_ox; },
               [](ParamBundle& b, double v) { b.device.t_ox = v; }},
    ParamEntry{"device.eps_ox", [](const ParamBundle& b) { return b.device.eps_ox; },
               [](ParamBundle& b, double v) { b.device.eps_ox = v; }},
    ParamEntry{"device.eps_SiNW", [](const ParamBundle& b) { return b.device.eps_SiNW; },
               [](ParamBundle& b, double v) { b.device.eps_SiNW = v; }},
    ParamEntry{"device.V_fb", [](const ParamBundle& b) { return b.device.V_fb; },
               [](ParamBundle& b, double v) { b.device.V_fb = v; }},
    ParamEntry{"device.N_A_dop", [](const ParamBundle& b) { return b.device.N_A_dop; },
               [](ParamBundle& b, double v) { b.device.N_A_dop = v; }},
    ParamEntry{"device.n_i", [](const ParamBundle& b) { return b.device.n_i; },
               [](ParamBundle& b, double v) { b.device.n_i = v; }},
    ParamEntry{"device.mu_p", [](const ParamBundle& b) { return b.device.mu_p; },
               [](ParamBundle& b, double v) { b.device.mu_p = v; }},
    ParamEntry{"device.V_SD", [](const ParamBundle& b) { return b.device.V_SD; },
               [](ParamBundle& b, double v) { b.device.V_SD = v; }},
    ParamEntry{"device.V_ov", [](const ParamBundle& b) { return b.device.V_ov; },
               [](ParamBundle& b, double v) { b.device.V_ov = v; }},
    ParamEntry{"device.p", [](const ParamBundle& b) { return b.device.p; },
               [](ParamBundle& b, double v) { b.device.p = v; }},
    ParamEntry{"device.lambda_tun", [](const ParamBundle& b) { return b.device.lambda_tun; },
               [](ParamBundle& b, double v) { b.device.lambda_tun = v; }},
    ParamEntry{"device.N_ot", [](const ParamBundle& b) { return b.device.N_ot; },
               [](ParamBundle& b, double v) { b.device.N_ot = v; }},
    ParamEntry{"device.alpha_s", [](const ParamBundle& b) { return b.device.alpha_s; },
               [](ParamBundle& b, double v) { b.device.alpha_s = v; }},
    ParamEntry{"ligand.k1", [](const ParamBundle& b) { return b.ligand.k1; },
               [](ParamBundle& b, double v) { b.ligand.k1 = v; }},
    ParamEntry{"ligand.k_minus1", [](const ParamBundle& b) { return b.ligand.k_minus1; },
               [](ParamBundle& b, double v) { b.ligand.k_minus1 = v; }},
    ParamEntry{"ligand.N_e", [](const ParamBundle& b) { return b.ligand.N_e; },
               [](ParamBundle& b, double v) { b.ligand.N_e = v; }},
    ParamEntry{"ligand.rho_SR", [](const ParamBundle& b) { return b.ligand.rho_SR; },
               [](ParamBundle& b, double v) { b.ligand.rho_SR = v; }},
    ParamEntry{"ligand.l_SR", [](const ParamBundle& b) { return b.ligand.l_SR; },
               [](ParamBundle& b, double v) { b.ligand.l_SR = v; }},
    ParamEntry{"ligand.K_max", [](const ParamBundle& b) { return b.ligand.K_max; },
               [](ParamBundle& b, double v) { b.ligand.K_max = v; }},
    ParamEntry{"band.f_min", [](const ParamBundle& b) { return b.band.f_min; },
               [](ParamBundle& b, double v) { b.band.f_min = v; }},
    ParamEntry{"band.f_max", [](const ParamBundle& b) { return b.band.f_max; },
               [](ParamBundle& b, double v) { b.band.f_max = v; }},
    ParamEntry{"band.n_points", [](const ParamBundle& b) { return double(b.band.n_points); },
               [](ParamBundle& b, double v) { b.band.n_points = static_cast<int>(v); }},
};

// Convenience spellings accepted on input only.
struct DerivedEntry {
    const char* key;
    void (*set)(ParamBundle&, double);
};

constexpr std::array derived_table = {
    DerivedEntry{"channel.d", [](ParamBundle& b, double v) { b.channel.x_R = v; }},
    DerivedEntry{"channel.eps_r",
                 [](ParamBundle& b, double v) { b.channel.eps_M = v * phys::eps0; }},
    DerivedEntry{"device.eps_ox_rel",
                 [](ParamBundle& b, double v) { b.device.eps_ox = v * phys::eps0; }},
    DerivedEntry{"device.eps_SiNW_rel",
                 [](ParamBundle& b, double v) { b.device.eps_SiNW = v * phys::eps0; }},
};

const ParamEntry* find_param(std::string_view key) {
    for (const auto& e : param_table)
        if (key == e.key) return &e;
    return nullptr;
}

const DerivedEntry* find_derived(std::string_view key) {
    for (const auto& e : derived_table)
        if (key == e.key) return &e;
    return nullptr;
}

bool is_bare_unit(std::string_view s) {
    static constexpr std::string_view units[] = {"m",  "V",  "s",  "K",   "A",
                                                 "F",  "C",  "J",  "Hz",  "mol",
                                                 "eV", "W"};
    for (auto u : units)
        if (s == u) return true;
    return false;
}

} // namespace

double parse_quantity(std::string_view text) {
    std::string buf(trim(text));
    if (buf.empty())
        throw ConfigError("empty value");
    const char* begin = buf.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin)
        throw ConfigError("not a number: '" + buf + "'");

    std::string_view suffix = trim(std::string_view(end));
    if (suffix.empty())
        return value;

    // "µ" arrives as the two-byte UTF-8 sequence 0xC2 0xB5.
    double scale = 1.0;
    std::string_view rest = suffix;
    if (rest.size() >= 2 && static_cast<unsigned char>(rest[0]) == 0xC2 &&
        static_cast<unsigned char>(rest[1]) == 0xB5) {
        scale = 1e-6;
        rest.remove_prefix(2);
    } else if (is_bare_unit(suffix)) {
        rest = {};
    } else {
        switch (suffix.front()) {
            case 'p': scale = 1e-12; break;
            case 'n': scale = 1e-9; break;
            case 'u': scale = 1e-6; break;
            case 'm': scale = 1e-3; break;
            case 'k': scale = 1e3; break;
            case 'M': scale = 1e6; break;
            case 'G': scale = 1e9; break;
            default:
                throw ConfigError("unrecognized unit suffix '" + std::string(suffix) + "'");
        }
        rest.remove_prefix(1);
    }
    if (!rest.empty() && !is_bare_unit(rest))
        throw ConfigError("unrecognized unit suffix '" + std::string(suffix) + "'");
    return value * scale;
}

namespace {

std::vector<double> parse_level_list(std::string_view text) {
    std::vector<double> out;
    std::string item;
    std::string buf(text);
    std::stringstream ss(buf);
    while (std::getline(ss, item, ','))
        out.push_back(parse_quantity(item));
    if (out.empty())
        throw ConfigError("empty level list");
    return out;
}

std::string format_levels(const std::vector<double>& lv) {
    std::string out;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (i) out += ',';
        char tmp[32];
        std::snprintf(tmp, sizeof tmp, "%.17g", lv[i]);
        out += tmp;
    }
    return out;
}

} // namespace

void set_param(ParamBundle& b, std::string_view key, double value) {
    if (const auto* e = find_param(key)) {
        e->set(b, value);
        return;
    }
    if (const auto* e = find_derived(key)) {
        e->set(b, value);
        return;
    }
    throw ConfigError("unknown parameter '" + std::string(key) + "'");
}

double get_param(const ParamBundle& b, std::string_view key) {
    if (const auto* e = find_param(key))
        return e->get(b);
    throw ConfigError("unknown parameter '" + std::string(key) + "'");
}

bool is_known_param(std::string_view key) {
    return find_param(key) != nullptr || find_derived(key) != nullptr;
}

std::vector<std::string> param_keys() {
    std::vector<std::string> keys;
    keys.reserve(param_table.size());
    for (const auto& e : param_table)
        keys.emplace_back(e.key);
    return keys;
}

ParamBundle load_config(std::string_view text) {
    return apply_config(defaults(), text);
}

ParamBundle apply_config(const ParamBundle& base, std::string_view text) {
    ParamBundle b = base;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'",
                              lineno);
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": missing key", lineno);

        try {
            if (key == "ligand.N_m_levels") {
                b.ligand.N_m_levels = parse_level_list(value);
            } else {
                if (!is_known_param(key))
                    throw ConfigError("unknown key '" + std::string(key) + "'");
                set_param(b, key, parse_quantity(value));
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }

    auto violations = validate(b);
    if (!violations.empty()) {
        std::string msg = "config failed validation:";
        for (const auto& v : violations)
            msg += "\n  " + v.field + ": " + v.message;
        throw ConfigError(msg);
    }
    return b;
}

std::string serialize(const ParamBundle& b) {
    std::string out;
    char tmp[64];
    for (const auto& e : param_table) {
        std::snprintf(tmp, sizeof tmp, "%.17g", e.get(b));
        out += e.key;
        out += " = ";
        out += tmp;
        out += '\n';
    }
    if (!b.ligand.N_m_levels.empty())
        out += "ligand.N_m_levels = " + format_levels(b.ligand.N_m_levels) + "\n";
    return out;
}

std::uint64_t config_hash(const ParamBundle& b) {
    std::string s = serialize(b);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace finlink
