#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finlink/params.hpp"

namespace finlink {

// Parse or validation failure while reading a config document or --set value.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string msg, int line = 0)
        : std::runtime_error(std::move(msg)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Numeric literal with an optional SI prefix / unit suffix.
// "2e-9", "2nm", "10mm", "50mV", "300K", "2um", "2µm" are all accepted;
// bare unit letters (m, V, s, K, A, F, Hz, mol) carry no scaling.
double parse_quantity(std::string_view text);

// Flat "key = value" document with '#' comments and dotted section prefixes
// (channel., device., ligand., band.). Unspecified keys fall back to
// defaults(); the returned bundle always passes validate().
ParamBundle load_config(std::string_view text);

// Same document format applied over an arbitrary base (used for presets).
ParamBundle apply_config(const ParamBundle& base, std::string_view text);

// Canonical key=value form, SI units, 17 significant digits. Reparsing the
// output reproduces the bundle exactly.
std::string serialize(const ParamBundle& b);

// Dotted-path access used by both the config reader and the sweep runner.
// Derived keys (channel.eps_r, device.eps_ox_rel, device.eps_SiNW_rel) and
// the alias channel.d are settable but serialize under their canonical form.
void set_param(ParamBundle& b, std::string_view key, double value);
double get_param(const ParamBundle& b, std::string_view key);
bool is_known_param(std::string_view key);
std::vector<std::string> param_keys(); // canonical scalar keys, serialize order

// FNV-1a over the canonical serialization; emitted in CSV metadata.
std::uint64_t config_hash(const ParamBundle& b);

} // namespace finlink
