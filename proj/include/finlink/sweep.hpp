#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finlink/params.hpp"

namespace finlink {

enum class Metric { snr_db, sep, mu_I, psd, response };

Metric metric_from_name(std::string_view name);
const char* metric_name(Metric m);

// One named experiment: sweep a dotted parameter over explicit or generated
// values and tabulate a metric.
struct SweepSpec {
    std::string variable;          // dotted parameter path
    std::vector<double> values;    // ordered, nonempty
    Metric metric = Metric::snr_db;
    int M = 2;                     // alphabet for sep
    double N_m_probe = default_probe_ligands; // release count for snr_db/mu_I
    double tau_p = 0;              // passage duration diagnostic; 0 = not supplied
    std::uint64_t seed = 1;        // recorded in metadata
};

std::vector<double> make_values(double start, double stop, int count, bool log_spaced);

// Pre-formatted table; values are kept as their exact emitted strings so that
// CSV round-trips compare equal.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata; // '#' comments
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// One row per sweep value with diagnostics; rows with an invalid operating
// region are flagged, never dropped. Throws ConfigError for unknown variables
// and std::domain_error for metric/parameter incompatibility or invalid
// swept bundles.
Table run_sweep(const SweepSpec& spec, const ParamBundle& base);

// RFC-4180-style CSV with leading '#' metadata comments; returns bytes written.
std::size_t emit_csv(const Table& t, std::ostream& out);
std::string csv_string(const Table& t);
Table parse_csv(std::string_view text);

// Named parameter presets: "table1" (defaults) and "physiological"
// (t_s = 5e-7 m, c_ion = 150 mol/m^3). Throws ConfigError for unknown names.
ParamBundle preset(std::string_view name);
std::vector<std::string> preset_names();

// 17-significant-digit formatting used for all emitted numbers.
std::string fmt17(double v);

} // namespace finlink
