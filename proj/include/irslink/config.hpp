#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irslink/sim.hpp"

namespace irslink {

inline constexpr int kCsvFormatVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 1337;

/// Parse a JSON configuration. Every key is optional and falls back to the
/// built-in defaults; unknown keys are a hard error naming the offending
/// field path. An empty document gives default_config().
SimulationConfig parse_config(const std::string& json_text);

/// Read and parse a configuration file. An empty file gives the defaults.
SimulationConfig load_config(const std::string& path);

struct RunManifest {
    std::string subcommand;
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = kDefaultSeed;
};

/// One value formatted with 9 significant digits; infinities as "inf"/"-inf".
std::string format_value(double v);

/// Write one sweep as CSV: a format/seed comment line, a column header and
/// one row per record. Byte-identical across reruns of the same inputs.
void write_sweep_csv(const std::string& path, const std::string& x_name,
                     const std::vector<DesignMethod>& methods,
                     const std::vector<SweepRecord>& records, const RunManifest& manifest);

}  // namespace irslink
