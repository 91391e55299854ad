#pragma once

// Command-line front end: spectrum / invert / scan / verify over the four
// physical potential families, emitting plot-ready JSON or CSV.

#include <optional>
#include <string>

#include "json.hpp"
#include "sl2c/numerics.hpp"
#include "sl2c/potentials.hpp"
#include "sl2c/spectra.hpp"

namespace sl2c::cli {

enum class Command { spectrum, invert, scan, verify };
enum class OutputFormat { json, csv };

struct JobConfig {
    Command command = Command::spectrum;
    PhysicalStrengths strengths = ScarfPT{1.0, 1.0};
    std::optional<GridSpec> grid;  // default depends on the family
    int levels = 8;
    double tol = 1e-3;             // verify match tolerance
    double v2_lo = 0.0, v2_hi = 0.0;  // scan bracket
    std::string out_path;          // empty: write to stdout
    OutputFormat format = OutputFormat::json;
    bool reproducible = false;     // suppress the generated_at field
};

// Executes one job; returns the process exit code (0 ok, 2 validation
// error, 3 not-bracketed / no-convergence) and writes the output file.
int run(const JobConfig& config);

// Full CLI: parse argv into a JobConfig and run it.
int main_with_args(int argc, const char* const* argv);

// JSON serialization (schema in README).  Spectrum results round-trip
// exactly.
nlohmann::ordered_json to_json(const SpectrumResult& result);
nlohmann::ordered_json to_json(const InversionResult& result);
nlohmann::ordered_json to_json(const MatchReport& report);
nlohmann::ordered_json to_json(const ScanResult& scan);
SpectrumResult spectrum_from_json(const nlohmann::ordered_json& j);

std::string classification_name(SpectrumClass c);
std::string scan_csv(const ScanResult& scan);

}  // namespace sl2c::cli
