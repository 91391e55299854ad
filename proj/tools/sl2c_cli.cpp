#include "sl2c_cli.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace sl2c::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

using ojson = nlohmann::ordered_json;

ojson complex_json(Complex z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const ojson& j) {
    return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

std::string series_name(Series s) {
    switch (s) {
        case Series::plus: return "+";
        case Series::minus: return "-";
        case Series::single: return "single";
    }
    return "single";
}

Series series_from(const std::string& s) {
    if (s == "+") return Series::plus;
    if (s == "-") return Series::minus;
    if (s == "single") return Series::single;
    throw InvalidArgument("unknown series label: " + s);
}

std::string iso_utc_now() {
    char buf[32];
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_morse(const PhysicalStrengths& s) {
    return std::holds_alternative<MorseGeneral>(s) ||
           std::holds_alternative<MorseParametrized>(s);
}

GridSpec default_grid(const PhysicalStrengths& s) {
    // Morse gets an asymmetric box: hard exponential wall on the left,
    // slow decay on the right.
    if (is_morse(s)) return GridSpec{-6.0, 25.0, 3001};
    return GridSpec{-20.0, 20.0, 2001};
}

SpectrumResult compute_spectrum(const PhysicalStrengths& s, int levels) {
    return std::visit(
        [&](const auto& v) -> SpectrumResult {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ScarfPT>)
                return scarf_series(v.V1, v.V2, levels);
            else if constexpr (std::is_same_v<T, PoschlTellerPT>)
                return invert_pt2(v.V1, v.V2, levels);
            else if constexpr (std::is_same_v<T, MorseGeneral>)
                return morse_series(v.V1R, v.V1I, v.V2R, v.V2I, levels);
            else
                return morse_parametrized(v.A, v.B, v.gamma, v.delta, levels);
        },
        s);
}

InversionResult compute_inversion(const PhysicalStrengths& s) {
    return std::visit(
        [&](const auto& v) -> InversionResult {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ScarfPT>)
                return invert_scarf(v.V1, v.V2);
            else if constexpr (std::is_same_v<T, PoschlTellerPT>)
                return invert_pt2_labels(v.V1, v.V2);
            else if constexpr (std::is_same_v<T, MorseGeneral>)
                return invert_morse(Complex(v.V1R, v.V1I), Complex(v.V2R, v.V2I));
            else {
                const Complex b(v.A, v.B);
                const Complex m = morse_parametrized_C(v) + 0.5;
                InversionResult res;
                res.solutions.push_back({m, b, m.real() > 0.5});
                const Complex V1 = b * b;
                const Complex V2 = Complex((v.gamma) * v.A, (v.delta) * v.B);
                res.residual = std::abs(b * b - V1) + std::abs(2.0 * m * b - V2);
                return res;
            }
        },
        s);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

void stamp(ojson& j, const JobConfig& config) {
    if (!config.reproducible) j["generated_at"] = iso_utc_now();
}

int dispatch(const JobConfig& config) {
    if (config.format == OutputFormat::csv && config.command != Command::scan)
        throw InvalidArgument("csv output is only available for the scan command");

    switch (config.command) {
        case Command::spectrum: {
            validate(config.strengths);
            ojson j = to_json(compute_spectrum(config.strengths, config.levels));
            stamp(j, config);
            write_output(config.out_path, j.dump(2) + "\n");
            return 0;
        }
        case Command::invert: {
            validate(config.strengths);
            ojson j = to_json(compute_inversion(config.strengths));
            stamp(j, config);
            write_output(config.out_path, j.dump(2) + "\n");
            return 0;
        }
        case Command::verify: {
            validate(config.strengths);
            const GridSpec grid = config.grid.value_or(default_grid(config.strengths));
            const auto series = compute_spectrum(config.strengths, config.levels);
            const auto H = build_hamiltonian(build_physical(config.strengths), grid);
            const auto eigs = eigenvalues_dense(H);
            const auto report =
                match_spectra(series, eigs, config.tol, grid.h());
            ojson j = to_json(report);
            stamp(j, config);
            write_output(config.out_path, j.dump(2) + "\n");
            return 0;
        }
        case Command::scan: {
            ScanOptions opts;
            double V1 = 0.0;
            if (const auto* s = std::get_if<ScarfPT>(&config.strengths)) {
                opts.family = ScanFamily::scarf;
                V1 = s->V1;
            } else if (const auto* p = std::get_if<PoschlTellerPT>(&config.strengths)) {
                opts.family = ScanFamily::pt2;
                V1 = p->V1;
            } else {
                throw InvalidArgument("scan requires --scarf or --pt2");
            }
            const GridSpec grid = config.grid.value_or(GridSpec{-20.0, 20.0, 2001});
            const auto scan =
                scan_critical(V1, config.v2_lo, config.v2_hi, grid, opts);
            if (config.format == OutputFormat::csv) {
                write_output(config.out_path, scan_csv(scan));
            } else {
                ojson j = to_json(scan);
                stamp(j, config);
                write_output(config.out_path, j.dump(2) + "\n");
            }
            std::cout << "algebraic_critical=" << format_double(scan.algebraic_critical)
                      << " numeric_critical=" << format_double(scan.numeric_critical)
                      << "\n";
            return 0;
        }
    }
    return 0;
}

}  // namespace

std::string classification_name(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::AllReal: return "AllReal";
        case SpectrumClass::Critical: return "Critical";
        case SpectrumClass::ConjugatePairs: return "ConjugatePairs";
        case SpectrumClass::GenuinelyComplex: return "GenuinelyComplex";
        case SpectrumClass::Empty: return "Empty";
    }
    return "Empty";
}

namespace {
SpectrumClass classification_from(const std::string& s) {
    if (s == "AllReal") return SpectrumClass::AllReal;
    if (s == "Critical") return SpectrumClass::Critical;
    if (s == "ConjugatePairs") return SpectrumClass::ConjugatePairs;
    if (s == "GenuinelyComplex") return SpectrumClass::GenuinelyComplex;
    if (s == "Empty") return SpectrumClass::Empty;
    throw InvalidArgument("unknown classification: " + s);
}
}  // namespace

ojson to_json(const SpectrumResult& result) {
    ojson j;
    j["classification"] = classification_name(result.classification);
    if (result.critical_strength)
        j["critical_strength"] = *result.critical_strength;
    else
        j["critical_strength"] = nullptr;
    j["levels"] = ojson::array();
    for (const auto& level : result.entries) {
        j["levels"].push_back(ojson{{"series", series_name(level.series)},
                                    {"n", level.n},
                                    {"re", level.energy.real()},
                                    {"im", level.energy.imag()},
                                    {"regular", level.regular}});
    }
    return j;
}

SpectrumResult spectrum_from_json(const ojson& j) {
    SpectrumResult result;
    result.classification =
        classification_from(j.at("classification").get<std::string>());
    if (!j.at("critical_strength").is_null())
        result.critical_strength = j.at("critical_strength").get<double>();
    for (const auto& l : j.at("levels")) {
        Level level;
        level.series = series_from(l.at("series").get<std::string>());
        level.n = l.at("n").get<int>();
        level.energy = Complex(l.at("re").get<double>(), l.at("im").get<double>());
        level.regular = l.at("regular").get<bool>();
        result.entries.push_back(level);
    }
    return result;
}

ojson to_json(const InversionResult& result) {
    ojson j;
    j["solutions"] = ojson::array();
    for (const auto& s : result.solutions)
        j["solutions"].push_back(ojson{{"m", complex_json(s.m)},
                                       {"b", complex_json(s.b)},
                                       {"regular", s.regular}});
    j["residual"] = result.residual;
    return j;
}

ojson to_json(const MatchReport& report) {
    ojson j;
    j["pairs"] = ojson::array();
    for (const auto& p : report.pairs)
        j["pairs"].push_back(ojson{{"algebraic", complex_json(p.algebraic)},
                                   {"numeric", complex_json(p.numeric)},
                                   {"abs_error", p.abs_error},
                                   {"n", p.n}});
    j["unmatched_algebraic"] = ojson::array();
    for (const auto& z : report.unmatched_algebraic)
        j["unmatched_algebraic"].push_back(complex_json(z));
    j["unmatched_numeric_bound_candidates"] = ojson::array();
    for (const auto& z : report.unmatched_numeric_bound_candidates)
        j["unmatched_numeric_bound_candidates"].push_back(complex_json(z));
    j["h"] = report.h;
    j["converged"] = report.converged;
    return j;
}

ojson to_json(const ScanResult& scan) {
    ojson j;
    j["algebraic_critical"] = scan.algebraic_critical;
    j["numeric_critical"] = scan.numeric_critical;
    j["gap_curve"] = ojson::array();
    for (const auto& pt : scan.gap_curve) {
        ojson row{{"v2", pt.v2},
                  {"classification", classification_name(pt.algebraic_class)},
                  {"numeric_broken", pt.numeric_broken}};
        if (std::isnan(pt.gap))
            row["gap"] = nullptr;
        else
            row["gap"] = pt.gap;
        j["gap_curve"].push_back(row);
    }
    return j;
}

std::string scan_csv(const ScanResult& scan) {
    std::ostringstream out;
    out << "v2,gap,classification\n";
    for (const auto& pt : scan.gap_curve)
        out << format_double(pt.v2) << ',' << format_double(pt.gap) << ','
            << classification_name(pt.algebraic_class) << '\n';
    return out.str();
}

int run(const JobConfig& config) {
    try {
        return dispatch(config);
    } catch (const NotBracketed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_with_args(int argc, const char* const* argv) {
    CLI::App app{"sl(2,C) potential-algebra spectra with finite-difference "
                 "verification"};
    app.require_subcommand(1);

    struct Raw {
        bool scarf = false, pt2 = false, morse_general = false, morse_param = false;
        double v1 = 0, v2 = 0;
        double v1r = 0, v1i = 0, v2r = 0, v2i = 0;
        double a = 0, b = 0, gamma = kPi / 8, delta = 0;
        std::string grid, v2_range, out, format;
        int levels = 8;
        double tol = 1e-3;
        bool reproducible = false;
    } raw;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--scarf", raw.scarf, "Scarf II family (-V1 sech^2 - iV2 sech tanh)");
        sub->add_flag("--pt2", raw.pt2, "shifted Poschl-Teller family");
        sub->add_flag("--morse-general", raw.morse_general, "general complex Morse family");
        sub->add_flag("--morse-param", raw.morse_param, "(A,B,gamma,delta) Morse family");
        sub->add_option("--v1", raw.v1, "V1 strength (scarf/pt2)");
        sub->add_option("--v2", raw.v2, "V2 strength (scarf/pt2)");
        sub->add_option("--v1r", raw.v1r, "Re V1 (morse-general)");
        sub->add_option("--v1i", raw.v1i, "Im V1 (morse-general)");
        sub->add_option("--v2r", raw.v2r, "Re V2 (morse-general)");
        sub->add_option("--v2i", raw.v2i, "Im V2 (morse-general)");
        sub->add_option("--a", raw.a, "A (morse-param)");
        sub->add_option("--b", raw.b, "B (morse-param)");
        sub->add_option("--gamma", raw.gamma,
                        "gamma (morse-param, or the pt2 imaginary shift; default pi/8)");
        sub->add_option("--delta", raw.delta, "delta (morse-param)");
        sub->add_option("--grid", raw.grid, "grid as xmin:xmax:npoints");
        sub->add_option("--levels", raw.levels, "number of levels per series");
        sub->add_option("--tol", raw.tol, "matching tolerance (verify)");
        sub->add_option("--out", raw.out, "output file (default: stdout)");
        sub->add_option("--format", raw.format, "json or csv (csv: scan only)")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--reproducible", raw.reproducible,
                      "omit the generated_at timestamp");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "algebraic eigenvalue series");
    CLI::App* invert = app.add_subcommand("invert", "strengths -> algebra labels (m, b)");
    CLI::App* scan = app.add_subcommand("scan", "critical-strength scan over V2");
    CLI::App* verify = app.add_subcommand("verify",
                                          "match algebraic series against grid eigenvalues");
    for (CLI::App* sub : {spectrum, invert, scan, verify}) add_common(sub);
    scan->add_option("--v2-range", raw.v2_range, "scan bracket as lo:hi")->required();

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        JobConfig config;
        if (app.got_subcommand(spectrum)) config.command = Command::spectrum;
        if (app.got_subcommand(invert)) config.command = Command::invert;
        if (app.got_subcommand(scan)) config.command = Command::scan;
        if (app.got_subcommand(verify)) config.command = Command::verify;

        const int selected = int(raw.scarf) + int(raw.pt2) +
                             int(raw.morse_general) + int(raw.morse_param);
        if (selected != 1)
            throw InvalidArgument(
                "exactly one of --scarf, --pt2, --morse-general, --morse-param "
                "is required");
        // scan sweeps V2 itself; a placeholder keeps family validation
        // meaningful for the remaining fields
        const double v2_eff =
            config.command == Command::scan && raw.v2 == 0.0 ? 1.0 : raw.v2;
        if (raw.scarf)
            config.strengths = ScarfPT{raw.v1, v2_eff};
        else if (raw.pt2)
            config.strengths = PoschlTellerPT{raw.v1, v2_eff, raw.gamma, 0.0};
        else if (raw.morse_general)
            config.strengths = MorseGeneral{raw.v1r, raw.v1i, raw.v2r, raw.v2i};
        else
            config.strengths = MorseParametrized{raw.a, raw.b, raw.gamma, raw.delta};
        validate(config.strengths);

        if (!raw.grid.empty()) {
            GridSpec g{};
            if (std::sscanf(raw.grid.c_str(), "%lf:%lf:%d", &g.x_min, &g.x_max,
                            &g.n_points) != 3)
                throw InvalidArgument("--grid expects xmin:xmax:npoints");
            g.validate();
            config.grid = g;
        }
        if (config.command == Command::scan) {
            if (std::sscanf(raw.v2_range.c_str(), "%lf:%lf", &config.v2_lo,
                            &config.v2_hi) != 2)
                throw InvalidArgument("--v2-range expects lo:hi");
        }
        if (raw.levels < 1)
            throw InvalidArgument("--levels must be >= 1");
        config.levels = raw.levels;
        if (!(raw.tol > 0.0))
            throw InvalidArgument("--tol must be > 0");
        config.tol = raw.tol;
        config.out_path = raw.out;
        if (raw.format.empty())
            config.format = config.command == Command::scan ? OutputFormat::csv
                                                            : OutputFormat::json;
        else
            config.format =
                raw.format == "csv" ? OutputFormat::csv : OutputFormat::json;
        config.reproducible = raw.reproducible;
        return run(config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sl2c::cli
