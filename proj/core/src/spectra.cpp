#include "sl2c/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace sl2c {

namespace {

const Complex kI(0.0, 1.0);

Complex level_energy(Complex m, int n) {
    const Complex z = m - static_cast<double>(n) - 0.5;
    return -z * z;
}

bool level_regular(Complex m, int n) { return n < m.real() - 0.5; }

void sort_entries(std::vector<Level>& entries) {
    std::sort(entries.begin(), entries.end(), [](const Level& a, const Level& b) {
        if (a.series != b.series) return a.series < b.series;
        return a.n < b.n;
    });
}

// Appends n = 0 .. max_levels-1 of one series.
void append_series(std::vector<Level>& out, Complex m, Series s, int max_levels) {
    for (int n = 0; n < max_levels; ++n)
        out.push_back({n, s, level_energy(m, n), level_regular(m, n)});
}

void check_two_strength(double V1, double V2, double v1_floor, const char* name) {
    if (!(V1 > v1_floor))
        throw InvalidStrengths(std::string(name) + ": V1 out of range");
    if (V2 == 0.0)
        throw InvalidStrengths(std::string(name) + ": V2 must be nonzero");
}

// Shared series construction for the two families with critical strength
// q = V1 + 1/4: two real branches below, a merged branch at, a
// conjugate pair of branches above |V2| = q.
SpectrumResult two_branch_series(double q, double abs_v2, int max_levels) {
    if (max_levels < 1)
        throw InvalidArgument("series: max_levels must be >= 1");
    SpectrumResult res;
    res.critical_strength = q;
    const bool at_critical = std::abs(abs_v2 - q) < 1e-12;
    if (at_critical) {
        const double mc = 0.5 * std::sqrt(2.0 * q);
        append_series(res.entries, Complex(mc, 0.0), Series::single, max_levels);
    } else if (abs_v2 < q) {
        const double sp = std::sqrt(q + abs_v2), sm = std::sqrt(q - abs_v2);
        append_series(res.entries, Complex(0.5 * (sp + sm), 0.0), Series::plus,
                      max_levels);
        append_series(res.entries, Complex(0.5 * (sp - sm), 0.0), Series::minus,
                      max_levels);
    } else {
        const double re = 0.5 * std::sqrt(abs_v2 + q);
        const double im = 0.5 * std::sqrt(abs_v2 - q);
        append_series(res.entries, Complex(re, im), Series::plus, max_levels);
        append_series(res.entries, Complex(re, -im), Series::minus, max_levels);
    }
    sort_entries(res.entries);
    res.classification = classify_levels(res.entries, at_critical);
    return res;
}

}  // namespace

std::vector<Level> algebraic_spectrum(Complex m, int max_levels) {
    if (max_levels < 1)
        throw InvalidArgument("algebraic_spectrum: max_levels must be >= 1");
    std::vector<Level> out;
    out.reserve(max_levels);
    append_series(out, m, Series::single, max_levels);
    return out;
}

SpectrumClass classify_levels(const std::vector<Level>& entries,
                              bool at_critical) {
    std::vector<Complex> reg;
    for (const auto& e : entries)
        if (e.regular) reg.push_back(e.energy);
    if (reg.empty()) return SpectrumClass::Empty;
    if (at_critical) return SpectrumClass::Critical;

    const double tol = 1e-10;
    bool all_real = true;
    for (const auto& z : reg)
        if (std::abs(z.imag()) >= tol) all_real = false;
    if (all_real) return SpectrumClass::AllReal;

    // Conjugation closure of the regular multiset.
    std::vector<bool> used(reg.size(), false);
    bool closed = true;
    for (std::size_t i = 0; i < reg.size() && closed; ++i) {
        if (used[i]) continue;
        const Complex want = std::conj(reg[i]);
        bool found = false;
        for (std::size_t j = 0; j < reg.size(); ++j) {
            if (j == i || used[j]) continue;
            if (std::abs(reg[j] - want) < tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            if (std::abs(reg[i].imag()) < tol)
                used[i] = true;  // self-conjugate
            else
                closed = false;
        }
    }
    return closed ? SpectrumClass::ConjugatePairs : SpectrumClass::GenuinelyComplex;
}

// ---------------------------------------------------------------------------
// Scarf II

InversionResult invert_scarf(double V1, double V2) {
    check_two_strength(V1, V2, 0.0, "invert_scarf");
    const double q = V1 + 0.25;
    const Complex s1 = std::sqrt(Complex(q + V2, 0.0));
    const Complex s2 = std::sqrt(Complex(q - V2, 0.0));

    InversionResult res;
    res.solutions.push_back(
        {0.5 * (s1 + s2), 0.5 * kI * (s1 - s2), false});
    res.solutions.push_back(
        {0.5 * (s1 - s2), 0.5 * kI * (s1 + s2), false});

    double worst = 0.0;
    for (auto& sol : res.solutions) {
        // (m, b) -> (-m, -b) leaves the defining equations invariant; keep
        // the Re m >= 0 representative (matters for V2 < 0).
        if (sol.m.real() < 0.0 ||
            (sol.m.real() == 0.0 && sol.m.imag() < 0.0)) {
            sol.m = -sol.m;
            sol.b = -sol.b;
        }
        sol.regular = sol.m.real() > 0.5;
        const double mr = sol.m.real(), mi = sol.m.imag();
        const double br = sol.b.real(), bi = sol.b.imag();
        const double eq1 =
            br * br - bi * bi - mr * mr + mi * mi + 0.25 + V1;
        const double eq2 = br * bi - mr * mi;
        const double eq3 = mr * br - mi * bi;
        const double eq4 = 2.0 * (mr * bi + mi * br) - V2;
        worst = std::max({worst, std::abs(eq1), std::abs(eq2), std::abs(eq3),
                          std::abs(eq4)});
    }
    res.residual = worst;
    return res;
}

SpectrumResult scarf_series(double V1, double V2, int max_levels) {
    check_two_strength(V1, V2, 0.0, "scarf_series");
    return two_branch_series(V1 + 0.25, std::abs(V2), max_levels);
}

// ---------------------------------------------------------------------------
// Shifted Poschl-Teller

InversionResult invert_pt2_labels(double V1, double V2) {
    check_two_strength(V1, V2, -0.25, "invert_pt2");
    const double q = V1 + 0.25;
    const Complex s1 = std::sqrt(Complex(q + V2, 0.0));
    const Complex s2 = std::sqrt(Complex(q - V2, 0.0));

    InversionResult res;
    res.solutions.push_back({0.5 * (s1 + s2), 0.5 * (s1 - s2), false});
    res.solutions.push_back({0.5 * (s1 - s2), 0.5 * (s1 + s2), false});

    double worst = 0.0;
    for (auto& sol : res.solutions) {
        // (m, b) -> (-m, -b) leaves the defining equations invariant; pick
        // the representative with Re m >= 0.
        if (sol.m.real() < 0.0 ||
            (sol.m.real() == 0.0 && sol.m.imag() < 0.0)) {
            sol.m = -sol.m;
            sol.b = -sol.b;
        }
        sol.regular = sol.m.real() > 0.5;
        const Complex eq1 = sol.b * sol.b + sol.m * sol.m - 0.25 - V1;
        const Complex eq2 = 2.0 * sol.m * sol.b - V2;
        worst = std::max({worst, std::abs(eq1), std::abs(eq2)});
    }
    res.residual = worst;
    return res;
}

SpectrumResult invert_pt2(double V1, double V2, int max_levels) {
    check_two_strength(V1, V2, -0.25, "invert_pt2");
    return two_branch_series(V1 + 0.25, std::abs(V2), max_levels);
}

// ---------------------------------------------------------------------------
// Morse

InversionResult invert_morse(Complex V1, Complex V2) {
    if (V1.imag() == 0.0)
        throw V1IZero("invert_morse: Im V1 must be nonzero");
    const double delta = std::abs(V1);
    const double nu = V1.imag() > 0.0 ? 1.0 : -1.0;
    const Complex b(std::sqrt(0.5 * (V1.real() + delta)),
                    nu * std::sqrt(0.5 * (-V1.real() + delta)));
    const Complex m = V2 / (2.0 * b);

    InversionResult res;
    res.solutions.push_back({m, b, m.real() > 0.5});
    res.residual = std::abs(b * b - V1) + std::abs(2.0 * m * b - V2);
    return res;
}

SpectrumResult morse_series(double V1R, double V1I, double V2R, double V2I,
                            int max_levels) {
    if (max_levels < 1)
        throw InvalidArgument("morse_series: max_levels must be >= 1");
    if (V1I == 0.0)
        throw V1IZero("morse_series: V1I must be nonzero");

    const double delta = std::hypot(V1R, V1I);
    const double nu = V1I > 0.0 ? 1.0 : -1.0;
    const double sp = std::sqrt(V1R + delta);   // > 0 since V1I != 0
    const double sm = std::sqrt(-V1R + delta);  // > 0 since V1I != 0
    const double sqrt2 = std::sqrt(2.0);

    // Reality condition: V2I = nu (sm / sp) V2R, to relative tolerance.
    const double target = nu * (sm / sp) * V2R;
    const bool real_case =
        std::abs(V2I - target) <=
        1e-10 * std::max({1.0, std::abs(V2I), std::abs(target)});

    SpectrumResult res;
    if (real_case) {
        const double coeff = V2R * sm / (sqrt2 * std::abs(V1I));
        append_series(res.entries, Complex(coeff, 0.0), Series::single,
                      max_levels);
    } else {
        const Complex m = (Complex(sp, -nu * sm) * Complex(V2R, V2I)) /
                          (2.0 * sqrt2 * delta);
        append_series(res.entries, m, Series::single, max_levels);
    }
    sort_entries(res.entries);
    res.classification = classify_levels(res.entries);
    return res;
}

SpectrumResult morse_parametrized(double A, double B, double gamma,
                                  double delta, int max_levels) {
    if (max_levels < 1)
        throw InvalidArgument("morse_parametrized: max_levels must be >= 1");
    if (!(A > 0.0))
        throw InvalidStrengths("morse_parametrized: A must be > 0");
    if (B == 0.0)
        throw InvalidStrengths("morse_parametrized: B must be nonzero");

    const Complex C =
        Complex((gamma - 1.0) * A, (delta - 1.0) * B) / (2.0 * Complex(A, B));

    SpectrumResult res;
    for (int n = 0; n < max_levels; ++n) {
        const Complex z = C - static_cast<double>(n);
        res.entries.push_back({n, Series::single, -z * z, n < C.real()});
    }
    res.classification = classify_levels(res.entries);
    return res;
}

}  // namespace sl2c
