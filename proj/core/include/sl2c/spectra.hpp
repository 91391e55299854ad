#pragma once

// Spectrum-level results: the algebraic eigenvalue formula
// E_n = -(m - n - 1/2)^2, regularity counting (n < Re m - 1/2), the inverse
// maps from physical strengths to algebra labels (m, b), and the explicit
// eigenvalue series for the Scarf II, shifted Poschl-Teller, and Morse
// families, including the real <-> complex transition at |V2| = V1 + 1/4.

#include <complex>
#include <optional>
#include <vector>

#include "sl2c/errors.hpp"
#include "sl2c/grid.hpp"

namespace sl2c {

enum class Series { plus, minus, single };

enum class SpectrumClass {
    AllReal,
    Critical,
    ConjugatePairs,
    GenuinelyComplex,
    Empty,
};

struct Level {
    int n = 0;
    Series series = Series::single;
    Complex energy{0.0, 0.0};
    bool regular = false;
};

struct SpectrumResult {
    std::vector<Level> entries;  // sorted by (series, n)
    SpectrumClass classification = SpectrumClass::Empty;
    std::optional<double> critical_strength;
};

struct LabelSolution {
    Complex m;
    Complex b;
    bool regular = false;
};

struct InversionResult {
    std::vector<LabelSolution> solutions;
    double residual = 0.0;  // max modulus of the defining equations
};

// E_n = -(m - n - 1/2)^2 for n = 0 .. max_levels-1, regular iff
// n < Re m - 1/2 (strict; boundary hits are non-regular).
std::vector<Level> algebraic_spectrum(Complex m, int max_levels);

// Classification over the regular subset: Empty if none; Critical wins at
// the critical strength; AllReal if every regular energy is real to 1e-10;
// otherwise ConjugatePairs or GenuinelyComplex by conjugation closure of
// the regular multiset (tolerance 1e-10).
SpectrumClass classify_levels(const std::vector<Level>& entries,
                              bool at_critical = false);

// ---------------------------------------------------------------------------
// Scarf II:  -V1 sech^2 x - i V2 sech x tanh x.
//
// Matching to class I gives m^2 - b^2 = V1 + 1/4 =: q and mb = i V2 / 2,
// solved by m+- = [sqrt(q+V2) +- sqrt(q-V2)]/2, b+- = i[sqrt(q+V2) -+
// sqrt(q-V2)]/2 (principal branches).  Both branches are returned and each
// is back-substituted into the four real quadratic equations.
InversionResult invert_scarf(double V1, double V2);

// The explicit series: two real series below |V2| = V1 + 1/4, a merged
// series at the critical strength, complex-conjugate pairs above.
SpectrumResult scarf_series(double V1, double V2, int max_levels);

// ---------------------------------------------------------------------------
// Shifted Poschl-Teller:  V1 cosech^2 tau - V2 cosech tau coth tau.
//
// Matching to class II gives (m +- b)^2 = V1 + 1/4 +- V2; same critical
// strength |V2| = V1 + 1/4.  Solutions are canonicalized to Re m >= 0 via
// the joint sign flip (m, b) -> (-m, -b), which the defining equations
// cannot see.
InversionResult invert_pt2_labels(double V1, double V2);

SpectrumResult invert_pt2(double V1, double V2, int max_levels);

// ---------------------------------------------------------------------------
// Morse:  V1 e^{-2x} - V2 e^{-x} with complex V1, V2.
//
// b = sqrt(V1) with Re b > 0 (possible only when Im V1 != 0, hence the
// V1IZero error), m = V2 / (2b).  Regular iff Re m > 1/2.
InversionResult invert_morse(Complex V1, Complex V2);

// Eigenvalue series from the real strengths (V1R, V1I, V2R, V2I): a single
// real series exactly on the reality condition
//   V2I = nu sqrt(-V1R + Delta) / sqrt(V1R + Delta) * V2R,
// Delta = |V1|, nu = sign(V1I); otherwise genuinely complex levels that do
// not form conjugate pairs.
SpectrumResult morse_series(double V1R, double V1I, double V2R, double V2I,
                            int max_levels);

// (A, B, gamma, delta) parametrization: E_n = -(C - n)^2 with
// C = [(gamma-1)A + i(delta-1)B] / [2(A+iB)]; real iff delta = gamma;
// regular set nonempty iff (gamma-1)A^2 + (delta-1)B^2 > 0.
SpectrumResult morse_parametrized(double A, double B, double gamma,
                                  double delta, int max_levels);

}  // namespace sl2c
