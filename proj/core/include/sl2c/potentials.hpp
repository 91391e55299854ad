#pragma once

// Potential construction.  Two independent routes:
//
//   * algebra-side: V_m = (1/4 - m^2) F' + 2m G' + G^2 assembled from the
//     realization functions, or the per-class closed forms;
//   * strength-side: the physical families evaluated directly from their
//     real strengths, never through inverted labels.
//
// The strength-side route is the ground truth against which the numerics
// module verifies algebraic predictions.

#include <complex>
#include <functional>
#include <variant>

#include "sl2c/algebra.hpp"

namespace sl2c {

struct PotentialSpec {
    Complex m;
    ClassParams params;
};

// V_m = (1/4 - m^2) F' + 2m G' + G^2.
Complex eval_potential_generic(const PotentialSpec& spec, double x);

// Closed forms:
//   I:   (b^2 - m^2 + 1/4) sech^2 tau - 2mb sech tau tanh tau
//   II:  (b^2 + m^2 - 1/4) cosech^2 tau - 2mb cosech tau coth tau
//   III: b^2 e^{-+2x} -+ 2mb e^{-+x}
Complex eval_potential_class(const PotentialSpec& spec, double x);

// ---------------------------------------------------------------------------
// Physical strength families.

// V(x) = -V1 sech^2 x - i V2 sech x tanh x,   V1 > 0, V2 != 0.
struct ScarfPT {
    double V1;
    double V2;
};

// V(x) = V1 cosech^2 tau - V2 cosech tau coth tau, tau = x - c - i gamma,
// V1 > -1/4, V2 != 0, gamma != 0 (the complex shift keeps the pole off the
// real line, so the potential is defined on all of R).
struct PoschlTellerPT {
    double V1;
    double V2;
    double gamma = 0.39269908169872414;  // pi/8 default
    double c = 0.0;
};

// V(x) = (V1R + i V1I) e^{-2x} - (V2R + i V2I) e^{-x},   V1I != 0.
struct MorseGeneral {
    double V1R, V1I, V2R, V2I;
};

// V(x) = (A + iB)^2 e^{-2x} - (2C+1)(A + iB) e^{-x} with
// C = [(gamma-1)A + i(delta-1)B] / [2(A + iB)],   A > 0, B != 0.
struct MorseParametrized {
    double A, B, gamma, delta;
};

using PhysicalStrengths =
    std::variant<ScarfPT, PoschlTellerPT, MorseGeneral, MorseParametrized>;

// Throws InvalidStrengths when the family's constraints fail.
void validate(const PhysicalStrengths& strengths);

// Direct strength-space evaluation (independent of any label inversion).
std::function<Complex(double)> build_physical(const PhysicalStrengths& strengths);

// C label of the parametrized Morse family.
Complex morse_parametrized_C(const MorseParametrized& p);

}  // namespace sl2c
