#pragma once

// Differential realization of the complex rank-1 algebra
//
//   [J0, J+-] = +-J+-,   [J+, J-] = -2 J0,
//
//   J0  = -i d/dphi,
//   J+- = e^{+-i phi} [ +-d/dx + (i d/dphi -+ 1/2) F(x) + G(x) ],
//
// with F' = 1 - F^2 and G' = -F G.  Three solution classes:
//
//   I   (Scarf II):          F = tanh tau,  G = b sech tau
//   II  (gen. Poschl-Teller): F = coth tau,  G = b cosech tau
//   III (Morse):             F = +-1,       G = b e^{-+x}
//
// where tau = x - c - i gamma and b is complex.  Eigenfunctions live on a
// grid in x; the phi factor e^{i m phi} is carried exactly as the sector
// label of a GridFunction, so J0 and the (i d/dphi) terms act algebraically
// while d/dx uses 2nd-order stencils.

#include <complex>

#include "sl2c/errors.hpp"
#include "sl2c/grid.hpp"

namespace sl2c {

enum class PotentialClass { scarf2, poschl_teller, morse };

// Which exponential the Morse-class realization uses: e^{-x} pairs with
// F = +1 and e^{+x} with F = -1 (forced by G' = -FG).
enum class MorseSign { decaying, growing };

struct ClassParams {
    PotentialClass cls = PotentialClass::scarf2;
    Complex b{0.0, 0.0};
    double c = 0.0;       // real coordinate shift (classes I, II)
    double gamma = 0.0;   // imaginary coordinate rotation, in [-pi/4, pi/4)
    MorseSign sign = MorseSign::decaying;
    double singular_eps = 1e-6;  // class II, gamma = 0 pole guard

    void validate() const;
};

// Representation label: weight m, lowest weight k = m - n.
struct AlgebraLabel {
    Complex m;
    int n = 0;

    Complex k() const { return m - static_cast<double>(n); }
    bool regular() const { return m.real() - n > 0.5; }
};

// F, G and their x-derivatives at one point.
struct FGValue {
    Complex F, dF, G, dG;
};

FGValue eval_fg(const ClassParams& params, double x);

// W = (m - 1/2) F - G, and its analytic x-derivative via the F-G identities.
Complex superpotential(Complex m, const ClassParams& params, double x);
Complex superpotential_deriv(Complex m, const ClassParams& params, double x);

enum class Generator { J0, Jplus, Jminus };

// Applies one generator.  J0 scales by the sector label; J+- combine the
// x-derivative with the F, G terms and shift the sector by +-1.
GridFunction apply_generator(Generator gen, const GridFunction& psi,
                             const ClassParams& params);

// J^2 = J0^2 - J0 - J+ J-  (lowering form)  or  J0^2 + J0 - J- J+
// (raising form).  The two agree to stencil accuracy.
enum class CasimirForm { lowering, raising };

GridFunction apply_casimir(const GridFunction& psi, const ClassParams& params,
                           CasimirForm form = CasimirForm::lowering);

// Lowest state of the weight-m tower, from J- psi0 = 0, i.e.
// psi0 = exp(-int W dx), integrated from the grid midpoint and rescaled to
// max modulus 1.  Requires Re m > 1/2 (and Re b > 0 for the Morse class).
GridFunction ground_state(Complex m, const ClassParams& params,
                          const GridSpec& grid);

// One rung up the tower: psi^{(m)}_n from J+ psi^{(m-1)}_{n-1}, rescaled to
// max modulus 1.  The input carries sector m-1; the result carries m.
GridFunction ladder_up(const GridFunction& psi_prev, const ClassParams& params);

}  // namespace sl2c
