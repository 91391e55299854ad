#include "sl2c/algebra.hpp"

#include <cmath>

namespace sl2c {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex tau_of(const ClassParams& p, double x) {
    return Complex(x - p.c, -p.gamma);
}

}  // namespace

void ClassParams::validate() const {
    if (!(gamma >= -kPi / 4.0 && gamma < kPi / 4.0))
        throw InvalidArgument("ClassParams: gamma must lie in [-pi/4, pi/4)");
    if (singular_eps <= 0.0)
        throw InvalidArgument("ClassParams: singular_eps must be positive");
}

FGValue eval_fg(const ClassParams& params, double x) {
    params.validate();
    FGValue v;
    switch (params.cls) {
        case PotentialClass::scarf2: {
            const Complex tau = tau_of(params, x);
            const Complex F = std::tanh(tau);
            const Complex sech = 1.0 / std::cosh(tau);
            v.F = F;
            v.dF = 1.0 - F * F;  // = sech^2 tau
            v.G = params.b * sech;
            v.dG = -F * v.G;
            break;
        }
        case PotentialClass::poschl_teller: {
            if (params.gamma == 0.0 && std::abs(x - params.c) < params.singular_eps)
                throw SingularPoint("eval_fg: class II pole at x = c with gamma = 0");
            const Complex tau = tau_of(params, x);
            const Complex sh = std::sinh(tau);
            const Complex F = std::cosh(tau) / sh;
            v.F = F;
            v.dF = 1.0 - F * F;  // = -cosech^2 tau
            v.G = params.b / sh;
            v.dG = -F * v.G;
            break;
        }
        case PotentialClass::morse: {
            const double s = params.sign == MorseSign::decaying ? 1.0 : -1.0;
            v.F = Complex(s, 0.0);
            v.dF = Complex(0.0, 0.0);
            v.G = params.b * std::exp(-s * x);
            v.dG = -v.F * v.G;
            break;
        }
    }
    return v;
}

Complex superpotential(Complex m, const ClassParams& params, double x) {
    const FGValue fg = eval_fg(params, x);
    return (m - 0.5) * fg.F - fg.G;
}

Complex superpotential_deriv(Complex m, const ClassParams& params, double x) {
    const FGValue fg = eval_fg(params, x);
    return (m - 0.5) * fg.dF - fg.dG;
}

std::vector<Complex> derivative(const std::vector<Complex>& f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 5) throw InvalidArgument("derivative: need at least 5 samples");
    std::vector<Complex> d(n);
    const double inv2h = 1.0 / (2.0 * h);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
    for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2h;
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
    return d;
}

GridFunction apply_generator(Generator gen, const GridFunction& psi,
                             const ClassParams& params) {
    if (psi.size() < 5)
        throw InvalidArgument("apply_generator: need at least 5 samples");

    GridFunction out = psi;
    if (gen == Generator::J0) {
        for (auto& v : out.values) v *= psi.sector;
        return out;
    }

    // J+- = e^{+-i phi} [ +-d/dx + (i d/dphi -+ 1/2) F + G ]; acting on the
    // e^{i m phi} sector, i d/dphi contributes -m with m the *incoming*
    // sector label.
    const double s = gen == Generator::Jplus ? 1.0 : -1.0;
    const Complex m = psi.sector;
    const std::vector<Complex> dpsi = derivative(psi.values, psi.dx);
    for (int i = 0; i < psi.size(); ++i) {
        const FGValue fg = eval_fg(params, psi.x(i));
        out.values[i] =
            s * dpsi[i] + ((-m - s * 0.5) * fg.F + fg.G) * psi.values[i];
    }
    out.sector = m + s;
    return out;
}

GridFunction apply_casimir(const GridFunction& psi, const ClassParams& params,
                           CasimirForm form) {
    const Complex m = psi.sector;
    GridFunction out;
    if (form == CasimirForm::lowering) {
        // J0^2 - J0 - J+ J-
        out = apply_generator(Generator::Jplus,
                              apply_generator(Generator::Jminus, psi, params),
                              params);
        for (int i = 0; i < psi.size(); ++i)
            out.values[i] = (m * m - m) * psi.values[i] - out.values[i];
    } else {
        // J0^2 + J0 - J- J+
        out = apply_generator(Generator::Jminus,
                              apply_generator(Generator::Jplus, psi, params),
                              params);
        for (int i = 0; i < psi.size(); ++i)
            out.values[i] = (m * m + m) * psi.values[i] - out.values[i];
    }
    out.sector = m;
    return out;
}

GridFunction ground_state(Complex m, const ClassParams& params,
                          const GridSpec& grid) {
    params.validate();
    grid.validate();
    if (!(m.real() > 0.5))
        throw NotRegular("ground_state: requires Re m > 1/2");
    if (params.cls == PotentialClass::morse && !(params.b.real() > 0.0))
        throw NotRegular("ground_state: Morse class requires Re b > 0");

    const int n = grid.n_points;
    const double h = grid.h();
    std::vector<Complex> w(n), dw(n);
    for (int i = 0; i < n; ++i) {
        w[i] = superpotential(m, params, grid.x(i));
        dw[i] = superpotential_deriv(m, params, grid.x(i));
    }

    // S(x) = int_{x_mid}^{x} W dt by cumulative trapezoid with the h^2/12
    // Euler-Maclaurin endpoint correction (W' is analytic, so it is free).
    const int mid = (n - 1) / 2;
    std::vector<Complex> S(n, Complex(0.0, 0.0));
    for (int i = mid + 1; i < n; ++i)
        S[i] = S[i - 1] + 0.5 * h * (w[i - 1] + w[i]);
    for (int i = mid - 1; i >= 0; --i)
        S[i] = S[i + 1] - 0.5 * h * (w[i] + w[i + 1]);
    const double corr = h * h / 12.0;
    for (int i = 0; i < n; ++i) S[i] -= corr * (dw[i] - dw[mid]);

    GridFunction psi = GridFunction::on(grid, m);
    for (int i = 0; i < n; ++i) psi.values[i] = std::exp(-S[i]);
    const double scale = psi.max_abs();
    for (auto& v : psi.values) v /= scale;
    return psi;
}

GridFunction ladder_up(const GridFunction& psi_prev, const ClassParams& params) {
    GridFunction out = apply_generator(Generator::Jplus, psi_prev, params);
    const double scale = out.max_abs();
    if (scale > 0.0)
        for (auto& v : out.values) v /= scale;
    return out;
}

}  // namespace sl2c
