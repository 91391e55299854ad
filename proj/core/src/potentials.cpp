#include "sl2c/potentials.hpp"

#include <cmath>

namespace sl2c {

Complex eval_potential_generic(const PotentialSpec& spec, double x) {
    const FGValue fg = eval_fg(spec.params, x);
    const Complex m = spec.m;
    return (0.25 - m * m) * fg.dF + 2.0 * m * fg.dG + fg.G * fg.G;
}

Complex eval_potential_class(const PotentialSpec& spec, double x) {
    const ClassParams& p = spec.params;
    p.validate();
    const Complex m = spec.m;
    const Complex b = p.b;
    switch (p.cls) {
        case PotentialClass::scarf2: {
            const Complex tau(x - p.c, -p.gamma);
            const Complex sech = 1.0 / std::cosh(tau);
            const Complex th = std::tanh(tau);
            return (b * b - m * m + 0.25) * sech * sech - 2.0 * m * b * sech * th;
        }
        case PotentialClass::poschl_teller: {
            if (p.gamma == 0.0 && std::abs(x - p.c) < p.singular_eps)
                throw SingularPoint("eval_potential_class: class II pole at x = c");
            const Complex tau(x - p.c, -p.gamma);
            const Complex csch = 1.0 / std::sinh(tau);
            const Complex cth = std::cosh(tau) * csch;
            return (b * b + m * m - 0.25) * csch * csch - 2.0 * m * b * csch * cth;
        }
        case PotentialClass::morse: {
            const double s = p.sign == MorseSign::decaying ? 1.0 : -1.0;
            const double e1 = std::exp(-s * x);
            return b * b * e1 * e1 - s * 2.0 * m * b * e1;
        }
    }
    return {};  // unreachable
}

void validate(const PhysicalStrengths& strengths) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScarfPT>) {
                if (!(s.V1 > 0.0))
                    throw InvalidStrengths("ScarfPT: V1 must be > 0");
                if (s.V2 == 0.0)
                    throw InvalidStrengths("ScarfPT: V2 must be nonzero");
            } else if constexpr (std::is_same_v<T, PoschlTellerPT>) {
                if (!(s.V1 > -0.25))
                    throw InvalidStrengths("PoschlTellerPT: V1 must be > -1/4");
                if (s.V2 == 0.0)
                    throw InvalidStrengths("PoschlTellerPT: V2 must be nonzero");
                if (s.gamma == 0.0)
                    throw InvalidStrengths("PoschlTellerPT: gamma must be nonzero");
            } else if constexpr (std::is_same_v<T, MorseGeneral>) {
                if (s.V1I == 0.0)
                    throw InvalidStrengths("MorseGeneral: V1I must be nonzero");
            } else {
                if (!(s.A > 0.0))
                    throw InvalidStrengths("MorseParametrized: A must be > 0");
                if (s.B == 0.0)
                    throw InvalidStrengths("MorseParametrized: B must be nonzero");
            }
        },
        strengths);
}

Complex morse_parametrized_C(const MorseParametrized& p) {
    const Complex ab(p.A, p.B);
    return Complex((p.gamma - 1.0) * p.A, (p.delta - 1.0) * p.B) / (2.0 * ab);
}

std::function<Complex(double)> build_physical(const PhysicalStrengths& strengths) {
    validate(strengths);
    return std::visit(
        [](const auto& s) -> std::function<Complex(double)> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScarfPT>) {
                return [s](double x) {
                    const double sech = 1.0 / std::cosh(x);
                    return Complex(-s.V1 * sech * sech,
                                   -s.V2 * sech * std::tanh(x));
                };
            } else if constexpr (std::is_same_v<T, PoschlTellerPT>) {
                return [s](double x) {
                    const Complex tau(x - s.c, -s.gamma);
                    const Complex csch = 1.0 / std::sinh(tau);
                    const Complex cth = std::cosh(tau) * csch;
                    return s.V1 * csch * csch - s.V2 * csch * cth;
                };
            } else if constexpr (std::is_same_v<T, MorseGeneral>) {
                return [s](double x) {
                    const double e1 = std::exp(-x);
                    return Complex(s.V1R, s.V1I) * (e1 * e1) -
                           Complex(s.V2R, s.V2I) * e1;
                };
            } else {
                const Complex ab(s.A, s.B);
                const Complex coeff2 = ab * ab;
                const Complex coeff1 = (2.0 * morse_parametrized_C(s) + 1.0) * ab;
                return [coeff2, coeff1](double x) {
                    const double e1 = std::exp(-x);
                    return coeff2 * (e1 * e1) - coeff1 * e1;
                };
            }
        },
        strengths);
}

}  // namespace sl2c
