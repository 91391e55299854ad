#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "sl2c/errors.hpp"

namespace sl2c {

using Complex = std::complex<double>;

// Uniform 1-D grid [x_min, x_max] with n_points samples (endpoints included).
struct GridSpec {
    double x_min;
    double x_max;
    int n_points;

    double h() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + h() * i; }

    void validate() const {
        if (n_points < 16)
            throw InvalidArgument("GridSpec: n_points must be >= 16");
        if (!(x_min < x_max))
            throw InvalidArgument("GridSpec: x_min must be < x_max");
    }
};

// Complex-valued function sampled on a uniform grid.  The e^{i m phi}
// dependence of the full two-variable eigenfunction is never discretized;
// it is carried exactly as the `sector` label, on which the generators act
// algebraically.
struct GridFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<Complex> values;
    Complex sector{0.0, 0.0};

    int size() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x0 + dx * i; }

    static GridFunction on(const GridSpec& g, Complex sector_label = {}) {
        g.validate();
        GridFunction f;
        f.x0 = g.x_min;
        f.dx = g.h();
        f.values.assign(g.n_points, Complex(0.0, 0.0));
        f.sector = sector_label;
        return f;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

// d/dx by 2nd-order stencils: central in the interior, one-sided 2nd-order
// at the two endpoints.
std::vector<Complex> derivative(const std::vector<Complex>& f, double h);

}  // namespace sl2c
