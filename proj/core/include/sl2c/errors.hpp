#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2c {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter / precondition violations (CLI maps these to exit code 2).
struct InvalidArgument : Error {
    using Error::Error;
};

// Physical strength constraints violated (V1 > 0, V2 != 0, ...).
struct InvalidStrengths : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// Morse inversion requires Im(V1) != 0.
struct V1IZero : InvalidStrengths {
    using InvalidStrengths::InvalidStrengths;
};

// Class II realization evaluated at (or too close to) the pole x = c
// with gamma = 0.
struct SingularPoint : Error {
    using Error::Error;
};

// Ground-state construction outside the regularity region
// (Re m <= 1/2, or Re b <= 0 for the Morse class).
struct NotRegular : Error {
    using Error::Error;
};

// A potential sample exceeded the configured magnitude cap.
struct SingularPotential : Error {
    using Error::Error;
};

// Eigensolver failed to converge; carries whatever eigenvalues were
// obtained before the failure.
struct NoConvergence : Error {
    NoConvergence(const std::string& what, std::vector<std::complex<double>> part)
        : Error(what), partial(std::move(part)) {}
    std::vector<std::complex<double>> partial;
};

// Scan interval does not bracket the transition.
struct NotBracketed : Error {
    using Error::Error;
};

}  // namespace sl2c
