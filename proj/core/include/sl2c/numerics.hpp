#pragma once

// Independent verification engine: Dirichlet finite-difference
// discretization of -psi'' + V psi = E psi, dense complex eigensolution,
// matching of numeric to algebraic spectra, residual evaluation, and the
// critical-strength (exceptional-point) scan.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "sl2c/grid.hpp"
#include "sl2c/spectra.hpp"

namespace sl2c {

using ComplexMatrix = Eigen::MatrixXcd;

bool is_complex_symmetric(const ComplexMatrix& A, double tol = 0.0);

// Interior-point discretization: unknowns at x_1 .. x_{n-2}, wavefunction
// pinned to zero at and beyond x_min, x_max.  Diagonal 2/h^2 + V(x_i),
// off-diagonals -1/h^2; the result is complex symmetric tridiagonal
// (stored dense).
ComplexMatrix build_hamiltonian(const std::function<Complex(double)>& potential,
                                const GridSpec& grid,
                                double singular_cap = 1e12);

// All eigenvalues of a general dense complex matrix.  Complex-symmetric
// tridiagonal input (the Hamiltonians built above) is detected and routed
// to an O(n^2) implicit-shift QL iteration whose results are certified by
// inverse-iteration backward errors; anything else, or a failed
// certificate, goes to LAPACK zgeev.
std::vector<Complex> eigenvalues_dense(const ComplexMatrix& A);

struct MatchedPair {
    Complex algebraic;
    Complex numeric;
    double abs_error = 0.0;
    int n = 0;
};

struct MatchReport {
    std::vector<MatchedPair> pairs;
    std::vector<Complex> unmatched_algebraic;
    std::vector<Complex> unmatched_numeric_bound_candidates;
    double h = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
};

// Greedy nearest-neighbour pairing of every regular algebraic level with
// its closest unclaimed numeric eigenvalue.  converged iff all regular
// levels matched within tol.  Unclaimed numeric eigenvalues below the
// continuum floor (Re E < floor - 1e-6) are reported as extra bound-state
// candidates.
MatchReport match_spectra(const SpectrumResult& algebraic,
                          const std::vector<Complex>& numeric, double tol,
                          double h = std::numeric_limits<double>::quiet_NaN(),
                          double continuum_floor = 0.0);

// || -D2 psi + V psi - E psi ||_inf / ||psi||_inf over interior points.
double residual(const GridFunction& psi, Complex energy,
                const std::function<Complex(double)>& potential);

enum class ScanFamily { scarf, pt2 };

struct ScanPoint {
    double v2;
    double gap;  // min distance between bound eigenvalues (NaN if < 2)
    bool numeric_broken;
    SpectrumClass algebraic_class;
};

struct ScanOptions {
    ScanFamily family = ScanFamily::scarf;
    int curve_points = 21;
    double imag_threshold = 1e-6;  // broken iff max |Im E| over bound states exceeds this
    double bisect_tol = 1e-3;
    int max_threads = 0;  // 0: SL2C_THREADS env var, then hardware_concurrency
};

struct ScanResult {
    double algebraic_critical;
    double numeric_critical;
    std::vector<ScanPoint> gap_curve;
};

// Locates the real -> complex transition in V2 at fixed V1, both exactly
// (V1 + 1/4) and by bisection on the numeric spectrum of the discretized
// Hamiltonian.  Requires v2_lo < V1 + 1/4 < v2_hi.  Curve points are
// evaluated concurrently; results are merged in input order.
ScanResult scan_critical(double V1, double v2_lo, double v2_hi,
                         const GridSpec& grid, const ScanOptions& opts = {});

}  // namespace sl2c
