#include "sl2c/numerics.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace sl2c {

ComplexMatrix build_hamiltonian(const std::function<Complex(double)>& potential,
                                const GridSpec& grid, double singular_cap) {
    grid.validate();
    const int N = grid.n_points - 2;  // interior unknowns
    const double h = grid.h();
    const double inv_h2 = 1.0 / (h * h);

    ComplexMatrix A = ComplexMatrix::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        const Complex v = potential(grid.x(i + 1));
        if (!(std::abs(v) <= singular_cap))
            throw SingularPotential("build_hamiltonian: |V| exceeds cap at x = " +
                                    std::to_string(grid.x(i + 1)));
        A(i, i) = 2.0 * inv_h2 + v;
        if (i + 1 < N) {
            A(i, i + 1) = -inv_h2;
            A(i + 1, i) = -inv_h2;
        }
    }
    return A;
}

MatchReport match_spectra(const SpectrumResult& algebraic,
                          const std::vector<Complex>& numeric, double tol,
                          double h, double continuum_floor) {
    if (!(tol > 0.0)) throw InvalidArgument("match_spectra: tol must be > 0");

    MatchReport report;
    report.h = h;
    std::vector<bool> claimed(numeric.size(), false);

    bool all_matched_within_tol = true;
    for (const auto& level : algebraic.entries) {
        if (!level.regular) continue;
        int best = -1;
        double best_dist = 0.0;
        for (std::size_t j = 0; j < numeric.size(); ++j) {
            if (claimed[j]) continue;
            const double dist = std::abs(numeric[j] - level.energy);
            if (best < 0 || dist < best_dist) {
                best = static_cast<int>(j);
                best_dist = dist;
            }
        }
        if (best < 0) {
            report.unmatched_algebraic.push_back(level.energy);
            all_matched_within_tol = false;
            continue;
        }
        claimed[best] = true;
        report.pairs.push_back({level.energy, numeric[best], best_dist, level.n});
        if (best_dist >= tol) all_matched_within_tol = false;
    }

    for (std::size_t j = 0; j < numeric.size(); ++j)
        if (!claimed[j] && numeric[j].real() < continuum_floor - 1e-6)
            report.unmatched_numeric_bound_candidates.push_back(numeric[j]);

    report.converged = all_matched_within_tol && !report.pairs.empty();
    return report;
}

double residual(const GridFunction& psi, Complex energy,
                const std::function<Complex(double)>& potential) {
    const int n = psi.size();
    if (n < 5) throw InvalidArgument("residual: need at least 5 samples");
    const double inv_h2 = 1.0 / (psi.dx * psi.dx);

    double sup = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        const Complex d2 =
            (psi.values[i + 1] - 2.0 * psi.values[i] + psi.values[i - 1]) * inv_h2;
        const Complex r =
            -d2 + (potential(psi.x(i)) - energy) * psi.values[i];
        sup = std::max(sup, std::abs(r));
    }
    const double scale = psi.max_abs();
    if (scale == 0.0) return 0.0;
    return sup / scale;
}

// ---------------------------------------------------------------------------
// Critical-strength scan

namespace {

int resolve_threads(int requested, int jobs) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("SL2C_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) n = static_cast<int>(v);
        }
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return std::min(n, std::max(jobs, 1));
}

// Runs fn(0..jobs-1) on a small pool; results are written into
// caller-provided slots, so the merge order is input order regardless of
// completion order.
void parallel_for(int jobs, int threads, const std::function<void(int)>& fn) {
    if (jobs <= 0) return;
    if (threads <= 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::function<Complex(double)> scan_potential(ScanFamily family, double V1,
                                              double v2) {
    if (family == ScanFamily::scarf) {
        return [V1, v2](double x) {
            const double sech = 1.0 / std::cosh(x);
            return Complex(-V1 * sech * sech, -v2 * sech * std::tanh(x));
        };
    }
    const double gamma = 0.39269908169872414;  // pi/8, the documented default
    return [V1, v2, gamma](double x) {
        const Complex tau(x, -gamma);
        const Complex csch = 1.0 / std::sinh(tau);
        return V1 * csch * csch - v2 * csch * (std::cosh(tau) * csch);
    };
}

struct PointVerdict {
    bool broken = false;
    double gap = std::numeric_limits<double>::quiet_NaN();
};

// Classifies one sweep point by the imaginary parts of the numeric
// eigenvalues matched to the regular algebraic levels.  Matching (rather
// than an energy-window filter) keeps the classifier monotone through the
// transition: past the critical strength the complex pair can wander to
// Re E > 0, where a window would lose it.
PointVerdict classify_point(ScanFamily family, double V1, double v2,
                            const GridSpec& grid, double imag_threshold) {
    const ComplexMatrix H = build_hamiltonian(scan_potential(family, V1, v2), grid);
    const std::vector<Complex> eigs = eigenvalues_dense(H);

    PointVerdict v;
    if (v2 == 0.0) return v;  // Hermitian sweep point: trivially unbroken

    const SpectrumResult series = family == ScanFamily::scarf
                                      ? scarf_series(V1, v2, 4)
                                      : invert_pt2(V1, v2, 4);
    const MatchReport report = match_spectra(series, eigs, 1e100, grid.h());

    double max_im = 0.0;
    for (const auto& p : report.pairs)
        max_im = std::max(max_im, std::abs(p.numeric.imag()));
    v.broken = max_im > imag_threshold;

    if (report.pairs.size() >= 2) {
        double g = 1e300;
        for (std::size_t i = 0; i < report.pairs.size(); ++i)
            for (std::size_t j = i + 1; j < report.pairs.size(); ++j)
                g = std::min(g, std::abs(report.pairs[i].numeric -
                                         report.pairs[j].numeric));
        v.gap = g;
    } else if (report.pairs.size() == 1 &&
               series.classification == SpectrumClass::Critical) {
        // merged level: the tracked pair is the doubly degenerate one, so
        // the gap is the discrete splitting around it
        const Complex at = report.pairs[0].numeric;
        double g = 1e300;
        for (const auto& z : eigs)
            if (z != at) g = std::min(g, std::abs(z - at));
        v.gap = g;
    }
    return v;
}

SpectrumClass algebraic_class_at(double V1, double v2, int levels = 8) {
    if (v2 == 0.0) return SpectrumClass::AllReal;  // Hermitian limit of the sweep
    return scarf_series(V1, v2, levels).classification;
}

}  // namespace

ScanResult scan_critical(double V1, double v2_lo, double v2_hi,
                         const GridSpec& grid, const ScanOptions& opts) {
    grid.validate();
    const double critical = V1 + 0.25;
    if (!(v2_lo < critical && critical < v2_hi))
        throw NotBracketed("scan_critical: [v2_lo, v2_hi] must bracket V1 + 1/4");
    if (opts.curve_points < 2)
        throw InvalidArgument("scan_critical: curve_points must be >= 2");

    ScanResult result;
    result.algebraic_critical = critical;

    const int np = opts.curve_points;
    result.gap_curve.resize(np);
    std::vector<PointVerdict> verdicts(np);
    const int threads = resolve_threads(opts.max_threads, np);
    parallel_for(np, threads, [&](int i) {
        const double v2 = v2_lo + (v2_hi - v2_lo) * i / (np - 1);
        verdicts[i] = classify_point(opts.family, V1, v2, grid, opts.imag_threshold);
        result.gap_curve[i] = {v2, verdicts[i].gap, verdicts[i].broken,
                               algebraic_class_at(V1, v2)};
    });

    // Bracket the classifier flip from the curve, then bisect.
    double lo = v2_lo, hi = v2_hi;
    bool lo_broken = verdicts.front().broken;
    const bool hi_broken = verdicts.back().broken;
    if (lo_broken == hi_broken)
        throw NotBracketed("scan_critical: numeric classifier does not change "
                           "across [v2_lo, v2_hi]");
    for (int i = 1; i < np; ++i) {
        if (verdicts[i].broken != lo_broken) {
            lo = result.gap_curve[i - 1].v2;
            hi = result.gap_curve[i].v2;
            break;
        }
    }
    while (hi - lo > opts.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        const bool broken =
            classify_point(opts.family, V1, mid, grid, opts.imag_threshold).broken;
        if (broken == lo_broken)
            lo = mid;
        else
            hi = mid;
    }
    result.numeric_critical = 0.5 * (lo + hi);
    return result;
}

}  // namespace sl2c
