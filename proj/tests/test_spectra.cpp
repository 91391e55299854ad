#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "sl2c/spectra.hpp"

using namespace sl2c;

namespace {

// Independent re-evaluation of the four real Scarf matching equations.
double scarf_equations_residual(Complex m, Complex b, double V1, double V2) {
    const double mr = m.real(), mi = m.imag(), br = b.real(), bi = b.imag();
    const double e1 = br * br - bi * bi - mr * mr + mi * mi + 0.25 + V1;
    const double e2 = br * bi - mr * mi;
    const double e3 = mr * br - mi * bi;
    const double e4 = 2.0 * (mr * bi + mi * br) - V2;
    return std::max({std::abs(e1), std::abs(e2), std::abs(e3), std::abs(e4)});
}

double pt2_equations_residual(Complex m, Complex b, double V1, double V2) {
    return std::max(std::abs(b * b + m * m - 0.25 - V1),
                    std::abs(2.0 * m * b - V2));
}

double morse_equations_residual(Complex m, Complex b, Complex V1, Complex V2) {
    return std::abs(b * b - V1) + std::abs(2.0 * m * b - V2);
}

std::vector<Complex> regular_energies(const SpectrumResult& r) {
    std::vector<Complex> out;
    for (const auto& e : r.entries)
        if (e.regular) out.push_back(e.energy);
    return out;
}

int regular_count(const SpectrumResult& r, Series s) {
    int c = 0;
    for (const auto& e : r.entries)
        if (e.series == s && e.regular) ++c;
    return c;
}

}  // namespace

TEST_CASE("algebraic_spectrum: direct formula and regularity boundary") {
    auto levels = algebraic_spectrum(Complex(2.5, 0.0), 4);
    REQUIRE(levels.size() == 4);
    CHECK(levels[0].energy == Complex(-4.0, 0.0));
    CHECK(levels[1].energy == Complex(-1.0, 0.0));
    CHECK(std::abs(levels[2].energy) < 1e-15);
    CHECK(levels[0].regular);
    CHECK(levels[1].regular);
    CHECK(!levels[2].regular);  // n = 2 sits exactly on the n < 2 boundary
    CHECK(!levels[3].regular);
}

TEST_CASE("algebraic_spectrum: complex weight") {
    auto levels = algebraic_spectrum(Complex(1.0, -1.0), 3);
    CHECK(std::abs(levels[0].energy - Complex(0.75, 1.0)) < 1e-15);
    CHECK(levels[0].regular);
    CHECK(!levels[1].regular);
}

TEST_CASE("algebraic_spectrum: sub-threshold weight has no regular levels") {
    auto levels = algebraic_spectrum(Complex(0.3, 0.0), 5);
    for (const auto& l : levels) CHECK(!l.regular);
    CHECK(classify_levels(levels) == SpectrumClass::Empty);
}

TEST_CASE("invert_scarf: real branches below critical") {
    auto inv = invert_scarf(2.0, 2.0);
    REQUIRE(inv.solutions.size() == 2);
    CHECK(inv.solutions[0].m.real() == doctest::Approx(1.2807764064044151).epsilon(1e-14));
    CHECK(inv.solutions[1].m.real() == doctest::Approx(0.7807764064044151).epsilon(1e-14));
    CHECK(std::abs(inv.solutions[0].m.imag()) < 1e-15);
    CHECK(std::abs(inv.solutions[1].m.imag()) < 1e-15);
    CHECK(inv.solutions[0].regular);
    CHECK(inv.solutions[1].regular);
    for (const auto& s : inv.solutions)
        CHECK(scarf_equations_residual(s.m, s.b, 2.0, 2.0) < 1e-12);
    CHECK(inv.residual < 1e-12);
}

TEST_CASE("invert_scarf: degenerate branches at the critical strength") {
    auto inv = invert_scarf(2.0, 2.25);
    CHECK(std::abs(inv.solutions[0].m - inv.solutions[1].m) < 1e-14);
    CHECK(inv.solutions[0].m.real() == doctest::Approx(1.0606601717798212).epsilon(1e-14));
    for (const auto& s : inv.solutions)
        CHECK(scarf_equations_residual(s.m, s.b, 2.0, 2.25) < 1e-12);
}

TEST_CASE("invert_scarf: conjugate label pair above critical") {
    auto inv = invert_scarf(2.0, 3.0);
    CHECK(inv.solutions[0].m.real() == doctest::Approx(1.14564392373896).epsilon(1e-14));
    CHECK(inv.solutions[0].m.imag() == doctest::Approx(0.4330127018922193).epsilon(1e-14));
    CHECK(std::abs(inv.solutions[1].m - std::conj(inv.solutions[0].m)) < 1e-14);
    for (const auto& s : inv.solutions)
        CHECK(scarf_equations_residual(s.m, s.b, 2.0, 3.0) < 1e-12);
}

TEST_CASE("invert_scarf: strength validation") {
    CHECK_THROWS_AS((void)invert_scarf(-1.0, 2.0), InvalidStrengths);
    CHECK_THROWS_AS((void)invert_scarf(2.0, 0.0), InvalidStrengths);
}

TEST_CASE("scarf_series: below, at, and above the critical strength") {
    SUBCASE("below: two real series") {
        auto r = scarf_series(2.0, 2.0, 3);
        CHECK(r.classification == SpectrumClass::AllReal);
        REQUIRE(r.critical_strength.has_value());
        CHECK(*r.critical_strength == 2.25);
        CHECK(regular_count(r, Series::plus) == 1);
        CHECK(regular_count(r, Series::minus) == 1);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 2);
        CHECK(std::abs(reg[0] - Complex(-0.6096117967977924, 0.0)) < 1e-14);
        CHECK(std::abs(reg[1] - Complex(-0.0788353903933773, 0.0)) < 1e-14);
    }
    SUBCASE("at: merged single series") {
        auto r = scarf_series(2.0, 2.25, 3);
        CHECK(r.classification == SpectrumClass::Critical);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 1);
        CHECK(std::abs(reg[0] - Complex(-0.3143398282201786, 0.0)) < 1e-14);
        CHECK(r.entries[0].series == Series::single);
    }
    SUBCASE("above: conjugate pairs") {
        auto r = scarf_series(2.0, 3.0, 3);
        CHECK(r.classification == SpectrumClass::ConjugatePairs);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 2);
        const Complex e0(-0.22935607626103996, -0.5591440397570021);
        CHECK(std::abs(reg[0] - e0) < 1e-14);
        CHECK(std::abs(reg[1] - std::conj(e0)) < 1e-14);
    }
    SUBCASE("entries are sorted by (series, n)") {
        auto r = scarf_series(2.0, 2.0, 3);
        for (std::size_t i = 1; i < r.entries.size(); ++i) {
            const auto& a = r.entries[i - 1];
            const auto& b = r.entries[i];
            CHECK((a.series < b.series || (a.series == b.series && a.n < b.n)));
        }
    }
    SUBCASE("negative V2 mirrors |V2|") {
        auto rp = scarf_series(2.0, 3.0, 3);
        auto rn = scarf_series(2.0, -3.0, 3);
        for (std::size_t i = 0; i < rp.entries.size(); ++i)
            CHECK(std::abs(rp.entries[i].energy - rn.entries[i].energy) < 1e-15);
    }
}

TEST_CASE("scarf: series route equals inversion route") {
    std::mt19937 rng(7001);
    std::uniform_real_distribution<double> uv1(0.05, 8.0), uv2(0.05, 8.0);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double V1 = uv1(rng);
        const double V2 = (flip(rng) ? 1.0 : -1.0) * uv2(rng);
        auto series = scarf_series(V1, V2, 6);
        auto inv = invert_scarf(V1, V2);
        // Plus series <-> first branch, minus <-> second (broken phase has
        // no minus-vs-plus distinction beyond conjugation).
        for (const auto& level : series.entries) {
            const Complex m = level.series == Series::minus ? inv.solutions[1].m
                                                            : inv.solutions[0].m;
            const auto alg = algebraic_spectrum(m, 6);
            CHECK(std::abs(level.energy - alg[level.n].energy) < 1e-12);
            CHECK(level.regular == alg[level.n].regular);
        }
    }
}

TEST_CASE("invert_pt2: branches, critical, and empty series") {
    SUBCASE("same branch values as the Scarf case") {
        auto inv = invert_pt2_labels(2.0, 2.0);
        CHECK(inv.solutions[0].m.real() == doctest::Approx(1.2807764064044151).epsilon(1e-14));
        CHECK(inv.solutions[1].m.real() == doctest::Approx(0.7807764064044151).epsilon(1e-14));
        for (const auto& s : inv.solutions)
            CHECK(pt2_equations_residual(s.m, s.b, 2.0, 2.0) < 1e-12);
    }
    SUBCASE("one critical strength") {
        auto r = invert_pt2(2.0, 2.25, 3);
        CHECK(r.classification == SpectrumClass::Critical);
        CHECK(*r.critical_strength == 2.25);
    }
    SUBCASE("weak strengths: minus branch below the regularity threshold") {
        auto inv = invert_pt2_labels(0.0, 0.1);
        CHECK(inv.solutions[0].m.real() == doctest::Approx(0.48945315646535165).epsilon(1e-13));
        CHECK(inv.solutions[1].m.real() == doctest::Approx(0.10215482184460994).epsilon(1e-13));
        CHECK(!inv.solutions[1].regular);
        auto r = invert_pt2(0.0, 0.1, 3);
        CHECK(regular_count(r, Series::minus) == 0);
        CHECK(r.classification == SpectrumClass::Empty);  // plus branch < 1/2 too
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS((void)invert_pt2(-0.5, 1.0, 3), InvalidStrengths);
        CHECK_THROWS_AS((void)invert_pt2(1.0, 0.0, 3), InvalidStrengths);
    }
}

TEST_CASE("pt2: series route equals inversion route") {
    std::mt19937 rng(7015);
    std::uniform_real_distribution<double> uv1(-0.2, 8.0), uv2(0.05, 8.0);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double V1 = uv1(rng);
        const double V2 = (flip(rng) ? 1.0 : -1.0) * uv2(rng);
        auto series = invert_pt2(V1, V2, 6);
        auto inv = invert_pt2_labels(V1, V2);
        // labels sort by Re m like the series branches; for V2 < 0 the
        // canonical flip can reorder them
        Complex m_hi = inv.solutions[0].m, m_lo = inv.solutions[1].m;
        if (m_lo.real() > m_hi.real() ||
            (m_lo.real() == m_hi.real() && m_lo.imag() > m_hi.imag()))
            std::swap(m_hi, m_lo);
        for (const auto& level : series.entries) {
            const Complex m = level.series == Series::minus ? m_lo : m_hi;
            const auto alg = algebraic_spectrum(m, 6);
            CHECK(std::abs(level.energy - alg[level.n].energy) < 1e-12);
            CHECK(level.regular == alg[level.n].regular);
        }
    }
}

TEST_CASE("invert_pt2_labels: canonical sign and back-substitution") {
    std::mt19937 rng(7010);
    std::uniform_real_distribution<double> uv1(-0.2, 8.0), uv2(0.05, 8.0);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double V1 = uv1(rng);
        const double V2 = (flip(rng) ? 1.0 : -1.0) * uv2(rng);
        auto inv = invert_pt2_labels(V1, V2);
        for (const auto& s : inv.solutions) {
            CHECK(pt2_equations_residual(s.m, s.b, V1, V2) < 1e-12);
            CHECK(s.m.real() >= 0.0);
        }
    }
}

TEST_CASE("invert_morse: principal branch and regularity") {
    SUBCASE("V1 = 2i, V2 = 4 + 4i") {
        auto inv = invert_morse(Complex(0.0, 2.0), Complex(4.0, 4.0));
        REQUIRE(inv.solutions.size() == 1);
        CHECK(std::abs(inv.solutions[0].b - Complex(1.0, 1.0)) < 1e-14);
        CHECK(std::abs(inv.solutions[0].m - Complex(2.0, 0.0)) < 1e-14);
        CHECK(inv.solutions[0].regular);
        CHECK(inv.residual < 1e-12);
    }
    SUBCASE("V1 = 2i, V2 = 4") {
        auto inv = invert_morse(Complex(0.0, 2.0), Complex(4.0, 0.0));
        CHECK(std::abs(inv.solutions[0].m - Complex(1.0, -1.0)) < 1e-14);
        CHECK(inv.solutions[0].regular);
    }
    SUBCASE("real V1 is rejected") {
        CHECK_THROWS_AS((void)invert_morse(Complex(3.0, 0.0), Complex(1.0, 0.0)),
                        V1IZero);
    }
}

TEST_CASE("morse_series: reality condition, complex series, empty spectrum") {
    SUBCASE("(0, 2, 4, 4): two real levels") {
        auto r = morse_series(0.0, 2.0, 4.0, 4.0, 4);
        CHECK(r.classification == SpectrumClass::AllReal);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 2);
        CHECK(std::abs(reg[0] - Complex(-2.25, 0.0)) < 1e-12);
        CHECK(std::abs(reg[1] - Complex(-0.25, 0.0)) < 1e-12);
        CHECK(!r.critical_strength.has_value());
    }
    SUBCASE("(0, 2, 4, 0): one genuinely complex level") {
        auto r = morse_series(0.0, 2.0, 4.0, 0.0, 4);
        CHECK(r.classification == SpectrumClass::GenuinelyComplex);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 1);
        CHECK(std::abs(reg[0] - Complex(0.75, 1.0)) < 1e-12);
    }
    SUBCASE("(0, 2, 0.5, 0.5): regularity inequality fails") {
        auto r = morse_series(0.0, 2.0, 0.5, 0.5, 4);
        CHECK(r.classification == SpectrumClass::Empty);
        CHECK(regular_energies(r).empty());
    }
    SUBCASE("V1I = 0 is rejected") {
        CHECK_THROWS_AS((void)morse_series(1.0, 0.0, 1.0, 1.0, 4), V1IZero);
    }
}

TEST_CASE("morse: series route equals inversion route") {
    std::mt19937 rng(7021);
    std::uniform_real_distribution<double> u1(-4.0, 4.0), u2(-6.0, 6.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double V1R = u1(rng);
        double V1I = u1(rng);
        if (std::abs(V1I) < 0.1) V1I = V1I < 0 ? -0.1 : 0.1;
        const double V2R = u2(rng), V2I = u2(rng);
        auto series = morse_series(V1R, V1I, V2R, V2I, 5);
        auto inv = invert_morse(Complex(V1R, V1I), Complex(V2R, V2I));
        CHECK(morse_equations_residual(inv.solutions[0].m, inv.solutions[0].b,
                                       Complex(V1R, V1I), Complex(V2R, V2I)) < 1e-12);
        const auto alg = algebraic_spectrum(inv.solutions[0].m, 5);
        for (const auto& level : series.entries) {
            CHECK(std::abs(level.energy - alg[level.n].energy) < 1e-12);
            CHECK(level.regular == alg[level.n].regular);
        }
    }
}

TEST_CASE("morse_parametrized: pseudo-Hermitian line and emptiness") {
    SUBCASE("(1, 1, 3, 3): C = 1, single real level") {
        auto r = morse_parametrized(1.0, 1.0, 3.0, 3.0, 4);
        CHECK(r.classification == SpectrumClass::AllReal);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 1);
        CHECK(reg[0] == Complex(-1.0, 0.0));
    }
    SUBCASE("(1, 1, 3, 1): complex C on the regularity boundary") {
        auto r = morse_parametrized(1.0, 1.0, 3.0, 1.0, 4);
        auto reg = regular_energies(r);
        REQUIRE(reg.size() == 1);  // Re C = 1/2 admits n = 0 only
        CHECK(std::abs(reg[0] - Complex(0.0, 0.5)) < 1e-15);
        CHECK(r.classification == SpectrumClass::GenuinelyComplex);
    }
    SUBCASE("(1, 1, 0, 0): empty") {
        auto r = morse_parametrized(1.0, 1.0, 0.0, 0.0, 4);
        CHECK(r.classification == SpectrumClass::Empty);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS((void)morse_parametrized(0.0, 1.0, 1.0, 1.0, 4),
                        InvalidStrengths);
        CHECK_THROWS_AS((void)morse_parametrized(1.0, 0.0, 1.0, 1.0, 4),
                        InvalidStrengths);
    }
}

TEST_CASE("morse_parametrized agrees with morse_series under the strength map") {
    std::mt19937 rng(7031);
    std::uniform_real_distribution<double> ua(0.2, 3.0), ug(-2.0, 4.0);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 300; ++trial) {
        const double A = ua(rng);
        const double B = (flip(rng) ? 1.0 : -1.0) * ua(rng);
        const double gamma = ug(rng), delta = ug(rng);
        auto rp = morse_parametrized(A, B, gamma, delta, 5);
        auto rs = morse_series(A * A - B * B, 2.0 * A * B, gamma * A, delta * B, 5);
        REQUIRE(rp.entries.size() == rs.entries.size());
        for (std::size_t i = 0; i < rp.entries.size(); ++i) {
            CHECK(std::abs(rp.entries[i].energy - rs.entries[i].energy) < 1e-12);
            CHECK(rp.entries[i].regular == rs.entries[i].regular);
        }
        // emptiness flips exactly with the sign of (gamma-1)A^2 + (delta-1)B^2
        const double crit = (gamma - 1.0) * A * A + (delta - 1.0) * B * B;
        CHECK((rp.classification == SpectrumClass::Empty) == !(crit > 0.0));
    }
}

TEST_CASE("conjugation dichotomy: Scarf closed, off-condition Morse open") {
    std::mt19937 rng(7041);
    std::uniform_real_distribution<double> uv1(0.1, 5.0), um(0.3, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double V1 = uv1(rng);
        const double V2 = (V1 + 0.25) * (1.2 + um(rng));  // broken phase
        auto reg = regular_energies(scarf_series(V1, V2, 6));
        for (const auto& z : reg) {
            bool has_conj = false;
            for (const auto& w : reg)
                if (std::abs(w - std::conj(z)) < 1e-10) has_conj = true;
            CHECK(has_conj);
        }
    }
    // Morse with V2I off the reality condition: the single series is not
    // conjugation closed as soon as it has a genuinely complex level.
    for (int trial = 0; trial < 100; ++trial) {
        const double V1I = 0.5 + uv1(rng);
        const double V2R = 2.0 + uv1(rng);
        auto r = morse_series(0.0, V1I, V2R, 0.0, 6);
        auto reg = regular_energies(r);
        if (r.classification != SpectrumClass::GenuinelyComplex) continue;
        bool closed = true;
        for (const auto& z : reg) {
            if (std::abs(z.imag()) < 1e-10) continue;
            bool has_conj = false;
            for (const auto& w : reg)
                if (std::abs(w - std::conj(z)) < 1e-10) has_conj = true;
            closed = closed && has_conj;
        }
        CHECK(!closed);
    }
}

TEST_CASE("bisection on the classifier recovers the critical strength") {
    auto broken = [](double v2) {
        return scarf_series(2.0, v2, 4).classification == SpectrumClass::ConjugatePairs;
    };
    double lo = 1.5, hi = 3.0;
    REQUIRE(!broken(lo));
    REQUIRE(broken(hi));
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (broken(mid) ? hi : lo) = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - 2.25) < 1e-10);
}

TEST_CASE("plus-series level count is nondecreasing in V1") {
    const double V2 = 2.0;
    int prev = -1;
    for (double V1 = 0.3; V1 < 12.0; V1 += 0.1) {
        auto r = scarf_series(V1, V2, 32);
        const int count =
            regular_count(r, Series::plus) + regular_count(r, Series::single);
        CHECK(count >= prev);
        prev = count;
    }
}

TEST_CASE("reality dichotomy: real spectrum iff real regular labels") {
    std::mt19937 rng(7051);
    std::uniform_real_distribution<double> uv1(0.3, 6.0), uv2(0.3, 9.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double V1 = uv1(rng), V2 = uv2(rng);
        auto inv = invert_scarf(V1, V2);
        auto r = scarf_series(V1, V2, 6);
        bool labels_real = true;
        for (const auto& s : inv.solutions)
            if (s.regular && std::abs(s.m.imag()) > 1e-12) labels_real = false;
        bool energies_real = true;
        for (const auto& z : regular_energies(r))
            if (std::abs(z.imag()) > 1e-10) energies_real = false;
        if (regular_energies(r).empty()) continue;
        CHECK(labels_real == energies_real);
    }
}
