#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "wigner/measures.hpp"

using wigner::AnalysisRecord;
using wigner::Complex;
using wigner::ComplexMatrix;
using wigner::CorrelationMatrix;
using wigner::DensityMatrix;
using wigner::Velocity;

namespace {

const Velocity kSpot(0.8660254037844386);  // gamma = 2
constexpr double kTwoSqrtTwo = 2.8284271247461903;

DensityMatrix balanced_state(double coherence) {
    ComplexMatrix m(2, 2);
    m(0, 0) = m(1, 1) = 0.5;
    m(0, 1) = m(1, 0) = 0.5 * coherence;
    m.set_factors({2});
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix occupation_state(double coherence) {
    return wigner::effective_two_qubit(balanced_state(coherence)).density();
}

// independent correlation oracle: explicit Pauli entries and trace loops
void brute_force_correlations(const DensityMatrix& rho, double out[3][3]) {
    static const Complex sig[3][2][2] = {
        {{0.0, 1.0}, {1.0, 0.0}},
        {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        {{1.0, 0.0}, {0.0, -1.0}},
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex tr = 0.0;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t c = 0; c < 2; ++c)
                        for (std::size_t d = 0; d < 2; ++d)
                            tr += rho(2 * a + b, 2 * c + d) * sig[i][c][a] * sig[j][d][b];
            out[i][j] = tr.real();
        }
}

}  // namespace

TEST_CASE("correlation matrix of reference states") {
    SUBCASE("maximally mixed: all correlations vanish") {
        ComplexMatrix m = Complex(0.25) * ComplexMatrix::identity(4);
        m.set_factors({2, 2});
        const CorrelationMatrix t =
            wigner::correlation_matrix(DensityMatrix::from_matrix(m));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(t(i, j)) < 1e-15);
    }
    SUBCASE("occupation states match the brute-force oracle") {
        for (double c : {0.0, 0.3, 0.8, 1.0}) {
            const DensityMatrix rho = occupation_state(c);
            const CorrelationMatrix t = wigner::correlation_matrix(rho);
            double oracle[3][3];
            brute_force_correlations(rho, oracle);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    CHECK(std::abs(t(i, j) - oracle[i][j]) < 1e-13);
            // diag(c, c, -1), everything else zero
            CHECK(t(0, 0) == doctest::Approx(c).epsilon(1e-13));
            CHECK(t(1, 1) == doctest::Approx(c).epsilon(1e-13));
            CHECK(t(2, 2) == doctest::Approx(-1.0).epsilon(1e-13));
            CHECK(std::abs(t(0, 1)) < 1e-13);
            CHECK(std::abs(t(1, 2)) < 1e-13);
            CHECK(std::abs(t(2, 0)) < 1e-13);
        }
    }
    SUBCASE("wrong dimension is rejected") {
        CHECK_THROWS_AS(wigner::correlation_matrix(balanced_state(0.5)),
                        std::invalid_argument);
    }
}

TEST_CASE("CHSH maximum from the correlation eigenvalues") {
    CHECK(wigner::bell_chsh_max(occupation_state(0.0)) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(wigner::bell_chsh_max(occupation_state(1.0)) ==
          doctest::Approx(kTwoSqrtTwo).epsilon(1e-12));
    // t^T t eigenvalues {1, 0.64, 0.64}: B = 2 sqrt(1.64)
    CHECK(wigner::bell_chsh_max(occupation_state(0.8)) ==
          doctest::Approx(2.5612496949731395).epsilon(1e-10));
}

TEST_CASE("CHSH closed form") {
    CHECK(wigner::bell_chsh_closed_form(1.0) == 2.0 * std::sqrt(2.0));
    CHECK(wigner::bell_chsh_closed_form(0.0) == 2.0);
    CHECK(wigner::bell_chsh_closed_form(0.8) ==
          doctest::Approx(2.5612496949731395).epsilon(1e-14));
    CHECK_THROWS_AS(wigner::bell_chsh_closed_form(1.5), std::domain_error);
}

TEST_CASE("generic and closed-form CHSH agree across the grid") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 200; ++it) {
        const double b1 = it % 10 == 0 ? 1.0 : u(rng);
        const double b2 = it % 14 == 0 ? 1.0 : u(rng);
        const wigner::WignerAngle wa = wigner::wigner_angle(Velocity(b1), Velocity(b2));
        const DensityMatrix rho_v = wigner::velocity_density_matrix(
            wigner::boost(wigner::initial_state(Velocity(b1)), Velocity(b2)));
        const double generic =
            wigner::bell_chsh_max(wigner::effective_two_qubit(rho_v).density());
        CHECK(std::abs(generic - wigner::bell_chsh_closed_form(wa.cos_two_omega)) <
              1e-10);
    }
}

TEST_CASE("relative entropy of entanglement") {
    CHECK(wigner::relative_entropy_closed_form(1.0) == 1.0);
    CHECK(wigner::relative_entropy_closed_form(0.0) == 0.0);
    CHECK(wigner::relative_entropy_closed_form(0.8) ==
          doctest::Approx(0.5310044064107188).epsilon(1e-15));

    CHECK(wigner::relative_entropy_of_entanglement(balanced_state(1.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wigner::relative_entropy_of_entanglement(balanced_state(0.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(wigner::relative_entropy_of_entanglement(balanced_state(0.8)) ==
          doctest::Approx(0.5310044064107188).epsilon(1e-12));

    SUBCASE("the explicit form equals 1 - S across coherences") {
        for (int k = 0; k <= 100; ++k) {
            const double c = k / 100.0;
            CHECK(std::abs(wigner::relative_entropy_of_entanglement(balanced_state(c)) -
                           wigner::relative_entropy_closed_form(c)) < 1e-12);
        }
    }

    SUBCASE("unbalanced diagonals are outside the closed form") {
        ComplexMatrix m(2, 2);
        m(0, 0) = 0.6;
        m(1, 1) = 0.4;
        CHECK_THROWS_AS(
            wigner::relative_entropy_of_entanglement(DensityMatrix::from_matrix(m)),
            std::domain_error);
    }
}

TEST_CASE("concurrence of the pure state") {
    CHECK(wigner::concurrence_pure(wigner::initial_state(Velocity(0.5))) == 0.0);
    CHECK(wigner::concurrence_pure(wigner::boost(wigner::initial_state(Velocity(1.0)),
                                                 Velocity(1.0))) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wigner::concurrence_pure(wigner::boost(wigner::initial_state(kSpot), kSpot)) ==
          doctest::Approx(0.6).epsilon(1e-12));

    SUBCASE("equals sin 2w for boosted states") {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int it = 0; it < 200; ++it) {
            const Velocity v1(u(rng)), v2(u(rng));
            const double c =
                wigner::concurrence_pure(wigner::boost(wigner::initial_state(v1), v2));
            CHECK(std::abs(c - wigner::wigner_angle(v1, v2).sin_two_omega()) < 1e-12);
        }
    }
}

TEST_CASE("analyze at the rest point") {
    const AnalysisRecord rec = wigner::analyze(Velocity(0.0), Velocity(0.0));
    CHECK(rec.cos_two_omega == 1.0);
    CHECK(rec.omega == 0.0);
    CHECK(rec.entropy == 0.0);
    CHECK(rec.entanglement == 1.0);
    CHECK(rec.bell == 2.0 * std::sqrt(2.0));
    CHECK(rec.concurrence == 0.0);
    CHECK(rec.eig_low == 0.0);
    CHECK(rec.eig_high == 1.0);
}

TEST_CASE("analyze at the double light-speed limit is exact") {
    const AnalysisRecord rec = wigner::analyze(Velocity(1.0), Velocity(1.0));
    CHECK(rec.cos_two_omega == 0.0);
    CHECK(rec.entropy == 1.0);
    CHECK(rec.entanglement == 0.0);
    CHECK(rec.bell == 2.0);
    CHECK(rec.concurrence == 1.0);
    CHECK(rec.eig_low == 0.5);
    CHECK(rec.eig_high == 0.5);
    CHECK(rec.omega == doctest::Approx(0.7853981633974483).epsilon(1e-15));
}

TEST_CASE("analyze at the gamma = 2 spot point") {
    const AnalysisRecord rec = wigner::analyze(kSpot, kSpot);
    CHECK(rec.omega == doctest::Approx(0.3217505543966422).epsilon(1e-12));
    CHECK(rec.cos_two_omega == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rec.entropy == doctest::Approx(0.4689955935892812).epsilon(1e-12));
    CHECK(rec.entanglement == doctest::Approx(0.5310044064107188).epsilon(1e-12));
    CHECK(rec.bell == doctest::Approx(2.5612496949731395).epsilon(1e-12));
    CHECK(rec.concurrence == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(rec.eig_low == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rec.eig_high == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("analyze records satisfy the bookkeeping invariants") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int it = 0; it < 300; ++it) {
        const double b1 = it % 11 == 0 ? 1.0 : u(rng);
        const double b2 = it % 17 == 0 ? 1.0 : u(rng);
        const AnalysisRecord rec = wigner::analyze(Velocity(b1), Velocity(b2));
        CHECK(rec.entanglement == 1.0 - rec.entropy);
        CHECK(rec.bell >= 2.0);
        CHECK(rec.bell <= 2.0 * std::sqrt(2.0) + 1e-12);
        CHECK(rec.concurrence >= 0.0);
        CHECK(rec.concurrence <= 1.0);
        CHECK(std::abs(rec.eig_low + rec.eig_high - 1.0) < 1e-15);
        CHECK(rec.v1 == b1);
        CHECK(rec.v2 == b2);
        // entanglement of formation of the pure state closes the books
        const double eof = wigner::binary_entropy_bits(
            0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - rec.concurrence * rec.concurrence))));
        CHECK(std::abs(rec.entanglement + eof - 1.0) < 1e-10);
    }
}

TEST_CASE("analyze is symmetric in the two speeds") {
    const AnalysisRecord ab = wigner::analyze(Velocity(0.6), Velocity(0.8));
    const AnalysisRecord ba = wigner::analyze(Velocity(0.8), Velocity(0.6));
    CHECK(ab.cos_two_omega == ba.cos_two_omega);
    CHECK(ab.entanglement == ba.entanglement);
    CHECK(ab.bell == ba.bell);
    CHECK(ab.cos_two_omega == doctest::Approx(0.9459459459459459).epsilon(1e-14));
}
