#include "wigner/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <random>
#include <utility>

#include "wigner/boosted_state.hpp"
#include "wigner/kinematics.hpp"
#include "wigner/linalg.hpp"
#include "wigner/measures.hpp"
#include "wigner/sweep.hpp"

namespace wigner {

namespace {

constexpr std::uint64_t kSeed = 0x57u;

class ErrorTracker {
public:
    void update(double error, const std::string& where) {
        if (error > max_error_) {
            max_error_ = error;
            worst_ = where;
        }
    }

    SuiteResult finish(std::string name, double tolerance) const {
        return {std::move(name), max_error_, tolerance,
                worst_.empty() ? "none" : worst_, max_error_ <= tolerance};
    }

private:
    double max_error_ = 0.0;
    std::string worst_;
};

std::string at_point(double v1, double v2) {
    return "v1=" + format_real(v1, 6) + " v2=" + format_real(v2, 6);
}

// 0 when x is strictly positive, a reportable violation otherwise
double strict_violation(double x) {
    return x > 0.0 ? 0.0 : std::max(1e-300, -x);
}

std::vector<double> grid_betas(std::size_t n, double lo = 0.0, double hi = 1.0) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

// --- random inputs ---------------------------------------------------------

ComplexMatrix random_ginibre(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    const ComplexMatrix g = random_ginibre(rng, n);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

DensityMatrix random_density(std::mt19937_64& rng, const std::vector<std::size_t>& factors) {
    std::size_t n = 1;
    for (std::size_t f : factors) n *= f;
    const ComplexMatrix g = random_ginibre(rng, n);
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho = Complex(1.0 / tr) * rho;
    // symmetrize away the last-bit roundoff of the product
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Complex avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = avg;
            rho(j, i) = std::conj(avg);
        }
    rho.set_factors(factors);
    return DensityMatrix::from_matrix(std::move(rho));
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
    // modified Gram-Schmidt on a Ginibre sample
    ComplexMatrix g = random_ginibre(rng, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t prev = 0; prev < col; ++prev) {
            Complex proj = 0.0;
            for (std::size_t k = 0; k < n; ++k) proj += std::conj(g(k, prev)) * g(k, col);
            for (std::size_t k = 0; k < n; ++k) g(k, col) -= proj * g(k, prev);
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) norm += std::norm(g(k, col));
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < n; ++k) g(k, col) = g(k, col) / norm;
    }
    return g;
}

// --- closed-form eigenvalue oracles (independent of the Jacobi path) -------

std::array<double, 2> eig2_closed(const ComplexMatrix& a) {
    const double p = a(0, 0).real(), q = a(1, 1).real();
    const double disc = std::sqrt((p - q) * (p - q) + 4.0 * std::norm(a(0, 1)));
    return {0.5 * (p + q - disc), 0.5 * (p + q + disc)};
}

Complex det3(const ComplexMatrix& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

std::array<double, 3> eig3_closed(const ComplexMatrix& a) {
    const double q = a.trace().real() / 3.0;
    const double p1 =
        std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
    double p2 = 2.0 * p1;
    for (std::size_t i = 0; i < 3; ++i) {
        const double d = a(i, i).real() - q;
        p2 += d * d;
    }
    std::array<double, 3> eig{};
    if (p2 < 1e-30) {
        eig = {a(0, 0).real(), a(1, 1).real(), a(2, 2).real()};
    } else {
        const double p = std::sqrt(p2 / 6.0);
        ComplexMatrix b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                b(i, j) = (a(i, j) - (i == j ? Complex(q) : Complex(0.0))) / p;
        const double r = std::clamp(det3(b).real() / 2.0, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        eig[2] = q + 2.0 * p * std::cos(phi);
        eig[0] = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
        eig[1] = 3.0 * q - eig[0] - eig[2];
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

// --- kinematics suites ------------------------------------------------------

SuiteResult suite_kinematics_symmetry() {
    ErrorTracker tr;
    for (double b1 : grid_betas(60))
        for (double b2 : grid_betas(60)) {
            const WignerAngle ab = wigner_angle(Velocity(b1), Velocity(b2));
            const WignerAngle ba = wigner_angle(Velocity(b2), Velocity(b1));
            const double err = std::max(std::abs(ab.sin_omega - ba.sin_omega),
                                        std::abs(ab.cos_two_omega - ba.cos_two_omega));
            tr.update(err, at_point(b1, b2));
        }
    return tr.finish("kinematics/symmetry-exact", 0.0);
}

SuiteResult suite_kinematics_trig_identity() {
    ErrorTracker tr;
    for (double b1 : grid_betas(100, 0.0, 0.999))
        for (double b2 : grid_betas(100, 0.0, 0.999)) {
            const WignerAngle wa = wigner_angle(Velocity(b1), Velocity(b2));
            const double err =
                std::abs(1.0 - 2.0 * wa.sin_omega * wa.sin_omega - wa.cos_two_omega);
            tr.update(err, at_point(b1, b2));
        }
    return tr.finish("kinematics/trig-identity", 1e-12);
}

SuiteResult suite_kinematics_bounds_monotonicity() {
    ErrorTracker tr;
    const std::vector<double> betas = grid_betas(80);
    std::vector<double> prev_row;
    for (double b1 : betas) {
        double prev_in_row = 2.0;
        std::vector<double> row;
        for (double b2 : betas) {
            const WignerAngle wa = wigner_angle(Velocity(b1), Velocity(b2));
            tr.update(std::max(0.0, -wa.cos_two_omega), at_point(b1, b2));
            tr.update(std::max(0.0, wa.cos_two_omega - 1.0), at_point(b1, b2));
            tr.update(std::max(0.0, -wa.sin_omega), at_point(b1, b2));
            tr.update(std::max(0.0, wa.sin_omega - kInvSqrt2), at_point(b1, b2));
            tr.update(std::max(0.0, wa.cos_two_omega - prev_in_row), at_point(b1, b2));
            prev_in_row = wa.cos_two_omega;
            row.push_back(wa.cos_two_omega);
        }
        if (!prev_row.empty())
            for (std::size_t j = 0; j < row.size(); ++j)
                tr.update(std::max(0.0, row[j] - prev_row[j]), at_point(b1, betas[j]));
        prev_row = std::move(row);
    }
    return tr.finish("kinematics/bounds-monotonicity", 0.0);
}

SuiteResult suite_kinematics_rest_frame() {
    ErrorTracker tr;
    for (double b : grid_betas(200))
        tr.update(std::abs(wigner_angle(Velocity(0.0), Velocity(b)).sin_omega),
                  at_point(0.0, b));
    return tr.finish("kinematics/rest-frame-neutrality", 0.0);
}

SuiteResult suite_kinematics_rapidity() {
    ErrorTracker tr;
    for (double b : grid_betas(200, 0.0, 0.99)) {
        const Velocity v(b);
        tr.update(std::abs(lorentz_gamma(v) - std::cosh(rapidity(v))),
                  "beta=" + format_real(b, 6));
    }
    return tr.finish("kinematics/rapidity-gamma-consistency", 1e-12);
}

// --- linear algebra suites --------------------------------------------------

SuiteResult suite_partial_trace_preservation() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed);
    const std::vector<std::vector<std::size_t>> shapes{{2, 2}, {3, 3}, {2, 2, 2}};
    for (int it = 0; it < 1000; ++it) {
        const auto& shape = shapes[static_cast<std::size_t>(it) % shapes.size()];
        const std::size_t keep = static_cast<std::size_t>(it) % shape.size();
        const DensityMatrix rho = random_density(rng, shape);
        const DensityMatrix red = partial_trace(rho, keep);
        const double err = std::max(std::abs(red.matrix().trace().real() - 1.0),
                                    red.matrix().hermiticity_defect());
        tr.update(err, "case " + std::to_string(it));
    }
    return tr.finish("linalg/partial-trace-preservation", 1e-10);
}

SuiteResult suite_eigen_trace_sum() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed + 1);
    for (int it = 0; it < 400; ++it) {
        const std::size_t n = 2 + static_cast<std::size_t>(it) % 8;
        const ComplexMatrix h = random_hermitian(rng, n);
        double sum = 0.0;
        for (double lambda : hermitian_eigenvalues(h)) sum += lambda;
        tr.update(std::abs(sum - h.trace().real()),
                  "case " + std::to_string(it) + " n=" + std::to_string(n));
    }
    return tr.finish("linalg/eigen-trace-sum", 1e-10);
}

SuiteResult suite_eigen_charpoly() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed + 2);
    for (int it = 0; it < 400; ++it) {
        const std::size_t n = 2 + static_cast<std::size_t>(it) % 2;
        const ComplexMatrix h = random_hermitian(rng, n);
        const std::vector<double> jac = hermitian_eigenvalues(h);
        double err = 0.0;
        if (n == 2) {
            const auto closed = eig2_closed(h);
            err = std::max(std::abs(jac[0] - closed[0]), std::abs(jac[1] - closed[1]));
        } else {
            const auto closed = eig3_closed(h);
            for (std::size_t k = 0; k < 3; ++k)
                err = std::max(err, std::abs(jac[k] - closed[k]));
        }
        tr.update(err, "case " + std::to_string(it) + " n=" + std::to_string(n));
    }
    return tr.finish("linalg/eigen-charpoly-agreement", 1e-8);
}

SuiteResult suite_eigen_reconstruction() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed + 3);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 2 + static_cast<std::size_t>(it) % 8;
        const ComplexMatrix h = random_hermitian(rng, n);
        const EigenSystem es = hermitian_eigensystem(h);
        ComplexMatrix lambda(n, n);
        for (std::size_t k = 0; k < n; ++k) lambda(k, k) = es.values[k];
        const ComplexMatrix rebuilt = es.vectors * lambda * es.vectors.adjoint();
        tr.update((h - rebuilt).frobenius_norm(),
                  "case " + std::to_string(it) + " n=" + std::to_string(n));
    }
    return tr.finish("linalg/eigen-reconstruction", 1e-10);
}

SuiteResult suite_entropy_unitary_invariance() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed + 4);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = 2 + static_cast<std::size_t>(it) % 3;
        const DensityMatrix rho = random_density(rng, {n});
        const ComplexMatrix u = random_unitary(rng, n);
        const DensityMatrix rotated =
            DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
        tr.update(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)),
                  "case " + std::to_string(it));
    }
    return tr.finish("linalg/entropy-unitary-invariance", 1e-10);
}

SuiteResult suite_kron_associativity() {
    ErrorTracker tr;
    std::mt19937_64 rng(kSeed + 5);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<std::size_t> dims(2, 3);
    for (int it = 0; it < 100; ++it) {
        ComplexMatrix m[3];
        for (auto& mat : m) {
            const std::size_t n = dims(rng);
            mat = ComplexMatrix(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    mat(i, j) = Complex(entry(rng), entry(rng));
        }
        const ComplexMatrix left = kron(kron(m[0], m[1]), m[2]);
        const ComplexMatrix right = kron(m[0], kron(m[1], m[2]));
        double err = 0.0;
        for (std::size_t i = 0; i < left.rows(); ++i)
            for (std::size_t j = 0; j < left.cols(); ++j)
                err = std::max(err, std::abs(left(i, j) - right(i, j)));
        tr.update(err, "case " + std::to_string(it));
    }
    return tr.finish("linalg/kron-associativity", 0.0);
}

// --- boosted-state suites ----------------------------------------------------

SuiteResult suite_boost_norm() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const VelocitySpinState psi = boost(initial_state(Velocity(b1)), Velocity(b2));
            double n2 = 0.0;
            for (const Complex& a : psi.amplitudes()) n2 += std::norm(a);
            tr.update(std::abs(n2 - 1.0), at_point(b1, b2));
        }
    return tr.finish("state/boost-norm-preservation", 1e-12);
}

SuiteResult suite_mode_entropy_conservation() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const ModeEmbeddedState mode =
                mode_embedding(boost(initial_state(Velocity(b1)), Velocity(b2)));
            for (std::size_t m = 0; m < 2; ++m) {
                const double s = von_neumann_entropy(single_mode_density_matrix(mode, m));
                tr.update(std::abs(s - 1.0),
                          at_point(b1, b2) + " mode=" + std::to_string(m));
            }
        }
    return tr.finish("state/mode-entropy-conservation", 1e-10);
}

SuiteResult suite_schmidt_symmetry() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const VelocitySpinState psi = boost(initial_state(Velocity(b1)), Velocity(b2));
            const double sv = von_neumann_entropy(velocity_density_matrix(psi));
            const double ss = von_neumann_entropy(spin_density_matrix(psi));
            tr.update(std::abs(sv - ss), at_point(b1, b2));
        }
    return tr.finish("state/schmidt-symmetry", 1e-10);
}

SuiteResult suite_reduced_closed_form() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const WignerAngle wa = wigner_angle(Velocity(b1), Velocity(b2));
            const DensityMatrix rho_v =
                velocity_density_matrix(boost(initial_state(Velocity(b1)), Velocity(b2)));
            const double c2w = wa.cos_two_omega;
            double err = 0.0;
            err = std::max(err, std::abs(rho_v(0, 0) - Complex(0.5)));
            err = std::max(err, std::abs(rho_v(1, 1) - Complex(0.5)));
            err = std::max(err, std::abs(rho_v(0, 1) - Complex(0.5 * c2w)));
            err = std::max(err, std::abs(rho_v(1, 0) - Complex(0.5 * c2w)));
            tr.update(err, at_point(b1, b2));
        }
    return tr.finish("state/reduced-closed-form", 1e-12);
}

SuiteResult suite_reduced_eigenvalue_identity() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const WignerAngle wa = wigner_angle(Velocity(b1), Velocity(b2));
            const DensityMatrix rho_v =
                velocity_density_matrix(boost(initial_state(Velocity(b1)), Velocity(b2)));
            const std::vector<double> eigs = hermitian_eigenvalues(rho_v.matrix());
            const double err =
                std::max(std::abs(eigs[0] - 0.5 * (1.0 - wa.cos_two_omega)),
                         std::abs(eigs[1] - 0.5 * (1.0 + wa.cos_two_omega)));
            tr.update(err, at_point(b1, b2));
        }
    return tr.finish("state/reduced-eigenvalue-identity", 1e-12);
}

// --- measures suites ---------------------------------------------------------

SuiteResult suite_bell_closed_form() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const WignerAngle wa = wigner_angle(Velocity(b1), Velocity(b2));
            const DensityMatrix rho_v =
                velocity_density_matrix(boost(initial_state(Velocity(b1)), Velocity(b2)));
            const double generic = bell_chsh_max(effective_two_qubit(rho_v).density());
            const double closed = bell_chsh_closed_form(wa.cos_two_omega);
            tr.update(std::abs(generic - closed), at_point(b1, b2));
        }
    return tr.finish("measures/bell-closed-form-agreement", 1e-10);
}

SuiteResult suite_entropy_bookkeeping() {
    ErrorTracker tr;
    for (double b1 : grid_betas(50))
        for (double b2 : grid_betas(50)) {
            const VelocitySpinState psi = boost(initial_state(Velocity(b1)), Velocity(b2));
            const double e = relative_entropy_of_entanglement(velocity_density_matrix(psi));
            const double c = concurrence_pure(psi);
            const double eof =
                binary_entropy_bits(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
            tr.update(std::abs(e + eof - 1.0), at_point(b1, b2));
        }
    return tr.finish("measures/entropy-bookkeeping", 1e-10);
}

SuiteResult suite_bell_threshold_and_positivity() {
    ErrorTracker tr;
    for (double b1 : grid_betas(60))
        for (double b2 : grid_betas(60)) {
            const AnalysisRecord rec = analyze(Velocity(b1), Velocity(b2));
            if (b1 == 1.0 && b2 == 1.0) {
                tr.update(std::abs(rec.bell - 2.0), at_point(b1, b2));
                tr.update(std::abs(rec.entanglement), at_point(b1, b2));
            } else {
                tr.update(strict_violation(rec.bell - 2.0), at_point(b1, b2));
                if (b1 < 1.0 && b2 < 1.0)
                    tr.update(strict_violation(rec.entanglement), at_point(b1, b2));
            }
        }
    return tr.finish("measures/bell-threshold-positivity", 0.0);
}

SuiteResult suite_relative_entropy_form() {
    ErrorTracker tr;
    for (double c2w : grid_betas(400)) {
        ComplexMatrix m(2, 2);
        m(0, 0) = m(1, 1) = 0.5;
        m(0, 1) = m(1, 0) = 0.5 * c2w;
        m.set_factors({2});
        const double generic =
            relative_entropy_of_entanglement(DensityMatrix::from_matrix(std::move(m)));
        tr.update(std::abs(generic - relative_entropy_closed_form(c2w)),
                  "cos2w=" + format_real(c2w, 6));
    }
    return tr.finish("measures/relative-entropy-form", 1e-12);
}

SuiteResult suite_pauli_sign_insensitivity() {
    // B built from the opposite sigma_y sign convention must agree
    ErrorTracker tr;
    ComplexMatrix sy_flipped(2, 2);
    sy_flipped(0, 1) = Complex(0.0, 1.0);
    sy_flipped(1, 0) = Complex(0.0, -1.0);
    for (double b1 : grid_betas(25))
        for (double b2 : grid_betas(25)) {
            const DensityMatrix rho_v =
                velocity_density_matrix(boost(initial_state(Velocity(b1)), Velocity(b2)));
            const DensityMatrix rho = effective_two_qubit(rho_v).density();
            const ComplexMatrix* sigma[3] = {&pauli_x(), &sy_flipped, &pauli_z()};
            double t[3][3];
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    t[i][j] = (rho.matrix() * kron(*sigma[i], *sigma[j])).trace().real();
            ComplexMatrix m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    double s = 0.0;
                    for (std::size_t k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
                    m(i, j) = s;
                }
            const std::vector<double> eigs = hermitian_eigenvalues(m);
            const double flipped = 2.0 * std::sqrt(eigs[2] + eigs[1]);
            tr.update(std::abs(flipped - bell_chsh_max(rho)), at_point(b1, b2));
        }
    return tr.finish("measures/pauli-sign-insensitivity", 1e-12);
}

// --- sweep and CNOT suites ---------------------------------------------------

SuiteResult suite_sweep_determinism() {
    ErrorTracker tr;
    SweepConfig cfg;
    cfg.grid_n = 41;
    const std::string serial_a = render_csv(run_sweep(cfg, 1), cfg.precision);
    const std::string serial_b = render_csv(run_sweep(cfg, 1), cfg.precision);
    const std::string parallel = render_csv(run_sweep(cfg, 4), cfg.precision);
    if (serial_a != serial_b) tr.update(1.0, "serial reruns differ");
    if (serial_a != parallel) tr.update(1.0, "serial vs 4 threads differ");
    return tr.finish("sweep/serial-parallel-determinism", 0.0);
}

SuiteResult suite_sweep_csv_round_trip() {
    ErrorTracker tr;
    SweepConfig cfg;
    cfg.grid_n = 51;
    const std::string csv = render_csv(run_sweep(cfg), cfg.precision);
    std::size_t pos = csv.find('\n') + 1;  // skip header
    while (pos < csv.size()) {
        const std::size_t eol = csv.find('\n', pos);
        const std::string line = csv.substr(pos, eol - pos);
        pos = eol + 1;
        std::array<double, 8> col{};
        std::size_t start = 0;
        for (double& c : col) {
            const std::size_t comma = line.find(',', start);
            c = std::strtod(line.c_str() + start, nullptr);
            start = comma == std::string::npos ? line.size() : comma + 1;
        }
        const double recomputed = relative_entropy_closed_form(col[3]);
        tr.update(std::abs(recomputed - col[5]),
                  at_point(col[0], col[1]));
    }
    return tr.finish("sweep/csv-round-trip", std::pow(10.0, 1 - cfg.precision));
}

SuiteResult suite_sweep_monotone_surface() {
    ErrorTracker tr;
    SweepConfig cfg;  // default 101 x 101 over [0,1]^2
    const std::vector<AnalysisRecord> recs = run_sweep(cfg);
    const std::size_t n = cfg.grid_n;
    auto at = [&](std::size_t i, std::size_t j) -> const AnalysisRecord& {
        return recs[i * n + j];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const AnalysisRecord& r = at(i, j);
            const std::string where = at_point(r.v1, r.v2);
            if (j + 1 < n) {
                tr.update(std::max(0.0, at(i, j + 1).cos_two_omega - r.cos_two_omega), where);
                tr.update(std::max(0.0, at(i, j + 1).entanglement - r.entanglement), where);
            }
            if (i + 1 < n) {
                tr.update(std::max(0.0, at(i + 1, j).cos_two_omega - r.cos_two_omega), where);
                tr.update(std::max(0.0, at(i + 1, j).entanglement - r.entanglement), where);
            }
            if (i == 0 || j == 0) {  // a resting particle or observer: no rotation
                tr.update(std::abs(r.cos_two_omega - 1.0), where);
                tr.update(std::abs(r.entanglement - 1.0), where);
            } else if (i == n - 1 && j == n - 1) {
                tr.update(std::abs(r.cos_two_omega), where);
                tr.update(std::abs(r.entanglement), where);
            } else {
                tr.update(strict_violation(r.cos_two_omega), where);
                tr.update(strict_violation(r.entanglement), where);
            }
        }
    return tr.finish("sweep/monotone-surface", 0.0);
}

SuiteResult suite_cnot_fidelity() {
    ErrorTracker tr;
    tr.update(std::abs(cnot_limit_fidelity(Velocity(1.0), Velocity(1.0)) - 1.0), "t=1");
    tr.update(std::abs(cnot_limit_fidelity(Velocity(0.0), Velocity(0.0)) - 0.5), "t=0");
    double prev = -1.0;
    for (double t : grid_betas(101)) {
        const double f = cnot_limit_fidelity(Velocity(t), Velocity(t));
        const WignerAngle wa = wigner_angle(Velocity(t), Velocity(t));
        tr.update(std::abs(f - 0.5 * (1.0 + wa.sin_two_omega())),
                  "t=" + format_real(t, 6));
        tr.update(std::max(0.0, prev - f), "t=" + format_real(t, 6));
        prev = f;
    }
    return tr.finish("cnot/fidelity-endpoints-monotone", 1e-12);
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
    return {
        suite_kinematics_symmetry(),
        suite_kinematics_trig_identity(),
        suite_kinematics_bounds_monotonicity(),
        suite_kinematics_rest_frame(),
        suite_kinematics_rapidity(),
        suite_partial_trace_preservation(),
        suite_eigen_trace_sum(),
        suite_eigen_charpoly(),
        suite_eigen_reconstruction(),
        suite_entropy_unitary_invariance(),
        suite_kron_associativity(),
        suite_boost_norm(),
        suite_mode_entropy_conservation(),
        suite_schmidt_symmetry(),
        suite_reduced_closed_form(),
        suite_reduced_eigenvalue_identity(),
        suite_bell_closed_form(),
        suite_entropy_bookkeeping(),
        suite_bell_threshold_and_positivity(),
        suite_relative_entropy_form(),
        suite_pauli_sign_insensitivity(),
        suite_sweep_determinism(),
        suite_sweep_csv_round_trip(),
        suite_sweep_monotone_surface(),
        suite_cnot_fidelity(),
    };
}

}  // namespace wigner
