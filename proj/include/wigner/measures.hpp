#pragma once

#include <array>

#include "wigner/boosted_state.hpp"

namespace wigner {

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();  // [[0, -i], [i, 0]]
const ComplexMatrix& pauli_z();

/// Pauli correlation matrix t_ij = tr(rho sigma_i (x) sigma_j) of a
/// two-qubit state, i, j in {x, y, z}.
struct CorrelationMatrix {
    std::array<std::array<double, 3>, 3> t{};

    double operator()(std::size_t i, std::size_t j) const { return t[i][j]; }
};

CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

/// Maximal CHSH expectation value 2 sqrt(m1 + m2), where m1, m2 are the
/// two largest eigenvalues of t^T t. Generic in the 4x4 state.
double bell_chsh_max(const DensityMatrix& rho);

/// Specialization for the balanced velocity-mode family with coherence
/// c = cos 2w: B = 2 sqrt(1 + c^2).
double bell_chsh_closed_form(double cos_two_omega);

/// Relative entropy of entanglement 1 - S(rho_v) for a balanced 2x2
/// velocity-mode state (diagonals 1/2 within 1e-9; throws
/// std::domain_error otherwise, the closed form does not apply).
double relative_entropy_of_entanglement(const DensityMatrix& rho_v);

/// The same quantity directly from the coherence:
/// E = 1 - H2((1 + cos 2w)/2).
double relative_entropy_closed_form(double cos_two_omega);

/// Concurrence 2 |a0 a3 - a1 a2| of the pure 4-amplitude state across the
/// velocity/spin split; sin 2w for a boosted state.
double concurrence_pure(const VelocitySpinState& state);

/// One grid point of the full analysis.
struct AnalysisRecord {
    double v1 = 0.0;
    double v2 = 0.0;
    double omega = 0.0;
    double cos_two_omega = 1.0;
    double eig_low = 0.0;       // (1 - cos 2w)/2
    double eig_high = 1.0;      // (1 + cos 2w)/2
    double entropy = 0.0;       // S, bits
    double entanglement = 1.0;  // E = 1 - S, bits
    double bell = 0.0;          // B
    double concurrence = 0.0;   // C of the boosted pure state
};

/// Full pipeline for one velocity pair. The reported measures are
/// evaluated from cos 2w through the closed forms, which stay exact at
/// the light-speed limits; the state-vector route (boost + partial trace)
/// runs alongside and its coherence must agree with cos 2w to 1e-9,
/// otherwise std::runtime_error is thrown.
AnalysisRecord analyze(Velocity v1, Velocity v2);

}  // namespace wigner
