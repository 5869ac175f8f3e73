#pragma once

#include <array>
#include <optional>

#include "wigner/kinematics.hpp"
#include "wigner/linalg.hpp"

namespace wigner {

/// Spin-1/2 particle in a superposition of opposite velocities +/-v1,
/// written over the ordered basis
///   {|+v1,up>, |+v1,dn>, |-v1,up>, |-v1,dn>}.
/// The frame is either the particle-average frame or that of an observer
/// moving perpendicular to the particle axis at speed v2.
class VelocitySpinState {
public:
    VelocitySpinState(std::array<Complex, 4> amplitudes, Velocity v1,
                      std::optional<Velocity> observer);

    const std::array<Complex, 4>& amplitudes() const noexcept { return amplitudes_; }
    Velocity v1() const noexcept { return v1_; }
    bool is_boosted() const noexcept { return observer_.has_value(); }
    std::optional<Velocity> observer() const noexcept { return observer_; }

    PureState as_pure_state() const;  // factors {2, 2}: velocity x spin

private:
    std::array<Complex, 4> amplitudes_;
    Velocity v1_;
    std::optional<Velocity> observer_;
};

/// (|+v1> + |-v1>) |up> / sqrt(2) in the particle-average frame.
VelocitySpinState initial_state(Velocity v1);

/// State as seen by an observer moving at v2 perpendicular to the
/// particle axis. The spin picks up the rotation exp(+i w sx) on the
/// |+v1> branch and exp(-i w sx) on the |-v1> branch, w from
/// wigner_angle(v1, v2); the velocity labels are unchanged. Throws
/// std::logic_error if the state is already boosted.
VelocitySpinState boost(const VelocitySpinState& state, Velocity v2);

/// Spin traced out; 2x2 over {|+v1>, |-v1>}. For a boosted state this is
/// (1/2) [[1, cos 2w], [cos 2w, 1]].
DensityMatrix velocity_density_matrix(const VelocitySpinState& state);

/// Velocity traced out; 2x2 over {|up>, |dn>}. For a boosted state this
/// is diag(cos^2 w, sin^2 w).
DensityMatrix spin_density_matrix(const VelocitySpinState& state);

/// The same particle written as a pair of field modes (+v1 and -v1), each
/// holding vacuum, spin-up, or spin-down:
///   basis {|vac>, |up>, |dn>} (x) {|vac>, |up>, |dn>}, index 3*m+ + m-.
/// Amplitudes vanish on |vac,vac> and on doubly occupied combinations.
/// Across this mode bipartition the boost acts locally, so the 1-bit mode
/// entanglement of the initial state is frame independent.
class ModeEmbeddedState {
public:
    explicit ModeEmbeddedState(std::array<Complex, 9> amplitudes);

    const std::array<Complex, 9>& amplitudes() const noexcept { return amplitudes_; }
    PureState as_pure_state() const;  // factors {3, 3}

private:
    std::array<Complex, 9> amplitudes_;
};

/// |+v1>|chi> -> |chi>|vac>, |-v1>|chi> -> |vac>|chi>.
ModeEmbeddedState mode_embedding(const VelocitySpinState& state);

/// Reduced 3x3 state of one mode (0 = +v1 mode, 1 = -v1 mode).
DensityMatrix single_mode_density_matrix(const ModeEmbeddedState& state, std::size_t mode);

/// Velocity-mode pair in occupation-number form over {|00>,|01>,|10>,|11>}
/// with |+v1> -> |10> and |-v1> -> |01>; support must be confined to the
/// one-particle block {|01>, |10>} (checked on construction).
class EffectiveTwoQubitState {
public:
    explicit EffectiveTwoQubitState(DensityMatrix rho);

    const DensityMatrix& density() const noexcept { return rho_; }

private:
    DensityMatrix rho_;
};

EffectiveTwoQubitState effective_two_qubit(const DensityMatrix& rho_v);

/// Squared overlap of the boosted state with the light-speed limit state
/// (|+v1>(|up> + i|dn>) + |-v1>(|up> - i|dn>)) / 2, in which the spin is
/// flipped into one of two orthogonal states controlled by the velocity
/// sign. Equals (1 + sin 2w)/2; 1 when v1 = v2 = 1.
double cnot_limit_fidelity(Velocity v1, Velocity v2);

}  // namespace wigner
