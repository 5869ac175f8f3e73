#include "wigner/boosted_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace wigner {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kSectorTol = 1e-15;
constexpr double kSupportTol = 1e-12;

double norm_squared(const Complex* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(a[k]);
    return s;
}

}  // namespace

VelocitySpinState::VelocitySpinState(std::array<Complex, 4> amplitudes, Velocity v1,
                                     std::optional<Velocity> observer)
    : amplitudes_(amplitudes), v1_(v1), observer_(observer) {
    const double n2 = norm_squared(amplitudes_.data(), amplitudes_.size());
    if (std::abs(n2 - 1.0) > kNormTol)
        throw std::invalid_argument("velocity-spin state is not normalized: |psi|^2 = " +
                                    std::to_string(n2));
}

PureState VelocitySpinState::as_pure_state() const {
    return PureState({amplitudes_.begin(), amplitudes_.end()}, {2, 2});
}

VelocitySpinState initial_state(Velocity v1) {
    return VelocitySpinState({kInvSqrt2, 0.0, kInvSqrt2, 0.0}, v1, std::nullopt);
}

VelocitySpinState boost(const VelocitySpinState& state, Velocity v2) {
    if (state.is_boosted())
        throw std::logic_error("state is already expressed in a boosted frame");

    const WignerAngle wa = wigner_angle(state.v1(), v2);
    const double c = wa.cos_omega();
    const Complex is(0.0, wa.sin_omega);
    const auto& a = state.amplitudes();
    // exp(+i w sx) on the |+v1> spin block, exp(-i w sx) on |-v1>; only the
    // action on |up> is physically pinned, the |dn> column follows from
    // unitarity with this phase convention
    const std::array<Complex, 4> rotated{
        c * a[0] + is * a[1],
        is * a[0] + c * a[1],
        c * a[2] - is * a[3],
        -is * a[2] + c * a[3],
    };
    return VelocitySpinState(rotated, state.v1(), v2);
}

DensityMatrix velocity_density_matrix(const VelocitySpinState& state) {
    return partial_trace(DensityMatrix::from_pure(state.as_pure_state()), 0);
}

DensityMatrix spin_density_matrix(const VelocitySpinState& state) {
    return partial_trace(DensityMatrix::from_pure(state.as_pure_state()), 1);
}

ModeEmbeddedState::ModeEmbeddedState(std::array<Complex, 9> amplitudes)
    : amplitudes_(amplitudes) {
    const double n2 = norm_squared(amplitudes_.data(), amplitudes_.size());
    if (std::abs(n2 - 1.0) > kNormTol)
        throw std::invalid_argument("mode-embedded state is not normalized");
    // exactly one particle: nothing on |vac,vac> or doubly occupied entries
    for (std::size_t plus = 0; plus < 3; ++plus)
        for (std::size_t minus = 0; minus < 3; ++minus) {
            const bool one_particle = (plus == 0) != (minus == 0);
            if (!one_particle && std::abs(amplitudes_[3 * plus + minus]) > kSectorTol)
                throw std::invalid_argument(
                    "mode-embedded state leaves the one-particle sector");
        }
}

PureState ModeEmbeddedState::as_pure_state() const {
    return PureState({amplitudes_.begin(), amplitudes_.end()}, {3, 3});
}

ModeEmbeddedState mode_embedding(const VelocitySpinState& state) {
    const auto& a = state.amplitudes();
    std::array<Complex, 9> mode{};
    // occupant codes: 0 = vac, 1 = up, 2 = dn; index = 3 * plus + minus
    mode[3 * 1 + 0] = a[0];  // |+v1,up> -> |up, vac>
    mode[3 * 2 + 0] = a[1];  // |+v1,dn> -> |dn, vac>
    mode[3 * 0 + 1] = a[2];  // |-v1,up> -> |vac, up>
    mode[3 * 0 + 2] = a[3];  // |-v1,dn> -> |vac, dn>
    return ModeEmbeddedState(mode);
}

DensityMatrix single_mode_density_matrix(const ModeEmbeddedState& state, std::size_t mode) {
    if (mode > 1) throw std::out_of_range("mode index must be 0 (+v1) or 1 (-v1)");
    return partial_trace(DensityMatrix::from_pure(state.as_pure_state()), mode);
}

EffectiveTwoQubitState::EffectiveTwoQubitState(DensityMatrix rho) : rho_(std::move(rho)) {
    if (rho_.dim() != 4)
        throw std::invalid_argument("effective two-qubit state must be 4x4");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool in_block = (i == 1 || i == 2) && (j == 1 || j == 2);
            if (!in_block && std::abs(rho_(i, j)) > kSupportTol)
                throw std::invalid_argument(
                    "support leaks outside the one-particle block {|01>, |10>}");
        }
}

EffectiveTwoQubitState effective_two_qubit(const DensityMatrix& rho_v) {
    if (rho_v.dim() != 2)
        throw std::invalid_argument("expected a 2x2 velocity-mode density matrix");
    ComplexMatrix m(4, 4);
    // |+v1> occupies the first mode: |10>, index 2; |-v1> the second: |01>, index 1
    m(2, 2) = rho_v(0, 0);
    m(2, 1) = rho_v(0, 1);
    m(1, 2) = rho_v(1, 0);
    m(1, 1) = rho_v(1, 1);
    m.set_factors({2, 2});
    return EffectiveTwoQubitState(DensityMatrix::from_matrix(std::move(m)));
}

double cnot_limit_fidelity(Velocity v1, Velocity v2) {
    const VelocitySpinState boosted = boost(initial_state(v1), v2);
    static const std::array<Complex, 4> target{
        Complex(0.5, 0.0), Complex(0.0, 0.5), Complex(0.5, 0.0), Complex(0.0, -0.5)};
    Complex overlap = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        overlap += std::conj(target[k]) * boosted.amplitudes()[k];
    return std::norm(overlap);
}

}  // namespace wigner
