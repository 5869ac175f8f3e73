#pragma once

#include <numbers>

namespace wigner {

inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

/// Dimensionless speed v/c in [0, 1]. beta = 1 is accepted as the
/// light-speed limit; gamma and the rotation angle then take their
/// analytic limit values instead of overflowing.
class Velocity {
public:
    explicit Velocity(double beta);

    double beta() const noexcept { return beta_; }
    bool is_light_speed() const noexcept { return beta_ == 1.0; }

private:
    double beta_;
};

/// Lorentz factor (1 - beta^2)^(-1/2); +infinity at beta = 1.
double lorentz_gamma(Velocity v) noexcept;

/// atanh(beta). Throws std::domain_error at beta = 1.
double rapidity(Velocity v);

/// Spin rotation seen by an observer moving perpendicular to the
/// particle's velocity, parametrized by sin(omega) and cos(2 omega):
///
///   sin(omega)   = sqrt((g1 - 1)(g2 - 1) / (2 (1 + g1 g2)))
///   cos(2 omega) = (g1 + g2) / (1 + g1 g2)
///
/// omega lies in [0, pi/4]; it reaches pi/4 only when both speeds are c.
struct WignerAngle {
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double sin_omega = 0.0;      // in [0, 1/sqrt(2)]
    double cos_two_omega = 1.0;  // in [0, 1]

    double omega() const;      // radians
    double cos_omega() const;
    double sin_two_omega() const;
};

/// Symmetric in its arguments. At the light-speed limits the analytic
/// values are used: cos(2w) -> 1/gamma_other when one speed is c, and
/// sin(w) = cos(w) = 1/sqrt(2) when both are.
WignerAngle wigner_angle(Velocity v1, Velocity v2);

}  // namespace wigner
