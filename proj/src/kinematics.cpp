#include "wigner/kinematics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wigner {

Velocity::Velocity(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0) {
        throw std::domain_error("velocity beta must lie in [0, 1], got " +
                                std::to_string(beta));
    }
}

double lorentz_gamma(Velocity v) noexcept {
    if (v.is_light_speed()) {
        return std::numeric_limits<double>::infinity();
    }
    const double b = v.beta();
    // (1 - b)(1 + b) keeps precision where 1 - b*b cancels near b = 1
    return 1.0 / std::sqrt((1.0 - b) * (1.0 + b));
}

double rapidity(Velocity v) {
    if (v.is_light_speed()) {
        throw std::domain_error("rapidity diverges at beta = 1");
    }
    return std::atanh(v.beta());
}

double WignerAngle::omega() const {
    return std::asin(sin_omega);
}

double WignerAngle::cos_omega() const {
    // keyed to cos 2w so the half-angle pair stays consistent at the limits
    return std::sqrt(0.5 * (1.0 + cos_two_omega));
}

double WignerAngle::sin_two_omega() const {
    return std::sqrt((1.0 - cos_two_omega) * (1.0 + cos_two_omega));
}

WignerAngle wigner_angle(Velocity v1, Velocity v2) {
    const double g1 = lorentz_gamma(v1);
    const double g2 = lorentz_gamma(v2);

    WignerAngle wa;
    wa.gamma1 = g1;
    wa.gamma2 = g2;

    const bool lim1 = std::isinf(g1);
    const bool lim2 = std::isinf(g2);
    if (lim1 && lim2) {
        wa.sin_omega = kInvSqrt2;  // omega -> pi/4
        wa.cos_two_omega = 0.0;
    } else if (lim1 || lim2) {
        // limits as the diverging gamma drops out of the ratios
        const double g = lim1 ? g2 : g1;
        wa.sin_omega = std::sqrt((g - 1.0) / (2.0 * g));
        wa.cos_two_omega = 1.0 / g;
    } else {
        wa.sin_omega = std::sqrt((g1 - 1.0) * (g2 - 1.0) / (2.0 * (1.0 + g1 * g2)));
        wa.cos_two_omega = (g1 + g2) / (1.0 + g1 * g2);
    }
    return wa;
}

}  // namespace wigner
