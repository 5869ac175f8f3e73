#include "wigner/measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wigner {

namespace {

ComplexMatrix make_pauli(Complex a01, Complex a10, Complex a00 = 0.0, Complex a11 = 0.0) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a00;
    m(0, 1) = a01;
    m(1, 0) = a10;
    m(1, 1) = a11;
    return m;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix sx = make_pauli(1.0, 1.0);
    return sx;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix sy = make_pauli(Complex(0.0, -1.0), Complex(0.0, 1.0));
    return sy;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix sz = make_pauli(0.0, 0.0, 1.0, -1.0);
    return sz;
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("correlation matrix needs a two-qubit (4x4) state");
    const ComplexMatrix* sigma[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    CorrelationMatrix out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out.t[i][j] = (rho.matrix() * kron(*sigma[i], *sigma[j])).trace().real();
    return out;
}

double bell_chsh_max(const DensityMatrix& rho) {
    const CorrelationMatrix t = correlation_matrix(rho);
    ComplexMatrix m(3, 3);  // t^T t
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += t.t[k][i] * t.t[k][j];
            m(i, j) = s;
        }
    const std::vector<double> eigs = hermitian_eigenvalues(m);  // ascending
    return 2.0 * std::sqrt(eigs[2] + eigs[1]);
}

double bell_chsh_closed_form(double cos_two_omega) {
    if (!(cos_two_omega >= -1.0 && cos_two_omega <= 1.0))
        throw std::domain_error("cos 2w must lie in [-1, 1]");
    return 2.0 * std::sqrt(1.0 + cos_two_omega * cos_two_omega);
}

double relative_entropy_of_entanglement(const DensityMatrix& rho_v) {
    if (rho_v.dim() != 2)
        throw std::invalid_argument("expected a 2x2 velocity-mode density matrix");
    if (std::abs(rho_v(0, 0).real() - 0.5) > 1e-9 ||
        std::abs(rho_v(1, 1).real() - 0.5) > 1e-9)
        throw std::domain_error(
            "closed form applies only to balanced superpositions (diagonals 1/2)");
    return 1.0 - von_neumann_entropy(rho_v);
}

double relative_entropy_closed_form(double cos_two_omega) {
    if (!(cos_two_omega >= 0.0 && cos_two_omega <= 1.0))
        throw std::domain_error("cos 2w must lie in [0, 1]");
    return 1.0 - binary_entropy_bits(0.5 * (1.0 + cos_two_omega));
}

double concurrence_pure(const VelocitySpinState& state) {
    const auto& a = state.amplitudes();
    return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

AnalysisRecord analyze(Velocity v1, Velocity v2) {
    const WignerAngle wa = wigner_angle(v1, v2);
    const double c2w = wa.cos_two_omega;

    // run the state-vector route alongside the closed forms; its coherence
    // has to reproduce cos 2w or the numerics are broken
    const VelocitySpinState boosted = boost(initial_state(v1), v2);
    const DensityMatrix rho_v = velocity_density_matrix(boosted);
    const double coherence = 2.0 * rho_v(0, 1).real();
    if (std::abs(coherence - c2w) > 1e-9) {
        std::ostringstream msg;
        msg << "reduced-state coherence " << coherence
            << " disagrees with cos 2w = " << c2w << " at v1 = " << v1.beta()
            << ", v2 = " << v2.beta();
        throw std::runtime_error(msg.str());
    }

    AnalysisRecord rec;
    rec.v1 = v1.beta();
    rec.v2 = v2.beta();
    rec.omega = wa.omega();
    rec.cos_two_omega = c2w;
    rec.eig_low = 0.5 * (1.0 - c2w);
    rec.eig_high = 0.5 * (1.0 + c2w);
    rec.entropy = binary_entropy_bits(rec.eig_high);
    rec.entanglement = 1.0 - rec.entropy;
    rec.bell = bell_chsh_closed_form(c2w);
    rec.concurrence = wa.sin_two_omega();
    return rec;
}

}  // namespace wigner
