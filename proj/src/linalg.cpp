#include "wigner/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace wigner {

namespace {

std::size_t factor_product(const std::vector<std::size_t>& factors) {
    std::size_t p = 1;
    for (std::size_t f : factors) p *= f;
    return p;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void ComplexMatrix::set_factors(std::vector<std::size_t> factors) {
    if (!factors.empty() &&
        (rows_ != cols_ || factor_product(factors) != rows_)) {
        throw std::invalid_argument(
            "factor dimensions must multiply to the matrix dimension");
    }
    factors_ = std::move(factors);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scale * a(i, j);
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Complex> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex aij = a(ia, ja);
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
        }
    std::vector<std::size_t> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    if (!factors.empty() && factor_product(factors) == out.rows() && out.rows() == out.cols())
        out.set_factors(std::move(factors));
    return out;
}

PureState::PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> factors)
    : amplitudes_(std::move(amplitudes)), factors_(std::move(factors)) {
    if (factor_product(factors_) != amplitudes_.size())
        throw std::invalid_argument("state factors must multiply to the amplitude count");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("state is not normalized: |psi|^2 = " +
                                    std::to_string(norm2));
}

ComplexMatrix PureState::projector() const {
    const std::size_t n = dim();
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    out.set_factors(factors_);
    return out;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("density matrix must be square");
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTol)
        throw std::invalid_argument("density matrix is not Hermitian: defect " +
                                    std::to_string(defect));
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw std::invalid_argument("density matrix trace is not 1: " +
                                    std::to_string(tr.real()));
    const std::vector<double> eigs = hermitian_eigenvalues(m);
    if (eigs.front() < -kPsdTol)
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(eigs.front()));
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return from_matrix(psi.projector());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    const auto& factors = rho.matrix().factors();
    if (factors.size() < 2)
        throw std::invalid_argument(
            "partial_trace needs a density matrix with at least two tensor factors");
    if (keep >= factors.size())
        throw std::out_of_range("partial_trace: factor index " + std::to_string(keep) +
                                " out of range for " + std::to_string(factors.size()) +
                                " factors");

    std::size_t dim_left = 1, dim_right = 1;
    for (std::size_t k = 0; k < keep; ++k) dim_left *= factors[k];
    for (std::size_t k = keep + 1; k < factors.size(); ++k) dim_right *= factors[k];
    const std::size_t dk = factors[keep];

    ComplexMatrix out(dk, dk);
    for (std::size_t l = 0; l < dim_left; ++l)
        for (std::size_t r = 0; r < dim_right; ++r)
            for (std::size_t m = 0; m < dk; ++m)
                for (std::size_t n = 0; n < dk; ++n)
                    out(m, n) += rho((l * dk + m) * dim_right + r,
                                     (l * dk + n) * dim_right + r);
    out.set_factors({dk});
    return DensityMatrix::from_matrix(std::move(out));
}

namespace {

double offdiagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eigensystem needs a square matrix");
    if (m.hermiticity_defect() > 1e-10)
        throw std::invalid_argument("matrix is not Hermitian within 1e-10");

    const std::size_t n = m.rows();
    // iterate on the symmetrized matrix so roundoff in the input cannot
    // push the rotations off the Hermitian manifold
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-13;
    for (int sweep = 0; sweep < kMaxSweeps && offdiagonal_norm(a) >= kOffTol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                // strip the phase of a_pq, then the classic real rotation
                const Complex phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // unitary differs from identity only at
                //   U(p,p) = c, U(p,q) = s, U(q,p) = -s conj(phase), U(q,q) = c conj(phase)
                const Complex w = std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {  // A <- A U, V <- V U
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * w * akq;
                    a(k, q) = s * akp + c * w * akq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * w * vkq;
                    v(k, q) = s * vkp + c * w * vkq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- U+ A
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row)
            out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

double binary_entropy_bits(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("binary entropy argument must lie in [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    const double q = 1.0 - p;
    if (q > 0.0) h -= q * std::log2(q);
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix())) {
        if (lambda <= 0.0) continue;  // clamp the -kPsdTol..0 roundoff band
        s -= lambda * std::log2(lambda);
    }
    return s;
}

}  // namespace wigner
