#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wigner {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;  // entry-wise
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;  // eigenvalues >= -kPsdTol

/// Dense row-major complex matrix. An optional list of tensor factor
/// dimensions records product structure (e.g. {2, 2} for velocity x spin);
/// their product must equal the matrix dimension.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<std::size_t>& factors() const noexcept { return factors_; }
    void set_factors(std::vector<std::size_t> factors);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
    std::vector<std::size_t> factors_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x);

/// Tensor product; dimensions multiply, factor lists concatenate.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Unit-norm state vector over a labeled tensor-product basis.
class PureState {
public:
    PureState(std::vector<Complex> amplitudes, std::vector<std::size_t> factors);

    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    const std::vector<std::size_t>& factors() const noexcept { return factors_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

    /// |psi><psi| with the factor list attached.
    ComplexMatrix projector() const;

private:
    std::vector<Complex> amplitudes_;
    std::vector<std::size_t> factors_;
};

/// Hermitian, unit-trace, positive semidefinite matrix (all within the
/// tolerances above, checked on construction).
class DensityMatrix {
public:
    static DensityMatrix from_matrix(ComplexMatrix m);
    static DensityMatrix from_pure(const PureState& psi);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// Reduced density matrix on one tensor factor, all others traced out.
/// `keep` indexes into the factor list.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations;
/// intended for the small dimensions used here (<= 9).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // eigenvectors as columns, same order
};

EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// -p log2(p) - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy_bits(double p);

/// -tr(rho log2 rho). Eigenvalues in [-kPsdTol, 0) are clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace wigner
