#pragma once

// Dense complex linear algebra shared by every module. Matrices are
// Eigen dynamic-size complex matrices; the sizes used are 3, 9 and 27.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace braidberry {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute tolerance for algebraic identities on O(1)-entry matrices.
inline constexpr double kDefaultTol = 1e-10;

struct HermEig {
    RealVector eigenvalues;      // ascending
    ComplexMatrix eigenvectors;  // orthonormal columns
};

ComplexMatrix identity(std::ptrdiff_t n);

/// Throws DimensionError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; |i>|j> maps to index i * b.rows() + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& a);

/// ||a - a^dagger||_F.
double hermiticity_defect(const ComplexMatrix& a);

/// Full spectrum of a Hermitian matrix. Rejects inputs with
/// ||a - a^dagger|| > tol * max(1, ||a||) and non-finite entries.
HermEig herm_eig(const ComplexMatrix& a, double tol = kDefaultTol);

/// Transpose on the first tensor leg of a d^2 x d^2 operator:
/// (rho^{T_A})_{(ia),(jb)} = rho_{(ja),(ib)}, composite index d*i + a.
ComplexMatrix partial_transpose_a(const ComplexMatrix& rho, std::ptrdiff_t d);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// Reduce an angle to (-pi, pi].
double wrap_phase(double angle);

/// Distance between two phases on the circle, in [0, pi].
double wrap_distance(double a, double b);

}  // namespace braidberry
