#include "braidberry/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "braidberry/errors.hpp"

namespace braidberry {

ComplexMatrix identity(std::ptrdiff_t n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "matmul: " << a.rows() << "x" << a.cols() << " times " << b.rows() << "x" << b.cols();
        throw DimensionError(msg.str());
    }
    return a * b;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("trace: matrix is not square");
    return a.trace();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b) - matmul(b, a);
}

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const Complex z = a.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("hermiticity_defect: matrix is not square");
    return (a - a.adjoint()).norm();
}

HermEig herm_eig(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) throw DimensionError("herm_eig: matrix is not square");
    if (!all_finite(a)) throw DomainError("herm_eig: non-finite entry");
    const double defect = hermiticity_defect(a);
    if (defect > tol * std::max(1.0, a.norm())) {
        std::ostringstream msg;
        msg << "herm_eig: input is not Hermitian (||A - A^dagger|| = " << defect << ")";
        throw DomainError(msg.str());
    }
    // Symmetrize so the solver sees an exactly Hermitian matrix.
    const ComplexMatrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) throw DomainError("herm_eig: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix partial_transpose_a(const ComplexMatrix& rho, std::ptrdiff_t d) {
    if (d <= 0 || rho.rows() != d * d || rho.cols() != d * d) {
        std::ostringstream msg;
        msg << "partial_transpose_a: expected " << d * d << "x" << d * d << ", got " << rho.rows()
            << "x" << rho.cols();
        throw DimensionError(msg.str());
    }
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::ptrdiff_t i = 0; i < d; ++i)
        for (std::ptrdiff_t a = 0; a < d; ++a)
            for (std::ptrdiff_t j = 0; j < d; ++j)
                for (std::ptrdiff_t b = 0; b < d; ++b)
                    out(d * i + a, d * j + b) = rho(d * j + a, d * i + b);
    return out;
}

double trace_norm(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("trace_norm: matrix is not square");
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues().sum();
}

double wrap_phase(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    if (r > std::numbers::pi) r -= two_pi;
    return r;
}

double wrap_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

}  // namespace braidberry
