#pragma once

// The n1 = n2 regime: SU(2) form of the sector Hamiltonians, the constant
// orthogonal block-diagonalizing matrix, and the oscillator parametrization.

#include <array>
#include <vector>

#include "braidberry/dynamics.hpp"
#include "braidberry/su_algebra.hpp"

namespace braidberry {

struct Su2Coefficients {
    Complex s_plus;
    Complex s_minus;
    double s3 = 0.0;
};

/// Coefficients c with H^(k) = C(k) (c+ S+ + c- S- + c3 S3).
/// k = 1 uses the reference form directly; k = 2, 3 are derived from the
/// B-coefficient form (the reference k = 2, 3 forms have S+- and S3 reversed).
Su2Coefficients su2_coefficients(const DriveParams& d, SubsystemId k, double t);

/// The reference-form coefficients (equal to the above for k = 1).
Su2Coefficients su2_coefficients_printed(const DriveParams& d, SubsystemId k, double t);

struct Su2HamiltonianCheck {
    std::array<double, 3> residual{};          // against su2_coefficients
    std::array<double, 3> printed_residual{};  // against su2_coefficients_printed
};

/// Throws DomainError unless n1 == n2.
Su2HamiltonianCheck su2_hamiltonian_check(const DriveParams& d, double t);

/// 9x9 orthogonal matrix with entries in {0, +-1, +-1/sqrt2}, stored as an
/// integer skeleton and a per-row scale so orthogonality can be checked
/// exactly.
class OrthogonalPattern {
public:
    OrthogonalPattern(std::array<std::array<int, 9>, 9> skeleton, std::array<bool, 9> half_rows);

    ComplexMatrix matrix() const;
    /// P P^T == 1 in exact integer arithmetic.
    bool exactly_orthogonal() const;
    /// ||P P^T - 1||_F in floating point.
    double orthogonality_residual() const;
    /// Largest |(P P^T - 1)_ij| from the integer dot products and the exact
    /// row scales; 0 exactly when the pattern is orthogonal.
    double exact_residual() const;

private:
    std::array<std::array<int, 9>, 9> skeleton_;
    std::array<bool, 9> half_rows_;  // row scaled by 1/sqrt2
};

/// The reference P, entry for entry.
OrthogonalPattern printed_block_matrix();

/// Corrected P giving blocks (2,1,1,2,1,2) in the order
/// H_1/2^(1), H_0^(1), H_0^(2), H_1/2^(2), H_0^(3), H_1/2^(3).
OrthogonalPattern block_matrix();

inline constexpr std::array<int, 6> kBlockSizes{2, 1, 1, 2, 1, 2};

struct BlockDecomposition {
    ComplexMatrix p;
    std::vector<ComplexMatrix> blocks;  // 6 blocks, sizes kBlockSizes
    double leakage = 0.0;               // largest off-block |entry| of P H P^T
    bool pp_t_exact = false;
    double pp_t_residual = 0.0;         // exact_residual() of P
    std::array<double, 3> casimir_residual{};  // ||P J P^T - tilde J||
    std::array<double, 3> tilde_su2_residual{};  // dyadic forms of tilde S+-, S3
};

/// Throws StructureError when leakage exceeds tol.
BlockDecomposition block_diagonalize(const ComplexMatrix& h, double tol = 1e-9);

/// Index pairs (first, second) of the spin-1/2 blocks in the tilde basis.
inline constexpr std::array<std::array<int, 2>, 3> kSpinHalfPairs{{{0, 1}, {4, 5}, {7, 8}}};
/// Tilde-basis indices of the spin-0 blocks.
inline constexpr std::array<int, 3> kSpinZeroIndex{2, 3, 6};

struct OscillatorForm {
    double cos_alpha = 0.0;
    double alpha = 0.0;
    std::array<double, 3> frequency{};  // 2 w cos(a), w cos(a), w cos(a)
    double solid_angle = 0.0;           // 2 pi (1 - cos a)

    /// e^{i beta} at phase phi (phi1 = phi2 = phi).
    Complex phase_factor(double phi) const;
    /// beta in [0, 2 pi).
    double beta(double phi) const;
    /// (-sin th cos 2phi + 3 cos th sin 2phi) / sqrt(9 - 8 sin^2 th)
    double cos_beta(double phi) const;

    double theta = 0.0;
};

/// Throws DomainError at sin theta == 0 (the critical point cos a = 0).
OscillatorForm oscillator_params(double theta, double omega = 1.0);

/// Bloch-form |E+^(1)> = -e^{i beta} sin(a/2)|0~> + cos(a/2)|1~> in the
/// first spin-1/2 pair of the tilde basis.
ComplexVector bloch_plus_state(const OscillatorForm& osc, double phi);

}  // namespace braidberry
