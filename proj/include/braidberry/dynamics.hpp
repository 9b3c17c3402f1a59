#pragma once

// Yang-Baxter Hamiltonian H(t) = i hbar (dR/dt) R^dagger with
// phi_i = n_i omega t, its block structure, SU(3) expansion and closed-form
// eigensystem.

#include <array>

#include "braidberry/braid.hpp"
#include "braidberry/numeric.hpp"
#include "braidberry/su_algebra.hpp"
#include "braidberry/subsystem.hpp"

namespace braidberry {

struct DriveParams {
    double theta = 0.0;
    int n1 = 1;
    int n2 = 1;
    double omega = 1.0;
    double hbar = 1.0;

    /// Validates and reduces (n1, n2) to lowest terms. Throws DomainError for
    /// n1 == 0, n2 == 0, omega <= 0, hbar <= 0 or non-finite theta.
    static DriveParams make(double theta, int n1, int n2, double omega = 1.0, double hbar = 1.0);

    /// sqrt(n1^2 - n1 n2 + n2^2)
    double n() const;
    double phi1(double t) const { return n1 * omega * t; }
    double phi2(double t) const { return n2 * omega * t; }
    BraidParams braid(double t) const { return {theta, phi1(t), phi2(t)}; }
};

/// True when (n1, n2) were already coprime.
bool is_reduced(int n1, int n2);

enum class Band { plus, zero, minus };
inline constexpr std::array<Band, 3> kBands{Band::plus, Band::zero, Band::minus};
const char* band_name(Band b);

/// dR/dt from per-entry phase-monomial differentiation.
ComplexMatrix r_dot(const DriveParams& d, double t);

ComplexMatrix hamiltonian(const DriveParams& d, double t);

/// The 3x3 restriction of H to sector k, computed directly from the
/// sector blocks of R and dR/dt.
ComplexMatrix subsystem_hamiltonian(const DriveParams& d, SubsystemId k, double t);

/// Largest |H_ij| coupling different sectors.
double block_leakage(const ComplexMatrix& h);

/// Restriction of a 9x9 operator to sector k. Throws StructureError when
/// off-sector entries exceed tol.
ComplexMatrix subsystem_block(const ComplexMatrix& h, SubsystemId k, double tol = 1e-9);

/// Embed a 3x3 sector block back into a 9x9 zero matrix.
ComplexMatrix embed_block(const ComplexMatrix& block, SubsystemId k);

/// Shorthand used by the closed-form eigenstates.
struct ShorthandScalars {
    double n = 0.0;
    double alpha_plus = 0.0, alpha_minus = 0.0;
    Complex beta_plus, beta_minus;
    double delta_plus = 0.0, delta_minus = 0.0;
    Complex eta_plus, eta_minus;
    /// Normalizations N_alpha^(k), index [k-1][band] with band order (+, 0, -).
    std::array<std::array<double, 3>, 3> norm{};
};

ShorthandScalars shorthand(const DriveParams& d);

/// C(1) = -(8 sqrt2/3) hbar omega sin theta, C(2) = C(3) = C(1)/2.
double energy_scale(const DriveParams& d, SubsystemId k);

/// B_lambda^(k) from trace projection of the embedded block onto I_lambda^(k).
/// Throws StructureError when the reconstruction misses by more than tol.
std::array<double, 8> su3_expansion(const ComplexMatrix& h, SubsystemId k,
                                    const std::array<CoupledSu3Set, 3>& sets,
                                    const DriveParams& d, double tol = 1e-9);

/// The printed closed-form B_lambda^(k)(t).
std::array<double, 8> b_coefficients_closed(const DriveParams& d, SubsystemId k, double t);

/// Closed-form eigenvalue of a band in sector k.
double closed_energy(const DriveParams& d, SubsystemId k, Band band);

struct ClosedEigensystem {
    std::array<double, 3> energies{};         // (+, 0, -)
    std::array<ComplexVector, 3> states;      // normalized, in SubsystemId::basis() order
};

/// Throws DomainError for sin theta == 0 and DomainError with a diagnostic
/// when a normalization is not positive.
ClosedEigensystem closed_eigensystem(const DriveParams& d, SubsystemId k, double t);

/// pi/omega for k = 1, 2 pi/omega otherwise; verified by ||H_k(T) - H_k(0)||
/// <= 1e-9, else InconsistencyError.
double period(const DriveParams& d, SubsystemId k);

}  // namespace braidberry
