#pragma once

// The 9x9 Hecke generator M, its Yang-Baxterization R(x), and checks of
// the braid/Hecke/Yang-Baxter identities on C^27.

#include <array>
#include <span>

#include "braidberry/numeric.hpp"
#include "braidberry/su_algebra.hpp"

namespace braidberry {

struct BraidParams {
    double theta = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;

    Complex x() const { return std::polar(1.0, theta); }
    Complex q1() const { return std::polar(1.0, phi1); }
    Complex q2() const { return std::polar(1.0, phi2); }
};

/// Hecke constants: M^2 = alpha M + beta, braided relation with g.
struct HeckeParams {
    static constexpr double alpha = 1.0;
    static constexpr double beta = 2.0;
    static constexpr double g = 2.0;
};

/// Baxterization coefficients for spectral parameter x:
///   a = 1/x - x, b = 2x + 1/x, rho = b/3, G = -(x - 1/x)/(2x + 1/x).
struct BaxterCoeffs {
    Complex a;
    Complex b;
    Complex rho;
    Complex G;

    /// Throws DomainError when |2x + 1/x| < 1e-12 or x == 0.
    static BaxterCoeffs at(Complex x);
};

/// A nonzero entry of M: value q1^p1 * q2^p2 at (row, col).
struct MonomialEntry {
    int row;
    int col;
    int p1;
    int p2;
};

/// The 18 nonzero entries of M.
std::span<const MonomialEntry> m_entries();

ComplexMatrix build_m(double phi1, double phi2);
inline ComplexMatrix build_m(const BraidParams& p) { return build_m(p.phi1, p.phi2); }

/// M assembled from the ladder operators of the three coupled SU(3) sets.
ComplexMatrix build_m_su3(const BraidParams& p, const std::array<CoupledSu3Set, 3>& sets);

/// R = (b 1 + a M) / 3.
ComplexMatrix build_r(const BraidParams& p);

/// R built from an arbitrary Hermitian 9x9 generator (used for sensitivity tests).
ComplexMatrix build_r(double theta, const ComplexMatrix& m);

struct HeckeResiduals {
    double braided = 0.0;    // ||M1 M2 M1 + g M1 - M2 M1 M2 - g M2||
    double quadratic = 0.0;  // ||M^2 - alpha M - beta 1||
    double max() const { return braided > quadratic ? braided : quadratic; }
};

HeckeResiduals check_hecke(const BraidParams& p);
HeckeResiduals check_hecke(const ComplexMatrix& m);

/// Frobenius residual of R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x) on C^27
/// with x = e^{i theta1}, y = e^{i theta2} at fixed (phi1, phi2).
double check_ybe(double theta1, double theta2, double phi1, double phi2);
double check_ybe(double theta1, double theta2, const ComplexMatrix& m);

struct BaxterizationResiduals {
    double addition = 0.0;       // G(x)+G(y)+a G(x)G(y) - [1+g G(x)G(y)] G(xy)
    double inversion = 0.0;      // G(x)+G(1/x)+a G(x)G(1/x)
    double normalization = 0.0;  // rho(x) rho(1/x) [1 + beta G(x)G(1/x)] - 1
    double max() const;
};

/// Throws DomainError when any denominator 2z + 1/z (z = x, y, xy, 1/x) is
/// below 1e-12 in modulus.
BaxterizationResiduals check_baxterization_functions(Complex x, Complex y);

/// Local gauge P = diag(q1/q2, 1, q1).
ComplexMatrix local_gauge(double phi1, double phi2);

/// (P (x) P) R(theta, phi1, phi2) (P^-1 (x) P^-1); equals R(theta, 0, 0).
ComplexMatrix gauge_transform(const BraidParams& p);

/// Largest |R_ij| outside the three invariant sectors.
double sector_leakage(const ComplexMatrix& op);

}  // namespace braidberry
