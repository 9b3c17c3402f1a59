#pragma once

#include <array>

#include "braidberry/braid.hpp"
#include "braidberry/numeric.hpp"

namespace braidberry {

/// Normalized two-qutrit pure state over |00>, |01>, ..., |22>.
class QutritState {
public:
    /// Throws DimensionError for dim != 9 and DomainError when
    /// | ||psi|| - 1 | > 1e-12.
    explicit QutritState(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return amplitudes_; }
    Complex operator[](int index) const { return amplitudes_(index); }

    ComplexMatrix density() const;

private:
    ComplexVector amplitudes_;
};

/// R(p) e_{basis_index}.
QutritState generate_state(const BraidParams& p, int basis_index);

/// |sum of negative eigenvalues| of rho^{T_A}; eigenvalues in [-1e-12, 0]
/// count as zero.
double negativity(const QutritState& psi);

/// (||rho^{T_A}||_1 - 1) / 2, computed from singular values.
double negativity_trace_norm(const QutritState& psi);

/// (4/9)(sin^2 theta + |sin theta| sqrt(1 + 8 cos^2 theta)).
double negativity_closed(double theta);

struct NegativityReport {
    double theta = 0.0;
    double numeric = 0.0;
    double closed_form = 0.0;
    int basis_state = 0;
};

NegativityReport negativity_report(const BraidParams& p, int basis_index);

/// The nine columns of R(pi/3, phi1, phi2).
std::array<QutritState, 9> maximally_entangled_basis(double phi1, double phi2);

}  // namespace braidberry
