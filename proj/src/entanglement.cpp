#include "braidberry/entanglement.hpp"

#include <cmath>
#include <numbers>

#include "braidberry/errors.hpp"

namespace braidberry {

QutritState::QutritState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != 9) throw DimensionError("QutritState: expected 9 amplitudes");
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) throw DomainError("QutritState: state is not normalized");
}

ComplexMatrix QutritState::density() const { return amplitudes_ * amplitudes_.adjoint(); }

QutritState generate_state(const BraidParams& p, int basis_index) {
    if (basis_index < 0 || basis_index > 8) throw DomainError("generate_state: basis index must be in 0..8");
    return QutritState(build_r(p).col(basis_index));
}

double negativity(const QutritState& psi) {
    const HermEig eig = herm_eig(partial_transpose_a(psi.density(), 3));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda < -1e-12) sum -= lambda;
    }
    return sum;
}

double negativity_trace_norm(const QutritState& psi) {
    return (trace_norm(partial_transpose_a(psi.density(), 3)) - 1.0) / 2.0;
}

double negativity_closed(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    return (4.0 / 9.0) * (s * s + std::abs(s) * std::sqrt(1.0 + 8.0 * c * c));
}

NegativityReport negativity_report(const BraidParams& p, int basis_index) {
    return {p.theta, negativity(generate_state(p, basis_index)), negativity_closed(p.theta), basis_index};
}

std::array<QutritState, 9> maximally_entangled_basis(double phi1, double phi2) {
    const ComplexMatrix r = build_r({std::numbers::pi / 3.0, phi1, phi2});
    return {QutritState(r.col(0)), QutritState(r.col(1)), QutritState(r.col(2)),
            QutritState(r.col(3)), QutritState(r.col(4)), QutritState(r.col(5)),
            QutritState(r.col(6)), QutritState(r.col(7)), QutritState(r.col(8))};
}

}  // namespace braidberry
