#include "braidberry/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "braidberry/errors.hpp"

namespace braidberry {

namespace {

constexpr double kPi = std::numbers::pi;

double require_equal_drive(const DriveParams& d, double t, const char* what) {
    if (d.n1 != d.n2) {
        std::ostringstream msg;
        msg << what << ": requires n1 == n2, got (" << d.n1 << ", " << d.n2 << ")";
        throw DomainError(msg.str());
    }
    return d.phi1(t);
}

Complex baxter_b(double theta) { return BaxterCoeffs::at(std::polar(1.0, theta)).b; }

ComplexMatrix su2_operator(const Su2Set& s, const Su2Coefficients& c) {
    return c.s_plus * s.s_plus + c.s_minus * s.s_minus + Complex(c.s3) * s.s3;
}

using Skeleton = std::array<std::array<int, 9>, 9>;

Skeleton skeleton_from(const std::array<std::array<std::pair<int, int>, 2>, 9>& rows) {
    Skeleton out{};
    for (std::size_t r = 0; r < 9; ++r)
        for (const auto& [col, sign] : rows[r])
            if (sign != 0) out[r][static_cast<std::size_t>(col)] = sign;
    return out;
}

ComplexMatrix dyad(int a, int b) {
    ComplexMatrix out = ComplexMatrix::Zero(9, 9);
    out(a, b) = 1.0;
    return out;
}

}  // namespace

Su2Coefficients su2_coefficients(const DriveParams& d, SubsystemId k, double t) {
    const double phi = require_equal_drive(d, t, "su2_coefficients");
    const Complex b = baxter_b(d.theta);
    const double s3 = 2.0 * std::sqrt(2.0) / 3.0 * std::sin(d.theta);
    if (k.value() == 1) {
        return {-kI / 6.0 * std::conj(b) * std::polar(1.0, 2 * phi), kI / 6.0 * b * std::polar(1.0, -2 * phi), s3};
    }
    return {kI / 6.0 * std::conj(b) * std::polar(1.0, -phi), -kI / 6.0 * b * std::polar(1.0, phi), -s3};
}

Su2Coefficients su2_coefficients_printed(const DriveParams& d, SubsystemId k, double t) {
    if (k.value() == 1) return su2_coefficients(d, k, t);
    const double phi = require_equal_drive(d, t, "su2_coefficients_printed");
    const Complex b = baxter_b(d.theta);
    return {-kI / 6.0 * b * std::polar(1.0, phi), kI / 6.0 * std::conj(b) * std::polar(1.0, -phi),
            2.0 * std::sqrt(2.0) / 3.0 * std::sin(d.theta)};
}

Su2HamiltonianCheck su2_hamiltonian_check(const DriveParams& d, double t) {
    require_equal_drive(d, t, "su2_hamiltonian_check");
    const auto sets = coupled_sets();
    Su2HamiltonianCheck out;
    for (const SubsystemId k : SubsystemId::all()) {
        const Su2Set s = su2_set(sets[k.index()]);
        const ComplexMatrix hk = embed_block(subsystem_hamiltonian(d, k, t), k);
        const double c = energy_scale(d, k);
        out.residual[k.index()] = frobenius_norm(c * su2_operator(s, su2_coefficients(d, k, t)) - hk);
        out.printed_residual[k.index()] =
            frobenius_norm(c * su2_operator(s, su2_coefficients_printed(d, k, t)) - hk);
    }
    return out;
}

OrthogonalPattern::OrthogonalPattern(std::array<std::array<int, 9>, 9> skeleton, std::array<bool, 9> half_rows)
    : skeleton_(skeleton), half_rows_(half_rows) {
    for (const auto& row : skeleton_)
        for (int v : row)
            if (v < -1 || v > 1) throw DomainError("OrthogonalPattern: skeleton entries must be in {-1, 0, 1}");
}

ComplexMatrix OrthogonalPattern::matrix() const {
    ComplexMatrix out(9, 9);
    for (int r = 0; r < 9; ++r) {
        const double scale = half_rows_[static_cast<std::size_t>(r)] ? std::sqrt(0.5) : 1.0;
        for (int c = 0; c < 9; ++c) out(r, c) = scale * skeleton_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return out;
}

bool OrthogonalPattern::exactly_orthogonal() const {
    // Off-diagonal entries of P P^T are integer dot products times a positive
    // scale, so they vanish exactly iff the integer dot product does.
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            int dot = 0;
            for (std::size_t c = 0; c < 9; ++c) dot += skeleton_[i][c] * skeleton_[j][c];
            const int expected = i == j ? (half_rows_[i] ? 2 : 1) : 0;
            if (dot != expected) return false;
        }
    }
    return true;
}

double OrthogonalPattern::exact_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            int dot = 0;
            for (std::size_t c = 0; c < 9; ++c) dot += skeleton_[i][c] * skeleton_[j][c];
            const int halves = int{half_rows_[i]} + int{half_rows_[j]};
            const double weight = halves == 2 ? 0.5 : halves == 1 ? std::sqrt(0.5) : 1.0;
            worst = std::max(worst, std::abs(dot * weight - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double OrthogonalPattern::orthogonality_residual() const {
    const ComplexMatrix p = matrix();
    return frobenius_norm(p * p.transpose() - identity(9));
}

OrthogonalPattern printed_block_matrix() {
    return {skeleton_from({{{{{0, 1}, {4, 1}}},
                            {{{8, 1}, {0, 0}}},
                            {{{0, 1}, {4, -1}}},
                            {{{1, 1}, {0, 0}}},
                            {{{5, 1}, {6, 1}}},
                            {{{5, 1}, {6, -1}}},
                            {{{2, 1}, {0, 0}}},
                            {{{3, 1}, {7, 1}}},
                            {{{3, 1}, {7, -1}}}}}),
            {true, false, true, false, true, true, false, true, true}};
}

OrthogonalPattern block_matrix() {
    return {skeleton_from({{{{{0, 1}, {4, 1}}},
                            {{{8, 1}, {0, 0}}},
                            {{{0, 1}, {4, -1}}},
                            {{{5, 1}, {6, -1}}},
                            {{{5, 1}, {6, 1}}},
                            {{{1, 1}, {0, 0}}},
                            {{{2, 1}, {7, -1}}},
                            {{{2, 1}, {7, 1}}},
                            {{{3, 1}, {0, 0}}}}}),
            {true, false, true, true, true, false, true, true, false}};
}

BlockDecomposition block_diagonalize(const ComplexMatrix& h, double tol) {
    if (h.rows() != 9 || h.cols() != 9) throw DimensionError("block_diagonalize: expected a 9x9 operator");
    const OrthogonalPattern pattern = block_matrix();
    BlockDecomposition out;
    out.p = pattern.matrix();
    out.pp_t_exact = pattern.exactly_orthogonal();
    out.pp_t_residual = pattern.exact_residual();

    const ComplexMatrix ht = out.p * h * out.p.transpose();
    std::array<int, 9> owner{};
    int start = 0;
    for (std::size_t b = 0; b < kBlockSizes.size(); ++b) {
        for (int i = 0; i < kBlockSizes[b]; ++i) owner[static_cast<std::size_t>(start + i)] = static_cast<int>(b);
        out.blocks.push_back(ht.block(start, start, kBlockSizes[b], kBlockSizes[b]));
        start += kBlockSizes[b];
    }
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)])
                out.leakage = std::max(out.leakage, std::abs(ht(i, j)));
    if (out.leakage > tol) {
        std::ostringstream msg;
        msg << "block_diagonalize: off-block leakage " << out.leakage << " exceeds " << tol;
        throw StructureError(msg.str());
    }

    const auto sets = coupled_sets();
    for (const SubsystemId k : SubsystemId::all()) {
        const Su2Set s = su2_set(sets[k.index()]);
        const auto [a, b] = kSpinHalfPairs[k.index()];
        const ComplexMatrix j_tilde = 0.75 * (dyad(a, a) + dyad(b, b));
        out.casimir_residual[k.index()] = frobenius_norm(out.p * s.casimir * out.p.transpose() - j_tilde);
        const double plus = frobenius_norm(out.p * s.s_plus * out.p.transpose() - dyad(a, b));
        const double minus = frobenius_norm(out.p * s.s_minus * out.p.transpose() - dyad(b, a));
        const double third = frobenius_norm(out.p * s.s3 * out.p.transpose() - 0.5 * (dyad(a, a) - dyad(b, b)));
        out.tilde_su2_residual[k.index()] = std::max({plus, minus, third});
    }
    return out;
}

Complex OscillatorForm::phase_factor(double phi) const {
    const Complex b = baxter_b(theta);
    return -kI * std::conj(b) * std::polar(1.0, 2 * phi) / std::abs(b);
}

double OscillatorForm::beta(double phi) const {
    const double angle = std::arg(phase_factor(phi));
    return angle < 0.0 ? angle + 2.0 * kPi : angle;
}

double OscillatorForm::cos_beta(double phi) const {
    const double s = std::sin(theta);
    return (-s * std::cos(2 * phi) + 3 * std::cos(theta) * std::sin(2 * phi)) / std::sqrt(9 - 8 * s * s);
}

OscillatorForm oscillator_params(double theta, double omega) {
    if (std::abs(std::sin(theta)) < 1e-12) {
        throw DomainError("oscillator_params: sin(theta) = 0 is the critical point cos(alpha) = 0");
    }
    if (!(omega > 0.0)) throw DomainError("oscillator_params: omega must be positive");
    OscillatorForm osc;
    osc.theta = theta;
    osc.cos_alpha = 2.0 * std::sqrt(2.0) / 3.0 * std::sin(theta);
    osc.alpha = std::acos(osc.cos_alpha);
    osc.frequency = {2 * omega * osc.cos_alpha, omega * osc.cos_alpha, omega * osc.cos_alpha};
    osc.solid_angle = 2.0 * kPi * (1.0 - osc.cos_alpha);
    return osc;
}

ComplexVector bloch_plus_state(const OscillatorForm& osc, double phi) {
    ComplexVector v(2);
    v << -osc.phase_factor(phi) * std::sin(osc.alpha / 2), std::cos(osc.alpha / 2);
    return v;
}

}  // namespace braidberry
