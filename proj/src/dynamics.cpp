#include "braidberry/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "braidberry/errors.hpp"

namespace braidberry {

namespace {

const double kSqrt2 = std::sqrt(2.0);

/// (sector, position within sector) of a composite index.
std::pair<int, int> sector_position(int index) {
    for (const SubsystemId k : SubsystemId::all()) {
        const auto b = k.basis();
        for (int pos = 0; pos < 3; ++pos)
            if (b[static_cast<std::size_t>(pos)] == index) return {k.value(), pos};
    }
    return {0, -1};
}

void require_nondegenerate(const DriveParams& d, const char* what) {
    if (std::abs(std::sin(d.theta)) < 1e-12) {
        throw DomainError(std::string(what) + ": sin(theta) = 0, the spectrum is degenerate (H = 0)");
    }
}

}  // namespace

DriveParams DriveParams::make(double theta, int n1, int n2, double omega, double hbar) {
    if (!std::isfinite(theta)) throw DomainError("DriveParams: theta must be finite");
    if (n1 == 0 || n2 == 0) throw DomainError("DriveParams: n1 and n2 must be nonzero");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("DriveParams: omega must be positive");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("DriveParams: hbar must be positive");
    const int g = std::gcd(n1, n2);
    return {theta, n1 / g, n2 / g, omega, hbar};
}

double DriveParams::n() const {
    return std::sqrt(static_cast<double>(n1 * n1 - n1 * n2 + n2 * n2));
}

bool is_reduced(int n1, int n2) { return std::gcd(n1, n2) == 1; }

const char* band_name(Band b) {
    switch (b) {
        case Band::plus: return "+";
        case Band::zero: return "0";
        case Band::minus: return "-";
    }
    return "?";
}

ComplexMatrix r_dot(const DriveParams& d, double t) {
    const BaxterCoeffs c = BaxterCoeffs::at(std::polar(1.0, d.theta));
    ComplexMatrix out = ComplexMatrix::Zero(9, 9);
    const double phi1 = d.phi1(t), phi2 = d.phi2(t);
    for (const auto& e : m_entries()) {
        const double rate = (e.p1 * d.n1 + e.p2 * d.n2) * d.omega;
        out(e.row, e.col) = (c.a / 3.0) * kI * rate * std::polar(1.0, e.p1 * phi1 + e.p2 * phi2);
    }
    return out;
}

ComplexMatrix hamiltonian(const DriveParams& d, double t) {
    return kI * d.hbar * r_dot(d, t) * build_r(d.braid(t)).adjoint();
}

ComplexMatrix subsystem_hamiltonian(const DriveParams& d, SubsystemId k, double t) {
    const BaxterCoeffs c = BaxterCoeffs::at(std::polar(1.0, d.theta));
    ComplexMatrix r = (c.b / 3.0) * identity(3);
    ComplexMatrix rd = ComplexMatrix::Zero(3, 3);
    const double phi1 = d.phi1(t), phi2 = d.phi2(t);
    for (const auto& e : m_entries()) {
        const auto [row_sector, row] = sector_position(e.row);
        if (row_sector != k.value()) continue;
        const int col = sector_position(e.col).second;
        const Complex entry = std::polar(1.0, e.p1 * phi1 + e.p2 * phi2);
        r(row, col) += (c.a / 3.0) * entry;
        rd(row, col) = (c.a / 3.0) * kI * ((e.p1 * d.n1 + e.p2 * d.n2) * d.omega) * entry;
    }
    return kI * d.hbar * rd * r.adjoint();
}

double block_leakage(const ComplexMatrix& h) {
    double worst = 0.0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (sector_position(i).first != sector_position(j).first) worst = std::max(worst, std::abs(h(i, j)));
    return worst;
}

ComplexMatrix subsystem_block(const ComplexMatrix& h, SubsystemId k, double tol) {
    if (h.rows() != 9 || h.cols() != 9) throw DimensionError("subsystem_block: expected a 9x9 operator");
    const double leak = block_leakage(h);
    if (leak > tol) {
        std::ostringstream msg;
        msg << "subsystem_block: off-sector leakage " << leak << " exceeds " << tol;
        throw StructureError(msg.str());
    }
    const auto b = k.basis();
    ComplexMatrix out(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = h(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
    return out;
}

ComplexMatrix embed_block(const ComplexMatrix& block, SubsystemId k) {
    const auto b = k.basis();
    ComplexMatrix out = ComplexMatrix::Zero(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) = block(i, j);
    return out;
}

ShorthandScalars shorthand(const DriveParams& d) {
    const double s = std::sin(d.theta);
    const Complex b = BaxterCoeffs::at(std::polar(1.0, d.theta)).b;
    const double n1 = d.n1, n2 = d.n2;
    const double n = d.n();
    ShorthandScalars sh;
    sh.n = n;
    sh.alpha_plus = 3 * n1 + 2 * kSqrt2 * n * s;
    sh.alpha_minus = 3 * n1 - 2 * kSqrt2 * n * s;
    sh.beta_plus = 3 * n1 + kSqrt2 * kI * std::conj(b) * n;
    sh.beta_minus = 3 * n1 - kSqrt2 * kI * std::conj(b) * n;
    sh.delta_plus = 3 * n2 + 2 * kSqrt2 * n * s;
    sh.delta_minus = 3 * n2 - 2 * kSqrt2 * n * s;
    sh.eta_plus = 3 * n2 + kSqrt2 * kI * b * n;
    sh.eta_minus = 3 * n2 - kSqrt2 * kI * b * n;

    const double n_sq = n * n;
    const std::array<double, 3> first{12 * n_sq * (6 * n_sq + 2 * kSqrt2 * (n1 - 2 * n2) * n * s - 3 * n1 * n1),
                                      2 * n_sq,
                                      12 * n_sq * (6 * n_sq - 2 * kSqrt2 * (n1 - 2 * n2) * n * s - 3 * n1 * n1)};
    const std::array<double, 3> other{12 * n_sq * (3 * n_sq - 2 * kSqrt2 * (n1 + n2) * n * s + 3 * n1 * n2),
                                      2 * n_sq,
                                      12 * n_sq * (3 * n_sq + 2 * kSqrt2 * (n1 + n2) * n * s + 3 * n1 * n2)};
    sh.norm = {first, other, other};
    return sh;
}

double energy_scale(const DriveParams& d, SubsystemId k) {
    const double c1 = -(8.0 * kSqrt2 / 3.0) * d.hbar * d.omega * std::sin(d.theta);
    return k.value() == 1 ? c1 : 0.5 * c1;
}

std::array<double, 8> su3_expansion(const ComplexMatrix& h, SubsystemId k,
                                    const std::array<CoupledSu3Set, 3>& sets, const DriveParams& d,
                                    double tol) {
    const double c = energy_scale(d, k);
    if (std::abs(c) < 1e-300) throw DomainError("su3_expansion: C(k) vanishes at sin(theta) = 0");
    const ComplexMatrix hk = h.rows() == 3 ? embed_block(h, k) : embed_block(subsystem_block(h, k), k);
    const auto& gens = sets[k.index()].generator;

    std::array<double, 8> coeff{};
    ComplexMatrix rebuilt = ComplexMatrix::Zero(9, 9);
    double imag_part = 0.0;
    for (std::size_t l = 0; l < 8; ++l) {
        const Complex norm = trace(gens[l] * gens[l]);
        const Complex b = trace(hk * gens[l]) / (c * norm);
        imag_part = std::max(imag_part, std::abs(b.imag()));
        coeff[l] = b.real();
        rebuilt += (c * coeff[l]) * gens[l];
    }
    const double scale = std::max(1.0, hk.norm());
    const double miss = frobenius_norm(rebuilt - hk);
    if (miss > tol * scale || imag_part > tol) {
        std::ostringstream msg;
        msg << "su3_expansion: reconstruction residual " << miss << ", imaginary part " << imag_part;
        throw StructureError(msg.str());
    }
    return coeff;
}

std::array<double, 8> b_coefficients_closed(const DriveParams& d, SubsystemId k, double t) {
    const double s = std::sin(d.theta), c = std::cos(d.theta);
    const double n1 = d.n1, n2 = d.n2;
    const double p1 = d.phi1(t), p2 = d.phi2(t);
    const double r2 = kSqrt2;
    if (k.value() == 1) {
        const double dp = 2.0 * (p1 - p2);
        return {r2 / 2 * (n1 - n2) * c * std::sin(dp) + r2 / 6 * (n1 + n2) * s * std::cos(dp),
                -r2 / 2 * (n1 - n2) * c * std::cos(dp) + r2 / 6 * (n1 + n2) * s * std::sin(dp),
                -r2 / 2 * (n1 - n2) * s,
                r2 / 6 * n2 * s * std::cos(2 * p2) + r2 / 2 * n2 * c * std::sin(2 * p2) - r2 / 3 * n1 * s * std::cos(2 * p2),
                -r2 / 6 * n2 * s * std::sin(2 * p2) + r2 / 2 * n2 * c * std::cos(2 * p2) + r2 / 3 * n1 * s * std::sin(2 * p2),
                r2 / 6 * n1 * s * std::cos(2 * p1) + r2 / 2 * n1 * c * std::sin(2 * p1) - r2 / 3 * n2 * s * std::cos(2 * p1),
                -r2 / 6 * n1 * s * std::sin(2 * p1) + r2 / 2 * n1 * c * std::cos(2 * p1) + r2 / 3 * n2 * s * std::sin(2 * p1),
                std::sqrt(6.0) / 6 * (n1 + n2) * s};
    }
    const double dp = p1 - p2;
    return {r2 / 2 * (n1 - n2) * std::sin(dp) * c - r2 / 6 * (n1 + n2) * std::cos(dp) * s,
            r2 / 2 * (n1 - n2) * std::cos(dp) * c + r2 / 6 * (n1 + n2) * std::sin(dp) * s,
            r2 / 2 * (n1 - n2) * s,
            -r2 / 6 * n2 * std::cos(p2) * s + r2 / 2 * n2 * std::sin(p2) * c + r2 / 3 * n1 * std::cos(p2) * s,
            -r2 / 6 * n2 * std::sin(p2) * s - r2 / 2 * n2 * std::cos(p2) * c + r2 / 3 * n1 * std::sin(p2) * s,
            -r2 / 6 * n1 * std::cos(p1) * s + r2 / 2 * n1 * std::sin(p1) * c + r2 / 3 * n2 * std::cos(p1) * s,
            -r2 / 6 * n1 * std::sin(p1) * s - r2 / 2 * n1 * std::cos(p1) * c + r2 / 3 * n2 * std::sin(p1) * s,
            -std::sqrt(6.0) / 6 * (n1 + n2) * s};
}

double closed_energy(const DriveParams& d, SubsystemId k, Band band) {
    const double factor = (k.value() == 1 ? 4.0 : 2.0) * kSqrt2 / 3.0;
    const double e = factor * d.hbar * d.n() * d.omega * std::sin(d.theta);
    switch (band) {
        case Band::plus: return e;
        case Band::zero: return 0.0;
        case Band::minus: return -e;
    }
    return 0.0;
}

ClosedEigensystem closed_eigensystem(const DriveParams& d, SubsystemId k, double t) {
    require_nondegenerate(d, "closed_eigensystem");
    const ShorthandScalars sh = shorthand(d);
    const Complex b = BaxterCoeffs::at(std::polar(1.0, d.theta)).b;
    const double n1 = d.n1, n2 = d.n2, n = sh.n;
    const double p1 = d.phi1(t), p2 = d.phi2(t);
    const auto phase = [](double angle) { return std::polar(1.0, angle); };

    std::array<ComplexVector, 3> raw;
    for (auto& v : raw) v = ComplexVector::Zero(3);
    if (k.value() == 1) {
        const Complex e1 = phase(2 * p2), e2 = phase(2 * p1);
        raw[0] << ((n1 - 2 * n2) * sh.alpha_plus + 6 * n2 * n2) * e1,
            (n2 * sh.beta_minus + kSqrt2 * kI * b * n * n1) * e2, n1 * sh.alpha_plus - n2 * sh.beta_plus;
        raw[1] << -n1 * e1, n2 * e2, n1 - n2;
        raw[2] << ((n1 - 2 * n2) * sh.alpha_minus + 6 * n2 * n2) * e1,
            (n2 * sh.beta_plus - kSqrt2 * kI * b * n * n1) * e2, n1 * sh.alpha_minus - n2 * sh.beta_minus;
    } else {
        const Complex ea = phase(p2), eb = phase(-(p1 - p2));
        // Components on (|01>, |12>, |20>) for k = 2; k = 3 uses the same
        // amplitudes on (|10>, |21>, |02>).
        const std::array<Complex, 3> plus{(n1 * sh.alpha_minus + n2 * sh.delta_minus) * ea,
                                          n1 * sh.alpha_minus - n2 * std::conj(sh.beta_minus),
                                          (n2 * sh.delta_minus - n1 * sh.eta_plus) * eb};
        const std::array<Complex, 3> zero{(-n1 + n2) * ea, Complex(n1), -n2 * eb};
        const std::array<Complex, 3> minus{(n1 * sh.alpha_plus + n2 * sh.delta_plus) * ea,
                                           n1 * sh.alpha_plus - n2 * std::conj(sh.beta_plus),
                                           (n2 * sh.delta_plus - n1 * sh.eta_minus) * eb};
        const std::array<const std::array<Complex, 3>*, 3> bands{&plus, &zero, &minus};
        for (std::size_t a = 0; a < 3; ++a) {
            const auto& amp = *bands[a];
            if (k.value() == 2) raw[a] << amp[0], amp[1], amp[2];
            else raw[a] << amp[2], amp[0], amp[1];
        }
    }

    ClosedEigensystem out;
    const auto& norms = sh.norm[k.index()];
    for (std::size_t a = 0; a < 3; ++a) {
        if (!(norms[a] > 0.0)) {
            std::ostringstream msg;
            msg << "closed_eigensystem: normalization N_" << band_name(kBands[a]) << "^(" << k.value()
                << ") = " << norms[a] << " is not positive for (theta, n1, n2) = (" << d.theta << ", "
                << d.n1 << ", " << d.n2 << ")";
            throw DomainError(msg.str());
        }
        out.states[a] = raw[a] / std::sqrt(norms[a]);
        out.energies[a] = closed_energy(d, k, kBands[a]);
    }
    return out;
}

double period(const DriveParams& d, SubsystemId k) {
    if (!is_reduced(d.n1, d.n2)) throw DomainError("period: (n1, n2) must be coprime");
    const double t = (k.value() == 1 ? std::numbers::pi : 2.0 * std::numbers::pi) / d.omega;
    const ComplexMatrix h0 = subsystem_hamiltonian(d, k, 0.0);
    const ComplexMatrix ht = subsystem_hamiltonian(d, k, t);
    const double miss = frobenius_norm(ht - h0);
    if (miss > 1e-9 * std::max(1.0, h0.norm())) {
        std::ostringstream msg;
        msg << "period: H^(" << k.value() << ")(T) differs from H^(" << k.value() << ")(0) by " << miss;
        throw InconsistencyError(msg.str());
    }
    return t;
}

}  // namespace braidberry
