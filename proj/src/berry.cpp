#include "braidberry/berry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "braidberry/errors.hpp"

namespace braidberry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTrackingFloor = 0.9;

std::size_t band_slot(Band b) {
    switch (b) {
        case Band::plus: return 0;
        case Band::zero: return 1;
        case Band::minus: return 2;
    }
    return 0;
}

double loop_phase(const std::vector<ComplexVector>& states, std::size_t stride) {
    double sum = 0.0;
    const std::size_t count = states.size();
    for (std::size_t j = 0; j < count; j += stride) {
        const std::size_t next = (j + stride) % count;
        sum += std::arg(states[j].dot(states[next]));
    }
    return wrap_phase(-sum);
}

}  // namespace

double WilsonLoop::extrapolated() const { return wrap_phase(fine + wrap_phase(fine - coarse) / 3.0); }

WilsonLoop wilson_loop(const DriveParams& d, SubsystemId k, Band band, int steps) {
    if (steps < 64 || steps % 2 != 0) {
        throw DomainError("wilson_loop: steps must be even and at least 64, got " + std::to_string(steps));
    }
    if (std::abs(std::sin(d.theta)) < 1e-12) {
        throw DomainError("wilson_loop: sin(theta) = 0 gives H = 0 and no band to follow");
    }
    const double t_period = period(d, k);
    const double target = closed_energy(d, k, band);

    std::vector<ComplexVector> states;
    states.reserve(static_cast<std::size_t>(steps));
    for (int j = 0; j < steps; ++j) {
        const double t = t_period * j / steps;
        const HermEig eig = herm_eig(subsystem_hamiltonian(d, k, t));
        Eigen::Index pick = 0;
        if (states.empty()) {
            (eig.eigenvalues.array() - target).abs().minCoeff(&pick);
            const double gap = std::min(std::abs(eig.eigenvalues(1) - eig.eigenvalues(0)),
                                        std::abs(eig.eigenvalues(2) - eig.eigenvalues(1)));
            if (gap < 1e-9 * std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff())) {
                throw DomainError("wilson_loop: degenerate spectrum at t = 0");
            }
        } else {
            const double best = (eig.eigenvectors.adjoint() * states.back()).cwiseAbs().maxCoeff(&pick);
            if (best < kTrackingFloor) {
                std::ostringstream msg;
                msg << "wilson_loop: overlap " << best << " at step " << j << " of " << steps
                    << " is below " << kTrackingFloor << "; increase steps";
                throw StepCountError(msg.str());
            }
        }
        states.push_back(eig.eigenvectors.col(pick));
    }
    if (std::abs(states.back().dot(states.front())) < kTrackingFloor) {
        throw StepCountError("wilson_loop: band does not close over one period; increase steps");
    }
    return {loop_phase(states, 1), loop_phase(states, 2), steps};
}

BerryResult berry_numeric(const DriveParams& d, SubsystemId k, Band band, int steps) {
    return {k, band, wilson_loop(d, k, band, steps).extrapolated(), BerryMethod::numeric};
}

BerryPolynomials berry_polynomials(const DriveParams& d) {
    const double s = std::sin(d.theta);
    const double n1 = d.n1, n2 = d.n2, n = d.n();
    const double n4 = n * n * n * n;
    const double r2 = std::sqrt(2.0);
    BerryPolynomials p{};
    p.k1 = -10 * std::pow(n1, 5) + 13 * std::pow(n1, 4) * n2 + 11 * std::pow(n1, 3) * n2 * n2 -
           82 * n1 * n1 * std::pow(n2, 3) + 94 * n1 * std::pow(n2, 4) - 52 * std::pow(n2, 5) -
           8 * std::cos(2 * d.theta) * (n1 - 2 * n2) * n4;
    p.k2 = -6 * r2 * s * n * n2 *
           (std::pow(n1, 3) - 9 * n1 * n1 * n2 + 12 * n1 * n2 * n2 - 8 * std::pow(n2, 3));
    p.k3 = 2 * n * n * (9 * n1 * n1 * (n1 - n2) - 8 * s * s * (std::pow(n1, 3) + std::pow(n2, 3))) -
           9 * n2 *
               (std::pow(n1, 4) - std::pow(n1, 3) * n2 + 5 * n1 * n1 * n2 * n2 - 3 * n1 * std::pow(n2, 3) +
                2 * std::pow(n2, 4));
    p.k4 = 6 * r2 * s * n * n2 *
           (std::pow(n1, 3) + 6 * n1 * n1 * n2 - 3 * n1 * n2 * n2 + 4 * std::pow(n2, 3));
    return p;
}

BerryResult berry_closed(const DriveParams& d, SubsystemId k, Band band) {
    const BerryPolynomials p = berry_polynomials(d);
    const ShorthandScalars sh = shorthand(d);
    const auto& norm = sh.norm[k.index()];
    const double n1 = d.n1, n2 = d.n2, n_sq = sh.n * sh.n;
    // omega T is pi for k = 1 and 2 pi otherwise, so the prefactors 2 w T and
    // w T are both 2 pi.
    const double turn = 2.0 * kPi;
    double gamma = 0.0;
    if (band != Band::zero && !(norm[band_slot(band)] > 0.0)) {
        throw DomainError("berry_closed: nonpositive normalization for this band");
    }
    if (k.value() == 1) {
        switch (band) {
            case Band::plus: gamma = (p.k1 + p.k2) / norm[0] * turn; break;
            case Band::zero: gamma = -n1 * n2 * (n1 + n2) / (2 * n_sq) * turn; break;
            case Band::minus: gamma = (p.k1 - p.k2) / norm[2] * turn; break;
        }
    } else {
        switch (band) {
            case Band::plus: gamma = (p.k3 + p.k4) / norm[0] * turn; break;
            case Band::zero: gamma = -n2 * (n1 - n2) * (n1 - 2 * n2) / (2 * n_sq) * turn; break;
            case Band::minus: gamma = (p.k3 - p.k4) / norm[2] * turn; break;
        }
    }
    return {k, band, wrap_phase(gamma), BerryMethod::closed};
}

double berry_closed_printed_minus(const DriveParams& d) {
    const BerryPolynomials p = berry_polynomials(d);
    const double denom = shorthand(d).norm[1][2];
    return wrap_phase((p.k1 - p.k2) / denom * 2.0 * kPi);
}

std::pair<int, int> example_drive(int example) {
    switch (example) {
        case 1: return {1, 1};
        case 2: return {-1, 1};
        case 3: return {2, 1};
        case 4: return {-2, 1};
        default: throw DomainError("example must be 1..4, got " + std::to_string(example));
    }
}

double example_phase(int example, double theta, SubsystemId k, Band band) {
    example_drive(example);
    const double s = std::sin(theta);
    const double sign = band == Band::plus ? 1.0 : band == Band::minus ? -1.0 : 0.0;
    const bool first = k.value() == 1;
    switch (example) {
        case 1:
            return -sign * kPi * (1.0 - 2.0 * std::sqrt(2.0) / 3.0 * s);
        case 2:
        case 3:
            return sign * std::sqrt(6.0) * s / 3.0 * 2.0 * kPi;
        default: {
            const double root = std::sqrt(14.0) * s / 3.0;
            const double flip = first ? 1.0 : -1.0;
            switch (band) {
                case Band::plus: return flip * (4.0 / 7.0 + flip * root) * 2.0 * kPi;
                case Band::zero: return -flip * 2.0 * kPi / 7.0;
                case Band::minus: return flip * (4.0 / 7.0 - flip * root) * 2.0 * kPi;
            }
        }
    }
    return 0.0;
}

}  // namespace braidberry
