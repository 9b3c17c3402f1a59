#pragma once

#include <array>
#include <optional>
#include <utility>

#include "braidberry/dynamics.hpp"

namespace braidberry {

enum class BerryMethod { numeric, closed };

struct BerryResult {
    SubsystemId subsystem{1};
    Band band = Band::plus;
    double gamma = 0.0;  // in (-pi, pi]
    BerryMethod method = BerryMethod::numeric;
};

/// Plain discrete Berry phase -Im sum ln<psi_j|psi_j+1> over `steps` samples
/// of one period, closed periodically, and the same product restricted to
/// the even samples. Both in (-pi, pi].
struct WilsonLoop {
    double fine = 0.0;
    double coarse = 0.0;
    int steps = 0;
    /// fine + wrap(fine - coarse)/3: removes the O(1/steps^2) term.
    double extrapolated() const;
};

/// Samples t_j = j T / steps, follows the band by maximal overlap from the
/// eigenvector whose eigenvalue matches the band's closed-form energy.
/// Throws DomainError for sin theta == 0 or a degenerate spectrum,
/// StepCountError when a tracking overlap drops below 0.9, and
/// DomainError when steps < 64 or is odd.
WilsonLoop wilson_loop(const DriveParams& d, SubsystemId k, Band band, int steps);

/// Numeric Berry phase: the extrapolated Wilson loop.
BerryResult berry_numeric(const DriveParams& d, SubsystemId k, Band band, int steps = 4096);

/// General closed forms with K1..K4 and the normalizations; gamma_-^(1)
/// uses N_-^(1).
BerryResult berry_closed(const DriveParams& d, SubsystemId k, Band band);

/// Same closed form but with the N_-^(2) denominator for gamma_-^(1) as
/// printed; kept to show it disagrees with the numeric phase.
double berry_closed_printed_minus(const DriveParams& d);

struct BerryPolynomials {
    double k1, k2, k3, k4;
};
BerryPolynomials berry_polynomials(const DriveParams& d);

/// The four worked examples: 1 -> (1,1), 2 -> (-1,1), 3 -> (2,1), 4 -> (-2,1).
std::pair<int, int> example_drive(int example);

/// Per-example printed closed forms (before mod 2pi reduction).
/// Throws DomainError for examples outside 1..4.
double example_phase(int example, double theta, SubsystemId k, Band band);

}  // namespace braidberry
