#include "braidberry/braid.hpp"

#include <algorithm>
#include <cmath>

#include "braidberry/errors.hpp"
#include "braidberry/subsystem.hpp"

namespace braidberry {

namespace {

constexpr std::array<MonomialEntry, 18> kEntries{{
    {0, 4, -2, 2}, {0, 8, 0, 2},  {1, 5, 0, 1},  {1, 6, 1, 0},   {2, 3, -1, 0},  {2, 7, -1, 1},
    {3, 2, 1, 0},  {3, 7, 0, 1},  {4, 0, 2, -2}, {4, 8, 2, 0},   {5, 1, 0, -1},  {5, 6, 1, -1},
    {6, 1, -1, 0}, {6, 5, -1, 1}, {7, 2, 1, -1}, {7, 3, 0, -1},  {8, 0, 0, -2},  {8, 4, -2, 0},
}};

Complex checked_denominator(Complex z) {
    if (z == Complex{0.0, 0.0}) throw DomainError("Baxterization: spectral parameter is zero");
    const Complex d = 2.0 * z + 1.0 / z;
    if (std::abs(d) < 1e-12) throw DomainError("Baxterization: singular denominator 2x + 1/x");
    return d;
}

Complex g_function(Complex x) { return -(x - 1.0 / x) / checked_denominator(x); }
Complex rho_function(Complex x) { return checked_denominator(x) / 3.0; }

int sector_of(int index) {
    for (const SubsystemId k : SubsystemId::all()) {
        const auto b = k.basis();
        if (std::find(b.begin(), b.end(), index) != b.end()) return k.value();
    }
    return 0;
}

}  // namespace

BaxterCoeffs BaxterCoeffs::at(Complex x) {
    BaxterCoeffs c;
    c.b = checked_denominator(x);
    c.a = 1.0 / x - x;
    c.rho = c.b / 3.0;
    c.G = -(x - 1.0 / x) / c.b;
    return c;
}

std::span<const MonomialEntry> m_entries() { return kEntries; }

ComplexMatrix build_m(double phi1, double phi2) {
    ComplexMatrix m = ComplexMatrix::Zero(9, 9);
    for (const auto& e : kEntries) m(e.row, e.col) = std::polar(1.0, e.p1 * phi1 + e.p2 * phi2);
    return m;
}

ComplexMatrix build_m_su3(const BraidParams& p, const std::array<CoupledSu3Set, 3>& sets) {
    const Complex q1 = p.q1(), q2 = p.q2();
    const auto& s1 = sets[0];
    ComplexMatrix m = (q2 * q2 / (q1 * q1)) * s1.i_plus + (q1 * q1 / (q2 * q2)) * s1.i_minus +
                      (1.0 / (q2 * q2)) * s1.v_plus + (q2 * q2) * s1.v_minus + (q1 * q1) * s1.u_plus +
                      (1.0 / (q1 * q1)) * s1.u_minus;
    for (std::size_t k = 1; k < 3; ++k) {
        const auto& s = sets[k];
        m += (q1 / q2) * s.i_plus + (q2 / q1) * s.i_minus + q2 * s.v_plus + (1.0 / q2) * s.v_minus +
             (1.0 / q1) * s.u_plus + q1 * s.u_minus;
    }
    return m;
}

ComplexMatrix build_r(double theta, const ComplexMatrix& m) {
    const BaxterCoeffs c = BaxterCoeffs::at(std::polar(1.0, theta));
    return (c.b * identity(m.rows()) + c.a * m) / 3.0;
}

ComplexMatrix build_r(const BraidParams& p) { return build_r(p.theta, build_m(p)); }

HeckeResiduals check_hecke(const ComplexMatrix& m) {
    const ComplexMatrix one3 = identity(3);
    const ComplexMatrix m1 = kron(m, one3);
    const ComplexMatrix m2 = kron(one3, m);
    HeckeResiduals r;
    r.braided = frobenius_norm(m1 * m2 * m1 + HeckeParams::g * m1 - m2 * m1 * m2 - HeckeParams::g * m2);
    r.quadratic = frobenius_norm(m * m - HeckeParams::alpha * m - HeckeParams::beta * identity(m.rows()));
    return r;
}

HeckeResiduals check_hecke(const BraidParams& p) { return check_hecke(build_m(p)); }

double check_ybe(double theta1, double theta2, const ComplexMatrix& m) {
    const ComplexMatrix one3 = identity(3);
    const ComplexMatrix rx = build_r(theta1, m);
    const ComplexMatrix ry = build_r(theta2, m);
    const ComplexMatrix rxy = build_r(theta1 + theta2, m);
    const ComplexMatrix lhs = kron(rx, one3) * kron(one3, rxy) * kron(ry, one3);
    const ComplexMatrix rhs = kron(one3, ry) * kron(rxy, one3) * kron(one3, rx);
    return frobenius_norm(lhs - rhs);
}

double check_ybe(double theta1, double theta2, double phi1, double phi2) {
    return check_ybe(theta1, theta2, build_m(phi1, phi2));
}

double BaxterizationResiduals::max() const { return std::max({addition, inversion, normalization}); }

BaxterizationResiduals check_baxterization_functions(Complex x, Complex y) {
    const Complex gx = g_function(x);
    const Complex gy = g_function(y);
    const Complex gxy = g_function(x * y);
    const Complex gxi = g_function(1.0 / x);
    constexpr double alpha = HeckeParams::alpha, beta = HeckeParams::beta, g = HeckeParams::g;

    BaxterizationResiduals r;
    r.addition = std::abs(gx + gy + alpha * gx * gy - (1.0 + g * gx * gy) * gxy);
    r.inversion = std::abs(gx + gxi + alpha * gx * gxi);
    r.normalization = std::abs(rho_function(x) * rho_function(1.0 / x) * (1.0 + beta * gx * gxi) - 1.0);
    return r;
}

ComplexMatrix local_gauge(double phi1, double phi2) {
    ComplexMatrix p = ComplexMatrix::Zero(3, 3);
    p(0, 0) = std::polar(1.0, phi1 - phi2);
    p(1, 1) = 1.0;
    p(2, 2) = std::polar(1.0, phi1);
    return p;
}

ComplexMatrix gauge_transform(const BraidParams& p) {
    const ComplexMatrix g = local_gauge(p.phi1, p.phi2);
    const ComplexMatrix g_inv = g.adjoint();  // diagonal unitary
    return kron(g, g) * build_r(p) * kron(g_inv, g_inv);
}

double sector_leakage(const ComplexMatrix& op) {
    double worst = 0.0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (sector_of(i) != sector_of(j)) worst = std::max(worst, std::abs(op(i, j)));
    return worst;
}

}  // namespace braidberry
