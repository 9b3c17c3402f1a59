#include "braidberry/su_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace braidberry {

namespace {

ComplexMatrix zero3() { return ComplexMatrix::Zero(3, 3); }

/// Hermitian generators from ladder/Cartan operators:
///   I1 = (I+ + I-)/2,  I2 = (I+ - I-)/2i
///   I4 = (V+ + V-)/2,  I5 = (V- - V+)/2i   (V+- = I4 -+ i I5)
///   I6 = (U+ + U-)/2,  I7 = (U+ - U-)/2i
///   I3,                I8 = (sqrt3/2) Y
std::array<ComplexMatrix, 8> recover_generators(const ComplexMatrix& ip, const ComplexMatrix& im,
                                                const ComplexMatrix& vp, const ComplexMatrix& vm,
                                                const ComplexMatrix& up, const ComplexMatrix& um,
                                                const ComplexMatrix& i3, const ComplexMatrix& y) {
    const Complex two_i{0.0, 2.0};
    return {(ip + im) / 2.0, (ip - im) / two_i, i3,
            (vp + vm) / 2.0, (vm - vp) / two_i,
            (up + um) / 2.0, (up - um) / two_i,
            (std::sqrt(3.0) / 2.0) * y};
}

}  // namespace

Su3Generators gell_mann() {
    Su3Generators g;
    for (auto& m : g.lambda) m = zero3();
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

    g.lambda[0](0, 1) = 1.0;
    g.lambda[0](1, 0) = 1.0;
    g.lambda[1](0, 1) = -kI;
    g.lambda[1](1, 0) = kI;
    g.lambda[2](0, 0) = 1.0;
    g.lambda[2](1, 1) = -1.0;
    g.lambda[3](0, 2) = 1.0;
    g.lambda[3](2, 0) = 1.0;
    g.lambda[4](0, 2) = -kI;
    g.lambda[4](2, 0) = kI;
    g.lambda[5](1, 2) = 1.0;
    g.lambda[5](2, 1) = 1.0;
    g.lambda[6](1, 2) = -kI;
    g.lambda[6](2, 1) = kI;
    g.lambda[7](0, 0) = inv_sqrt3;
    g.lambda[7](1, 1) = inv_sqrt3;
    g.lambda[7](2, 2) = -2.0 * inv_sqrt3;

    for (std::size_t mu = 0; mu < 8; ++mu) g.generator[mu] = g.lambda[mu] / 2.0;
    const auto& I = g.generator;

    g.i_plus = I[0] + kI * I[1];
    g.i_minus = I[0] - kI * I[1];
    g.v_plus = I[3] - kI * I[4];
    g.v_minus = I[3] + kI * I[4];
    g.u_plus = I[5] + kI * I[6];
    g.u_minus = I[5] - kI * I[6];
    g.i3 = I[2];
    g.y = (2.0 / std::sqrt(3.0)) * I[7];
    return g;
}

double StructureConstants::operator()(int l, int m, int n) const {
    return f_[static_cast<std::size_t>(((l - 1) * 8 + (m - 1)) * 8 + (n - 1))];
}

double& StructureConstants::at(int l, int m, int n) {
    return f_[static_cast<std::size_t>(((l - 1) * 8 + (m - 1)) * 8 + (n - 1))];
}

StructureConstants structure_constants(const Su3Generators& g) {
    StructureConstants f;
    for (int l = 1; l <= 8; ++l) {
        for (int m = 1; m <= 8; ++m) {
            const ComplexMatrix c = commutator(g.generator[l - 1], g.generator[m - 1]);
            for (int n = 1; n <= 8; ++n) {
                const Complex v = Complex{0.0, -2.0} * trace(c * g.generator[n - 1]);
                f.at(l, m, n) = v.real();
            }
        }
    }
    return f;
}

CoupledSu3Set coupled_set(SubsystemId k) {
    const Su3Generators g = gell_mann();
    const ComplexMatrix one = identity(3);
    // Single-site operators on leg 1 and leg 2.
    const ComplexMatrix i3_1 = kron(g.i3, one), i3_2 = kron(one, g.i3);
    const ComplexMatrix y_1 = kron(g.y, one), y_2 = kron(one, g.y);
    const ComplexMatrix i3i3 = kron(g.i3, g.i3);
    const ComplexMatrix yy = kron(g.y, g.y);
    const ComplexMatrix mixed = kron(g.i3, g.y) + kron(g.y, g.i3);

    CoupledSu3Set s;
    s.k = k;
    switch (k.value()) {
        case 1:
            s.i_plus = kron(g.i_plus, g.i_plus);
            s.i_minus = kron(g.i_minus, g.i_minus);
            s.u_plus = kron(g.u_plus, g.u_plus);
            s.u_minus = kron(g.u_minus, g.u_minus);
            s.v_plus = kron(g.v_plus, g.v_plus);
            s.v_minus = kron(g.v_minus, g.v_minus);
            s.i3 = (i3_1 + i3_2) / 3.0 + 0.5 * mixed;
            s.y = (y_1 + y_2) / 3.0 + (2.0 / 3.0) * i3i3 - 0.5 * yy;
            break;
        case 2:
            s.i_plus = kron(g.u_plus, g.v_plus);
            s.i_minus = kron(g.u_minus, g.v_minus);
            s.u_plus = kron(g.v_plus, g.i_plus);
            s.u_minus = kron(g.v_minus, g.i_minus);
            s.v_plus = kron(g.i_plus, g.u_plus);
            s.v_minus = kron(g.i_minus, g.u_minus);
            s.i3 = 0.5 * (-(i3_1 + i3_2) / 3.0 + 0.5 * (y_1 - y_2) + mixed);
            s.y = -(i3_1 - i3_2) / 3.0 - (y_1 + y_2) / 6.0 + (2.0 / 3.0) * i3i3 - 0.5 * yy;
            break;
        default:
            s.i_plus = kron(g.v_plus, g.u_plus);
            s.i_minus = kron(g.v_minus, g.u_minus);
            s.u_plus = kron(g.i_plus, g.v_plus);
            s.u_minus = kron(g.i_minus, g.v_minus);
            s.v_plus = kron(g.u_plus, g.i_plus);
            s.v_minus = kron(g.u_minus, g.i_minus);
            s.i3 = 0.5 * (-(i3_1 + i3_2) / 3.0 - 0.5 * (y_1 - y_2) + mixed);
            s.y = (i3_1 - i3_2) / 3.0 - (y_1 + y_2) / 6.0 + (2.0 / 3.0) * i3i3 - 0.5 * yy;
            break;
    }
    s.generator = recover_generators(s.i_plus, s.i_minus, s.v_plus, s.v_minus, s.u_plus, s.u_minus,
                                     s.i3, s.y);
    return s;
}

std::array<CoupledSu3Set, 3> coupled_sets() {
    return {coupled_set(SubsystemId(1)), coupled_set(SubsystemId(2)), coupled_set(SubsystemId(3))};
}

Su2Set su2_set(const CoupledSu3Set& set) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Su2Set s;
    s.k = set.k;
    s.s_plus = inv_sqrt2 * (set.v_minus + set.u_plus);
    s.s_minus = inv_sqrt2 * (set.v_plus + set.u_minus);
    s.s3 = 0.75 * set.y + 0.25 * (set.i_plus + set.i_minus);
    s.casimir = 0.5 * (s.s_plus * s.s_minus + s.s_minus * s.s_plus) + s.s3 * s.s3;
    return s;
}

double su3_closure_residual(const std::array<CoupledSu3Set, 3>& sets, const StructureConstants& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (int l = 1; l <= 8; ++l) {
                for (int m = 1; m <= 8; ++m) {
                    ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
                    if (i == j) {
                        for (int n = 1; n <= 8; ++n) {
                            const double fn = f(l, m, n);
                            if (fn != 0.0) expected += kI * fn * sets[i].generator[static_cast<std::size_t>(n - 1)];
                        }
                    }
                    const ComplexMatrix got = commutator(sets[i].generator[static_cast<std::size_t>(l - 1)],
                                                         sets[j].generator[static_cast<std::size_t>(m - 1)]);
                    worst = std::max(worst, frobenius_norm(got - expected));
                }
            }
        }
    }
    return worst;
}

double su2_relation_residual(const std::array<Su2Set, 3>& sets) {
    double worst = 0.0;
    const ComplexMatrix zero = ComplexMatrix::Zero(9, 9);
    for (std::size_t i = 0; i < 3; ++i) {
        worst = std::max({worst, frobenius_norm(sets[i].s_plus * sets[i].s_plus),
                          frobenius_norm(sets[i].s_minus * sets[i].s_minus)});
        for (std::size_t j = 0; j < 3; ++j) {
            const bool same = i == j;
            const auto& a = sets[i];
            const auto& b = sets[j];
            worst = std::max({worst,
                              frobenius_norm(commutator(a.s_plus, b.s_minus) - (same ? ComplexMatrix(2.0 * a.s3) : zero)),
                              frobenius_norm(commutator(a.s3, b.s_plus) - (same ? a.s_plus : zero)),
                              frobenius_norm(commutator(a.s3, b.s_minus) + (same ? a.s_minus : zero))});
        }
    }
    return worst;
}

double casimir_spectrum_residual(const Su2Set& set) {
    const RealVector spectrum = herm_eig(set.casimir).eigenvalues;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const double expected = i < 7 ? 0.0 : 0.75;
        worst = std::max(worst, std::abs(spectrum(i) - expected));
    }
    return worst;
}

}  // namespace braidberry
