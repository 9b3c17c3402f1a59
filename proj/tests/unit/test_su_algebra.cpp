#include <doctest.h>

#include <cmath>

#include "braidberry/errors.hpp"
#include "braidberry/su_algebra.hpp"

using namespace braidberry;

namespace {

ComplexMatrix ket_bra(int i, int j, int n = 3) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

}  // namespace

TEST_CASE("Gell-Mann matrices: Hermitian, traceless, orthogonal") {
    const Su3Generators g = gell_mann();
    for (std::size_t a = 0; a < 8; ++a) {
        CHECK(hermiticity_defect(g.lambda[a]) == 0.0);
        CHECK(std::abs(trace(g.lambda[a])) < 1e-15);
        for (std::size_t b = 0; b < 8; ++b) {
            const Complex tr = trace(g.lambda[a] * g.lambda[b]);
            CHECK(std::abs(tr - Complex(a == b ? 2.0 : 0.0)) < 1e-14);
        }
    }
    CHECK(trace(g.lambda[2] * g.lambda[2]).real() == doctest::Approx(2.0));
}

TEST_CASE("ladder operators follow the sign convention") {
    const Su3Generators g = gell_mann();
    const auto& I = g.generator;
    CHECK(frobenius_norm(g.i_plus - (I[0] + kI * I[1])) < 1e-15);
    CHECK(frobenius_norm(g.i_minus - (I[0] - kI * I[1])) < 1e-15);
    CHECK(frobenius_norm(g.v_plus - (I[3] - kI * I[4])) < 1e-15);
    CHECK(frobenius_norm(g.v_minus - (I[3] + kI * I[4])) < 1e-15);
    CHECK(frobenius_norm(g.u_plus - (I[5] + kI * I[6])) < 1e-15);
    CHECK(frobenius_norm(g.u_minus - (I[5] - kI * I[6])) < 1e-15);
    CHECK(frobenius_norm(g.y - 2.0 / std::sqrt(3.0) * I[7]) < 1e-15);

    CHECK(frobenius_norm(g.i_plus - ket_bra(0, 1)) == 0.0);
    CHECK(frobenius_norm(g.v_plus - ket_bra(2, 0)) == 0.0);
    CHECK(frobenius_norm(g.u_plus - ket_bra(1, 2)) == 0.0);

    ComplexVector one = ComplexVector::Zero(3);
    one(1) = 1.0;
    CHECK((g.i_plus * one)(0) == Complex(1, 0));
    CHECK(frobenius_norm(commutator(I[0], I[1]) - kI * I[2]) < 1e-12);
}

TEST_CASE("structure constants from the trace formula") {
    const StructureConstants f = structure_constants(gell_mann());
    CHECK(f(1, 2, 3) == doctest::Approx(1.0));
    CHECK(f(1, 2, 4) == doctest::Approx(0.0));
    CHECK(f(4, 5, 8) == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(f(6, 7, 8) == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(f(1, 4, 7) == doctest::Approx(0.5));
    CHECK(f(1, 5, 6) == doctest::Approx(-0.5));
    for (int l = 1; l <= 8; ++l)
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= 8; ++n) {
                CHECK(f(l, m, n) == doctest::Approx(-f(m, l, n)));
                CHECK(f(l, m, n) == doctest::Approx(-f(l, n, m)));
            }
}

TEST_CASE("coupled sets: tensor forms and nilpotency") {
    const Su3Generators g = gell_mann();
    const auto sets = coupled_sets();
    CHECK(frobenius_norm(sets[0].i_plus - kron(g.i_plus, g.i_plus)) == 0.0);
    // I+^(1) is supported on |00><11|.
    CHECK(sets[0].i_plus(0, 4) == Complex(1, 0));
    CHECK(std::abs(sets[0].i_plus.sum() - Complex(1, 0)) == 0.0);

    for (const auto& s : sets) {
        for (const ComplexMatrix* op : {&s.i_plus, &s.i_minus, &s.v_plus, &s.v_minus, &s.u_plus, &s.u_minus}) {
            CHECK(frobenius_norm(*op) > 0.0);
            CHECK(frobenius_norm(*op * *op) < 1e-15);
        }
        for (const auto& gen : s.generator) CHECK(hermiticity_defect(gen) < 1e-15);
        CHECK(frobenius_norm(s.i_plus - (s.generator[0] + kI * s.generator[1])) < 1e-14);
        CHECK(frobenius_norm(s.v_plus - (s.generator[3] - kI * s.generator[4])) < 1e-14);
        CHECK(frobenius_norm(s.u_plus - (s.generator[5] + kI * s.generator[6])) < 1e-14);
        CHECK(frobenius_norm(s.y - 2.0 / std::sqrt(3.0) * s.generator[7]) < 1e-14);
    }
    CHECK_THROWS_AS(coupled_set(SubsystemId(4)), DomainError);
}

TEST_CASE("coupled sets close SU(3) and commute across sets") {
    const auto sets = coupled_sets();
    CHECK(su3_closure_residual(sets, structure_constants(gell_mann())) <= 1e-9);
    for (std::size_t l = 0; l < 8; ++l)
        for (std::size_t m = 0; m < 8; ++m) CHECK(frobenius_norm(commutator(sets[0].generator[l], sets[1].generator[m])) < 1e-14);
}

TEST_CASE("SU(2) realizations and Casimirs") {
    const auto sets = coupled_sets();
    const std::array<Su2Set, 3> s2{su2_set(sets[0]), su2_set(sets[1]), su2_set(sets[2])};
    CHECK(su2_relation_residual(s2) <= 1e-12);
    for (const auto& s : s2) {
        CHECK(frobenius_norm(s.s_plus * s.s_plus) < 1e-15);
        CHECK(casimir_spectrum_residual(s) <= 1e-10);
        const RealVector spec = herm_eig(s.casimir).eigenvalues;
        CHECK(spec(7) == doctest::Approx(0.75));
        CHECK(spec(8) == doctest::Approx(0.75));
        CHECK(std::abs(spec(6)) < 1e-12);
    }
    CHECK(frobenius_norm(commutator(s2[0].s_plus, s2[1].s_minus)) < 1e-15);
}

TEST_CASE("SubsystemId") {
    CHECK(SubsystemId(1).basis() == std::array<int, 3>{0, 4, 8});
    CHECK(SubsystemId(2).basis() == std::array<int, 3>{1, 5, 6});
    CHECK(SubsystemId(3).basis() == std::array<int, 3>{2, 3, 7});
    CHECK_THROWS_AS(SubsystemId(0), DomainError);
    std::array<int, 9> seen{};
    for (const auto k : SubsystemId::all())
        for (int i : k.basis()) ++seen[static_cast<std::size_t>(i)];
    for (int c : seen) CHECK(c == 1);
}
