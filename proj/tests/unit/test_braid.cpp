#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidberry/braid.hpp"
#include "braidberry/errors.hpp"
#include "oracles.hpp"

using namespace braidberry;

namespace {

BraidParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-oracle::pi, oracle::pi);
    return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("build_m reproduces the printed matrix") {
    const ComplexMatrix m0 = build_m(0, 0);
    int nonzero = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (m0(i, j) != Complex(0, 0)) {
                ++nonzero;
                CHECK(m0(i, j) == Complex(1, 0));
            }
    CHECK(nonzero == 18);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidParams p = random_params(rng);
        const ComplexMatrix m = build_m(p);
        CHECK(frobenius_norm(m - oracle::printed_m(p.phi1, p.phi2)) < 1e-14);
        CHECK(hermiticity_defect(m) < 1e-15);
        CHECK(frobenius_norm(m * m - m - 2.0 * identity(9)) < 1e-13);
    }
}

TEST_CASE("SU(3) form of M matches entrywise") {
    const auto sets = coupled_sets();
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidParams p = random_params(rng);
        CHECK(frobenius_norm(build_m_su3(p, sets) - build_m(p)) <= 1e-12);
    }
    // No Cartan terms: M has a zero diagonal.
    const ComplexMatrix m = build_m_su3(BraidParams{}, sets);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(m(i, i)) < 1e-15);
    // Coefficient of I+^(1) at q1 = q2 = 1 is 1: it is the only term on |00><11|.
    CHECK(std::abs(m(0, 4) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("build_r: identity at theta = 0, unitary, spectrum {x x6, 1/x x3}") {
    CHECK(frobenius_norm(build_r(BraidParams{0.0, 0.8, -0.3}) - identity(9)) < 1e-15);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidParams p = random_params(rng);
        const ComplexMatrix r = build_r(p);
        CHECK(frobenius_norm(r.adjoint() * r - identity(9)) <= 1e-12);
        CHECK(frobenius_norm(r.adjoint() - build_r(BraidParams{-p.theta, p.phi1, p.phi2})) <= 1e-10);
        CHECK(sector_leakage(r) == 0.0);

        Eigen::ComplexEigenSolver<ComplexMatrix> es(r);
        std::vector<Complex> eig(es.eigenvalues().begin(), es.eigenvalues().end());
        const Complex x = p.x();
        const auto near = [](Complex target) { return [target](Complex z) { return std::abs(z - target) < 1e-9; }; };
        if (std::abs(x - 1.0 / x) > 1e-6) {
            CHECK(std::count_if(eig.begin(), eig.end(), near(x)) == 6);
            CHECK(std::count_if(eig.begin(), eig.end(), near(1.0 / x)) == 3);
        }
    }
}

TEST_CASE("Baxter coefficients map the M eigenvalues onto x and 1/x") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-oracle::pi, oracle::pi);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex x = std::polar(1.0, u(rng));
        const BaxterCoeffs c = BaxterCoeffs::at(x);
        CHECK(std::abs((c.b + 2.0 * c.a) / 3.0 - 1.0 / x) < 1e-14);
        CHECK(std::abs((c.b - c.a) / 3.0 - x) < 1e-14);
        CHECK(std::abs(c.rho - c.b / 3.0) < 1e-15);
        CHECK(std::abs(c.G + (x - 1.0 / x) / (2.0 * x + 1.0 / x)) < 1e-14);
    }
    static_assert(HeckeParams::beta == HeckeParams::g && HeckeParams::g == 2 * HeckeParams::alpha * HeckeParams::alpha);
}

TEST_CASE("Hecke relations hold and detect a perturbation") {
    CHECK(check_hecke(BraidParams{}).max() <= 1e-12);
    std::mt19937_64 rng(15);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) worst = std::max(worst, check_hecke(random_params(rng)).max());
    CHECK(worst <= 1e-9);

    ComplexMatrix m = build_m(0.3, -1.2);
    m(0, 4) += 0.01;
    CHECK(check_hecke(m).max() > 1e-3);
}

TEST_CASE("Yang-Baxter equation on C^27") {
    CHECK(check_ybe(0.0, 0.0, 0.4, 0.9) < 1e-14);
    CHECK(check_ybe(oracle::pi / 3, oracle::pi / 5, 0.7, -1.1) <= 1e-10);

    // Direct 27x27 evaluation with loop-built embeddings.
    const auto r_at = [](double theta) { return build_r(BraidParams{theta, 0.7, -1.1}); };
    const double t1 = oracle::pi / 3, t2 = oracle::pi / 5;
    const auto one = [](const ComplexMatrix& r) { return oracle::loop_kron(r, identity(3)); };
    const auto two = [](const ComplexMatrix& r) { return oracle::loop_kron(identity(3), r); };
    const ComplexMatrix lhs = one(r_at(t1)) * two(r_at(t1 + t2)) * one(r_at(t2));
    const ComplexMatrix rhs = two(r_at(t2)) * one(r_at(t1 + t2)) * two(r_at(t1));
    CHECK(frobenius_norm(lhs - rhs) <= 1e-10);

    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> u(-oracle::pi, oracle::pi);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) worst = std::max(worst, check_ybe(u(rng), u(rng), u(rng), u(rng)));
    CHECK(worst <= 1e-9);

    ComplexMatrix m = build_m(0.7, -1.1);
    m(2, 3) += 0.01;
    CHECK(check_ybe(t1, t2, m) > 1e-4);
}

TEST_CASE("Baxterization functional equations") {
    const BaxterizationResiduals at_one = check_baxterization_functions(1.0, 1.0);
    CHECK(at_one.max() == 0.0);
    CHECK(std::abs(BaxterCoeffs::at(1.0).G) == 0.0);
    CHECK(std::abs(BaxterCoeffs::at(1.0).rho - 1.0) == 0.0);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-oracle::pi, oracle::pi);
    for (int trial = 0; trial < 200; ++trial) {
        const double tx = u(rng);
        CHECK(check_baxterization_functions(std::polar(1.0, tx), std::polar(1.0, u(rng))).max() <= 1e-12);
        // |2x + 1/x|^2 = 9 cos^2 + sin^2 >= 1 on the unit circle.
        CHECK(std::norm(2.0 * std::polar(1.0, tx) + 1.0 / std::polar(1.0, tx)) >= 1.0 - 1e-12);
    }
    // Off the unit circle 2x + 1/x vanishes at x = i/sqrt2.
    const Complex singular(0.0, 1.0 / std::sqrt(2.0));
    CHECK_THROWS_AS(BaxterCoeffs::at(singular), DomainError);
    CHECK_THROWS_AS(check_baxterization_functions(singular, 1.0), DomainError);
    CHECK_THROWS_AS(check_baxterization_functions(1.0, singular), DomainError);
}

TEST_CASE("local gauge equivalence") {
    CHECK(frobenius_norm(local_gauge(0, 0) - identity(3)) == 0.0);
    const ComplexMatrix p = local_gauge(0.4, 1.9);
    CHECK(frobenius_norm(p.adjoint() * p - identity(3)) < 1e-15);
    CHECK(frobenius_norm(gauge_transform(BraidParams{oracle::pi / 3, 0.4, 1.9}) -
                         build_r(BraidParams{oracle::pi / 3, 0, 0})) <= 1e-12);
    const BraidParams flat{0.8, 0, 0};
    CHECK(frobenius_norm(gauge_transform(flat) - build_r(flat)) == 0.0);

    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 100; ++trial) {
        const BraidParams q = random_params(rng);
        CHECK(frobenius_norm(gauge_transform(q) - build_r(BraidParams{q.theta, 0, 0})) <= 1e-10);
    }
}
