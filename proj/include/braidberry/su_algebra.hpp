#pragma once

// Gell-Mann generators, the three coupled SU(3) realizations acting on
// C^3 (x) C^3, and the SU(2) realizations built from them.
//
// Single-qutrit basis: |0>, |1>, |2> are the standard unit vectors and the
// lambda matrices follow the usual Gell-Mann ordering. With that choice
//   I+ = |0><1|,  V+ = |2><0|,  U+ = |1><2|
// where V+- = I4 -+ i I5 has the opposite sign convention to I+- and U+-.

#include <array>

#include "braidberry/numeric.hpp"
#include "braidberry/subsystem.hpp"

namespace braidberry {

struct Su3Generators {
    std::array<ComplexMatrix, 8> lambda;     // lambda_1 .. lambda_8 (index 0..7)
    std::array<ComplexMatrix, 8> generator;  // I_mu = lambda_mu / 2
    ComplexMatrix i_plus, i_minus;
    ComplexMatrix v_plus, v_minus;
    ComplexMatrix u_plus, u_minus;
    ComplexMatrix i3, y;
};

/// Totally antisymmetric f_{lmn}, indices 1-based in the accessor.
class StructureConstants {
public:
    double operator()(int l, int m, int n) const;
    double& at(int l, int m, int n);

private:
    std::array<double, 512> f_{};
};

Su3Generators gell_mann();

/// f_{lmn} = -2i tr([I_l, I_m] I_n), computed from the generators.
StructureConstants structure_constants(const Su3Generators& g);

/// One coupled realization on the 9-dim space. Ladder and Cartan operators
/// come from tensor products of single-site operators; the Hermitian
/// generators I_1..I_8 are recovered by inverting the ladder definitions.
struct CoupledSu3Set {
    SubsystemId k{1};
    ComplexMatrix i_plus, i_minus;
    ComplexMatrix v_plus, v_minus;
    ComplexMatrix u_plus, u_minus;
    ComplexMatrix i3, y;
    std::array<ComplexMatrix, 8> generator;
};

CoupledSu3Set coupled_set(SubsystemId k);
std::array<CoupledSu3Set, 3> coupled_sets();

struct Su2Set {
    SubsystemId k{1};
    ComplexMatrix s_plus, s_minus, s3;
    ComplexMatrix casimir;  // (S+S- + S-S+)/2 + S3^2
};

/// S+ = (V- + U+)/sqrt2, S- = (V+ + U-)/sqrt2, S3 = (3/4) Y + (I+ + I-)/4.
Su2Set su2_set(const CoupledSu3Set& set);

/// Largest ||[I_l^(i), I_m^(j)] - i delta_ij f_lmn I_n^(i)||_F over all
/// i, j in 1..3 and l, m in 1..8.
double su3_closure_residual(const std::array<CoupledSu3Set, 3>& sets, const StructureConstants& f);

/// Largest residual of [S+^(i), S-^(j)] = 2 delta_ij S3^(i),
/// [S3^(i), S+-^(j)] = +-delta_ij S+-^(i) and (S+-^(i))^2 = 0.
double su2_relation_residual(const std::array<Su2Set, 3>& sets);

/// Largest deviation of the sorted Casimir spectrum from {0 x7, 3/4 x2}.
double casimir_spectrum_residual(const Su2Set& set);

}  // namespace braidberry
