#pragma once

#include <memory>
#include <vector>

#include "gradalg/coind.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/homs.hpp"

namespace gradalg {

/// r_x(M) by the concrete formula: degree-y part is M_x * A_{x^-1 y}
/// (the graded submodule generated by the degree-x component).
GradedSubspace radical_subspace(const GradedModule& m, int x);

/// r_x(M) as a standalone module with its inclusion.
SubmoduleResult radical_submodule(const GradedModule& m, int x);

struct TorsionReport {
    int degree = 0;
    GradedSubspace radical;
    bool is_torsion = false;     // r_x(M) = M
    bool is_torsionfree = false; // M_x = 0
};
TorsionReport torsion_report(const GradedModule& m, int x);

bool is_torsion(const GradedModule& m, int x);
bool is_torsionfree(const GradedModule& m, int x);

/// (+)_y Y (x)_{A_e} A_{x^-1 y}: the tensor product is the quotient of the
/// plain tensor square by the balancing relations (y a' (x) b - y (x) a' b),
/// with right A-action on the second factor. Comes with the canonical graded
/// map into Coind_x(Y) sending y (x) b to [b' |-> y * (b b')].
struct TensorModel {
    GradedModule mod;
    CoinducedModule coind_target;
    GradedMap to_coind;
};
TensorModel tensor_model(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& y);

} // namespace gradalg
