#pragma once

#include <memory>
#include <vector>

#include "gradalg/coind.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/homs.hpp"
#include "gradalg/report.hpp"
#include "gradalg/smash.hpp"
#include "gradalg/torsion.hpp"

namespace gradalg {

struct SimplesOptions {
    u64 bound = kDefaultEnumBound;
    IsoOptions iso;
};

/// Verdict of the graded-simplicity scan: a nonzero module is simple iff the
/// closure of every nonzero homogeneous element is the whole module.
/// On failure the witness is a homogeneous element with proper closure.
struct GradedSimplicity {
    bool simple = false;
    int witness_degree = -1;
    Mat witness_vector;
};
GradedSimplicity is_graded_simple(const GradedModule& m, u64 bound = kDefaultEnumBound);

/// All graded submodules of m (per-degree subspace tuples closed under the
/// action); the product of per-degree subspace counts must fit the bound.
std::vector<GradedSubspace> graded_submodule_subspaces(const GradedModule& m,
                                                       u64 bound = kDefaultEnumBound);
std::vector<GradedSubspace> maximal_graded_submodules(const GradedModule& m,
                                                      u64 bound = kDefaultEnumBound);

/// An isomorphism class of simple right A_e-modules, certified by a maximal
/// submodule of the regular module.
struct AeSimpleClass {
    AeModule rep;
    Subspace maximal_witness;
};

/// Every simple right A_e-module exactly once (quotients of the regular
/// module by maximal submodules, deduplicated up to isomorphism).
std::vector<AeSimpleClass> simple_ae_modules(std::shared_ptr<const Algebra> ae,
                                             const SimplesOptions& opt = {});

/// J(R): intersection of the maximal submodules of the regular module,
/// verified nilpotent and two-sided.
Subspace jacobson_radical(std::shared_ptr<const Algebra> r, u64 bound = kDefaultEnumBound);

/// The map [Y] -> [r_x(Coind_x(Y))]: returns the radical submodule as a
/// standalone graded module, verifying it is nonzero, graded-simple, and
/// restricts at x back to Y. Any failure is a hard error.
GradedModule to_simple_graded(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& y,
                              const SimplesOptions& opt = {});

/// The map [S] -> [S_x]: requires x in the support of S; the result is
/// verified simple over A_e.
AeModule of_simple_graded(const GradedModule& s, int x, const SimplesOptions& opt = {});

struct GradedSimpleClass {
    GradedModule rep;
    std::vector<Mat> generators; // one homogeneous generator per nonzero component
};

/// Independent sweep for S_x: all graded-simple quotients of the shifts [y]A
/// with nonzero degree-x component, deduplicated up to isomorphism.
std::vector<GradedSimpleClass> sweep_graded_simples(std::shared_ptr<const GradedAlgebra> ga, int x,
                                                    const SimplesOptions& opt = {});

struct BijectionReport {
    int s_count = 0;
    int sx_count = 0;
    Report details;
    bool ok() const { return details.ok(); }
};

/// Both round trips of the simples bijection, computed anti-circularly:
/// S from the A_e side, S_x from the sweep; counts, injectivity,
/// surjectivity, and the two round trips are all checked.
BijectionReport bijection_check(std::shared_ptr<const GradedAlgebra> ga, int x,
                                const SimplesOptions& opt = {});

/// (+)_y S_y annihilates J(A_e).
bool is_semisimple_over_ae(const GradedModule& s, u64 bound = kDefaultEnumBound);

/// Transport of maximal right ideals through Sigma* = ([x]A)*: for every
/// maximal right ideal I of B with I Sigma* proper, I Sigma* is a maximal
/// End_B(Sigma)-submodule of Sigma* (exhaustive enumeration).
Report maximal_ideal_transport_check(const SmashAlgebra& b, int x,
                                     u64 bound = kDefaultEnumBound);

} // namespace gradalg
