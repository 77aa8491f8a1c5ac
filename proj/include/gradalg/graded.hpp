#pragma once

#include <memory>
#include <vector>

#include "gradalg/algebra.hpp"
#include "gradalg/exactlin.hpp"
#include "gradalg/groups.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

inline std::vector<u32> unit_vector(int dim, int i) {
    std::vector<u32> v(size_t(dim), 0);
    v[size_t(i)] = 1;
    return v;
}

/// G-graded algebra A = (+)_x A_x over GF(p): a validated structure-constant
/// algebra whose basis carries group-element degree labels, with
/// A_x * A_y inside A_{xy} and 1 in A_e.
class GradedAlgebra {
public:
    static std::shared_ptr<const GradedAlgebra> create(
        std::shared_ptr<const FiniteGroup> group, u32 p, std::vector<int> deg,
        std::vector<std::vector<std::vector<u32>>> sc, std::vector<u32> unit);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const Algebra& algebra() const { return alg_; }
    u32 modulus() const { return alg_.p; }
    int dim() const { return alg_.dim; }
    int degree_of(int i) const { return deg_[size_t(i)]; }
    const std::vector<int>& basis_of_degree(int x) const { return by_degree_[size_t(x)]; }
    int dim_of_degree(int x) const { return int(by_degree_[size_t(x)].size()); }

    /// The degree-neutral subring A_e as a standalone algebra; its basis is
    /// basis_of_degree(e) in order.
    std::shared_ptr<const Algebra> ae() const { return ae_; }
    const std::vector<int>& ae_indices() const { return by_degree_[size_t(group_->neutral())]; }
    /// Unit of A in A_e-local coordinates.
    const std::vector<u32>& unit_ae_coords() const { return unit_ae_; }

    /// pi_x: homogeneous part of v, as a full-length coefficient vector.
    std::vector<u32> project(const std::vector<u32>& v, int x) const;
    /// Coordinates of pi_x(v) in the degree-x basis.
    std::vector<u32> component_coords(const std::vector<u32>& v, int x) const;
    /// Embed degree-x local coordinates into a full-length vector.
    std::vector<u32> from_component(const std::vector<u32>& local, int x) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    Algebra alg_;
    std::vector<int> deg_;
    std::vector<std::vector<int>> by_degree_;
    std::shared_ptr<const Algebra> ae_;
    std::vector<u32> unit_ae_;
};

/// Full axiom report: prime modulus, degree labels, grading compatibility
/// (sc[i][j][k] = 0 unless deg k = deg i * deg j), associativity, two-sided
/// unit, unit contained in A_e.
Report validate_graded_algebra(const FiniteGroup& group, u32 p, const std::vector<int>& deg,
                               const std::vector<std::vector<std::vector<u32>>>& sc,
                               const std::vector<u32>& unit);

/// Graded right A-module: one component per degree, with an action matrix per
/// (algebra basis element, source degree). act[i][y] maps M_y -> M_{y*deg(i)}
/// on row vectors.
struct GradedModule {
    std::shared_ptr<const GradedAlgebra> algebra;
    std::vector<int> dims;
    std::vector<std::vector<Mat>> act;

    int dim_at(int y) const { return dims[size_t(y)]; }
    int total_dim() const;
    int offset(int y) const;
    bool is_zero() const { return total_dim() == 0; }
    /// Block matrix of the action of basis element i on the flattened module.
    Mat global_action(int i) const;
};

Report validate_graded_module(const GradedModule& m);
GradedModule make_graded_module(std::shared_ptr<const GradedAlgebra> algebra,
                                std::vector<int> dims, std::vector<std::vector<Mat>> act);
GradedModule zero_graded_module(std::shared_ptr<const GradedAlgebra> algebra);

/// The shift [x]A: underlying space A with degree-y component A_{x^-1 y},
/// action by right multiplication. ([x]A)_x = A_e.
GradedModule make_shift(std::shared_ptr<const GradedAlgebra> algebra, int x);

/// Degree-preserving linear map, one block per degree: blocks[y]: M_y -> N_y.
struct GradedMap {
    std::vector<Mat> blocks;
};

GradedMap identity_map(const GradedModule& m);
GradedMap zero_map(const GradedModule& src, const GradedModule& tgt);
GradedMap compose(const GradedMap& f, const GradedMap& g); // f then g
GradedMap map_add(const GradedMap& f, const GradedMap& g);
GradedMap map_scale(const GradedMap& f, u32 c);
bool map_is_zero(const GradedMap& f);

/// A-linearity of f: M -> N on all basis actions.
bool check_graded_map(const GradedModule& src, const GradedModule& tgt, const GradedMap& f);

/// Per-degree subspaces of a module's components (canonical RREF bases).
using GradedSubspace = std::vector<Subspace>;

GradedSubspace zero_subspace_of(const GradedModule& m);
GradedSubspace full_subspace_of(const GradedModule& m);
bool graded_subspace_equal(const GradedSubspace& a, const GradedSubspace& b);
bool graded_subspace_contains(const GradedSubspace& outer, const GradedSubspace& inner);
GradedSubspace graded_subspace_sum(const GradedSubspace& a, const GradedSubspace& b);
std::vector<int> graded_subspace_dims(const GradedSubspace& s);

bool is_action_closed(const GradedModule& m, const GradedSubspace& s);

/// Smallest action-closed graded subspace containing the given homogeneous
/// row vectors (gens[y]: rows inside M_y).
GradedSubspace close_under_action(const GradedModule& m, const std::vector<Mat>& gens);

/// Image/kernel of a graded map, per degree.
GradedSubspace map_image(const GradedMap& f);
GradedSubspace map_kernel(const GradedMap& f);

struct SubmoduleResult {
    GradedModule module;
    GradedMap inclusion; // module -> ambient
    GradedSubspace subspace;
};

/// Graded submodule generated by homogeneous vectors (closure under action).
SubmoduleResult submodule_from_homogeneous(const GradedModule& m, const std::vector<Mat>& gens);

/// Wrap an already action-closed graded subspace as a standalone module.
SubmoduleResult submodule_from_subspace(const GradedModule& m, const GradedSubspace& s);

struct QuotientResult {
    GradedModule module;
    GradedMap projection; // ambient -> quotient
};

/// M/S for an action-closed graded subspace S; throws CheckFailure otherwise.
QuotientResult quotient_module(const GradedModule& m, const GradedSubspace& s);

struct DirectSumResult {
    GradedModule module;
    GradedMap inj1, inj2;   // summand -> sum
    GradedMap proj1, proj2; // sum -> summand
};

DirectSumResult direct_sum(const GradedModule& a, const GradedModule& b);

} // namespace gradalg
