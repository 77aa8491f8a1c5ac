#pragma once

#include <memory>
#include <vector>

#include "gradalg/exactlin.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// The A-coring C = AG: free left A-module with basis G, right action
/// x*a_y = a_y(xy), comultiplication D(ax) = ax (x) x and counit eps(ax) = a.
///
/// Elements are coefficient vectors over the basis {b_i x}; tensor squares
/// and cubes use the free decomposition C (x)_A C = (+)_y C y, so their bases
/// are {b_i x (x) y} and {b_i x (x) y (x) z}.
class GroupCoring {
public:
    static std::shared_ptr<const GroupCoring> build(std::shared_ptr<const GradedAlgebra> algebra);

    const GradedAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const GradedAlgebra> algebra_ptr() const { return algebra_; }
    int dim() const { return algebra_->dim() * group_order(); }
    int group_order() const { return algebra_->group().order(); }

    int flat(int i, int x) const { return x * algebra_->dim() + i; }
    int flat_cc(int i, int x, int y) const { return (y * group_order() + x) * algebra_->dim() + i; }
    int flat_ccc(int i, int x, int y, int z) const {
        return ((z * group_order() + y) * group_order() + x) * algebra_->dim() + i;
    }

    /// c * a (right A-action).
    std::vector<u32> right_action(const std::vector<u32>& c, const std::vector<u32>& a) const;
    /// a * c (left A-action).
    std::vector<u32> left_action(const std::vector<u32>& a, const std::vector<u32>& c) const;
    /// kappa_x: component of c in the free summand Ax, as an A-coefficient vector.
    std::vector<u32> group_component(const std::vector<u32>& c, int x) const;

    std::vector<u32> delta(const std::vector<u32>& c) const;
    std::vector<u32> counit(const std::vector<u32>& c) const;

    /// c (x)_A c' reduced to the canonical basis of C (x) C.
    std::vector<u32> tensor_cc(const std::vector<u32>& c, const std::vector<u32>& cp) const;

    /// eps(g) = 1 and D(g) = g (x) g, both exactly.
    bool is_grouplike(const std::vector<u32>& c) const;

    /// Flat vector of the grouplike basis element x.
    std::vector<u32> group_element(int x) const;

private:
    std::shared_ptr<const GradedAlgebra> algebra_;
};

/// Coassociativity and counit laws on every basis element of C, plus
/// grouplike verification for every group element.
Report verify_coring(const GroupCoring& c);

/// Right A-module with an explicit coaction rho: M -> M (x)_A C; the tensor
/// basis is {(module basis vector, y)} with flat index y*dim + g.
struct ComoduleData {
    std::shared_ptr<const GradedAlgebra> algebra;
    int dim = 0;
    std::vector<Mat> action; // ungraded action, one per algebra basis element
    Mat rho;                 // dim x (dim * |G|)
};

/// Forget the grading: the coaction is rho(m_y) = m_y (x) y.
ComoduleData comodule_of(const GradedModule& m);

/// The coinvariance subspace M^cov(x) = {m : rho(m) = m (x) x} of the
/// flattened module, computed as a kernel.
Subspace cov_component(const ComoduleData& c, int x);

/// Rebuild the graded module from coaction data: components are the
/// coinvariance subspaces, actions are restricted. Throws CheckFailure if the
/// cov components do not decompose M or the action does not restrict.
GradedModule graded_of(const ComoduleData& c);

} // namespace gradalg
