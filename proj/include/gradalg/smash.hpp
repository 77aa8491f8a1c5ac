#pragma once

#include <memory>
#include <vector>

#include "gradalg/coring.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/homs.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// The smash ring B attached to a G-graded algebra A: free right A-module on
/// {1} u {e_x}, materialized as a structure-constant algebra on the basis
/// {a~_i} u {e_x a~_i}, with multiplication generated by
///   a~ b~ = (ab)~,   e_x e_y = delta_{x,y} e_x,   a~_z e_w = e_{w z^-1} a~_z,
/// and verified against the idempotent/projection relations afterwards.
class SmashAlgebra {
public:
    static std::shared_ptr<const SmashAlgebra> build(std::shared_ptr<const GradedAlgebra> graded);

    const GradedAlgebra& graded() const { return *graded_; }
    std::shared_ptr<const GradedAlgebra> graded_ptr() const { return graded_; }
    std::shared_ptr<const Algebra> ring() const { return ring_; }
    int dim() const { return ring_->dim; }

    int atilde_index(int i) const { return i; }
    int corner_index(int x, int i) const { return (1 + x) * graded_->dim() + i; }

    /// a |-> a~ (the embedding of A).
    std::vector<u32> embed(const std::vector<u32>& a) const;
    /// The idempotent e_x = sum_i unit_i e_x a~_i.
    std::vector<u32> idempotent(int x) const;

private:
    std::shared_ptr<const GradedAlgebra> graded_;
    std::shared_ptr<const Algebra> ring_;
};

/// Orthogonality of the e_x, both generator relations (projection form and
/// homogeneous-shift form), faithfulness of a |-> e_x a~ per corner, and the
/// multiplicativity of the embedding.
Report verify_smash_relations(const SmashAlgebra& b);

/// <c, b> in A: bilinear extension of <x, e_y> = delta_{x,y}, <x, a~> = a.
std::vector<u32> smash_pairing(const SmashAlgebra& b, const GroupCoring& c,
                               const std::vector<u32>& cvec, const std::vector<u32>& bvec);

/// Right B-modules are plain modules over the materialized ring.
using BModule = AeModule;

/// Graded module -> B-module: a~ acts through the A-action, e_x acts as the
/// projection onto M_x. Module axioms (= the relations as operator
/// identities) are re-verified; a failure flags a non-module input.
BModule b_module_of(const SmashAlgebra& b, const GradedModule& m);

/// C as a right B-module: c * a~ = ca, c * e_x = kappa_x-component.
BModule coring_b_module(const SmashAlgebra& b, const GroupCoring& c);

struct RatResult {
    Subspace subspace;                // Rat(M) inside the flat module
    std::vector<Subspace> components; // Me_x per group element
    GradedModule graded;              // the induced graded structure M_x = Me_x
};

/// Rat(M) = (+)_x M e_x with its graded structure.
RatResult rat(const SmashAlgebra& b, const BModule& m);

/// Concrete exactness evidence: C * Rat(B) = C, and Rat applied to the
/// canonical short exact sequence 0 -> Rat(B) -> B -> B/Rat(B) -> 0 stays
/// exact (rank bookkeeping).
Report exactness_witness(const SmashAlgebra& b, const GroupCoring& c);

} // namespace gradalg
