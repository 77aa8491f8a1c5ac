#pragma once

#include <memory>
#include <vector>

#include "gradalg/graded.hpp"
#include "gradalg/homs.hpp"
#include "gradalg/report.hpp"
#include "gradalg/smash.hpp"

namespace gradalg {

/// Coind_x(N) = (+)_y Hom_{A_e}(A_{y^-1 x}, N) as a graded A-module.
/// The degree-y component keeps its Hom-space basis so elements can be
/// evaluated: a coordinate vector lambda in degree y stands for the map
/// sum_m lambda_m hom[y].basis[m] : A_{y^-1 x} -> N.
struct CoinducedModule {
    GradedModule mod;
    int x = 0;
    AeModule n;
    std::vector<AeHomSpace> hom; // per degree y

    /// Evaluate the element (degree y, coords) at b (local coords in A_{y^-1 x}).
    std::vector<u32> eval(int y, const std::vector<u32>& coords,
                          const std::vector<u32>& b_local) const;
};

CoinducedModule coind(std::shared_ptr<const GradedAlgebra> ga, int x, const AeModule& n);

/// Functorial action: h: N -> N' induces Coind_x(N) -> Coind_x(N').
GradedMap coind_map(const CoinducedModule& src, const CoinducedModule& tgt, const Mat& h);

/// Unit of the adjunction (-)_x -| Coind_x at M:
/// m_y |-> [b |-> m_y * b], a graded map M -> Coind_x(M_x).
GradedMap unit_eta(const GradedModule& m, const CoinducedModule& target);

/// Counit at N: evaluation at 1, (Coind_x(N))_x -> N.
Mat counit_epsilon(const CoinducedModule& cn);

/// Both adjunction transposes as matrices between Hom-space coordinates:
/// forward:  Hom_gr(M, Coind_x(N)) -> Hom_{A_e}(M_x, N), g |-> eval_1 o g_x
/// backward: h |-> (m_y |-> [b |-> h(m_y b)])
struct AdjunctionTranspose {
    GradedHomSpace graded_side;
    AeHomSpace ae_side;
    Mat forward;
    Mat backward;
};
AdjunctionTranspose adjunction_transpose(const GradedModule& m, const CoinducedModule& cn);

/// The counit of the hom-set formulation at Sigma = [x]A: the composite
/// isomorphism Hom_gr([x]A, Coind_x(Y)) -> (Coind_x Y)_x -> Y.
struct CounitXi {
    GradedHomSpace hom;
    Mat matrix; // hom coords -> Y
};
CounitXi counit_xi(const CoinducedModule& cy);

/// [x]A as a finitely generated projective B-module with its dual
/// Sigma* = Hom_B(Sigma, B), the left B- and right End_B(Sigma)-actions on
/// Sigma*-coordinates, and a dual basis certificate.
struct SigmaDual {
    int x = 0;
    BModule sigma;                      // b_module_of([x]A)
    AeHomSpace hom_b;                   // basis of Hom_B(Sigma, B)
    std::vector<Mat> dual_basis;        // u_j*: one per basis u_j of Sigma
    std::vector<Mat> left_b_action;     // per B basis element, on Sigma*-coords
    std::vector<Mat> right_ae_action;   // per A_e basis element, on Sigma*-coords
    AeHomSpace endo;                    // End_B(Sigma)
    std::vector<Mat> right_endo_action; // per endo basis element, on Sigma*-coords
};
SigmaDual sigma_dual(const SmashAlgebra& b, int x);

/// Rat(Hom_{A_e}(Sigma*, N)) carries a graded structure canonically
/// isomorphic to Coind_x(N); the canonical per-degree map is built via the
/// corner identification e_y Sigma* = A_{y^-1 x} and checked to be a graded
/// isomorphism. This ties the two constructions of coinduction together.
Report coind_diagram_check(const SmashAlgebra& b, int x, const AeModule& n);

} // namespace gradalg
