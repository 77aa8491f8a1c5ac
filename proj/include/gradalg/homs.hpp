#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gradalg/algebra.hpp"
#include "gradalg/exactlin.hpp"
#include "gradalg/graded.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// Right module over a plain structure-constant algebra, given by one action
/// matrix per algebra basis element. Used for A_e-modules and reused for
/// modules over the smash ring B.
struct AeModule {
    std::shared_ptr<const Algebra> ring;
    int dim = 0;
    std::vector<Mat> act;
};

Report validate_ae_module(const AeModule& u);
AeModule make_ae_module(std::shared_ptr<const Algebra> ring, int dim, std::vector<Mat> act);
AeModule regular_module(std::shared_ptr<const Algebra> ring);
AeModule zero_module(std::shared_ptr<const Algebra> ring);

/// Degree-x component of a graded module with its induced A_e-action.
AeModule restrict_to_ae(const GradedModule& m, int x);

/// A_d as a right A_e-module (right multiplication).
AeModule algebra_component_module(const GradedAlgebra& ga, int d);

/// Action of a general ring element on an AeModule.
Mat ae_action_of(const AeModule& u, const std::vector<u32>& elem);

bool ae_action_closed(const AeModule& u, const Subspace& s);

struct AeSubmoduleResult {
    AeModule module;
    Mat inclusion; // sub coords -> ambient
};
AeSubmoduleResult ae_submodule(const AeModule& u, const Subspace& s);

struct AeQuotientResult {
    AeModule module;
    Mat projection; // ambient -> quotient coords
};
AeQuotientResult ae_quotient(const AeModule& u, const Subspace& s);

/// Every action-closed subspace of u (exhaustive; requires p^dim <= bound).
std::vector<Subspace> ae_submodule_subspaces(const AeModule& u, u64 bound = kDefaultEnumBound);

/// Maximal proper submodules.
std::vector<Subspace> ae_maximal_submodules(const AeModule& u, u64 bound = kDefaultEnumBound);

/// Smallest action-closed subspace containing the given rows.
Subspace ae_closure(const AeModule& u, const Mat& rows);

/// Nonzero and generated by each of its nonzero vectors (exhaustive scan).
bool is_simple_ae(const AeModule& u, u64 bound = kDefaultEnumBound);

/// Basis of Hom_{A_e}(U, V): all matrices intertwining the actions.
struct AeHomSpace {
    std::vector<Mat> basis;
    int src_dim = 0, tgt_dim = 0;
    int dim() const { return int(basis.size()); }
};
AeHomSpace ae_hom(const AeModule& u, const AeModule& v);

Mat ae_hom_from_coords(const AeHomSpace& hs, const std::vector<u32>& coords, u32 p);
std::vector<u32> ae_hom_coords(const AeHomSpace& hs, const Mat& f);

/// Basis of the degree-preserving A-linear maps M -> N.
struct GradedHomSpace {
    std::vector<GradedMap> basis;
    int dim() const { return int(basis.size()); }
};
GradedHomSpace graded_hom(const GradedModule& m, const GradedModule& n);

GradedMap graded_hom_from_coords(const GradedHomSpace& hs, const std::vector<u32>& coords,
                                 const GradedModule& m, const GradedModule& n);
std::vector<u32> graded_hom_coords(const GradedHomSpace& hs, const GradedMap& f);

/// Isomorphism testing: exhaustive over the Hom space when p^dim(Hom) fits the
/// bound (then "no" is conclusive), randomized sampling otherwise
/// ("inconclusive" on exhaustion).
enum class IsoVerdict { yes, no, inconclusive };

struct IsoOptions {
    u64 bound = kDefaultEnumBound;
    u64 seed = 0xC0FFEE;
    int trials = 4096;
};

struct GradedIsoResult {
    IsoVerdict verdict = IsoVerdict::no;
    std::optional<GradedMap> certificate;
};
GradedIsoResult graded_isomorphic(const GradedModule& m, const GradedModule& n,
                                  const IsoOptions& opt = {});

struct AeIsoResult {
    IsoVerdict verdict = IsoVerdict::no;
    std::optional<Mat> certificate;
};
AeIsoResult ae_isomorphic(const AeModule& u, const AeModule& v, const IsoOptions& opt = {});

} // namespace gradalg
