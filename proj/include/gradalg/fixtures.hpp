#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradalg/graded.hpp"

namespace gradalg {

/// Group algebra GF(p)[G] with the canonical grading deg(g) = g.
std::shared_ptr<const GradedAlgebra> group_algebra(std::shared_ptr<const FiniteGroup> g, u32 p);

/// M_2(GF(2)) graded by Z/2: diagonal matrix units in degree e, antidiagonal
/// in degree g. Basis order: E11, E22, E12, E21.
std::shared_ptr<const GradedAlgebra> mat2_gf2_z2();

/// Upper-triangular 2x2 matrices over GF(2), Z/2-graded with E12 in degree g.
/// Basis order: E11, E22, E12.
std::shared_ptr<const GradedAlgebra> upper_triangular_gf2_z2();

/// GF(2)[t]/(t^2) concentrated in degree e of the trivial group.
/// Basis order: 1, t.
std::shared_ptr<const GradedAlgebra> dual_numbers_trivial();

struct Fixture {
    std::string name;
    std::shared_ptr<const GradedAlgebra> algebra;
};

/// The six standard desk-scale instances used across the test suites.
std::vector<Fixture> standard_fixtures();

} // namespace gradalg
