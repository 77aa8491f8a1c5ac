#pragma once

#include <memory>
#include <vector>

#include "gradalg/exactlin.hpp"
#include "gradalg/report.hpp"

namespace gradalg {

/// Finite-dimensional associative unital algebra over GF(p), given by a basis
/// and structure constants: b_i * b_j = sum_k sc[i][j][k] b_k.
struct Algebra {
    u32 p = 2;
    int dim = 0;
    std::vector<std::vector<std::vector<u32>>> sc;
    std::vector<u32> unit;

    std::vector<u32> mul(const std::vector<u32>& a, const std::vector<u32>& b) const;

    /// Matrix of v -> v * b_i on row vectors.
    Mat right_mult(int i) const;
    /// Matrix of v -> a * v on row vectors.
    Mat left_mult_elem(const std::vector<u32>& a) const;
};

/// Associativity on all basis triples, unit two-sided identity.
Report validate_algebra(const Algebra& a);

/// Validate and wrap; throws CheckFailure with a witness.
std::shared_ptr<const Algebra> make_algebra(u32 p, int dim,
                                            std::vector<std::vector<std::vector<u32>>> sc,
                                            std::vector<u32> unit);

} // namespace gradalg
