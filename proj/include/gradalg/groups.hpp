#pragma once

#include <memory>
#include <vector>

#include "gradalg/report.hpp"

namespace gradalg {

/// Finite group given extensionally by multiplication table.
/// Elements are indices 0..order-1.
class FiniteGroup {
public:
    int order() const { return n_; }
    int mul(int x, int y) const { return table_[size_t(x) * n_ + y]; }
    int neutral() const { return neutral_; }
    int inverse(int x) const { return inv_[size_t(x)]; }

    friend FiniteGroup make_group(const std::vector<std::vector<int>>& table);

private:
    int n_ = 0;
    std::vector<int> table_;
    int neutral_ = 0;
    std::vector<int> inv_;
};

/// All group axioms, each with a witness on failure:
/// valid indices, two-sided neutral, two-sided inverses, associativity
/// (exhaustive over all triples).
Report validate_group_table(const std::vector<std::vector<int>>& table);

/// Validates and constructs; throws CheckFailure naming the first violated
/// axiom with a witness triple.
FiniteGroup make_group(const std::vector<std::vector<int>>& table);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group_3();

} // namespace gradalg
