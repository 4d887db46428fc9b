// Finite partitions of a finite algebra's unit into algebra elements, with
// refinement and common-refinement operations.
#pragma once

#include "famint/algebra.hpp"

namespace famint {

bool is_partition(const std::vector<AlgebraElement>& cells, const FiniteAlgebra& algebra);

/// A validated finite partition: nonzero, pairwise incompatible cells whose
/// join is the unit.
class FinitePartition {
public:
    FinitePartition(AlgebraPtr algebra, std::vector<AlgebraElement> cells);

    static FinitePartition trivial(AlgebraPtr algebra);
    static FinitePartition atoms(AlgebraPtr algebra);

    const FiniteAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const std::vector<AlgebraElement>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    friend bool operator==(const FinitePartition&, const FinitePartition&);

private:
    AlgebraPtr algebra_;
    std::vector<AlgebraElement> cells_;
};

/// True iff every cell of q lies inside some cell of p (for set partitions
/// this coincides with "every p-cell splits into q-cells").
bool refines(const FinitePartition& q, const FinitePartition& p);

/// Common refinement: all nonzero pairwise meets, in (p-cell, q-cell) order.
FinitePartition meet_partition(const FinitePartition& p, const FinitePartition& q);

}  // namespace famint
