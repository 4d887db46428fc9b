#include "famint/partition.hpp"

namespace famint {

bool is_partition(const std::vector<AlgebraElement>& cells, const FiniteAlgebra& algebra) {
    for (const auto& c : cells)
        if (!algebra.contains(c))
            throw InvalidInput("partition cell " + elem_to_bitstring(c) +
                               " is not in the algebra");
    if (cells.empty()) return false;
    AlgebraElement seen(algebra.ground().size());
    for (const auto& c : cells) {
        if (c.none()) return false;
        if ((seen & c).any()) return false;  // overlap
        seen |= c;
    }
    return seen.all();
}

FinitePartition::FinitePartition(AlgebraPtr algebra, std::vector<AlgebraElement> cells)
    : algebra_(std::move(algebra)), cells_(std::move(cells)) {
    if (!algebra_) throw InvalidInput("partition requires an algebra");
    if (!is_partition(cells_, *algebra_))
        throw InvalidInput("cells do not form a partition of the unit");
}

FinitePartition FinitePartition::trivial(AlgebraPtr algebra) {
    std::vector<AlgebraElement> cells{algebra->one()};
    return FinitePartition(std::move(algebra), std::move(cells));
}

FinitePartition FinitePartition::atoms(AlgebraPtr algebra) {
    std::vector<AlgebraElement> cells = algebra->atoms();
    return FinitePartition(std::move(algebra), std::move(cells));
}

bool operator==(const FinitePartition& a, const FinitePartition& b) {
    return *a.algebra_ == *b.algebra_ && a.cells_ == b.cells_;
}

bool refines(const FinitePartition& q, const FinitePartition& p) {
    if (q.algebra() != p.algebra())
        throw InvalidInput("refinement requires partitions of the same algebra");
    for (const auto& qc : q.cells()) {
        bool inside = false;
        for (const auto& pc : p.cells()) {
            if (qc.is_subset_of(pc)) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

FinitePartition meet_partition(const FinitePartition& p, const FinitePartition& q) {
    if (p.algebra() != q.algebra())
        throw InvalidInput("common refinement requires partitions of the same algebra");
    std::vector<AlgebraElement> cells;
    for (const auto& pc : p.cells())
        for (const auto& qc : q.cells()) {
            AlgebraElement m = pc & qc;
            if (m.any()) cells.push_back(std::move(m));
        }
    return FinitePartition(p.algebra_ptr(), std::move(cells));
}

}  // namespace famint
