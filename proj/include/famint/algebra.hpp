// Finite Boolean set algebras: generated subalgebras, atoms, filters/ideals,
// ultrafilter enumeration, and preimage homomorphisms.
#pragma once

#include "famint/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace famint {

/// A subset of the ground set, as a membership mask (bit i = element i).
using AlgebraElement = boost::dynamic_bitset<>;

/// Finite ground set with opaque, pairwise-distinct element identifiers.
/// The order is fixed at construction and only affects printing.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> ids);

    /// Convenience: elements named "0", "1", ..., n-1.
    static GroundSet numbered(std::size_t n);

    std::size_t size() const { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t index_of(const std::string& id) const;

    AlgebraElement empty_mask() const { return AlgebraElement(size()); }
    AlgebraElement full_mask() const { return ~AlgebraElement(size()); }
    AlgebraElement mask_of(std::initializer_list<std::size_t> points) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> ids_;
};

// Boolean operations. All binary operations require equal mask sizes and
// throw InvalidInput otherwise.
AlgebraElement elem_meet(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_join(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement elem_complement(const AlgebraElement& a);
AlgebraElement elem_diff(const AlgebraElement& a, const AlgebraElement& b);
bool elem_leq(const AlgebraElement& a, const AlgebraElement& b);
bool elem_incompatible(const AlgebraElement& a, const AlgebraElement& b);

std::string elem_to_bitstring(const AlgebraElement& a);
AlgebraElement elem_from_bitstring(const std::string& bits);
/// Readable set notation using the ground element ids, e.g. "{a,c}".
std::string elem_to_set_string(const AlgebraElement& a, const GroundSet& ground);

struct AlgebraLimits {
    std::size_t max_ground = 24;  // closure can reach 2^|X| members
    std::size_t max_atoms = 20;   // member enumeration is 2^atoms
};

/// An explicit Boolean subalgebra of the power set of a finite ground set.
/// Members are stored sorted; every member is the union of the atoms below
/// it, and the atom decomposition is cached for O(1) member lookup.
class FiniteAlgebra {
public:
    /// Subalgebra generated by the given masks (always contains 0 and 1).
    static FiniteAlgebra generated(GroundSet ground,
                                   const std::vector<AlgebraElement>& generators,
                                   const AlgebraLimits& limits = {});

    /// Full power set of the ground set.
    static FiniteAlgebra power_set(GroundSet ground, const AlgebraLimits& limits = {});

    /// Wraps an explicit member list; throws InvalidInput naming a missing
    /// element if the list is not closed under complement/meet/join.
    static FiniteAlgebra from_members(GroundSet ground, std::vector<AlgebraElement> members);

    const GroundSet& ground() const { return ground_; }
    const std::vector<AlgebraElement>& members() const { return members_; }
    const std::vector<AlgebraElement>& atoms() const { return atoms_; }
    std::size_t size() const { return members_.size(); }

    AlgebraElement zero() const { return ground_.empty_mask(); }
    AlgebraElement one() const { return ground_.full_mask(); }

    bool contains(const AlgebraElement& m) const;
    /// Index into members(); throws InvalidInput if not a member.
    std::size_t index_of(const AlgebraElement& m) const;

    /// Bitmask over atoms() of the atoms below the given member.
    std::uint32_t atom_bits_of(const AlgebraElement& member) const;
    const AlgebraElement& member_from_atom_bits(std::uint32_t atom_bits) const;
    std::size_t member_index_from_atom_bits(std::uint32_t atom_bits) const;

    friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

private:
    FiniteAlgebra(GroundSet ground, std::vector<AlgebraElement> members,
                  std::vector<AlgebraElement> atoms);

    GroundSet ground_;
    std::vector<AlgebraElement> members_;
    std::vector<AlgebraElement> atoms_;
    std::vector<std::size_t> member_by_atom_bits_;  // 2^|atoms| entries
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

bool is_filter(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra);
bool is_ideal(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra);
bool is_ultrafilter(const std::vector<AlgebraElement>& f, const FiniteAlgebra& algebra);

/// A validated filter on a finite algebra.
class Filter {
public:
    Filter(AlgebraPtr algebra, std::vector<AlgebraElement> members);

    /// Upward closure of a nonzero member.
    static Filter principal(AlgebraPtr algebra, const AlgebraElement& base);

    const FiniteAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const std::vector<AlgebraElement>& members() const { return members_; }
    bool contains(const AlgebraElement& m) const;
    bool is_ultra() const;

    friend bool operator==(const Filter&, const Filter&);

private:
    AlgebraPtr algebra_;
    std::vector<AlgebraElement> members_;  // sorted
};

/// F^neg = { complement of a : a in F }; an ideal iff F is a filter.
std::vector<AlgebraElement> negation_dual(const std::vector<AlgebraElement>& f);

/// The subalgebra generated by a filter (= F union F^neg).
FiniteAlgebra generated_by_filter(const Filter& f);

/// One ultrafilter per atom, in atom order.
std::vector<Filter> enumerate_ultrafilters(const AlgebraPtr& algebra);

/// { b in super : exists c in f with c <= b }.
std::vector<AlgebraElement> upward_closure(const std::vector<AlgebraElement>& f,
                                           const FiniteAlgebra& super);

/// A ground map h : X -> Y as a vector of Y-indices, one per X element.
struct GroundMap {
    GroundSet domain;
    GroundSet codomain;
    std::vector<std::size_t> image;  // image[x] = index in codomain

    GroundMap(GroundSet dom, GroundSet cod, std::vector<std::size_t> img);
    AlgebraElement preimage(const AlgebraElement& target_subset) const;
    AlgebraElement forward(const AlgebraElement& domain_subset) const;
    bool injective() const;
};

/// The pushforward algebra h->(B) = { A subset of Y : preimage of A in B },
/// together with the homomorphism A |-> preimage(A).
struct PushforwardAlgebra {
    FiniteAlgebra algebra;                  // on the codomain ground
    std::vector<AlgebraElement> preimages;  // aligned with algebra.members()
};

PushforwardAlgebra preimage_hom(const GroundMap& h, const FiniteAlgebra& source,
                                const AlgebraLimits& limits = {});

// Text format: one "ground: id,id,..." line, then "member: bitstring" lines.
std::string algebra_to_text(const FiniteAlgebra& algebra);
FiniteAlgebra algebra_from_text(std::istream& in);
std::string filter_to_text(const Filter& f);
Filter filter_from_text(std::istream& in, AlgebraPtr algebra);

}  // namespace famint
