// Finitely additive measures on finite Boolean set algebras: validation,
// classification, the standard constructions, and the filter correspondence.
#pragma once

#include "famint/algebra.hpp"
#include "famint/rational.hpp"

#include <optional>

namespace famint {

/// Additivity violation witness: value(a join b) != value(a) + value(b) for
/// incompatible a, b.
class AdditivityError : public Error {
public:
    AdditivityError(AlgebraElement a, AlgebraElement b, Rat joined, Rat summed)
        : Error("additivity failure: value(" + elem_to_bitstring(a) + " v " +
                elem_to_bitstring(b) + ") = " + rat_to_string(joined) + " but " +
                rat_to_string(summed) + " expected"),
          witness_a(std::move(a)),
          witness_b(std::move(b)),
          value_of_join(std::move(joined)),
          sum_of_values(std::move(summed)) {}

    AlgebraElement witness_a;
    AlgebraElement witness_b;
    Rat value_of_join;
    Rat sum_of_values;
};

/// A filter list fails to cover the nonzero elements; carries one uncovered
/// element.
class CoverageError : public Error {
public:
    explicit CoverageError(AlgebraElement uncovered_elem)
        : Error("filter list does not cover " + elem_to_bitstring(uncovered_elem) +
                "; the measure would not be strictly positive"),
          uncovered(std::move(uncovered_elem)) {}

    AlgebraElement uncovered;
};

struct FamClass {
    bool finite = true;
    bool probability = false;
    bool strictly_positive = false;
    bool free = false;
};

/// A validated finitely additive measure: a total, non-negative, exactly
/// additive rational map on a finite algebra with value(1) > 0.
class Fam {
public:
    /// Validates totality, non-negativity, value(0) = 0, additivity on every
    /// incompatible pair, and non-triviality. Throws InvalidInput,
    /// AdditivityError, or NonTrivialityError.
    static Fam validate(AlgebraPtr algebra, std::vector<Rat> values_by_member);

    /// Builds the unique additive extension of non-negative atom values.
    static Fam from_atom_values(AlgebraPtr algebra, const std::vector<Rat>& atom_values);

    const FiniteAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }

    const Rat& value(const AlgebraElement& m) const;
    const Rat& value_at_index(std::size_t member_index) const { return values_[member_index]; }
    const std::vector<Rat>& values() const { return values_; }

    /// delta = value(1).
    const Rat& bound() const { return values_.back(); }

    Fam scaled(const Rat& factor) const;

    friend bool operator==(const Fam&, const Fam&);

private:
    Fam(AlgebraPtr algebra, std::vector<Rat> values);

    AlgebraPtr algebra_;
    std::vector<Rat> values_;  // aligned with algebra().members()
};

FamClass classify(const Fam& m);

/// value(A) = |A meet u| / |u| on the power set of x.
Fam uniform_fam(const GroundSet& x, const AlgebraElement& support);

/// value_b(a) = value(a meet b) / value(b); throws DivisionByZero when
/// value(b) = 0.
Fam conditional_fam(const Fam& m, const AlgebraElement& b);

struct SigmaCenteredOptions {
    /// The raw dyadic sum gives value(1) = 1 - 2^-N; normalization rescales
    /// to a probability.
    bool normalize = false;
};

/// value(b) = sum of 2^-(n+1) over the filters containing b. Every filter
/// must be an ultrafilter and together they must cover the nonzero elements.
Fam sigma_centered_fam(const std::vector<Filter>& ultrafilters,
                       const SigmaCenteredOptions& options = {});

/// The two-valued probability measure on <F> that is 1 exactly on F.
Fam filter_to_fam(const Filter& f);

/// F = { c : value(c) = 1 } for a two-valued probability measure.
Filter fam_to_filter(const Fam& m);

Fam pushforward_fam(const Fam& m, const GroundMap& h);

/// Restriction to a member E of positive measure: algebra { E meet b },
/// values inherited. Throws NonTrivialityError when value(E) = 0.
Fam restrict_fam(const Fam& m, const AlgebraElement& e);

/// Plain-text demonstration that a two-valued measure induced by a free
/// ultrafilter on a countable set is finitely additive but not countably
/// additive (the construction itself is non-constructive and is not built).
std::string sigma_additivity_gap_note();

// Measure file format: the algebra text format plus "value: bits = p/q" lines.
std::string fam_to_text(const Fam& m);
Fam fam_from_text(std::istream& in);

}  // namespace famint
