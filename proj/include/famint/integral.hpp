// The partition integral on finite algebras: upper/lower sums, exact
// integrability decisions, pushforward identities, and extension/restriction
// transfer checks. Everything here is exact rational arithmetic.
#pragma once

#include "famint/fam.hpp"
#include "famint/partition.hpp"
#include "famint/report.hpp"

#include <functional>

namespace famint {

/// A real-valued function on a finite ground set, with exact rational values.
/// The induced range oracle (min/max over the points of an element) is exact.
struct PointFn {
    std::vector<Rat> values;  // one per ground point

    const Rat& at(std::size_t point) const { return values.at(point); }
    std::size_t size() const { return values.size(); }

    static PointFn tabulate(std::size_t n, const std::function<Rat(std::size_t)>& f);
    /// f composed with a ground map: (f . h)(x) = f(h(x)).
    static PointFn compose(const PointFn& f, const GroundMap& h);
};

/// Exact sup/inf of f over a nonzero element.
RatInterval point_range(const PointFn& f, const AlgebraElement& elem);

Rat upper_sum(const PointFn& f, const FinitePartition& p, const Fam& m);
Rat lower_sum(const PointFn& f, const FinitePartition& p, const Fam& m);

/// Exact integrability decision on a finite algebra. The atom partition
/// refines every partition, so it attains the upper and lower integrals.
struct FiniteIntegral {
    Rat lower{0};
    Rat upper{0};
    bool integrable = false;     // upper == lower
    std::optional<Rat> value;    // present when integrable
    FinitePartition witness;

    IntegralReport to_report(const Rat& eps) const;
};

FiniteIntegral integrate_finite(const PointFn& f, const Fam& m);

/// Both directions of the pushforward identity: integrating f against the
/// induced measure on h->(B) versus integrating f . h against the original.
struct PushforwardCheck {
    std::optional<FiniteIntegral> target;  // f against the pushforward measure
    std::optional<FiniteIntegral> source;  // f . h against the original measure
    bool injective = false;
    bool forward_holds = false;   // target integrable => source integrable, equal value
    bool converse_holds = false;  // checked (and meaningful) when h is injective
    bool agree = false;           // integrability decisions and values coincide

    bool ok() const { return forward_holds && (!injective || converse_holds); }
};

PushforwardCheck pushforward_integral_check(const PointFn& f_on_target, const GroundMap& h,
                                            const Fam& m);

/// Per-partition version of the pushforward sum identity: for a partition P
/// of the target there are a refinement P* and a source partition Q with
/// equal upper and lower sums. Returns false if the constructed pair fails.
bool pushforward_sum_witness(const PointFn& f_on_target, const GroundMap& h, const Fam& m,
                             const FinitePartition& target_partition);

/// Restriction transfer along an inclusion X into Y: if the hypotheses hold
/// (every B_Y member meets X inside B_X with equal measure), integrability of
/// g over Y transfers to g restricted to X with equal value.
struct RestrictionCheck {
    bool hypothesis_ok = false;
    std::string hypothesis_failure;  // diagnostic when not ok
    std::optional<FiniteIntegral> outer;  // g over (B_Y, m_Y)
    std::optional<FiniteIntegral> inner;  // g|X over (B_X, m_X)
    bool implication_holds = false;
};

RestrictionCheck restriction_integral_check(const PointFn& g_on_outer,
                                            const GroundMap& inclusion, const Fam& inner_fam,
                                            const Fam& outer_fam);

/// Measure-extension transfer on one ground set: B0 subset of B1 and m0
/// subset of m1 imply integrability under m0 transfers to m1 with equal
/// value; the converse holds when the algebras coincide.
struct ExtensionCheck {
    bool hypothesis_ok = false;
    std::string hypothesis_failure;
    std::optional<FiniteIntegral> coarse;
    std::optional<FiniteIntegral> fine;
    bool implication_holds = false;
};

ExtensionCheck extension_integral_check(const PointFn& f, const Fam& coarse_fam,
                                        const Fam& fine_fam);

}  // namespace famint
