#include "famint/integral.hpp"

namespace famint {

PointFn PointFn::tabulate(std::size_t n, const std::function<Rat(std::size_t)>& f) {
    PointFn out;
    out.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(f(i));
    return out;
}

PointFn PointFn::compose(const PointFn& f, const GroundMap& h) {
    if (f.size() != h.codomain.size())
        throw InvalidInput("compose: function is not defined on the map's codomain");
    PointFn out;
    out.values.reserve(h.domain.size());
    for (std::size_t x = 0; x < h.domain.size(); ++x) out.values.push_back(f.at(h.image[x]));
    return out;
}

RatInterval point_range(const PointFn& f, const AlgebraElement& elem) {
    if (f.size() != elem.size())
        throw InvalidInput("range oracle: function and element sizes differ");
    if (elem.none())
        throw InvalidInput("range oracle undefined on the zero element");
    bool first = true;
    Rat lo, hi;
    for (std::size_t p = 0; p < elem.size(); ++p) {
        if (!elem.test(p)) continue;
        const Rat& v = f.at(p);
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    return {lo, hi};
}

namespace {

Rat weighted_sum(const PointFn& f, const FinitePartition& p, const Fam& m, bool upper) {
    if (p.algebra() != m.algebra())
        throw InvalidInput("partition and measure live on different algebras");
    if (f.size() != m.algebra().ground().size())
        throw InvalidInput("function is not defined on the algebra's ground set");
    RatAccumulator acc;
    for (const auto& cell : p.cells()) {
        RatInterval range = point_range(f, cell);
        acc.add_product(upper ? range.hi : range.lo, m.value(cell));
    }
    return acc.value();
}

}  // namespace

Rat upper_sum(const PointFn& f, const FinitePartition& p, const Fam& m) {
    return weighted_sum(f, p, m, true);
}

Rat lower_sum(const PointFn& f, const FinitePartition& p, const Fam& m) {
    return weighted_sum(f, p, m, false);
}

IntegralReport FiniteIntegral::to_report(const Rat& eps) const {
    IntegralReport r;
    r.lower = lower;
    r.upper = upper;
    r.eps = eps;
    r.witness_cell_count = witness.size();
    r.oracle_exact = true;
    r.schedule = "atoms";
    r.finalize();
    return r;
}

FiniteIntegral integrate_finite(const PointFn& f, const Fam& m) {
    FinitePartition atoms = FinitePartition::atoms(m.algebra_ptr());
    FiniteIntegral out{lower_sum(f, atoms, m), upper_sum(f, atoms, m), false, std::nullopt,
                       atoms};
    out.integrable = (out.lower == out.upper);
    if (out.integrable) out.value = out.lower;
    return out;
}

PushforwardCheck pushforward_integral_check(const PointFn& f_on_target, const GroundMap& h,
                                            const Fam& m) {
    PushforwardCheck check;
    Fam pushed = pushforward_fam(m, h);
    if (f_on_target.size() != h.codomain.size())
        throw InvalidInput("pushforward check: function must live on the map's codomain");
    check.target = integrate_finite(f_on_target, pushed);
    check.source = integrate_finite(PointFn::compose(f_on_target, h), m);
    check.injective = h.injective();

    check.forward_holds =
        !check.target->integrable ||
        (check.source->integrable && *check.target->value == *check.source->value);
    check.converse_holds =
        !check.injective ||
        (!check.source->integrable ||
         (check.target->integrable && *check.target->value == *check.source->value));
    check.agree = (check.target->integrable == check.source->integrable) &&
                  (!check.target->integrable || *check.target->value == *check.source->value);
    return check;
}

bool pushforward_sum_witness(const PointFn& f_on_target, const GroundMap& h, const Fam& m,
                             const FinitePartition& target_partition) {
    Fam pushed = pushforward_fam(m, h);
    if (target_partition.algebra() != pushed.algebra())
        throw InvalidInput("witness check: partition must live on the pushforward algebra");

    // P* = P meet { ran h, complement of ran h }; Q = preimages of the cells
    // inside ran h.
    AlgebraElement range = h.forward(h.domain.full_mask());
    std::vector<AlgebraElement> star_cells;
    std::vector<AlgebraElement> source_cells;
    for (const auto& cell : target_partition.cells()) {
        AlgebraElement in = cell & range;
        AlgebraElement out = cell - range;
        if (in.any()) {
            star_cells.push_back(in);
            source_cells.push_back(h.preimage(in));
        }
        if (out.any()) star_cells.push_back(out);
    }
    FinitePartition star(pushed.algebra_ptr(), std::move(star_cells));
    FinitePartition source(m.algebra_ptr(), std::move(source_cells));

    PointFn composed = PointFn::compose(f_on_target, h);
    bool upper_ok = upper_sum(f_on_target, star, pushed) == upper_sum(composed, source, m);
    bool lower_ok = lower_sum(f_on_target, star, pushed) == lower_sum(composed, source, m);
    bool refines_ok = refines(star, target_partition);
    return upper_ok && lower_ok && refines_ok;
}

RestrictionCheck restriction_integral_check(const PointFn& g_on_outer,
                                            const GroundMap& inclusion, const Fam& inner_fam,
                                            const Fam& outer_fam) {
    RestrictionCheck check;
    if (!inclusion.injective()) {
        check.hypothesis_failure = "the ground map is not an inclusion (not injective)";
        return check;
    }
    if (inner_fam.algebra().ground() != inclusion.domain ||
        outer_fam.algebra().ground() != inclusion.codomain) {
        check.hypothesis_failure = "measures do not live on the inclusion's ground sets";
        return check;
    }
    // B_Y subset of h->(B_X) with m_Y subset of the induced measure: for each
    // outer member A, the trace A meet X must be an inner member of equal
    // measure.
    for (const auto& a : outer_fam.algebra().members()) {
        AlgebraElement trace = inclusion.preimage(a);
        if (!inner_fam.algebra().contains(trace)) {
            check.hypothesis_failure = "outer member " + elem_to_bitstring(a) +
                                       " traces outside the inner algebra";
            return check;
        }
        if (inner_fam.value(trace) != outer_fam.value(a)) {
            check.hypothesis_failure = "measure mismatch on " + elem_to_bitstring(a) + ": outer " +
                                       rat_to_string(outer_fam.value(a)) + " vs inner " +
                                       rat_to_string(inner_fam.value(trace));
            return check;
        }
    }
    check.hypothesis_ok = true;

    check.outer = integrate_finite(g_on_outer, outer_fam);
    check.inner = integrate_finite(PointFn::compose(g_on_outer, inclusion), inner_fam);
    check.implication_holds =
        !check.outer->integrable ||
        (check.inner->integrable && *check.inner->value == *check.outer->value);
    return check;
}

ExtensionCheck extension_integral_check(const PointFn& f, const Fam& coarse_fam,
                                        const Fam& fine_fam) {
    ExtensionCheck check;
    if (coarse_fam.algebra().ground() != fine_fam.algebra().ground()) {
        check.hypothesis_failure = "measures live on different ground sets";
        return check;
    }
    for (const auto& b : coarse_fam.algebra().members()) {
        if (!fine_fam.algebra().contains(b)) {
            check.hypothesis_failure =
                "coarse member " + elem_to_bitstring(b) + " is missing from the fine algebra";
            return check;
        }
        if (coarse_fam.value(b) != fine_fam.value(b)) {
            check.hypothesis_failure = "measures disagree on " + elem_to_bitstring(b);
            return check;
        }
    }
    check.hypothesis_ok = true;
    check.coarse = integrate_finite(f, coarse_fam);
    check.fine = integrate_finite(f, fine_fam);
    check.implication_holds =
        !check.coarse->integrable ||
        (check.fine->integrable && *check.fine->value == *check.coarse->value);
    return check;
}

}  // namespace famint
