// The algebra of finite unions of half-open axis-aligned boxes with exact
// rational corners, the volume premeasure, and restriction to a rectangle.
#pragma once

#include "famint/error.hpp"
#include "famint/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace famint {

using Point = std::vector<Rat>;

/// Half-open box [lo, hi) = prod_i [lo_i, hi_i); empty when lo_i = hi_i for
/// some axis.
struct Box {
    Point lo;
    Point hi;

    Box() = default;
    Box(Point low, Point high);

    std::size_t dim() const { return lo.size(); }
    bool empty() const;
    Rat volume() const;
    bool contains(const Point& p) const;         // half-open
    bool contains_closed(const Point& p) const;  // closure [lo, hi]
    std::optional<Box> intersect(const Box& other) const;
    bool contains_box(const Box& other) const;
    Box translated(const Point& offset) const;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Canonical finite union of pairwise-disjoint boxes. The canonical form
/// splits along the coordinates where the point set genuinely changes and
/// then merges runs along the last axis, so it is unique for a point set.
class RectUnion {
public:
    RectUnion() = default;  // empty union of unknown dimension

    /// Canonicalizes an arbitrary finite box collection.
    static RectUnion of(std::vector<Box> boxes);
    static RectUnion single(Box b) { return of({std::move(b)}); }

    const std::vector<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }
    std::size_t dim() const { return boxes_.empty() ? 0 : boxes_.front().dim(); }
    bool contains(const Point& p) const;

    friend bool operator==(const RectUnion&, const RectUnion&) = default;

private:
    std::vector<Box> boxes_;  // canonical: disjoint, sorted by lower corner
};

RectUnion rect_union(const RectUnion& u, const RectUnion& v);
RectUnion rect_intersection(const RectUnion& u, const RectUnion& v);
RectUnion rect_difference(const RectUnion& u, const RectUnion& v);
/// Complement within an ambient box; u must lie inside the ambient.
RectUnion rect_complement(const RectUnion& u, const Box& ambient);
bool rect_subset(const RectUnion& u, const RectUnion& v);

/// Total volume: sum of box volumes of the canonical form.
Rat lambda_n(const RectUnion& u);

/// The rectangle [a, b] with its half-open box algebra and volume measure.
/// Cells are half-open; the closed rectangle's upper faces carry measure 0
/// and are absorbed into adjacent cells for evaluation.
class RectDomain {
public:
    RectDomain(Point a, Point b);

    std::size_t dim() const { return lower_.size(); }
    const Point& lower() const { return lower_; }
    const Point& upper() const { return upper_; }
    /// The half-open carrier box [a, b).
    Box carrier() const { return Box(lower_, upper_); }
    Rat volume() const;
    bool degenerate() const { return volume() == 0; }

    bool contains_union(const RectUnion& u) const;

    friend bool operator==(const RectDomain&, const RectDomain&) = default;

private:
    Point lower_;
    Point upper_;
};

/// The measure view of a RectDomain: volume on unions inside the domain.
/// Construction rejects degenerate rectangles (zero volume is the trivial
/// measure).
class RectMeasure {
public:
    explicit RectMeasure(RectDomain domain);

    const RectDomain& domain() const { return domain_; }
    const Rat& total() const { return total_; }
    Rat value(const RectUnion& u) const;

private:
    RectDomain domain_;
    Rat total_;
};

/// Builds the restricted algebra and measure in one step; throws
/// NonTrivialityError naming the degenerate axis when volume is zero.
RectMeasure restricted_algebra(Point a, Point b);

// Literal syntax: "[0,1)x[1/2,3/4)" for half-open boxes and "[0,1]x[0,2]"
// for closed rectangles; dimension is inferred.
Box parse_box_literal(const std::string& text);
RectDomain parse_rect_literal(const std::string& text);
std::string box_to_string(const Box& b);
std::string rect_domain_to_string(const RectDomain& d);

}  // namespace famint
