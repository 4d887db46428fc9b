#include "famint/rect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace famint {

Box::Box(Point low, Point high) : lo(std::move(low)), hi(std::move(high)) {
    if (lo.size() != hi.size()) throw InvalidInput("box corners have different dimensions");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i])
            throw InvalidInput("box has lo > hi on axis " + std::to_string(i));
}

bool Box::empty() const {
    if (lo.empty()) return true;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] == hi[i]) return true;
    return false;
}

Rat Box::volume() const {
    Rat v(1);
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return lo.empty() ? Rat(0) : v;
}

bool Box::contains(const Point& p) const {
    if (p.size() != dim()) throw InvalidInput("point dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        if (p[i] < lo[i] || p[i] >= hi[i]) return false;
    return true;
}

bool Box::contains_closed(const Point& p) const {
    if (p.size() != dim()) throw InvalidInput("point dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
        if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
}

std::optional<Box> Box::intersect(const Box& other) const {
    if (other.dim() != dim()) throw InvalidInput("box dimension mismatch");
    Point l(dim()), h(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        l[i] = rat_max(lo[i], other.lo[i]);
        h[i] = rat_min(hi[i], other.hi[i]);
        if (l[i] >= h[i]) return std::nullopt;
    }
    return Box(std::move(l), std::move(h));
}

bool Box::contains_box(const Box& other) const {
    if (other.dim() != dim()) throw InvalidInput("box dimension mismatch");
    if (other.empty()) return true;
    for (std::size_t i = 0; i < dim(); ++i)
        if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
    return true;
}

Box Box::translated(const Point& offset) const {
    if (offset.size() != dim()) throw InvalidInput("offset dimension mismatch");
    Point l = lo, h = hi;
    for (std::size_t i = 0; i < dim(); ++i) {
        l[i] += offset[i];
        h[i] += offset[i];
    }
    return Box(std::move(l), std::move(h));
}

namespace {

// Cells of the coordinate grid spanned by the input boxes, as index tuples.
struct GridSplit {
    std::vector<std::vector<Rat>> coords;      // per axis, sorted unique
    std::set<std::vector<std::size_t>> cells;  // present cells

    Box cell_box(const std::vector<std::size_t>& t) const {
        Point l(t.size()), h(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            l[i] = coords[i][t[i]];
            h[i] = coords[i][t[i] + 1];
        }
        return Box(std::move(l), std::move(h));
    }
};

GridSplit split_on_grid(const std::vector<Box>& boxes) {
    GridSplit g;
    if (boxes.empty()) return g;
    std::size_t dim = boxes.front().dim();
    g.coords.resize(dim);
    for (const auto& b : boxes) {
        if (b.dim() != dim) throw InvalidInput("boxes of mixed dimensions");
        for (std::size_t i = 0; i < dim; ++i) {
            g.coords[i].push_back(b.lo[i]);
            g.coords[i].push_back(b.hi[i]);
        }
    }
    for (auto& axis : g.coords) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    // Index range each box covers on each axis, then emit the product.
    for (const auto& b : boxes) {
        std::vector<std::pair<std::size_t, std::size_t>> span(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            auto lo_it = std::lower_bound(g.coords[i].begin(), g.coords[i].end(), b.lo[i]);
            auto hi_it = std::lower_bound(g.coords[i].begin(), g.coords[i].end(), b.hi[i]);
            span[i] = {static_cast<std::size_t>(lo_it - g.coords[i].begin()),
                       static_cast<std::size_t>(hi_it - g.coords[i].begin())};
        }
        std::vector<std::size_t> t(dim);
        bool nonempty = true;
        for (std::size_t i = 0; i < dim; ++i) {
            t[i] = span[i].first;
            if (span[i].first >= span[i].second) nonempty = false;
        }
        while (nonempty) {
            g.cells.insert(t);
            std::size_t axis = dim;
            while (true) {
                if (axis == 0) {
                    nonempty = false;  // odometer wrapped: all cells emitted
                    break;
                }
                --axis;
                if (++t[axis] < span[axis].second) break;
                t[axis] = span[axis].first;
            }
        }
    }
    return g;
}

}  // namespace

RectUnion RectUnion::of(std::vector<Box> boxes) {
    boxes.erase(std::remove_if(boxes.begin(), boxes.end(),
                               [](const Box& b) { return b.empty(); }),
                boxes.end());
    RectUnion out;
    if (boxes.empty()) return out;

    GridSplit g = split_on_grid(boxes);
    const std::size_t dim = boxes.front().dim();

    // Drop every grid plane across which the cell set does not change; those
    // coordinates are artifacts of the representation, not of the point set.
    for (std::size_t axis = 0; axis < dim; ++axis) {
        std::vector<bool> removable(g.coords[axis].size(), false);
        for (std::size_t j = 1; j + 1 < g.coords[axis].size(); ++j) {
            bool ok = true;
            for (const auto& t : g.cells) {
                if (t[axis] == j - 1) {
                    auto right = t;
                    right[axis] = j;
                    if (!g.cells.count(right)) { ok = false; break; }
                }
                if (t[axis] == j) {
                    auto left = t;
                    left[axis] = j - 1;
                    if (!g.cells.count(left)) { ok = false; break; }
                }
            }
            removable[j] = ok;
        }
        if (std::none_of(removable.begin(), removable.end(), [](bool b) { return b; })) continue;

        // Re-map interval indices after deleting removable planes.
        std::vector<Rat> kept;
        std::vector<std::size_t> interval_map(g.coords[axis].size() - 1);
        std::size_t next = 0;
        for (std::size_t j = 0; j + 1 < g.coords[axis].size(); ++j) {
            if (j == 0 || !removable[j]) {
                kept.push_back(g.coords[axis][j]);
                interval_map[j] = next++;
            } else {
                interval_map[j] = next - 1;  // merged into the previous interval
            }
        }
        kept.push_back(g.coords[axis].back());
        std::set<std::vector<std::size_t>> remapped;
        for (auto t : g.cells) {
            t[axis] = interval_map[t[axis]];
            remapped.insert(std::move(t));
        }
        g.coords[axis] = std::move(kept);
        g.cells = std::move(remapped);
    }

    // Greedy merge of contiguous runs along the last axis. Cells are visited
    // in lexicographic order, so runs are consecutive.
    std::vector<Box> merged;
    const std::size_t last = dim - 1;
    auto it = g.cells.begin();
    while (it != g.cells.end()) {
        std::vector<std::size_t> start = *it;
        std::vector<std::size_t> end = start;
        auto next_it = std::next(it);
        while (next_it != g.cells.end()) {
            const auto& t = *next_it;
            bool same_prefix = std::equal(t.begin(), t.begin() + last, end.begin());
            if (same_prefix && t[last] == end[last] + 1) {
                end = t;
                ++next_it;
            } else {
                break;
            }
        }
        Box b = g.cell_box(start);
        b.hi[last] = g.coords[last][end[last] + 1];
        merged.push_back(std::move(b));
        it = next_it;
    }
    std::sort(merged.begin(), merged.end());
    out.boxes_ = std::move(merged);
    return out;
}

bool RectUnion::contains(const Point& p) const {
    for (const auto& b : boxes_)
        if (b.contains(p)) return true;
    return false;
}

namespace {

void require_same_dim(const RectUnion& u, const RectUnion& v) {
    if (!u.empty() && !v.empty() && u.dim() != v.dim())
        throw InvalidInput("rect unions of different dimensions");
}

}  // namespace

RectUnion rect_union(const RectUnion& u, const RectUnion& v) {
    require_same_dim(u, v);
    std::vector<Box> all = u.boxes();
    all.insert(all.end(), v.boxes().begin(), v.boxes().end());
    return RectUnion::of(std::move(all));
}

RectUnion rect_intersection(const RectUnion& u, const RectUnion& v) {
    require_same_dim(u, v);
    std::vector<Box> out;
    for (const auto& a : u.boxes())
        for (const auto& b : v.boxes())
            if (auto c = a.intersect(b)) out.push_back(std::move(*c));
    return RectUnion::of(std::move(out));
}

RectUnion rect_difference(const RectUnion& u, const RectUnion& v) {
    require_same_dim(u, v);
    if (u.empty() || v.empty()) return u;
    // Split u's boxes on the combined grid and keep the cells outside v.
    std::vector<Box> all = u.boxes();
    all.insert(all.end(), v.boxes().begin(), v.boxes().end());
    GridSplit g = split_on_grid(all);
    std::vector<Box> kept;
    for (const auto& t : g.cells) {
        Box cell = g.cell_box(t);
        if (u.contains(cell.lo) && !v.contains(cell.lo)) kept.push_back(std::move(cell));
    }
    return RectUnion::of(std::move(kept));
}

RectUnion rect_complement(const RectUnion& u, const Box& ambient) {
    if (ambient.empty()) {
        if (!u.empty()) throw InvalidInput("complement: union does not fit in an empty ambient");
        return RectUnion();
    }
    for (const auto& b : u.boxes())
        if (!ambient.contains_box(b))
            throw InvalidInput("complement: " + box_to_string(b) + " is not inside the ambient " +
                               box_to_string(ambient));
    return rect_difference(RectUnion::single(ambient), u);
}

bool rect_subset(const RectUnion& u, const RectUnion& v) {
    return rect_difference(u, v).empty();
}

Rat lambda_n(const RectUnion& u) {
    Rat total(0);
    for (const auto& b : u.boxes()) total += b.volume();
    return total;
}

RectDomain::RectDomain(Point a, Point b) : lower_(std::move(a)), upper_(std::move(b)) {
    if (lower_.size() != upper_.size())
        throw InvalidInput("rectangle corners have different dimensions");
    if (lower_.empty()) throw InvalidInput("rectangle must have at least one axis");
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (lower_[i] > upper_[i])
            throw InvalidInput("rectangle has a > b on axis " + std::to_string(i));
}

Rat RectDomain::volume() const {
    Rat v(1);
    for (std::size_t i = 0; i < lower_.size(); ++i) v *= upper_[i] - lower_[i];
    return v;
}

bool RectDomain::contains_union(const RectUnion& u) const {
    if (u.empty()) return true;
    Box c = carrier();
    for (const auto& b : u.boxes())
        if (!c.contains_box(b)) return false;
    return true;
}

RectMeasure::RectMeasure(RectDomain domain) : domain_(std::move(domain)), total_(domain_.volume()) {
    if (total_ == 0) {
        std::string axis;
        for (std::size_t i = 0; i < domain_.dim(); ++i)
            if (domain_.lower()[i] == domain_.upper()[i]) axis = std::to_string(i);
        throw NonTrivialityError("degenerate rectangle: axis " + axis +
                                 " has zero length, so the measure would be trivial");
    }
}

Rat RectMeasure::value(const RectUnion& u) const {
    if (!domain_.contains_union(u))
        throw InvalidInput("union is not inside the rectangle");
    return lambda_n(u);
}

RectMeasure restricted_algebra(Point a, Point b) {
    return RectMeasure(RectDomain(std::move(a), std::move(b)));
}

namespace {

struct IntervalLiteral {
    Rat lo;
    Rat hi;
    bool closed_hi = false;
};

std::vector<IntervalLiteral> parse_intervals(const std::string& text) {
    std::vector<IntervalLiteral> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '[')
            throw InvalidInput("interval literal must start with '[' at position " +
                               std::to_string(pos));
        ++pos;
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) throw InvalidInput("interval literal missing ','");
        auto lo = rat_parse(text.substr(pos, comma - pos));
        if (!lo) throw InvalidInput("malformed rational in interval literal");
        pos = comma + 1;
        auto close = text.find_first_of(")]", pos);
        if (close == std::string::npos)
            throw InvalidInput("interval literal missing ')' or ']'");
        auto hi = rat_parse(text.substr(pos, close - pos));
        if (!hi) throw InvalidInput("malformed rational in interval literal");
        out.push_back({std::move(*lo), std::move(*hi), text[close] == ']'});
        pos = close + 1;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != 'x' && text[pos] != 'X')
            throw InvalidInput("expected 'x' between interval literals");
        ++pos;
    }
    if (out.empty()) throw InvalidInput("empty box literal");
    return out;
}

}  // namespace

Box parse_box_literal(const std::string& text) {
    auto intervals = parse_intervals(text);
    Point lo, hi;
    for (const auto& iv : intervals) {
        if (iv.closed_hi)
            throw InvalidInput("box literals are half-open; use ')' not ']'");
        lo.push_back(iv.lo);
        hi.push_back(iv.hi);
    }
    return Box(std::move(lo), std::move(hi));
}

RectDomain parse_rect_literal(const std::string& text) {
    auto intervals = parse_intervals(text);
    Point lo, hi;
    for (const auto& iv : intervals) {
        if (!iv.closed_hi)
            throw InvalidInput("rectangle literals are closed; use ']' not ')'");
        lo.push_back(iv.lo);
        hi.push_back(iv.hi);
    }
    return RectDomain(std::move(lo), std::move(hi));
}

std::string box_to_string(const Box& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (i) os << "x";
        os << "[" << rat_to_string(b.lo[i]) << "," << rat_to_string(b.hi[i]) << ")";
    }
    return os.str();
}

std::string rect_domain_to_string(const RectDomain& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.dim(); ++i) {
        if (i) os << "x";
        os << "[" << rat_to_string(d.lower()[i]) << "," << rat_to_string(d.upper()[i]) << "]";
    }
    return os.str();
}

}  // namespace famint
