// Interval arithmetic with exact rational endpoints. Rational operations are
// exact; exp/sin/cos round outward through double with ulp padding, so every
// result interval is a certified enclosure.
#pragma once

#include "famint/error.hpp"
#include "famint/rational.hpp"

namespace famint {

struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat point) : lo(point), hi(point) {}  // NOLINT: implicit by design
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InvalidInput("RatInterval: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool overlaps(const RatInterval& other) const { return lo <= other.hi && other.lo <= hi; }

    friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Throws DivisionByZero when 0 lies in b.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

RatInterval interval_min(const RatInterval& a, const RatInterval& b);
RatInterval interval_max(const RatInterval& a, const RatInterval& b);
RatInterval interval_abs(const RatInterval& a);
RatInterval interval_pow(const RatInterval& a, unsigned exponent);

/// Smallest interval containing both.
RatInterval interval_hull(const RatInterval& a, const RatInterval& b);

/// Outward-rounded enclosures of transcendental images (never exact).
RatInterval interval_exp(const RatInterval& a);
RatInterval interval_sin(const RatInterval& a);
RatInterval interval_cos(const RatInterval& a);

/// Rational bounds on pi and sqrt(2), accurate to far below any tolerance used
/// in this library (50 decimal digits).
const RatInterval& pi_enclosure();
const RatInterval& sqrt2_enclosure();

std::string interval_to_string(const RatInterval& v);

}  // namespace famint
