// Exact rational arithmetic used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace famint {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

/// Every finite double is an exact rational; this conversion is lossless.
Rat rat_from_double(double x);

double rat_to_double(const Rat& r);

/// "p/q" or "p" (optionally signed); also accepts plain decimals like "0.25".
/// Returns nullopt on malformed input.
std::optional<Rat> rat_parse(std::string_view text);

/// Canonical "p/q" rendering ("p" when q == 1).
std::string rat_to_string(const Rat& r);

/// Decimal rendering with the given number of fractional digits (round to nearest).
std::string rat_to_decimal(const Rat& r, int digits);

/// Best rational approximation to r with |approx - r| <= tol, by continued
/// fractions. tol must be positive.
Rat rat_simplest_within(const Rat& r, const Rat& tol);

/// Sum accumulator that defers gcd normalization: adding many terms with a
/// common denominator costs one big-int multiply-add per term instead of a
/// full rational normalization.
class RatAccumulator {
public:
    RatAccumulator() : num_(0), den_(1) {}

    void add(const Rat& r) {
        const Int& rn = numerator(r);
        const Int& rd = denominator(r);
        if (rd == den_) {
            num_ += rn;
        } else if (den_ % rd == 0) {
            num_ += rn * (den_ / rd);
        } else {
            Int g = gcd(den_, rd);
            Int scale = rd / g;
            num_ = num_ * scale + rn * (den_ / g);
            den_ *= scale;
        }
    }

    void add_product(const Rat& a, const Rat& b) { add(Rat(a * b)); }

    Rat value() const { return Rat(num_, den_); }

private:
    Int num_;
    Int den_;
};

}  // namespace famint
