#include "famint/interval.hpp"

#include <algorithm>
#include <cmath>

namespace famint {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {rat_min(rat_min(c1, c2), rat_min(c3, c4)),
            rat_max(rat_max(c1, c2), rat_max(c3, c4))};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.lo <= 0 && 0 <= b.hi)
        throw DivisionByZero("interval division: denominator interval contains zero");
    RatInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
}

RatInterval interval_min(const RatInterval& a, const RatInterval& b) {
    return {rat_min(a.lo, b.lo), rat_min(a.hi, b.hi)};
}

RatInterval interval_max(const RatInterval& a, const RatInterval& b) {
    return {rat_max(a.lo, b.lo), rat_max(a.hi, b.hi)};
}

RatInterval interval_abs(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rat(0), rat_max(-a.lo, a.hi)};
}

RatInterval interval_pow(const RatInterval& a, unsigned exponent) {
    if (exponent == 0) return RatInterval(Rat(1));
    RatInterval acc = a;
    for (unsigned i = 1; i < exponent; ++i) acc = acc * a;
    // Even powers of sign-crossing intervals tighten to [0, max].
    if (exponent % 2 == 0 && a.lo < 0 && a.hi > 0) acc.lo = 0;
    return acc;
}

RatInterval interval_hull(const RatInterval& a, const RatInterval& b) {
    return {rat_min(a.lo, b.lo), rat_max(a.hi, b.hi)};
}

namespace {

// Pad a libm result by a few ulps in the requested direction: glibc's exp,
// sin and cos are documented below 1 ulp of error, so 4 ulps is a safe
// outward margin.
double pad_down(double x) {
    double y = x;
    for (int i = 0; i < 4; ++i) y = std::nextafter(y, -HUGE_VAL);
    return y;
}

double pad_up(double x) {
    double y = x;
    for (int i = 0; i < 4; ++i) y = std::nextafter(y, HUGE_VAL);
    return y;
}

// Nearest double at or below / above a rational.
double double_below(const Rat& r) {
    double d = rat_to_double(r);
    if (rat_from_double(d) > r) d = std::nextafter(d, -HUGE_VAL);
    return d;
}

double double_above(const Rat& r) {
    double d = rat_to_double(r);
    if (rat_from_double(d) < r) d = std::nextafter(d, HUGE_VAL);
    return d;
}

constexpr double kTwoPi = 6.283185307179586;

}  // namespace

RatInterval interval_exp(const RatInterval& a) {
    double lo = pad_down(std::exp(double_below(a.lo)));
    double hi = pad_up(std::exp(double_above(a.hi)));
    if (!std::isfinite(hi)) throw InvalidFunction("exp overflow in interval evaluation");
    if (lo < 0) lo = 0;
    return {rat_from_double(lo), rat_from_double(hi)};
}

namespace {

RatInterval sin_like(const RatInterval& a, double phase) {
    double lo_d = double_below(a.lo);
    double hi_d = double_above(a.hi);
    if (!(std::isfinite(lo_d) && std::isfinite(hi_d)))
        throw InvalidFunction("trigonometric interval evaluation out of double range");
    if (hi_d - lo_d >= kTwoPi) return {Rat(-1), Rat(1)};

    auto f = [&](double x) { return std::sin(x + phase); };
    double fmin = std::min(f(lo_d), f(hi_d));
    double fmax = std::max(f(lo_d), f(hi_d));

    // Critical points of sin(x + phase) at x = pi/2 - phase + k*pi. Expand the
    // containment test by one grid step so double roundoff cannot miss one.
    const double half_pi = 1.5707963267948966;
    const double pi = 3.141592653589793;
    double k_lo = std::floor((lo_d - (half_pi - phase)) / pi) - 1;
    double k_hi = std::ceil((hi_d - (half_pi - phase)) / pi) + 1;
    for (double k = k_lo; k <= k_hi; ++k) {
        double crit = half_pi - phase + k * pi;
        if (crit >= pad_down(lo_d) && crit <= pad_up(hi_d)) {
            double v = f(crit);
            fmin = std::min(fmin, v);
            fmax = std::max(fmax, v);
        }
    }
    double lo = std::max(-1.0, pad_down(fmin));
    double hi = std::min(1.0, pad_up(fmax));
    return {rat_from_double(lo), rat_from_double(hi)};
}

}  // namespace

RatInterval interval_sin(const RatInterval& a) { return sin_like(a, 0.0); }

RatInterval interval_cos(const RatInterval& a) { return sin_like(a, 1.5707963267948966); }

const RatInterval& pi_enclosure() {
    // 3.14159265358979323846264338327950288419716939937510582097...
    static const RatInterval enc = [] {
        Int scale = 1;
        for (int i = 0; i < 50; ++i) scale *= 10;
        Int digits("314159265358979323846264338327950288419716939937510");
        Rat lo(digits, scale * 10);
        Rat hi(digits + 1, scale * 10);
        return RatInterval(lo, hi);
    }();
    return enc;
}

const RatInterval& sqrt2_enclosure() {
    // 1.41421356237309504880168872420969807856967187537694...
    static const RatInterval enc = [] {
        Int scale = 1;
        for (int i = 0; i < 50; ++i) scale *= 10;
        Int digits("141421356237309504880168872420969807856967187537694");
        Rat lo(digits, scale * 10);
        Rat hi(digits + 1, scale * 10);
        return RatInterval(lo, hi);
    }();
    return enc;
}

std::string interval_to_string(const RatInterval& v) {
    if (v.is_point()) return rat_to_string(v.lo);
    return "[" + rat_to_string(v.lo) + ", " + rat_to_string(v.hi) + "]";
}

}  // namespace famint
