#include "famint/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace famint {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    Int num = Int(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(num);
    if (exp > 0) {
        r *= Rat(Int(1) << exp);
    } else if (exp < 0) {
        r /= Rat(Int(1) << -exp);
    }
    return r;
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::optional<Rat> rat_parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return std::nullopt;

    auto parse_int = [&](std::string_view s) -> std::optional<Int> {
        s = trim(s);
        if (s.empty()) return std::nullopt;
        bool neg = false;
        if (s.front() == '+' || s.front() == '-') {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) return std::nullopt;
        Int v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return neg ? Int(-v) : v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        return Rat(*num, *den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole.front() == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole = "0";
        auto w = parse_int(whole);
        if (!w || frac.empty()) return std::nullopt;
        Int scale = 1, fnum = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            fnum = fnum * 10 + (c - '0');
            scale *= 10;
        }
        Rat r = Rat(rat_abs(Rat(*w))) + Rat(fnum, scale);
        return (neg || *w < 0) ? Rat(-r) : r;
    }
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rat(*v);
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * scale;
    Int rounded = rat_floor(scaled + Rat(1, 2));
    bool neg = rounded < 0;
    Int mag = neg ? Int(-rounded) : rounded;
    std::ostringstream os;
    os << mag;
    std::string s = os.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

Rat rat_simplest_within(const Rat& r, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("rat_simplest_within: tolerance must be positive");
    // Walk the continued-fraction convergents of r until one lands in the band.
    Rat lo = r - tol, hi = r + tol;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rat x = r;
    for (int iter = 0; iter < 512; ++iter) {
        Int a = rat_floor(x);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        Rat conv(p2, q2);
        if (conv >= lo && conv <= hi) return conv;
        Rat frac = x - Rat(a);
        if (frac == 0) return Rat(rat_num(r), rat_den(r));
        x = Rat(1) / frac;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return r;
}

}  // namespace famint
