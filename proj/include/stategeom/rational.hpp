#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stategeom/errors.hpp"

namespace stategeom {

// Exact rational scalar. The backend keeps values in lowest terms with a
// positive denominator and throws on division by zero; expression templates
// are disabled so Rational behaves as a plain value type.
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p/q" (or "p"); q must be a positive integer literal.
inline Rational rational_from_string(std::string_view text) {
    const auto bad = [&] { throw InputError("invalid rational literal: '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> BigInt {
        if (s.empty()) bad();
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) bad();
        return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const BigInt num = parse_int(text.substr(0, slash), true);
    const BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) bad();
    return Rational(num, den);
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Fixed-point decimal approximation with `digits` fractional digits,
// rounded half away from zero.
inline std::string to_decimal_string(const Rational& r, int digits = 12) {
    BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const BigInt scaled = (num * scale * 2 + den) / (2 * den);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string frac_str = frac.str();
    frac_str.insert(frac_str.begin(), static_cast<std::size_t>(digits) - frac_str.size(), '0');
    std::string out = (neg && scaled != 0) ? "-" : "";
    out += whole.str();
    if (digits > 0) out += "." + frac_str;
    return out;
}

// Exact conversion; every finite double is a binary rational.
inline Rational rational_from_double(double x) { return Rational(x); }

// Best rational approximation of `target` within `tol`, by walking the
// continued-fraction convergents. Terminates because target is rational.
inline Rational rational_approx(const Rational& target, const Rational& tol) {
    Rational x = target;
    BigInt h_prev = 1, h_pprev = 0;
    BigInt k_prev = 0, k_pprev = 1;
    for (;;) {
        const BigInt a = rational_floor(x);
        const BigInt h = a * h_prev + h_pprev;
        const BigInt k = a * k_prev + k_pprev;
        const Rational conv(h, k);
        if (abs(conv - target) <= tol) return conv;
        const Rational rem = x - Rational(a);
        x = Rational(1) / rem;  // rem != 0, otherwise conv == target above
        h_pprev = h_prev; h_prev = h;
        k_pprev = k_prev; k_prev = k;
    }
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("vec_sub: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InputError("vec_add: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVec vec_scale(const Rational& c, const RatVec& a) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ULL) {
    std::uint64_t h = seed;
    for (const char ch : data) {
        h ^= static_cast<std::uint8_t>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace detail
}  // namespace stategeom
