#pragma once

// Arithmetic modes. Every computation is instantiated over one scalar type:
// `double` (float mode, tolerance-based comparisons) or `Rational` (exact mode,
// GMP rationals, no rounding anywhere).

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>

#include "phasealg/errors.hpp"

namespace phasealg {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* mode_name = "float";
    static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
    static int sign(double x, double tol) { return is_zero(x, tol) ? 0 : (x > 0 ? 1 : -1); }
    static double abs(double x) { return std::abs(x); }
    static double to_double(double x) { return x; }
    static bool is_finite(double x) { return std::isfinite(x); }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* mode_name = "exact";
    static bool is_zero(const Rational& x, double /*tol*/) { return sgn(x) == 0; }
    static int sign(const Rational& x, double /*tol*/) { return sgn(x); }
    static Rational abs(const Rational& x) { return ::abs(x); }
    static double to_double(const Rational& x) { return x.get_d(); }
    static bool is_finite(const Rational&) { return true; }
};

template <typename S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
double to_double(const S& x) {
    return ScalarTraits<S>::to_double(x);
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw InvalidInput("cannot convert non-finite value to a rational");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// [+-]digits[.digits][e[+-]digits] as an exact rational.
inline Rational parse_decimal(std::string_view s, std::string_view original) {
    auto fail = [&] { return InvalidInput("not a number: '" + std::string(original) + "'"); };
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
        if (ec != std::errc{} || ptr != exp_part.data() + exp_part.size()) throw fail();
        if (exponent > 4000 || exponent < -4000) throw fail();
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw fail();
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) throw fail();
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) throw fail();
        digits = std::string(s);
    }
    if (digits.empty()) digits = "0";
    mpz_class numerator(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace detail

/// Parses "p/q", integers and decimals (with optional exponent) exactly.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw InvalidInput("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = detail::parse_decimal(text.substr(0, slash), text);
        Rational den = detail::parse_decimal(text.substr(slash + 1), text);
        if (sgn(den) == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        Rational r = num / den;
        r.canonicalize();
        return r;
    }
    return detail::parse_decimal(text, text);
}

/// Locale-independent double parsing; also accepts "p/q".
inline double parse_double(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
    std::string_view s = text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidInput("not a number: '" + std::string(text) + "'");
    if (!std::isfinite(value)) throw InvalidInput("non-finite number: '" + std::string(text) + "'");
    return value;
}

template <Scalar S>
S parse_scalar(std::string_view text) {
    if constexpr (ScalarTraits<S>::exact)
        return parse_rational(text);
    else
        return parse_double(text);
}

/// Shortest round-trip text for doubles ("157", "0.75", "-1e-10"), no locale.
inline std::string format_double(double x) {
    if (x == 0.0) return "0";  // folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

inline std::string format_scalar(double x) { return format_double(x); }
inline std::string format_scalar(const Rational& x) { return x.get_str(); }

}  // namespace phasealg
