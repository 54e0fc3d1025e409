#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "sawlab/errors.hpp"

namespace sawlab {

// Comparisons of exact quantities against real-valued thresholds carry a
// 1e-12 relative guard band. Exact ties decide; values inside the band that
// are not exact ties refuse to.
inline int guarded_cmp(long double lhs, long double rhs) {
    long double diff = lhs - rhs;
    if (diff == 0.0L) return 0;
    long double scale = std::max<long double>(1.0L, std::fabs(rhs));
    if (std::fabs(diff) < 1e-12L * scale)
        fail(errc::ambiguous_comparison, "comparison falls inside the guard band");
    return diff > 0 ? 1 : -1;
}

inline bool guarded_greater(long double lhs, long double rhs) { return guarded_cmp(lhs, rhs) > 0; }
inline bool guarded_at_least(long double lhs, long double rhs) { return guarded_cmp(lhs, rhs) >= 0; }
inline bool guarded_at_most(long double lhs, long double rhs) { return guarded_cmp(lhs, rhs) <= 0; }
inline bool guarded_less(long double lhs, long double rhs) { return guarded_cmp(lhs, rhs) < 0; }

// Exact rational on 64-bit parts. Counts at desk scale stay far below the
// overflow threshold; intermediate products go through __int128.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(errc::invalid_params, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) fail(errc::invalid_params, "rational division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den <= (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    double to_double() const { return (double)num / (double)den; }
    long double to_long_double() const { return (long double)num / (long double)den; }

    // Prints as "p/q"; integers keep the "/1" off.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            fail(errc::invalid_params, "rational overflow");
        r.num = (long long)n;
        r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
};

} // namespace sawlab
