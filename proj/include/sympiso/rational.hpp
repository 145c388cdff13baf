#pragma once

// Exact rationals on 64-bit numerator/denominator with overflow detection.
// The matrices in this library are tiny (entries built from roots of unity,
// dimensions <= 2^n for a handful of qudits), so 64 bits with checked
// intermediates is plenty; overflow throws instead of corrupting results.

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace sympiso {

struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    static Rat from_i128(__int128 n, __int128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw arithmetic_overflow("rational overflow");
        Rat r;
        r.num = static_cast<int64_t>(n);
        r.den = static_cast<int64_t>(d);
        return r;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128(__int128(a.num) * b.den + __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_i128(__int128(a.num) * b.den - __int128(b.num) * a.den,
                         __int128(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw domain_error("rational division by zero");
        return from_i128(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num = -r.num;
        return r;
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return __int128(a.num) * b.den < __int128(b.num) * a.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat parse(const std::string& s) {
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw malformed_input("bad rational: " + s);
        }
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
};

} // namespace sympiso
