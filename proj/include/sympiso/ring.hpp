#pragma once

// The alphabet rings: prime fields F_p and modular rings Z/dZ, together with
// their additive characters. These are the only rings the rest of the library
// ever computes with; local (prime power) moduli additionally expose their
// socle/radical data.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sympiso {

enum class RingKind : uint8_t { prime_field, modular_ring };

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Returns p if n = p^e for a prime p, otherwise 0.
inline uint32_t prime_power_base(uint32_t n) {
    if (n < 2) return 0;
    uint32_t p = 2;
    while (n % p != 0) {
        ++p;
        if (p * p > n) { p = n; break; }
    }
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

struct RingSpec {
    RingKind kind = RingKind::prime_field;
    uint32_t modulus = 2;

    static RingSpec Fp(uint32_t p) {
        if (!is_prime(p)) throw domain_error("F_p requires a prime modulus, got " + std::to_string(p));
        return RingSpec{RingKind::prime_field, p};
    }
    static RingSpec Zmod(uint32_t d) {
        if (d < 2) throw domain_error("Z/dZ requires d >= 2");
        return RingSpec{RingKind::modular_ring, d};
    }

    uint32_t size() const { return modulus; }
    // Additive order of 1; equals the modulus for both supported kinds.
    uint32_t characteristic() const { return modulus; }
    uint32_t phase_order() const {
        uint32_t c = characteristic();
        return c % 2 == 0 ? 2 * c : c;
    }
    // Arithmetic is identical for F_p and Z/p; "field" here means every
    // nonzero element is a unit.
    bool is_field() const { return kind == RingKind::prime_field || is_prime(modulus); }

    bool has_local_data() const { return prime_power_base(modulus) != 0; }
    // Generator of the maximal ideal (p for Z/p^e).
    uint32_t max_ideal_gen() const {
        uint32_t p = prime_power_base(modulus);
        if (p == 0) throw domain_error("ring " + name() + " is not local");
        return p % modulus;
    }
    // Socle generator alpha = p^(e-1); alpha * p == 0 and alpha != 0.
    uint32_t socle_gen() const {
        uint32_t p = prime_power_base(modulus);
        if (p == 0) throw domain_error("ring " + name() + " is not local");
        return modulus / p;
    }
    // Residue field size q = p.
    uint32_t residue_field_size() const {
        uint32_t p = prime_power_base(modulus);
        if (p == 0) throw domain_error("ring " + name() + " is not local");
        return p;
    }

    std::string name() const {
        if (kind == RingKind::prime_field) return "F" + std::to_string(modulus);
        return "Z/" + std::to_string(modulus);
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }
};

struct RingElement {
    RingSpec spec;
    uint32_t v = 0; // canonical residue in [0, modulus)

    RingElement() : spec(RingSpec{RingKind::prime_field, 2}), v(0) {}
    RingElement(RingSpec s, int64_t value) : spec(s) {
        int64_t m = s.modulus;
        v = static_cast<uint32_t>(((value % m) + m) % m);
    }

    uint32_t lift() const { return v; } // canonical integer lift in [0, modulus)
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return std::gcd(v, spec.modulus) == 1; }

    RingElement inverse() const {
        if (!is_unit())
            throw non_invertible(std::to_string(v) + " is not invertible in " + spec.name());
        // extended Euclid on (v, modulus)
        int64_t a = v, m = spec.modulus, x0 = 1, x1 = 0;
        int64_t b = m;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return RingElement(spec, x0);
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        check(a, b);
        return RingElement(a.spec, int64_t(a.v) + int64_t(b.v));
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        check(a, b);
        return RingElement(a.spec, int64_t(a.v) - int64_t(b.v));
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        check(a, b);
        return RingElement(a.spec, int64_t(a.v) * int64_t(b.v));
    }
    RingElement operator-() const { return RingElement(spec, -int64_t(v)); }

    RingElement& operator+=(const RingElement& o) { *this = *this + o; return *this; }
    RingElement& operator-=(const RingElement& o) { *this = *this - o; return *this; }
    RingElement& operator*=(const RingElement& o) { *this = *this * o; return *this; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        check(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
    friend bool operator<(const RingElement& a, const RingElement& b) {
        check(a, b);
        return a.v < b.v;
    }

  private:
    static void check(const RingElement& a, const RingElement& b) {
        if (a.spec != b.spec) throw domain_error("ring mismatch: " + a.spec.name() + " vs " + b.spec.name());
    }
};

using RVec = std::vector<RingElement>;

inline RVec make_vec(RingSpec spec, const std::vector<int64_t>& vals) {
    RVec r;
    r.reserve(vals.size());
    for (int64_t x : vals) r.emplace_back(spec, x);
    return r;
}

inline RVec zero_vec(RingSpec spec, size_t n) { return RVec(n, RingElement(spec, 0)); }

inline RVec operator+(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw domain_error("vector length mismatch");
    RVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline RVec operator*(const RingElement& c, const RVec& a) {
    RVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline bool is_zero(const RVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

// All units of the ring, increasing.
inline std::vector<RingElement> units_of(RingSpec spec) {
    std::vector<RingElement> u;
    for (uint32_t x = 1; x < spec.modulus; ++x)
        if (std::gcd(x, spec.modulus) == 1) u.emplace_back(spec, x);
    return u;
}

// An additive character x -> zeta_c^(u*x), represented by its defining unit.
struct Character {
    RingElement u;

    RingSpec spec() const { return u.spec; }
    static Character standard(RingSpec s) { return Character{RingElement(s, 1)}; }
};

// True iff ker(chi) contains no nonzero ideal. Ideals of Z/dZ are eZ/dZ for
// divisors e of d, so the check is an exhaustive walk over divisors.
inline bool is_generating(const Character& chi) {
    uint32_t d = chi.spec().modulus;
    for (uint32_t e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        // ideal eR lies in ker chi iff chi(e) = 1 iff u*e = 0 mod d
        if ((uint64_t(chi.u.v) * e) % d == 0) return false;
    }
    return true;
}

} // namespace sympiso
