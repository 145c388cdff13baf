#pragma once

// Symbolic Pauli operators w^l X(a) Z(b) with exact phase bookkeeping. The
// phase exponent l lives modulo the phase order (2c for even characteristic,
// c otherwise); w is a primitive root of unity of that order. Multiplication
// follows P P' = chi(b.a') X(a+a') Z(b+b').

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"
#include "stabilizer_code.hpp"

namespace sympiso {

struct PauliOperator {
    RingSpec spec;
    uint32_t phase_exp = 0; // exponent of w, reduced mod phase_order
    RVec a;
    RVec b;

    size_t n() const { return a.size(); }

    static PauliOperator identity(RingSpec spec, size_t n) {
        return PauliOperator{spec, 0, zero_vec(spec, n), zero_vec(spec, n)};
    }

    static PauliOperator make(RingSpec spec, int64_t phase, const std::vector<int64_t>& av,
                              const std::vector<int64_t>& bv) {
        uint32_t cbar = spec.phase_order();
        uint32_t ph = static_cast<uint32_t>(((phase % cbar) + cbar) % cbar);
        return PauliOperator{spec, ph, make_vec(spec, av), make_vec(spec, bv)};
    }

    bool is_identity() const { return phase_exp == 0 && sympiso::is_zero(a) && sympiso::is_zero(b); }

    friend bool operator==(const PauliOperator& p, const PauliOperator& q) {
        return p.spec == q.spec && p.phase_exp == q.phase_exp && p.a == q.a && p.b == q.b;
    }
    friend bool operator!=(const PauliOperator& p, const PauliOperator& q) { return !(p == q); }
};

// Forgets the phase: w^l X(a) Z(b) -> (a, b).
inline RVec psi(const PauliOperator& p) {
    RVec v = p.a;
    v.insert(v.end(), p.b.begin(), p.b.end());
    return v;
}

// chi(x) as a power of w: w^((cbar/c) * lift(x)).
inline uint32_t chi_phase_exp(RingSpec spec, const RingElement& x) {
    uint32_t cbar = spec.phase_order();
    uint32_t step = cbar / spec.characteristic();
    return static_cast<uint32_t>((uint64_t(step) * x.lift()) % cbar);
}

inline PauliOperator pauli_mul(const PauliOperator& p, const PauliOperator& q) {
    if (p.spec != q.spec || p.n() != q.n()) throw domain_error("pauli product shape mismatch");
    RingSpec spec = p.spec;
    RingElement ba(spec, 0);
    for (size_t i = 0; i < p.n(); ++i) ba += p.b[i] * q.a[i];
    uint32_t cbar = spec.phase_order();
    uint32_t phase = static_cast<uint32_t>(
        (uint64_t(p.phase_exp) + q.phase_exp + chi_phase_exp(spec, ba)) % cbar);
    return PauliOperator{spec, phase, p.a + q.a, p.b + q.b};
}

inline PauliOperator pauli_pow(const PauliOperator& p, uint64_t e) {
    PauliOperator acc = PauliOperator::identity(p.spec, p.n());
    for (uint64_t i = 0; i < e; ++i) acc = pauli_mul(acc, p);
    return acc;
}

inline PauliOperator pauli_inverse(const PauliOperator& p) {
    // orders are tiny, so walk to P^(m-1) with P^m = I
    PauliOperator prev = PauliOperator::identity(p.spec, p.n());
    PauliOperator cur = p;
    while (!cur.is_identity()) {
        prev = cur;
        cur = pauli_mul(cur, p);
    }
    return prev;
}

// PP' = P'P iff chi(ba' - b'a) = 1 iff the symplectic inner product of the
// Psi images vanishes.
inline bool pauli_commutes(const PauliOperator& p, const PauliOperator& q) {
    return symp_inner(psi(p), psi(q)).is_zero();
}

inline size_t pauli_weight(const PauliOperator& p) { return symp_weight(psi(p)); }

// sigma(P) = w^l X(sigma(a)) Z(sigma(b)) with (sigma(a))_i = a_{sigma(i)}.
inline PauliOperator permute_pauli(const std::vector<size_t>& sigma, const PauliOperator& p) {
    if (sigma.size() != p.n()) throw domain_error("permutation length mismatch");
    PauliOperator out = p;
    for (size_t i = 0; i < sigma.size(); ++i) {
        out.a[i] = p.a[sigma[i]];
        out.b[i] = p.b[sigma[i]];
    }
    return out;
}

inline std::vector<uint32_t> pauli_key(const PauliOperator& p) {
    std::vector<uint32_t> key{p.phase_exp};
    for (const auto& e : p.a) key.push_back(e.v);
    for (const auto& e : p.b) key.push_back(e.v);
    return key;
}

struct StabilizerGroup {
    RingSpec spec;
    size_t n = 0;
    std::vector<PauliOperator> generators;

    // d^k when the generators are independent of order d.
    uint64_t naive_order() const {
        uint64_t o = 1;
        for (size_t i = 0; i < generators.size(); ++i) o *= spec.modulus;
        return o;
    }

    // The group as a set: all products of generator powers, deduplicated.
    std::vector<PauliOperator> elements(uint64_t cap = kDefaultEnumCap) const {
        if (naive_order() > cap)
            throw cap_exceeded("stabilizer group of order " + std::to_string(naive_order()));
        std::vector<PauliOperator> out{PauliOperator::identity(spec, n)};
        for (const auto& g : generators) {
            std::vector<PauliOperator> next;
            next.reserve(out.size() * spec.modulus);
            PauliOperator p = PauliOperator::identity(spec, n);
            for (uint32_t t = 0; t < spec.modulus; ++t) {
                for (const auto& e : out) next.push_back(pauli_mul(e, p));
                p = pauli_mul(p, g);
            }
            out = std::move(next);
        }
        std::sort(out.begin(), out.end(), [](const PauliOperator& x, const PauliOperator& y) {
            return pauli_key(x) < pauli_key(y);
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    uint64_t order(uint64_t cap = kDefaultEnumCap) const { return elements(cap).size(); }

    bool contains(const PauliOperator& p, uint64_t cap = kDefaultEnumCap) const {
        auto els = elements(cap);
        return std::find(els.begin(), els.end(), p) != els.end();
    }
};

// One generator per generator row (a, b) of the code: phase 0 for odd
// characteristic; for even characteristic the phase w^lift(a.b) makes each
// generator's order divide d (and reproduces the letter conventions below).
inline StabilizerGroup code_to_stabilizer(const StabilizerCode& c) {
    if (!c.is_self_orthogonal()) throw domain_error("code_to_stabilizer needs a self-orthogonal code");
    RingSpec spec = c.spec();
    StabilizerGroup s{spec, c.n(), {}};
    bool even = spec.characteristic() % 2 == 0;
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        RVec row = c.generators().row(r);
        RVec a(row.begin(), row.begin() + c.n());
        RVec b(row.begin() + c.n(), row.end());
        uint32_t phase = 0;
        if (even) {
            uint64_t dot = 0;
            for (size_t i = 0; i < c.n(); ++i) dot += uint64_t(a[i].lift()) * b[i].lift();
            phase = static_cast<uint32_t>(dot % spec.phase_order());
        }
        s.generators.push_back(PauliOperator{spec, phase, std::move(a), std::move(b)});
    }
    return s;
}

// --- text syntax -----------------------------------------------------------
//
// d = 2: letter strings over {I, X, Y, Z} with Y = i X Z, optionally prefixed
// by one of +1, -1, +i, -i. Other d: optional w^l prefix, then per-slot
// tokens X^aZ^b joined by '|'.

inline std::string pauli_string(const PauliOperator& p) {
    RingSpec spec = p.spec;
    if (spec.modulus == 2) {
        uint32_t y_count = 0;
        std::string letters;
        for (size_t i = 0; i < p.n(); ++i) {
            bool xa = !p.a[i].is_zero(), zb = !p.b[i].is_zero();
            if (xa && zb) {
                letters += 'Y';
                ++y_count;
            } else if (xa) {
                letters += 'X';
            } else if (zb) {
                letters += 'Z';
            } else {
                letters += 'I';
            }
        }
        uint32_t residual = (p.phase_exp + 4 - (y_count % 4)) % 4; // w = i
        static const char* pre_by_exp[4] = {"", "+i", "-", "-i"};
        return std::string(pre_by_exp[residual]) + letters;
    }
    std::string out;
    if (p.phase_exp != 0) out += "w^" + std::to_string(p.phase_exp) + "*";
    for (size_t i = 0; i < p.n(); ++i) {
        if (i) out += "|";
        out += "X^" + std::to_string(p.a[i].lift()) + "Z^" + std::to_string(p.b[i].lift());
    }
    return out;
}

inline PauliOperator parse_pauli(const std::string& text, RingSpec spec) {
    std::string s = text;
    uint32_t cbar = spec.phase_order();
    int64_t phase = 0;
    if (spec.modulus == 2) {
        size_t pos = 0;
        if (s.rfind("+1", 0) == 0) pos = 2;
        else if (s.rfind("-1", 0) == 0) { phase = 2; pos = 2; }
        else if (s.rfind("+i", 0) == 0) { phase = 1; pos = 2; }
        else if (s.rfind("-i", 0) == 0) { phase = 3; pos = 2; }
        else if (!s.empty() && s[0] == '-') { phase = 2; pos = 1; }
        else if (!s.empty() && s[0] == '+') pos = 1;
        std::vector<int64_t> a, b;
        for (; pos < s.size(); ++pos) {
            switch (s[pos]) {
                case 'I': a.push_back(0); b.push_back(0); break;
                case 'X': a.push_back(1); b.push_back(0); break;
                case 'Z': a.push_back(0); b.push_back(1); break;
                case 'Y': a.push_back(1); b.push_back(1); phase += 1; break;
                default: throw malformed_input(std::string("bad Pauli letter '") + s[pos] + "'");
            }
        }
        return PauliOperator::make(spec, phase, a, b);
    }
    size_t pos = 0;
    if (s.rfind("w^", 0) == 0) {
        size_t star = s.find('*');
        if (star == std::string::npos) throw malformed_input("phase prefix needs '*'");
        try {
            phase = std::stoll(s.substr(2, star - 2));
        } catch (const std::exception&) {
            throw malformed_input("bad phase exponent in: " + text);
        }
        pos = star + 1;
    }
    std::vector<int64_t> a, b;
    while (pos < s.size()) {
        size_t bar = s.find('|', pos);
        std::string slot = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        size_t xp = slot.find("X^");
        size_t zp = slot.find("Z^");
        if (xp != 0 || zp == std::string::npos) throw malformed_input("bad slot token: " + slot);
        try {
            a.push_back(std::stoll(slot.substr(2, zp - 2)));
            b.push_back(std::stoll(slot.substr(zp + 2)));
        } catch (const std::exception&) {
            throw malformed_input("bad slot token: " + slot);
        }
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    (void)cbar;
    return PauliOperator::make(spec, phase, a, b);
}

} // namespace sympiso
