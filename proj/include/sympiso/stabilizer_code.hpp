#pragma once

// Classical stabilizer codes: self-orthogonal submodules of R^(2n) under the
// symplectic inner product <(a,b),(a',b')> = b.a' - b'.a. Vectors are stored
// in (a | b) layout; gamma interleaves into per-qudit pairs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "ring_linalg.hpp"

namespace sympiso {

// <(a,b),(a',b')> = b.a' - b'.a
inline RingElement symp_inner(const RVec& u, const RVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw domain_error("symplectic inner product needs equal even-length vectors");
    size_t n = u.size() / 2;
    RingSpec spec = u.empty() ? RingSpec::Fp(2) : u[0].spec;
    RingElement acc(spec, 0);
    for (size_t i = 0; i < n; ++i) acc += u[n + i] * v[i] - v[n + i] * u[i];
    return acc;
}

// Number of qudit slots where (a_i, b_i) != (0, 0).
inline size_t symp_weight(const RVec& v) {
    if (v.size() % 2 != 0) throw domain_error("symplectic weight needs even length");
    size_t n = v.size() / 2, w = 0;
    for (size_t i = 0; i < n; ++i)
        if (!v[i].is_zero() || !v[n + i].is_zero()) ++w;
    return w;
}

// (a_1..a_n | b_1..b_n) -> (a_1,b_1 | ... | a_n,b_n)
inline RVec gamma(const RVec& v) {
    if (v.size() % 2 != 0) throw domain_error("gamma needs even length");
    size_t n = v.size() / 2;
    RVec out;
    out.reserve(v.size());
    for (size_t i = 0; i < n; ++i) {
        out.push_back(v[i]);
        out.push_back(v[n + i]);
    }
    return out;
}

inline RVec gamma_inv(const RVec& v) {
    if (v.size() % 2 != 0) throw domain_error("gamma_inv needs even length");
    size_t n = v.size() / 2;
    RVec out(v.size(), v.empty() ? RingElement() : v[0]);
    for (size_t i = 0; i < n; ++i) {
        out[i] = v[2 * i];
        out[n + i] = v[2 * i + 1];
    }
    return out;
}

// Hamming weight over pair blocks of an interleaved vector.
inline size_t pair_hamming_weight(const RVec& v) {
    size_t n = v.size() / 2, w = 0;
    for (size_t i = 0; i < n; ++i)
        if (!v[2 * i].is_zero() || !v[2 * i + 1].is_zero()) ++w;
    return w;
}

// Column-interleaves a generator matrix (plain (a|b) layout -> gamma layout).
inline RMat gamma_cols(const RMat& g) {
    RMat out = g;
    for (size_t r = 0; r < g.rows(); ++r) out.set_row(r, gamma(g.row(r)));
    return out;
}

inline RMat gamma_inv_cols(const RMat& g) {
    RMat out = g;
    for (size_t r = 0; r < g.rows(); ++r) out.set_row(r, gamma_inv(g.row(r)));
    return out;
}

class StabilizerCode {
  public:
    // Rows of g are generators in (a | b) layout. Redundant generators are
    // replaced by the canonical form; independent generators are kept as
    // given so familiar generator rows stay recognizable.
    StabilizerCode(RingSpec spec, size_t n, RMat g) : spec_(spec), n_(n), g_(std::move(g)) {
        if (g_.cols() != 2 * n) throw domain_error("generator matrix must have 2n columns");
        canon_ = canonicalize(g_);
        if (canon_.form.rows() != g_.rows()) {
            g_ = canon_.form;
            canon_ = canonicalize(g_);
        }
        self_orth_ = compute_self_orth();
    }

    static StabilizerCode from_rows(RingSpec spec, size_t n, const std::vector<std::vector<int64_t>>& rows) {
        RMat g = rmat_zero(spec, 0, 2 * n);
        for (const auto& r : rows) g.append_row(make_vec(spec, r));
        return StabilizerCode(spec, n, std::move(g));
    }

    RingSpec spec() const { return spec_; }
    size_t n() const { return n_; }
    size_t k() const { return g_.rows(); }
    const RMat& generators() const { return g_; }
    const CanonicalForm& canonical() const { return canon_; }
    bool is_self_orthogonal() const { return self_orth_; }

    uint64_t size() const { return span_size(canon_); }

    bool contains(const RVec& v) const { return in_span(canon_, v); }

    std::vector<RVec> codewords(uint64_t cap = kDefaultEnumCap) const {
        auto words = span_elements(canon_, cap);
        if (words.empty()) words.push_back(zero_vec(spec_, 2 * n_)); // k = 0
        return words;
    }

    friend bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
        return a.spec_ == b.spec_ && a.n_ == b.n_ && a.canon_.form == b.canon_.form;
    }
    friend bool operator!=(const StabilizerCode& a, const StabilizerCode& b) { return !(a == b); }

  private:
    RingSpec spec_;
    size_t n_;
    RMat g_;
    CanonicalForm canon_;
    bool self_orth_;

    bool compute_self_orth() const {
        for (size_t i = 0; i < g_.rows(); ++i)
            for (size_t j = i; j < g_.rows(); ++j)
                if (!symp_inner(g_.row(i), g_.row(j)).is_zero()) return false;
        return true;
    }
};

// Gram matrix of the symplectic form: v * Omega gives (b | -a).
inline RMat symplectic_gram(RingSpec spec, size_t n) {
    RMat omega = rmat_zero(spec, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        omega.at(i, n + i) = RingElement(spec, -1);
        omega.at(n + i, i) = RingElement(spec, 1);
    }
    return omega;
}

// C^perp = kernel of v -> v * (Omega * G^T).
inline StabilizerCode dual(const StabilizerCode& c) {
    RMat m = rmat_mul(c.spec(), symplectic_gram(c.spec(), c.n()), c.generators().transposed());
    RMat gens = kernel(m, c.spec());
    return StabilizerCode(c.spec(), c.n(), std::move(gens));
}

inline bool is_self_dual(const StabilizerCode& c) {
    if (!c.is_self_orthogonal()) return false;
    return c.canonical().form == dual(c).canonical().form;
}

// Branches exactly on C < C^perp versus C = C^perp.
inline size_t min_distance(const StabilizerCode& c, uint64_t cap = kDefaultEnumCap) {
    StabilizerCode d = dual(c);
    bool proper = d.canonical().form != c.canonical().form;
    size_t best = SIZE_MAX;
    if (proper) {
        for_each_span_element(d.canonical(), cap, [&](const RVec& v) {
            if (c.contains(v)) return;
            best = std::min(best, symp_weight(v));
        });
    } else {
        for_each_span_element(c.canonical(), cap, [&](const RVec& v) {
            if (is_zero(v)) return;
            best = std::min(best, symp_weight(v));
        });
    }
    if (best == SIZE_MAX) throw domain_error("minimum distance of the zero quotient");
    return best;
}

// p-fold block repetition (x | x | ... | x) in gamma coordinates; in plain
// coordinates each generator (a | b) becomes (a..a | b..b). Self-orthogonal
// whenever p equals the alphabet characteristic.
inline StabilizerCode concat_p_fold(const StabilizerCode& c) {
    if (!c.spec().is_field() || !is_prime(c.spec().modulus))
        throw domain_error("concatenation needs a prime field alphabet");
    uint32_t p = c.spec().modulus;
    size_t n = c.n();
    RMat g = rmat_zero(c.spec(), 0, 2 * n * p);
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        RVec row = c.generators().row(r);
        RVec rep = zero_vec(c.spec(), 2 * n * p);
        for (uint32_t t = 0; t < p; ++t)
            for (size_t i = 0; i < n; ++i) {
                rep[t * n + i] = row[i];
                rep[p * n + t * n + i] = row[n + i];
            }
        g.append_row(rep);
    }
    return StabilizerCode(c.spec(), n * p, std::move(g));
}

// Lift an F_p code into the socle of Z/p^e: each generator row g maps to
// alpha * g with the canonical integer lift. Any other lift differs by
// multiples of p, which alpha annihilates.
inline StabilizerCode socle_lift(const StabilizerCode& c, RingSpec target) {
    if (!c.spec().is_field()) throw domain_error("socle lift starts from a prime field code");
    if (!target.has_local_data() || target.residue_field_size() != c.spec().modulus)
        throw domain_error("socle lift target must be Z/p^e with matching characteristic p");
    int64_t alpha = target.socle_gen();
    RMat g = rmat_zero(target, 0, 2 * c.n());
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        RVec row;
        row.reserve(2 * c.n());
        for (const auto& x : c.generators().row(r)) row.emplace_back(target, alpha * int64_t(x.lift()));
        g.append_row(row);
    }
    return StabilizerCode(target, c.n(), std::move(g));
}

// Reduction of a socle code back to the residue field via rho: alpha*r -> r mod p.
inline StabilizerCode socle_reduce(const StabilizerCode& c) {
    RingSpec spec = c.spec();
    if (!spec.has_local_data()) throw domain_error("residue reduction needs Z/p^e");
    uint32_t alpha = spec.socle_gen();
    uint32_t p = spec.residue_field_size();
    RingSpec fq = RingSpec::Fp(p);
    RMat g = rmat_zero(fq, 0, 2 * c.n());
    for (size_t r = 0; r < c.generators().rows(); ++r) {
        RVec row;
        row.reserve(2 * c.n());
        for (const auto& x : c.generators().row(r)) {
            if (x.lift() % alpha != 0)
                throw domain_error("code is not contained in the socle (alpha R)^(2n)");
            row.emplace_back(fq, int64_t(x.lift() / alpha));
        }
        g.append_row(row);
    }
    return StabilizerCode(fq, c.n(), std::move(g));
}

struct CosetWeightTable {
    RVec representative;
    std::vector<size_t> weights; // multiset, sorted; one entry per coset element
};

inline CosetWeightTable coset_weight_table(const StabilizerCode& c, const RVec& v,
                                           uint64_t cap = kDefaultEnumCap) {
    if (c.contains(v)) throw domain_error("coset representative lies in the code");
    CosetWeightTable t;
    t.representative = v;
    for (const RVec& w : c.codewords(cap)) t.weights.push_back(symp_weight(v + w));
    std::sort(t.weights.begin(), t.weights.end());
    return t;
}

// All self-dual D with C <= D <= C^perp, by exhaustive extension over coset
// representatives. Results are deduplicated by canonical form.
inline std::vector<StabilizerCode> self_dual_extensions(const StabilizerCode& c,
                                                        uint64_t cap = kDefaultEnumCap) {
    if (!c.is_self_orthogonal()) throw domain_error("self-dual extensions need a self-orthogonal code");
    std::vector<StabilizerCode> found;
    std::vector<RMat> seen;
    auto emit = [&](const StabilizerCode& d) {
        for (const auto& f : seen)
            if (f == d.canonical().form) return;
        seen.push_back(d.canonical().form);
        found.push_back(d);
    };
    // depth-first: extend by any element of D^perp - D until self-dual
    std::vector<StabilizerCode> stack{c};
    std::vector<RMat> visited;
    while (!stack.empty()) {
        StabilizerCode d = stack.back();
        stack.pop_back();
        bool known = false;
        for (const auto& f : visited)
            if (f == d.canonical().form) { known = true; break; }
        if (known) continue;
        visited.push_back(d.canonical().form);
        StabilizerCode dp = dual(d);
        if (dp.canonical().form == d.canonical().form) {
            emit(d);
            continue;
        }
        for_each_span_element(dp.canonical(), cap, [&](const RVec& v) {
            if (d.contains(v)) return;
            RMat g = d.generators();
            g.append_row(v);
            stack.emplace_back(d.spec(), d.n(), std::move(g));
        });
    }
    return found;
}

} // namespace sympiso
