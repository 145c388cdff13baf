#pragma once

// Canonical forms and kernels over the alphabet rings. Over a field the
// canonical form is the reduced row echelon form; over Z/dZ it is the Howell
// normal form, the unique canonical generating set of a row span. Row spans
// (not just lattices) are what code equality needs, hence Howell.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace sympiso {

struct CanonicalForm {
    RMat form;                  // Howell/RREF rows, zero rows dropped
    std::vector<size_t> pivots; // pivot column per row
    // Row combinations realizing form = transform * input. Annihilator rows
    // make the transform non-square over Z/dZ in general.
    RMat transform;
};

namespace detail {

struct WorkRow {
    std::vector<uint32_t> v;   // the row
    std::vector<uint32_t> tag; // combination of the original rows
};

inline size_t leading_index(const std::vector<uint32_t>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

// row = a*row1 + b*row2 over Z/d
inline WorkRow combine(uint64_t a, const WorkRow& r1, uint64_t b, const WorkRow& r2, uint32_t d) {
    WorkRow out;
    out.v.resize(r1.v.size());
    out.tag.resize(r1.tag.size());
    for (size_t i = 0; i < r1.v.size(); ++i)
        out.v[i] = static_cast<uint32_t>((a * r1.v[i] + b * r2.v[i]) % d);
    for (size_t i = 0; i < r1.tag.size(); ++i)
        out.tag[i] = static_cast<uint32_t>((a * r1.tag[i] + b * r2.tag[i]) % d);
    return out;
}

inline void scale_row(WorkRow& r, uint64_t s, uint32_t d) {
    for (auto& x : r.v) x = static_cast<uint32_t>((s * x) % d);
    for (auto& x : r.tag) x = static_cast<uint32_t>((s * x) % d);
}

// unit u with u*a == gcd(a, d) mod d; moduli are tiny so scan the units
inline uint32_t normalizing_unit(uint32_t a, uint32_t d) {
    uint32_t g = std::gcd(a, d);
    for (uint32_t u = 1; u < d; ++u) {
        if (std::gcd(u, d) != 1) continue;
        if ((uint64_t(u) * a) % d == g) return u;
    }
    throw domain_error("no normalizing unit found"); // unreachable for valid input
}

inline void xgcd(int64_t a, int64_t b, int64_t& g, int64_t& x, int64_t& y) {
    int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
        int64_t q = a / b, t;
        t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    g = a; x = x0; y = y0;
}

} // namespace detail

// Howell normal form with a transform tracking row provenance. Over a prime
// modulus this degenerates to the reduced row echelon form.
inline CanonicalForm canonicalize(const RMat& input) {
    using namespace detail;
    if (input.rows() == 0)
        return CanonicalForm{input, {}, rmat_zero(RingSpec::Zmod(2), 0, 0)};
    RingSpec spec = input.at(0, 0).spec;
    const uint32_t d = spec.modulus;
    const size_t cols = input.cols();
    const size_t k = input.rows();

    std::vector<WorkRow> work;
    for (size_t r = 0; r < k; ++r) {
        WorkRow w;
        w.v.resize(cols);
        for (size_t c = 0; c < cols; ++c) w.v[c] = input.at(r, c).v;
        w.tag.assign(k, 0);
        w.tag[r] = 1;
        if (leading_index(w.v) < cols) work.push_back(std::move(w));
    }

    std::vector<WorkRow> result;
    std::vector<size_t> pivots;

    for (size_t col = 0; col < cols; ++col) {
        // gather rows whose leading entry is this column
        std::vector<WorkRow> here;
        std::vector<WorkRow> rest;
        for (auto& w : work) {
            if (leading_index(w.v) == col)
                here.push_back(std::move(w));
            else
                rest.push_back(std::move(w));
        }
        work = std::move(rest);
        if (here.empty()) continue;

        WorkRow pivot = std::move(here[0]);
        for (size_t i = 1; i < here.size(); ++i) {
            WorkRow& s = here[i];
            int64_t a = pivot.v[col], b = s.v[col], g, x, y;
            xgcd(a, b, g, x, y);
            // new pivot with entry g; complementary row kills the column
            uint64_t xa = static_cast<uint64_t>(((x % d) + d) % d);
            uint64_t ya = static_cast<uint64_t>(((y % d) + d) % d);
            WorkRow np = combine(xa, pivot, ya, s, d);
            WorkRow ns = combine(uint64_t(a / g), s, uint64_t(d - (b / g) % d), pivot, d);
            pivot = std::move(np);
            if (leading_index(ns.v) < cols) work.push_back(std::move(ns));
        }
        // normalize pivot entry to gcd(pivot, d)
        scale_row(pivot, normalizing_unit(pivot.v[col], d), d);
        // annihilator shift keeps the Howell property over Z/dZ
        uint32_t g = pivot.v[col];
        if (g != 0 && d % g == 0 && d / g > 1) {
            WorkRow ann = pivot;
            scale_row(ann, d / g, d);
            if (leading_index(ann.v) < cols) work.push_back(std::move(ann));
        }
        pivots.push_back(col);
        result.push_back(std::move(pivot));
    }

    // reduce entries above each pivot into [0, pivot); left-to-right so a
    // processed pivot column is never touched again
    for (size_t i = 0; i < result.size(); ++i) {
        uint32_t g = result[i].v[pivots[i]];
        for (size_t r = 0; r < i; ++r) {
            uint32_t e = result[r].v[pivots[i]];
            uint32_t q = e / g;
            if (q == 0) continue;
            WorkRow adj = combine(1, result[r], uint64_t(d - (uint64_t(q) % d) % d) % d, result[i], d);
            result[r] = std::move(adj);
        }
    }

    RMat form = rmat_zero(spec, 0, cols);
    RMat transform = rmat_zero(spec, 0, k);
    for (const auto& w : result) {
        RVec row;
        row.reserve(cols);
        for (uint32_t x : w.v) row.emplace_back(spec, x);
        form.append_row(row);
        RVec tag;
        tag.reserve(k);
        for (uint32_t x : w.tag) tag.emplace_back(spec, x);
        transform.append_row(tag);
    }
    return CanonicalForm{std::move(form), std::move(pivots), std::move(transform)};
}

// Coefficients of v over the rows of a canonical form, or nullopt if v is
// outside the span. Coefficient i lands in [0, d/pivot_i).
inline std::optional<RVec> reduce_against(const CanonicalForm& cf, const RVec& v) {
    if (cf.form.rows() == 0) {
        if (is_zero(v)) return RVec{};
        return std::nullopt;
    }
    RingSpec spec = v.empty() ? cf.form.at(0, 0).spec : v[0].spec;
    uint32_t d = spec.modulus;
    RVec rem = v;
    RVec coeffs;
    coeffs.reserve(cf.form.rows());
    for (size_t i = 0; i < cf.form.rows(); ++i) {
        uint32_t g = cf.form.at(i, cf.pivots[i]).v;
        uint32_t e = rem[cf.pivots[i]].v;
        if (e % g != 0) return std::nullopt;
        uint32_t t = (e / g) % (d / g);
        coeffs.emplace_back(spec, t);
        if (t != 0) {
            RingElement c(spec, t);
            for (size_t j = 0; j < rem.size(); ++j) rem[j] -= c * cf.form.at(i, j);
        }
    }
    if (!is_zero(rem)) return std::nullopt;
    return coeffs;
}

inline bool in_span(const CanonicalForm& cf, const RVec& v) {
    return reduce_against(cf, v).has_value();
}

// Solve x * original = v where cf was computed from `original`.
inline std::optional<RVec> express_in_rows(const CanonicalForm& cf, const RVec& v) {
    auto y = reduce_against(cf, v);
    if (!y) return std::nullopt;
    if (cf.transform.cols() == 0) return RVec{};
    if (cf.transform.rows() == 0)
        return zero_vec(v.empty() ? RingSpec::Fp(2) : v[0].spec, cf.transform.cols());
    return vec_mat_mul(*y, cf.transform);
}

// |row span| = prod d/pivot_i.
inline uint64_t span_size(const CanonicalForm& cf) {
    if (cf.form.rows() == 0) return 1;
    uint32_t d = cf.form.at(0, 0).spec.modulus;
    uint64_t n = 1;
    for (size_t i = 0; i < cf.form.rows(); ++i) n *= d / cf.form.at(i, cf.pivots[i]).v;
    return n;
}

// Every element of the row span exactly once (coefficients in canonical
// ranges), in a deterministic order.
template <typename Fn>
void for_each_span_element(const CanonicalForm& cf, uint64_t cap, Fn&& fn) {
    uint64_t total = span_size(cf);
    if (total > cap) throw cap_exceeded("span enumeration of size " + std::to_string(total));
    size_t cols = cf.form.cols();
    if (cf.form.rows() == 0) {
        // only the zero vector; with no rows there is no ring to build it from,
        // so emit nothing for a truly empty form
        return;
    }
    RingSpec spec = cf.form.at(0, 0).spec;
    uint32_t d = spec.modulus;
    std::vector<uint32_t> radix(cf.form.rows());
    for (size_t i = 0; i < cf.form.rows(); ++i) radix[i] = d / cf.form.at(i, cf.pivots[i]).v;
    std::vector<uint32_t> digits(cf.form.rows(), 0);
    RVec cur = zero_vec(spec, cols);
    for (;;) {
        fn(cur);
        // increment mixed-radix counter, updating cur incrementally
        size_t pos = 0;
        for (; pos < digits.size(); ++pos) {
            digits[pos]++;
            for (size_t j = 0; j < cols; ++j) cur[j] += cf.form.at(pos, j);
            if (digits[pos] < radix[pos]) break;
            // wrapped: subtract radix copies
            RingElement r(spec, int64_t(radix[pos]));
            for (size_t j = 0; j < cols; ++j) cur[j] -= r * cf.form.at(pos, j);
            digits[pos] = 0;
        }
        if (pos == digits.size()) break;
    }
}

inline std::vector<RVec> span_elements(const CanonicalForm& cf, uint64_t cap) {
    std::vector<RVec> out;
    out.reserve(span_size(cf));
    for_each_span_element(cf, cap, [&](const RVec& v) { out.push_back(v); });
    return out;
}

// Generators of {v : v * M = 0}, returned in Howell form.
inline RMat kernel(const RMat& m, RingSpec spec) {
    size_t rows = m.rows(), cols = m.cols();
    RMat aug = rmat_zero(spec, rows, cols + rows);
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, cols + r) = RingElement(spec, 1);
    }
    CanonicalForm cf = canonicalize(aug);
    RMat gens = rmat_zero(spec, 0, rows);
    for (size_t r = 0; r < cf.form.rows(); ++r) {
        if (cf.pivots[r] < cols) continue; // row has support in the M block
        RVec tail;
        tail.reserve(rows);
        for (size_t c = 0; c < rows; ++c) tail.push_back(cf.form.at(r, cols + c));
        gens.append_row(tail);
    }
    return canonicalize(gens).form;
}

// Determinant by Laplace expansion; fine for the tiny sizes used here.
inline RingElement rmat_det(const RMat& m, RingSpec spec) {
    size_t n = m.rows();
    if (n != m.cols()) throw domain_error("determinant of non-square matrix");
    if (n == 0) return RingElement(spec, 1);
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    RingElement acc(spec, 0);
    for (size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        RMat minor = rmat_zero(spec, n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor.at(r - 1, cc++) = m.at(r, c2);
            }
        }
        RingElement term = m.at(0, c) * rmat_det(minor, spec);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline bool rmat_invertible(const RMat& m, RingSpec spec) {
    if (m.rows() != m.cols()) return false;
    return rmat_det(m, spec).is_unit();
}

// Inverse over a field via Gauss-Jordan.
inline RMat rmat_inverse(const RMat& m, RingSpec spec) {
    size_t n = m.rows();
    if (n != m.cols()) throw domain_error("inverse of non-square matrix");
    RMat aug = rmat_zero(spec, n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = RingElement(spec, 1);
    }
    size_t row = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = SIZE_MAX;
        for (size_t r = row; r < n; ++r)
            if (aug.at(r, col).is_unit()) { sel = r; break; }
        if (sel == SIZE_MAX) throw non_invertible("matrix not invertible over " + spec.name());
        for (size_t c = 0; c < 2 * n; ++c) std::swap(aug.at(row, c), aug.at(sel, c));
        RingElement inv = aug.at(row, col).inverse();
        for (size_t c = 0; c < 2 * n; ++c) aug.at(row, c) *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || aug.at(r, col).is_zero()) continue;
            RingElement f = aug.at(r, col);
            for (size_t c = 0; c < 2 * n; ++c) aug.at(r, c) -= f * aug.at(row, c);
        }
        ++row;
    }
    RMat out = rmat_zero(spec, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

} // namespace sympiso
