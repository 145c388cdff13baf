#pragma once

// Exact linear algebra over cyclotomic fields: rank by fraction-free
// elimination, reduced echelon form, column spaces, Hermitian
// orthogonalization and span comparisons. No floating point anywhere.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "cyclotomic.hpp"
#include "matrix.hpp"

namespace sympiso {

// Rank by fraction-free (Bareiss-style) elimination.
inline size_t rank_exact(const CMat& input) {
    CMat m = input;
    size_t rows = m.rows(), cols = m.cols();
    size_t rank = 0;
    Cyclotomic prev = Cyclotomic::one();
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel == SIZE_MAX) continue;
        if (sel != rank)
            for (size_t c = 0; c < cols; ++c) std::swap(m.at(rank, c), m.at(sel, c));
        const Cyclotomic pivot = m.at(rank, col);
        for (size_t r = rank + 1; r < rows; ++r) {
            const Cyclotomic f = m.at(r, col);
            for (size_t c = 0; c < cols; ++c) {
                Cyclotomic t = pivot * m.at(r, c) - f * m.at(rank, c);
                m.at(r, c) = t / prev; // exact in the Bareiss scheme
            }
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

// Reduced row echelon form over the field; returns pivot columns.
inline std::vector<size_t> cmat_rref(CMat& m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = SIZE_MAX;
        for (size_t r = row; r < rows; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel == SIZE_MAX) continue;
        if (sel != row)
            for (size_t c = 0; c < cols; ++c) std::swap(m.at(row, c), m.at(sel, c));
        Cyclotomic inv = m.at(row, col).inverse();
        for (size_t c = col; c < cols; ++c) m.at(row, c) = inv * m.at(row, c);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Cyclotomic f = m.at(r, col);
            for (size_t c = col; c < cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Canonical basis of the column space: RREF rows of the transpose, returned
// as columns of the result.
inline CMat column_space_basis(const CMat& m) {
    CMat t = m.transposed();
    std::vector<size_t> pivots = cmat_rref(t);
    CMat basis = cmat_zero(m.rows(), pivots.size());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t c = 0; c < m.rows(); ++c) basis.at(c, r) = t.at(r, c);
    return basis;
}

inline Cyclotomic hermitian_dot(const CMat& a, size_t col_a, const CMat& b, size_t col_b) {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t i = 0; i < a.rows(); ++i) acc += a.at(i, col_a).conj() * b.at(i, col_b);
    return acc;
}

// Exact Gram-Schmidt (orthogonal, not normalized; no square roots needed).
inline CMat orthogonalize_columns(const CMat& m) {
    CMat out = m;
    for (size_t j = 0; j < out.cols(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            Cyclotomic denom = hermitian_dot(out, i, out, i);
            if (denom.is_zero()) continue;
            Cyclotomic f = hermitian_dot(out, i, out, j) / denom;
            if (f.is_zero()) continue;
            for (size_t r = 0; r < out.rows(); ++r) out.at(r, j) -= f * out.at(r, i);
        }
    }
    return out;
}

// Scales each column to integer coefficients with content 1, first nonzero
// coefficient positive. Keeps output stable regardless of internal scaling.
inline void primitive_normalize_columns(CMat& m) {
    for (size_t j = 0; j < m.cols(); ++j) {
        int64_t den_lcm = 1;
        for (size_t r = 0; r < m.rows(); ++r)
            for (const Rat& c : m.at(r, j).coeffs())
                den_lcm = std::lcm(den_lcm, c.den);
        int64_t num_gcd = 0;
        for (size_t r = 0; r < m.rows(); ++r)
            for (const Rat& c : m.at(r, j).coeffs()) {
                __int128 scaled = __int128(c.num) * (den_lcm / c.den);
                int64_t s = int64_t(scaled < 0 ? -scaled : scaled);
                num_gcd = std::gcd(num_gcd, s);
            }
        if (num_gcd == 0) continue;
        Rat scale(den_lcm, num_gcd);
        bool flip = false, decided = false;
        for (size_t r = 0; r < m.rows() && !decided; ++r)
            for (const Rat& c : m.at(r, j).coeffs()) {
                if (c.is_zero()) continue;
                flip = c.num < 0;
                decided = true;
                break;
            }
        if (flip) scale = -scale;
        for (size_t r = 0; r < m.rows(); ++r) m.at(r, j) = scale * m.at(r, j);
    }
}

// Do the columns of a and b span the same subspace?
inline bool same_column_span(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows()) return false;
    size_t ra = rank_exact(a), rb = rank_exact(b);
    if (ra != rb) return false;
    CMat joint = cmat_zero(a.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) joint.at(r, c) = a.at(r, c);
        for (size_t c = 0; c < b.cols(); ++c) joint.at(r, a.cols() + c) = b.at(r, c);
    }
    return rank_exact(joint) == ra;
}

// If b == lambda * a entrywise for some scalar, returns lambda.
inline std::optional<Cyclotomic> proportionality_ratio(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<Cyclotomic> ratio;
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) {
            const Cyclotomic &x = a.at(r, c), &y = b.at(r, c);
            if (x.is_zero() != y.is_zero()) return std::nullopt;
            if (x.is_zero()) continue;
            Cyclotomic q = y / x;
            if (!ratio)
                ratio = q;
            else if (*ratio != q)
                return std::nullopt;
        }
    return ratio;
}

// Is z a root of unity times `base`? Scans z / base against +-zeta_M^j.
inline bool equal_up_to_root_of_unity(const Cyclotomic& z, const Cyclotomic& base, uint32_t max_order) {
    if (base.is_zero()) return z.is_zero();
    Cyclotomic q = z / base;
    for (uint32_t j = 0; j < max_order; ++j) {
        Cyclotomic w = Cyclotomic::root_of_unity(max_order, j);
        if (q == w || q == -w) return true;
    }
    return false;
}

} // namespace sympiso
