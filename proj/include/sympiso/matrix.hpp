#pragma once

// Dense row-major matrices. The two instantiations used throughout are
// Matrix<RingElement> (codes, isometries) and Matrix<Cyclotomic> (states,
// unitaries). Vectors act from the left: v -> v*M.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "ring.hpp"

namespace sympiso {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw domain_error("matrix entry count mismatch");
    }
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const T& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    std::vector<T> row(size_t r) const {
        return std::vector<T>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
    }
    void set_row(size_t r, const std::vector<T>& v) {
        if (v.size() != cols_) throw domain_error("row length mismatch");
        for (size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
    }
    void append_row(const std::vector<T>& v) {
        if (cols_ == 0 && rows_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw domain_error("row length mismatch");
        e_.insert(e_.end(), v.begin(), v.end());
        ++rows_;
    }

    const std::vector<T>& entries() const { return e_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_, e_.empty() ? std::vector<T>(cols_ * rows_)
                                          : std::vector<T>(cols_ * rows_, e_[0]));
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    size_t rows_, cols_;
    std::vector<T> e_;
};

using RMat = Matrix<RingElement>;
using CMat = Matrix<Cyclotomic>;

// --- construction helpers -------------------------------------------------

inline RMat rmat(RingSpec spec, size_t rows, size_t cols, const std::vector<int64_t>& vals) {
    if (vals.size() != rows * cols) throw domain_error("matrix literal size mismatch");
    std::vector<RingElement> e;
    e.reserve(vals.size());
    for (int64_t v : vals) e.emplace_back(spec, v);
    return RMat(rows, cols, std::move(e));
}

inline RMat rmat_zero(RingSpec spec, size_t rows, size_t cols) {
    return RMat(rows, cols, RingElement(spec, 0));
}

inline RMat rmat_identity(RingSpec spec, size_t k) {
    RMat m = rmat_zero(spec, k, k);
    for (size_t i = 0; i < k; ++i) m.at(i, i) = RingElement(spec, 1);
    return m;
}

inline RMat rmat_from_rows(RingSpec spec, const std::vector<RVec>& rows, size_t cols) {
    RMat m(0, 0, std::vector<RingElement>{});
    if (rows.empty()) return rmat_zero(spec, 0, cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw domain_error("row length mismatch");
        m.append_row(r);
    }
    return m;
}

inline CMat cmat_zero(size_t rows, size_t cols) {
    return CMat(rows, cols, Cyclotomic::zero());
}

inline CMat cmat_identity(size_t k) {
    CMat m = cmat_zero(k, k);
    for (size_t i = 0; i < k; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

// --- generic arithmetic ---------------------------------------------------

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw domain_error("matrix product shape mismatch");
    if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) {
        if constexpr (std::is_same_v<T, Cyclotomic>) {
            CMat z = cmat_zero(a.rows(), b.cols());
            return z;
        } else {
            throw domain_error("empty ring matrix product needs a spec");
        }
    }
    Matrix<T> r(a.rows(), b.cols(), a.at(0, 0) - a.at(0, 0)); // zero of the right kind
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            for (size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

// Ring matrix product tolerating empty shapes.
inline RMat rmat_mul(RingSpec spec, const RMat& a, const RMat& b) {
    if (a.cols() != b.rows()) throw domain_error("matrix product shape mismatch");
    RMat r = rmat_zero(spec, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const RingElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline RVec vec_mat_mul(const RVec& v, const RMat& m) {
    if (v.size() != m.rows()) throw domain_error("vector-matrix shape mismatch");
    if (m.cols() == 0) return {};
    RingSpec spec = m.rows() ? m.at(0, 0).spec : v.at(0).spec;
    RVec r = zero_vec(spec, m.cols());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

// Lexicographic order on (rows, cols, entry residues); used to keep group
// element sets canonically sorted.
inline bool rmat_less(const RMat& a, const RMat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (size_t i = 0; i < a.entries().size(); ++i) {
        if (a.entries()[i].v != b.entries()[i].v) return a.entries()[i].v < b.entries()[i].v;
    }
    return false;
}

} // namespace sympiso
