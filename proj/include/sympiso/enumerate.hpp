#pragma once

// Exhaustive, deterministic enumeration of the small groups the searches run
// over: GL_k(F_q), SL_2(R), GL_2(R) and symmetric groups. Every stream is in
// lexicographic order on canonical entry sequences so sharded searches are
// reproducible. Enumerations are guarded by an explicit cap.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "ring_linalg.hpp"

namespace sympiso {

inline constexpr uint64_t kDefaultEnumCap = uint64_t(1) << 20;

// |GL_k(F_q)| = prod_{i<k} (q^k - q^i)
inline uint64_t gl_order(uint64_t q, size_t k) {
    uint64_t qk = 1;
    for (size_t i = 0; i < k; ++i) qk *= q;
    uint64_t n = 1, qi = 1;
    for (size_t i = 0; i < k; ++i) {
        n *= qk - qi;
        qi *= q;
    }
    return n;
}

inline uint64_t pow_u64(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// b^e, or throws once the value passes the cap (prevents silent wraparound
// in the guards of the exhaustive searches).
inline uint64_t pow_checked(uint64_t b, uint64_t e, uint64_t cap, const char* what) {
    uint64_t r = 1;
    while (e--) {
        if (b != 0 && r > cap / b + 1)
            throw cap_exceeded(std::string(what) + " exceeds the enumeration cap");
        r *= b;
        if (r > cap) throw cap_exceeded(std::string(what) + " exceeds the enumeration cap");
    }
    return r;
}

// k x k matrix from the mixed-radix digits of idx (row-major, most
// significant digit first).
inline RMat rmat_from_index(RingSpec spec, size_t rows, size_t cols, uint64_t idx) {
    std::vector<RingElement> e(rows * cols, RingElement(spec, 0));
    for (size_t i = rows * cols; i-- > 0;) {
        e[i] = RingElement(spec, int64_t(idx % spec.modulus));
        idx /= spec.modulus;
    }
    return RMat(rows, cols, std::move(e));
}

// All invertible k x k matrices over a field alphabet, lexicographic.
inline std::vector<RMat> all_gl(RingSpec spec, size_t k, uint64_t cap = kDefaultEnumCap) {
    if (!spec.is_field()) throw domain_error("GL_k enumeration needs a field alphabet");
    uint64_t domain = pow_checked(spec.modulus, k * k, cap,
                                  ("GL_" + std::to_string(k) + "(" + spec.name() + ") scan").c_str());
    std::vector<RMat> out;
    out.reserve(size_t(gl_order(spec.modulus, k)));
    for (uint64_t idx = 0; idx < domain; ++idx) {
        RMat m = rmat_from_index(spec, k, k, idx);
        if (rmat_invertible(m, spec)) out.push_back(std::move(m));
    }
    return out;
}

// All of SL_2(R) (det = 1) over any supported ring, lexicographic.
inline std::vector<RMat> all_sl2(RingSpec spec, uint64_t cap = kDefaultEnumCap) {
    uint64_t domain = pow_u64(spec.modulus, 4);
    if (domain > cap) throw cap_exceeded("SL_2(" + spec.name() + ") scan");
    std::vector<RMat> out;
    for (uint64_t idx = 0; idx < domain; ++idx) {
        RMat m = rmat_from_index(spec, 2, 2, idx);
        if (rmat_det(m, spec) == RingElement(spec, 1)) out.push_back(std::move(m));
    }
    return out;
}

// All of GL_2(R) (det a unit), lexicographic.
inline std::vector<RMat> all_gl2(RingSpec spec, uint64_t cap = kDefaultEnumCap) {
    uint64_t domain = pow_u64(spec.modulus, 4);
    if (domain > cap) throw cap_exceeded("GL_2(" + spec.name() + ") scan");
    std::vector<RMat> out;
    for (uint64_t idx = 0; idx < domain; ++idx) {
        RMat m = rmat_from_index(spec, 2, 2, idx);
        if (rmat_det(m, spec).is_unit()) out.push_back(std::move(m));
    }
    return out;
}

// All permutations of {0..n-1} in lexicographic order. perm[j] is the image
// sigma(j).
inline std::vector<std::vector<size_t>> all_permutations(size_t n, uint64_t cap = kDefaultEnumCap) {
    uint64_t fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    if (fact > cap) throw cap_exceeded("S_" + std::to_string(n) + " enumeration");
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<size_t>> out;
    out.reserve(size_t(fact));
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Splits [0, total) into `jobs` chunks, runs `worker` on each (possibly in
// parallel), and concatenates the per-chunk results in chunk order, so the
// output is independent of the thread schedule.
template <typename T>
std::vector<T> parallel_collect(uint64_t total, unsigned jobs,
                                const std::function<std::vector<T>(uint64_t, uint64_t)>& worker) {
    if (jobs <= 1 || total < 2) return worker(0, total);
    jobs = std::min<unsigned>(jobs, std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1);
    uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::vector<T>> parts(jobs);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
        uint64_t lo = std::min<uint64_t>(total, uint64_t(t) * chunk);
        uint64_t hi = std::min<uint64_t>(total, lo + chunk);
        threads.emplace_back([&parts, &worker, t, lo, hi] { parts[t] = worker(lo, hi); });
    }
    for (auto& th : threads) th.join();
    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace sympiso
