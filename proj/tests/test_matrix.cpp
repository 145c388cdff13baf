#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include <sympiso/cyc_linalg.hpp>
#include <sympiso/enumerate.hpp>
#include <sympiso/matrix.hpp>
#include <sympiso/ring_linalg.hpp>

using namespace sympiso;

namespace {

// Independent span oracle: all coefficient tuples, no echelon machinery.
std::set<std::vector<uint32_t>> brute_span(const RMat& m, RingSpec spec) {
    std::set<std::vector<uint32_t>> out;
    uint32_t d = spec.modulus;
    size_t k = m.rows(), cols = m.cols();
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= d;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t t = idx;
        std::vector<uint32_t> v(cols, 0);
        for (size_t r = 0; r < k; ++r) {
            uint32_t c = uint32_t(t % d);
            t /= d;
            for (size_t j = 0; j < cols; ++j)
                v[j] = (v[j] + c * m.at(r, j).v) % d;
        }
        out.insert(v);
    }
    if (k == 0) out.insert(std::vector<uint32_t>(cols, 0));
    return out;
}

RMat random_rmat(RingSpec spec, size_t rows, size_t cols) {
    RMat m = rmat_zero(spec, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = RingElement(spec, std::rand());
    return m;
}

} // namespace

TEST_CASE("canonicalize: identity is a fixed point") {
    RingSpec f2 = RingSpec::Fp(2);
    RMat id = rmat_identity(f2, 3);
    CanonicalForm cf = canonicalize(id);
    CHECK(cf.form == id);
    CHECK(cf.pivots == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("canonicalize over Z/4: {(2,0),(0,2)} stays put, span checked by brute force") {
    RingSpec z4 = RingSpec::Zmod(4);
    RMat m = rmat(z4, 2, 2, {2, 0, 0, 2});
    CanonicalForm cf = canonicalize(m);
    CHECK(cf.form == m);
    CHECK(brute_span(cf.form, z4) == brute_span(m, z4));
    CHECK(span_size(cf) == 4);
}

TEST_CASE("canonicalize is idempotent and span-preserving, randomized") {
    std::srand(777);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4), RingSpec::Zmod(6)}) {
        for (int rep = 0; rep < 40; ++rep) {
            RMat m = random_rmat(spec, 1 + std::rand() % 3, 1 + std::rand() % 4);
            CanonicalForm cf = canonicalize(m);
            CHECK(canonicalize(cf.form).form == cf.form);
            CHECK(brute_span(m, spec) == brute_span(cf.form, spec));
            CHECK(span_size(cf) == brute_span(m, spec).size());
            // canonical form is a span invariant: scrambling generators by a
            // random invertible row mix does not change it
            size_t k = m.rows();
            RMat mix = random_rmat(spec, k, k);
            if (rmat_invertible(mix, spec))
                CHECK(canonicalize(rmat_mul(spec, mix, m)).form == cf.form);
        }
    }
}

TEST_CASE("canonical forms over larger moduli, against the span oracle") {
    std::srand(60606);
    for (RingSpec spec : {RingSpec::Zmod(8), RingSpec::Zmod(9), RingSpec::Zmod(12)}) {
        for (int rep = 0; rep < 25; ++rep) {
            RMat m = random_rmat(spec, 1 + std::rand() % 3, 1 + std::rand() % 3);
            CanonicalForm cf = canonicalize(m);
            CHECK(canonicalize(cf.form).form == cf.form);
            CHECK(brute_span(m, spec) == brute_span(cf.form, spec));
            CHECK(span_size(cf) == brute_span(m, spec).size());
            // uniqueness: any generating set of the same span canonicalizes
            // to the same form
            auto span = brute_span(m, spec);
            RMat gens = rmat_zero(spec, 0, m.cols());
            std::vector<std::vector<uint32_t>> pool(span.begin(), span.end());
            for (int pick = 0; pick < 4; ++pick) {
                const auto& v = pool[std::rand() % pool.size()];
                RVec row;
                for (uint32_t x : v) row.emplace_back(spec, int64_t(x));
                gens.append_row(row);
            }
            CanonicalForm sub = canonicalize(gens);
            if (brute_span(gens, spec) == span) CHECK(sub.form == cf.form);
            // kernel exactness over these moduli too
            RMat ker = kernel(m, spec);
            for (size_t r = 0; r < ker.rows(); ++r)
                CHECK(is_zero(vec_mat_mul(ker.row(r), m)));
        }
    }
}

TEST_CASE("span enumeration lists each element exactly once") {
    std::srand(4242);
    for (RingSpec spec : {RingSpec::Fp(3), RingSpec::Zmod(4)}) {
        for (int rep = 0; rep < 20; ++rep) {
            RMat m = random_rmat(spec, 2, 3);
            CanonicalForm cf = canonicalize(m);
            std::set<std::vector<uint32_t>> seen;
            for_each_span_element(cf, 1 << 20, [&](const RVec& v) {
                std::vector<uint32_t> key;
                for (const auto& e : v) key.push_back(e.v);
                CHECK(seen.insert(key).second);
            });
            if (m.rows() > 0 && cf.form.rows() > 0) CHECK(seen == brute_span(m, spec));
        }
    }
}

TEST_CASE("kernel basics") {
    RingSpec f3 = RingSpec::Fp(3);
    CHECK(kernel(rmat_identity(f3, 3), f3).rows() == 0);
    RingSpec z4 = RingSpec::Zmod(4);
    RMat k1 = kernel(rmat(z4, 1, 1, {2}), z4);
    CHECK(k1.rows() == 1);
    CHECK(k1.at(0, 0).v == 2);
}

TEST_CASE("kernel times matrix vanishes; span sizes multiply to d^rows") {
    std::srand(99);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4)}) {
        for (int rep = 0; rep < 25; ++rep) {
            size_t rows = 1 + std::rand() % 4, cols = 1 + std::rand() % 3;
            RMat m = random_rmat(spec, rows, cols);
            RMat ker = kernel(m, spec);
            for (size_t r = 0; r < ker.rows(); ++r)
                CHECK(is_zero(vec_mat_mul(ker.row(r), m)));
            // kernel is exactly the brute-force annihilator set
            uint64_t d = spec.modulus;
            uint64_t expect = 0;
            std::set<std::vector<uint32_t>> kspan = brute_span(ker, spec);
            uint64_t total = 1;
            for (size_t i = 0; i < rows; ++i) total *= d;
            for (uint64_t idx = 0; idx < total; ++idx) {
                uint64_t t = idx;
                RVec v = zero_vec(spec, rows);
                for (size_t i = 0; i < rows; ++i) {
                    v[i] = RingElement(spec, int64_t(t % d));
                    t /= d;
                }
                if (is_zero(vec_mat_mul(v, m))) {
                    ++expect;
                    std::vector<uint32_t> key;
                    for (const auto& e : v) key.push_back(e.v);
                    CHECK(kspan.count(key) == 1);
                }
            }
            CHECK(kspan.size() == expect);
        }
    }
}

TEST_CASE("random 3x6 over F_2: |span K| * |row span M| = 2^6") {
    std::srand(31337);
    RingSpec f2 = RingSpec::Fp(2);
    for (int rep = 0; rep < 10; ++rep) {
        RMat m = random_rmat(f2, 3, 6);
        RMat ker = kernel(m.transposed(), f2); // {v in F_2^6 : v M^T = 0}
        for (size_t r = 0; r < ker.rows(); ++r)
            CHECK(is_zero(vec_mat_mul(ker.row(r), m.transposed())));
        CHECK(brute_span(ker, f2).size() * brute_span(m, f2).size() == 64);
    }
}

TEST_CASE("rank + nullity = cols over fields, randomized") {
    std::srand(2024);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Fp(5)}) {
        for (int rep = 0; rep < 30; ++rep) {
            size_t rows = 1 + std::rand() % 4, cols = 1 + std::rand() % 4;
            RMat m = random_rmat(spec, rows, cols);
            size_t rank = canonicalize(m).form.rows();
            size_t nullity = kernel(m, spec).rows();
            CHECK(rank + nullity == rows); // {v : vM = 0} lives in R^rows
        }
    }
}

TEST_CASE("group enumeration counts") {
    RingSpec f2 = RingSpec::Fp(2);
    CHECK(all_sl2(f2).size() == 6);
    CHECK(all_gl(f2, 3).size() == 168);
    CHECK(gl_order(2, 3) == 168);
    RingSpec f3 = RingSpec::Fp(3);
    CHECK(all_sl2(f3).size() == 24);
    CHECK(all_gl(f3, 2).size() == gl_order(3, 2));

    // SL_2(Z/4): brute force over 4^4 matrices with det = 1, independent loop
    RingSpec z4 = RingSpec::Zmod(4);
    size_t count = 0;
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b)
            for (uint32_t c = 0; c < 4; ++c)
                for (uint32_t d = 0; d < 4; ++d)
                    if ((a * d + 4 * 4 - b * c) % 4 == 1) ++count;
    CHECK(count == 48);
    CHECK(all_sl2(z4).size() == count);

    // GL_k(F_q) matches the order formula
    for (auto [q, k] : std::vector<std::pair<uint32_t, size_t>>{{2, 2}, {2, 4}, {3, 2}, {5, 2}}) {
        RingSpec spec = RingSpec::Fp(q);
        CHECK(all_gl(spec, k, uint64_t(1) << 22).size() == gl_order(q, k));
    }
}

TEST_CASE("enumeration order is deterministic and cap-guarded") {
    RingSpec f2 = RingSpec::Fp(2);
    auto a = all_gl(f2, 3);
    auto b = all_gl(f2, 3);
    CHECK(a == b);
    for (size_t i = 1; i < a.size(); ++i) CHECK(rmat_less(a[i - 1], a[i]));
    CHECK_THROWS_AS(all_gl(RingSpec::Fp(3), 4, 1000), cap_exceeded);
    CHECK_THROWS_AS(all_permutations(20), cap_exceeded);
}

TEST_CASE("cyclotomic rank by fraction-free elimination") {
    CHECK(rank_exact(cmat_zero(3, 3)) == 0);
    CMat id = cmat_identity(4);
    CHECK(rank_exact(id) == 4);
    // rank 1: outer product of two vectors with i entries
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CMat m = cmat_zero(2, 2);
    m.at(0, 0) = Cyclotomic::one();
    m.at(0, 1) = i;
    m.at(1, 0) = i;
    m.at(1, 1) = i * i;
    CHECK(rank_exact(m) == 1);
}

TEST_CASE("parallel_collect is schedule independent") {
    auto worker = [](uint64_t lo, uint64_t hi) {
        std::vector<uint64_t> v;
        for (uint64_t i = lo; i < hi; ++i)
            if (i % 3 == 0) v.push_back(i);
        return v;
    };
    auto seq = parallel_collect<uint64_t>(1000, 1, worker);
    auto par = parallel_collect<uint64_t>(1000, 4, worker);
    CHECK(seq == par);
}
