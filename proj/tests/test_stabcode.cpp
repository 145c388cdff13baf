#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include <sympiso/examples.hpp>
#include <sympiso/stabilizer_code.hpp>

using namespace sympiso;

namespace {

RVec random_vec(RingSpec spec, size_t len) {
    RVec v = zero_vec(spec, len);
    for (auto& e : v) e = RingElement(spec, std::rand());
    return v;
}

// Independent dual oracle: scan all of R^(2n) for vectors orthogonal to
// every codeword.
std::set<std::vector<uint32_t>> brute_dual(const StabilizerCode& c) {
    std::set<std::vector<uint32_t>> out;
    RingSpec spec = c.spec();
    uint32_t d = spec.modulus;
    size_t len = 2 * c.n();
    auto words = c.codewords();
    uint64_t total = 1;
    for (size_t i = 0; i < len; ++i) total *= d;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t t = idx;
        RVec v = zero_vec(spec, len);
        for (size_t i = 0; i < len; ++i) {
            v[i] = RingElement(spec, int64_t(t % d));
            t /= d;
        }
        bool ok = true;
        for (const auto& w : words)
            if (!symp_inner(v, w).is_zero()) { ok = false; break; }
        if (ok) {
            std::vector<uint32_t> key;
            for (const auto& e : v) key.push_back(e.v);
            out.insert(key);
        }
    }
    return out;
}

std::set<std::vector<uint32_t>> word_set(const StabilizerCode& c) {
    std::set<std::vector<uint32_t>> out;
    for (const auto& w : c.codewords()) {
        std::vector<uint32_t> key;
        for (const auto& e : w) key.push_back(e.v);
        out.insert(key);
    }
    return out;
}

} // namespace

TEST_CASE("symplectic inner product pins the sign convention") {
    RingSpec f2 = RingSpec::Fp(2);
    // n = 1: <(1,0),(0,1)> = -1 = 1 in F_2
    CHECK(symp_inner(make_vec(f2, {1, 0}), make_vec(f2, {0, 1})).v == 1);
    // alternating: <v, v> = 0
    std::srand(11);
    for (RingSpec spec : {RingSpec::Fp(3), RingSpec::Zmod(4), RingSpec::Zmod(6)})
        for (int rep = 0; rep < 50; ++rep) {
            RVec v = random_vec(spec, 6);
            CHECK(symp_inner(v, v).is_zero());
        }
}

TEST_CASE("antisymmetry and bilinearity, randomized over supported rings") {
    std::srand(22);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Fp(5), RingSpec::Zmod(4),
                          RingSpec::Zmod(6)}) {
        for (int rep = 0; rep < 60; ++rep) {
            RVec u = random_vec(spec, 8), v = random_vec(spec, 8), w = random_vec(spec, 8);
            RingElement r(spec, std::rand());
            CHECK(symp_inner(u, v) == -symp_inner(v, u));
            CHECK(symp_inner(u + v, w) == symp_inner(u, w) + symp_inner(v, w));
            CHECK(symp_inner(r * u, v) == r * symp_inner(u, v));
        }
    }
}

TEST_CASE("symplectic weight") {
    RingSpec f2 = RingSpec::Fp(2);
    CHECK(symp_weight(zero_vec(f2, 8)) == 0);
    CHECK(symp_weight(make_vec(f2, {1, 0, 1, 1, 0, 1, 0, 0})) == 4);
    // every nonzero codeword of the Ex11 code has weight 2 or 3; row 3 is ZZZ
    examples::Ex11 ex;
    CHECK(symp_weight(ex.code.generators().row(2)) == 3);
    for (const auto& w : ex.code.codewords()) {
        if (is_zero(w)) continue;
        size_t wt = symp_weight(w);
        CHECK(wt >= 2);
        CHECK(wt <= 3);
    }
}

TEST_CASE("gamma interleaves and pulls the Hamming weight back") {
    RingSpec f3 = RingSpec::Fp(3);
    CHECK(gamma(make_vec(f3, {1, 2, 0, 1})) == make_vec(f3, {1, 0, 2, 1}));
    for (uint32_t d : {2u, 3u}) {
        RingSpec spec = d == 2 ? RingSpec::Fp(2) : RingSpec::Fp(3);
        for (size_t n = 1; n <= 3; ++n) {
            uint64_t total = 1;
            for (size_t i = 0; i < 2 * n; ++i) total *= d;
            for (uint64_t idx = 0; idx < total; ++idx) {
                uint64_t t = idx;
                RVec v = zero_vec(spec, 2 * n);
                for (size_t i = 0; i < 2 * n; ++i) {
                    v[i] = RingElement(spec, int64_t(t % d));
                    t /= d;
                }
                CHECK(gamma_inv(gamma(v)) == v);
                CHECK(pair_hamming_weight(gamma(v)) == symp_weight(v));
            }
        }
    }
}

TEST_CASE("rows of the E-Ex2 generator matrix are pairwise orthogonal") {
    StabilizerCode c = examples::e_ex2_code();
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(symp_inner(c.generators().row(i), c.generators().row(j)).is_zero());
    CHECK(c.is_self_orthogonal());
}

TEST_CASE("dual: zero code, full space, and the brute-force oracle") {
    RingSpec f2 = RingSpec::Fp(2);
    StabilizerCode zero(f2, 1, rmat_zero(f2, 0, 2));
    StabilizerCode full = dual(zero);
    CHECK(full.size() == 4);

    std::srand(44);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4)}) {
        for (int rep = 0; rep < 15; ++rep) {
            RMat g = rmat_zero(spec, 0, 4);
            for (int r = 0; r < 2; ++r) g.append_row(random_vec(spec, 4));
            StabilizerCode c(spec, 2, std::move(g));
            CHECK(word_set(dual(c)) == brute_dual(c));
        }
    }
}

TEST_CASE("dual involution and cardinality law") {
    std::srand(55);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3)}) {
        for (int rep = 0; rep < 25; ++rep) {
            size_t n = 1 + std::rand() % 3;
            RMat g = rmat_zero(spec, 0, 2 * n);
            for (size_t r = 0; r < 1 + size_t(std::rand() % 2); ++r)
                g.append_row(random_vec(spec, 2 * n));
            StabilizerCode c(spec, n, std::move(g));
            CHECK(dual(dual(c)) == c);
            uint64_t space = 1;
            for (size_t i = 0; i < 2 * n; ++i) space *= spec.modulus;
            CHECK(c.size() * dual(c).size() == space);
        }
    }
    // cardinality law and involution over Z/dZ too, d <= 4, n <= 4
    for (RingSpec spec : {RingSpec::Zmod(4), RingSpec::Zmod(3)}) {
        for (int rep = 0; rep < 25; ++rep) {
            size_t n = 1 + std::rand() % 4;
            RMat g = rmat_zero(spec, 0, 2 * n);
            for (size_t r = 0; r < 1 + size_t(std::rand() % 2); ++r)
                g.append_row(random_vec(spec, 2 * n));
            StabilizerCode c(spec, n, std::move(g));
            uint64_t space = 1;
            for (size_t i = 0; i < 2 * n; ++i) space *= spec.modulus;
            CHECK(c.size() * dual(c).size() == space);
            CHECK(dual(dual(c)) == c);
        }
    }
}

TEST_CASE("Ex-Extension2: dual of C is generated by H") {
    examples::Extension2 ex;
    CHECK(dual(ex.code) == ex.dual_h);
    CHECK(dual(ex.code_f) == ex.dual_h_f);
}

TEST_CASE("self-orthogonality and self-duality flags") {
    CHECK(examples::e_ex2_code().is_self_orthogonal());
    examples::ExLCP lcp;
    CHECK(is_self_dual(lcp.code));
    CHECK(is_self_dual(lcp.code_prime));
    // the full space R^2 (n = 1) is not self-orthogonal
    RingSpec f2 = RingSpec::Fp(2);
    StabilizerCode full(f2, 1, rmat_identity(f2, 2));
    CHECK_FALSE(full.is_self_orthogonal());
    CHECK_FALSE(is_self_dual(full));
}

TEST_CASE("minimum distance") {
    RingSpec f2 = RingSpec::Fp(2);
    // C = {0}, n = 1: distance over C^perp - C = R^2 - {0} is 1
    StabilizerCode zero(f2, 1, rmat_zero(f2, 0, 2));
    CHECK(min_distance(zero) == 1);
    // Ex-Ex11's code is self-dual: min over C - {0}; oracle recomputed below
    examples::Ex11 ex;
    CHECK(is_self_dual(ex.code));
    size_t oracle = SIZE_MAX;
    for (const auto& w : ex.code.codewords())
        if (!is_zero(w)) oracle = std::min(oracle, symp_weight(w));
    CHECK(oracle == 2);
    CHECK(min_distance(ex.code) == oracle);
    // Ex-LCP's self-dual code
    examples::ExLCP lcp;
    size_t oracle2 = SIZE_MAX;
    for (const auto& w : lcp.code.codewords())
        if (!is_zero(w)) oracle2 = std::min(oracle2, symp_weight(w));
    CHECK(min_distance(lcp.code) == oracle2);
}

TEST_CASE("concatenation doubles length, keeps dimension, forces self-orthogonality") {
    StabilizerCode c = examples::e_ex2_code();
    StabilizerCode cc = concat_p_fold(c);
    CHECK(cc.n() == 10);
    CHECK(cc.k() == c.k());
    CHECK(cc.is_self_orthogonal());
    // char 2: any code concatenates to a self-orthogonal one
    std::srand(66);
    RingSpec f2 = RingSpec::Fp(2);
    for (int rep = 0; rep < 20; ++rep) {
        RMat g = rmat_zero(f2, 0, 6);
        for (int r = 0; r < 2; ++r) g.append_row(random_vec(f2, 6));
        StabilizerCode any(f2, 3, std::move(g));
        StabilizerCode cat = concat_p_fold(any);
        CHECK(cat.is_self_orthogonal());
        CHECK(cat.size() == any.size());
    }
    // p = 3 analogue
    RingSpec f3 = RingSpec::Fp(3);
    for (int rep = 0; rep < 10; ++rep) {
        RMat g = rmat_zero(f3, 0, 4);
        g.append_row(random_vec(f3, 4));
        StabilizerCode any(f3, 2, std::move(g));
        CHECK(concat_p_fold(any).is_self_orthogonal());
    }
}

TEST_CASE("socle lift: cardinality preserved, entries in alpha R, self-orthogonal") {
    StabilizerCode c = examples::e_ex2_code();
    RingSpec z4 = RingSpec::Zmod(4);
    StabilizerCode lifted = socle_lift(c, z4);
    CHECK(lifted.is_self_orthogonal());
    CHECK(lifted.size() == c.size());
    for (const auto& e : lifted.generators().entries()) CHECK(e.v % 2 == 0);
    CHECK(socle_reduce(lifted) == c);
    // lift independence: alpha annihilates the multiples of p separating lifts
    RMat other = c.generators();
    RMat shifted = rmat_zero(z4, 0, 2 * c.n());
    for (size_t r = 0; r < other.rows(); ++r) {
        RVec row;
        for (const auto& e : other.row(r))
            row.emplace_back(z4, 2 * (int64_t(e.lift()) + 2)); // alpha * (lift + p)
        shifted.append_row(row);
    }
    CHECK(StabilizerCode(z4, c.n(), std::move(shifted)) == lifted);
    CHECK_THROWS_AS(socle_lift(c, RingSpec::Zmod(9)), domain_error);
    // Z/8 lift too
    StabilizerCode l8 = socle_lift(c, RingSpec::Zmod(8));
    CHECK(l8.is_self_orthogonal());
    CHECK(l8.size() == c.size());
}

TEST_CASE("coset weight tables match the published tables") {
    examples::Extension2 ex;
    CHECK(coset_weight_table(ex.code, ex.h4).weights == ex.table1[0]);
    CHECK(coset_weight_table(ex.code, ex.h5).weights == ex.table1[1]);
    CHECK(coset_weight_table(ex.code, ex.h4 + ex.h5).weights == ex.table1[2]);
    CHECK(coset_weight_table(ex.code_f, ex.h4_tilde).weights == ex.table2[0]);
    CHECK(coset_weight_table(ex.code_f, ex.h5_tilde).weights == ex.table2[1]);
    CHECK(coset_weight_table(ex.code_f, ex.h4_tilde + ex.h5_tilde).weights == ex.table2[2]);
    // v of weight w against {0}
    RingSpec f2 = RingSpec::Fp(2);
    StabilizerCode zero(f2, 2, rmat_zero(f2, 0, 4));
    auto t = coset_weight_table(zero, make_vec(f2, {1, 0, 0, 1}));
    CHECK(t.weights == std::vector<size_t>{2});
    CHECK_THROWS_AS(coset_weight_table(ex.code, zero_vec(f2, 8)), domain_error);
}

TEST_CASE("exactly three self-dual codes between C and its dual") {
    examples::Extension2 ex;
    auto exts = self_dual_extensions(ex.code);
    CHECK(exts.size() == 3);
    // they are C + <h4>, C + <h5>, C + <h4 + h5>
    auto adjoin = [&](const StabilizerCode& c, const RVec& v) {
        RMat g = c.generators();
        g.append_row(v);
        return StabilizerCode(c.spec(), c.n(), std::move(g));
    };
    std::vector<StabilizerCode> expected{adjoin(ex.code, ex.h4), adjoin(ex.code, ex.h5),
                                         adjoin(ex.code, ex.h4 + ex.h5)};
    for (const auto& e : expected) {
        CHECK(is_self_dual(e));
        CHECK(std::count(exts.begin(), exts.end(), e) == 1);
    }
    // tilde side
    auto exts_f = self_dual_extensions(ex.code_f);
    CHECK(exts_f.size() == 3);
    std::vector<StabilizerCode> expected_f{adjoin(ex.code_f, ex.h4_tilde),
                                           adjoin(ex.code_f, ex.h5_tilde),
                                           adjoin(ex.code_f, ex.h4_tilde + ex.h5_tilde)};
    for (const auto& e : expected_f) CHECK(std::count(exts_f.begin(), exts_f.end(), e) == 1);
    // a self-dual code has itself as the only extension
    examples::ExLCP lcp;
    auto self = self_dual_extensions(lcp.code);
    CHECK(self.size() == 1);
    CHECK(self[0] == lcp.code);
}

TEST_CASE("Ex-NonEx1: both generator matrices present one code") {
    examples::NonEx1 ex;
    CHECK(ex.code_n1 == ex.code_n2);
    CHECK(ex.code_n1.is_self_orthogonal());
    CHECK(ex.code_n1.size() == 16);
}
