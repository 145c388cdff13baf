#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include <sympiso/examples.hpp>
#include <sympiso/pauli.hpp>

using namespace sympiso;

TEST_CASE("single-qubit multiplication table") {
    RingSpec f2 = RingSpec::Fp(2);
    PauliOperator X = parse_pauli("X", f2);
    PauliOperator Z = parse_pauli("Z", f2);
    // X*Z = X(1)Z(1) with no phase
    PauliOperator xz = pauli_mul(X, Z);
    CHECK(xz.phase_exp == 0);
    CHECK(psi(xz) == make_vec(f2, {1, 1}));
    // Z*X = -1 * X(1)Z(1): phase exponent 2 with w = i
    PauliOperator zx = pauli_mul(Z, X);
    CHECK(zx.phase_exp == 2);
    CHECK(psi(zx) == make_vec(f2, {1, 1}));
}

TEST_CASE("d = 3 multiplication") {
    RingSpec f3 = RingSpec::Fp(3);
    PauliOperator p = PauliOperator::make(f3, 0, {1}, {1});
    PauliOperator q = PauliOperator::make(f3, 0, {2}, {0});
    PauliOperator r = pauli_mul(p, q);
    // chi(b.a') = chi(1*2) = w_3^2
    CHECK(r.phase_exp == 2);
    CHECK(psi(r) == make_vec(f3, {0, 1}));
}

TEST_CASE("commutation matches the symplectic condition") {
    RingSpec f2 = RingSpec::Fp(2);
    PauliOperator X = parse_pauli("X", f2);
    PauliOperator Z = parse_pauli("Z", f2);
    CHECK_FALSE(pauli_commutes(X, Z));
    CHECK(pauli_commutes(X, X));
    examples::Ex11 ex;
    StabilizerGroup s = code_to_stabilizer(ex.code);
    for (const auto& g : s.generators)
        for (const auto& h : s.generators) CHECK(pauli_commutes(g, h));
}

TEST_CASE("psi is a weight-preserving homomorphism") {
    std::srand(7);
    for (RingSpec spec :
         {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4), RingSpec::Fp(5)}) {
        for (int rep = 0; rep < 60; ++rep) {
            size_t n = 1 + std::rand() % 3;
            auto rnd = [&] {
                std::vector<int64_t> a(n), b(n);
                for (auto& x : a) x = std::rand();
                for (auto& x : b) x = std::rand();
                return PauliOperator::make(spec, std::rand(), a, b);
            };
            PauliOperator p = rnd(), q = rnd(), r = rnd();
            CHECK(psi(pauli_mul(p, q)) == psi(p) + psi(q));
            CHECK(pauli_mul(pauli_mul(p, q), r) == pauli_mul(p, pauli_mul(q, r)));
            CHECK(pauli_weight(p) == symp_weight(psi(p)));
        }
    }
    RingSpec f2 = RingSpec::Fp(2);
    CHECK(is_zero(psi(PauliOperator::identity(f2, 3))));
    CHECK(psi(parse_pauli("XZX", f2)) == make_vec(f2, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("pauli weight examples") {
    RingSpec f2 = RingSpec::Fp(2);
    CHECK(pauli_weight(PauliOperator::identity(f2, 4)) == 0);
    CHECK(pauli_weight(parse_pauli("XZX", f2)) == 3);
    CHECK(pauli_weight(parse_pauli("ZIZI", f2)) == 2);
}

TEST_CASE("code_to_stabilizer reproduces the reference generator strings") {
    examples::Ex11 ex;
    StabilizerGroup s = code_to_stabilizer(ex.code);
    std::vector<std::string> got;
    for (const auto& g : s.generators) got.push_back(pauli_string(g));
    CHECK(got == ex.letters_s);
    StabilizerGroup sp = code_to_stabilizer(ex.code_prime);
    got.clear();
    for (const auto& g : sp.generators) got.push_back(pauli_string(g));
    CHECK(got == ex.letters_s_prime);

    examples::ExLCP lcp;
    got.clear();
    for (const auto& g : code_to_stabilizer(lcp.code).generators) got.push_back(pauli_string(g));
    CHECK(got == lcp.letters_s);
    got.clear();
    for (const auto& g : code_to_stabilizer(lcp.code_prime).generators)
        got.push_back(pauli_string(g));
    CHECK(got == lcp.letters_s_prime);

    RingSpec f2 = RingSpec::Fp(2);
    StabilizerCode not_so(f2, 1, rmat_identity(f2, 2));
    CHECK_THROWS_AS(code_to_stabilizer(not_so), domain_error);
}

TEST_CASE("stabilizer generators have order dividing d with trivial phases") {
    // even d: the phase correction forces gen^d = I; odd d needs none
    std::srand(8);
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4), RingSpec::Fp(5)}) {
        for (int rep = 0; rep < 30; ++rep) {
            size_t n = 1 + std::rand() % 2;
            // random self-orthogonal code: span of one random vector
            RVec v = zero_vec(spec, 2 * n);
            for (auto& e : v) e = RingElement(spec, std::rand());
            RMat g = rmat_zero(spec, 0, 2 * n);
            g.append_row(v);
            StabilizerCode c(spec, n, std::move(g));
            StabilizerGroup s = code_to_stabilizer(c);
            for (const auto& gen : s.generators)
                CHECK(pauli_pow(gen, spec.modulus).is_identity());
        }
    }
}

TEST_CASE("stabilizer group: order d^k and trivial intersection with phases") {
    std::srand(9);
    auto check_group = [](const StabilizerCode& c) {
        StabilizerGroup s = code_to_stabilizer(c);
        auto els = s.elements(4096);
        CHECK(els.size() == c.size());
        std::set<std::vector<uint32_t>> images;
        for (const auto& e : els) {
            // trivial kernel: the only element with zero Psi image is I
            if (is_zero(psi(e))) CHECK(e.phase_exp == 0);
            std::vector<uint32_t> key;
            for (const auto& x : psi(e)) key.push_back(x.v);
            images.insert(key);
        }
        CHECK(images.size() == els.size()); // Psi is injective on S
        // Psi(S) = C
        for (const auto& e : els) CHECK(c.contains(psi(e)));
    };
    examples::Ex11 ex;
    check_group(ex.code);
    check_group(ex.code_prime);
    examples::ExLCP lcp;
    check_group(lcp.code);
    check_group(lcp.code_prime);
    // random self-orthogonal codes over d = 2, 3, 4, 5
    for (RingSpec spec : {RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Zmod(4), RingSpec::Fp(5)}) {
        int built = 0;
        while (built < 10) {
            size_t n = 2;
            RVec v = zero_vec(spec, 2 * n);
            for (auto& e : v) e = RingElement(spec, std::rand());
            if (is_zero(v)) continue;
            RMat g = rmat_zero(spec, 0, 2 * n);
            g.append_row(v);
            StabilizerCode c(spec, n, std::move(g));
            check_group(c);
            ++built;
        }
    }
}

TEST_CASE("permuting a Pauli permutes its slots") {
    RingSpec f2 = RingSpec::Fp(2);
    PauliOperator p = parse_pauli("XZX", f2);
    CHECK(permute_pauli({0, 1, 2}, p) == p);
    // sigma = (123): sigma(XZX) = ZXX
    PauliOperator q = permute_pauli({1, 2, 0}, p);
    CHECK(pauli_string(q) == "ZXX");
    CHECK(pauli_weight(q) == pauli_weight(p));
    // sigma(S) for Ex-Ex11 is <ZXX, XXZ, ZZZ>
    examples::Ex11 ex;
    StabilizerGroup s = code_to_stabilizer(ex.code);
    std::vector<std::string> got;
    for (const auto& g : s.generators) got.push_back(pauli_string(permute_pauli(ex.map.perm, g)));
    CHECK(got == std::vector<std::string>{"ZXX", "XXZ", "ZZZ"});
}

TEST_CASE("letter syntax round-trips") {
    RingSpec f2 = RingSpec::Fp(2);
    CHECK(pauli_string(PauliOperator::make(f2, 0, {1, 0}, {0, 1})) == "XZ");
    PauliOperator yzy = parse_pauli("YZY", f2);
    CHECK(yzy.phase_exp == 2);
    CHECK(yzy.a == make_vec(f2, {1, 0, 1}));
    CHECK(yzy.b == make_vec(f2, {1, 1, 1}));
    std::srand(10);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<int64_t> a(3), b(3);
        for (auto& x : a) x = std::rand() % 2;
        for (auto& x : b) x = std::rand() % 2;
        PauliOperator p = PauliOperator::make(f2, std::rand() % 4, a, b);
        CHECK(parse_pauli(pauli_string(p), f2) == p);
    }
    CHECK(parse_pauli("-iXZ", f2).phase_exp == 3);
    CHECK(parse_pauli("+1II", f2) == PauliOperator::identity(f2, 2));
    CHECK_THROWS_AS(parse_pauli("XQ", f2), malformed_input);
}

TEST_CASE("slot syntax round-trips for general d") {
    RingSpec f3 = RingSpec::Fp(3);
    PauliOperator p = PauliOperator::make(f3, 2, {1, 2}, {0, 1});
    CHECK(pauli_string(p) == "w^2*X^1Z^0|X^2Z^1");
    CHECK(parse_pauli(pauli_string(p), f3) == p);
    RingSpec z4 = RingSpec::Zmod(4);
    std::srand(77);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<int64_t> a(2), b(2);
        for (auto& x : a) x = std::rand() % 4;
        for (auto& x : b) x = std::rand() % 4;
        PauliOperator q = PauliOperator::make(z4, std::rand() % 8, a, b);
        CHECK(parse_pauli(pauli_string(q), z4) == q);
    }
    CHECK_THROWS_AS(parse_pauli("X^1", f3), malformed_input);
}
