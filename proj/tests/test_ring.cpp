#include <doctest.h>

#include <numeric>

#include <sympiso/cyclotomic.hpp>
#include <sympiso/ring.hpp>

using namespace sympiso;

TEST_CASE("ring arithmetic reduces to canonical residues") {
    RingSpec z4 = RingSpec::Zmod(4);
    CHECK((RingElement(z4, 3) + RingElement(z4, 3)).v == 2);
    RingSpec f2 = RingSpec::Fp(2);
    CHECK((RingElement(f2, 1) * RingElement(f2, 1)).v == 1);
    CHECK(RingElement(z4, -1).v == 3);
    CHECK((-RingElement(z4, 1)).v == 3);
}

TEST_CASE("inverse of a zero divisor signals non-invertible") {
    RingSpec z4 = RingSpec::Zmod(4);
    CHECK_THROWS_AS(RingElement(z4, 2).inverse(), non_invertible);
    CHECK(RingElement(z4, 3).inverse().v == 3);
    RingSpec f5 = RingSpec::Fp(5);
    for (uint32_t x = 1; x < 5; ++x)
        CHECK((RingElement(f5, x) * RingElement(f5, x).inverse()).v == 1);
}

TEST_CASE("spec invariants") {
    CHECK_THROWS_AS(RingSpec::Fp(4), domain_error);
    CHECK_THROWS_AS(RingSpec::Zmod(1), domain_error);
    CHECK(RingSpec::Fp(3).phase_order() == 3);
    CHECK(RingSpec::Fp(2).phase_order() == 4);
    CHECK(RingSpec::Zmod(4).phase_order() == 8);
    CHECK(RingSpec::Zmod(6).phase_order() == 12);
}

TEST_CASE("local data of Z/p^e") {
    RingSpec z8 = RingSpec::Zmod(8);
    CHECK(z8.has_local_data());
    CHECK(z8.max_ideal_gen() == 2);
    CHECK(z8.socle_gen() == 4);
    CHECK(z8.residue_field_size() == 2);
    // alpha * p == 0, alpha != 0
    CHECK((RingElement(z8, z8.socle_gen()) * RingElement(z8, z8.max_ideal_gen())).is_zero());
    CHECK_FALSE(RingSpec::Zmod(6).has_local_data());
    CHECK(RingSpec::Zmod(9).socle_gen() == 3);
    CHECK(RingSpec::Fp(5).has_local_data()); // e = 1, alpha = 1
}

TEST_CASE("char_eval on small rings") {
    RingSpec f2 = RingSpec::Fp(2);
    Character chi2 = Character::standard(f2);
    CHECK(char_eval(chi2, RingElement(f2, 1)) == Cyclotomic::rational(Rat(-1)));
    RingSpec f3 = RingSpec::Fp(3);
    CHECK(char_eval(Character::standard(f3), RingElement(f3, 0)) == Cyclotomic::one());
    // zeta_4^2 = -1
    RingSpec z4 = RingSpec::Zmod(4);
    CHECK(char_eval(Character::standard(z4), RingElement(z4, 2)) == Cyclotomic::rational(Rat(-1)));
}

TEST_CASE("char_eval is multiplicative on sums, exhaustive for modulus <= 16") {
    for (uint32_t d = 2; d <= 16; ++d) {
        RingSpec spec = RingSpec::Zmod(d);
        Character chi = Character::standard(spec);
        for (uint32_t x = 0; x < d; ++x)
            for (uint32_t y = 0; y < d; ++y) {
                RingElement ex(spec, x), ey(spec, y);
                CHECK(char_eval(chi, ex + ey) == char_eval(chi, ex) * char_eval(chi, ey));
            }
    }
}

TEST_CASE("generating characters of Z/dZ are exactly the units") {
    // u=1 on Z/4Z generates; u=2 does not (ideal 2Z/4Z lies in the kernel)
    RingSpec z4 = RingSpec::Zmod(4);
    CHECK(is_generating(Character{RingElement(z4, 1)}));
    CHECK_FALSE(is_generating(Character{RingElement(z4, 2)}));
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        RingSpec fp = RingSpec::Fp(p);
        CHECK(is_generating(Character::standard(fp)));
    }
    for (uint32_t d = 2; d <= 16; ++d) {
        RingSpec spec = RingSpec::Zmod(d);
        for (uint32_t u = 0; u < d; ++u)
            CHECK(is_generating(Character{RingElement(spec, u)}) == (std::gcd(u, d) == 1));
    }
}
