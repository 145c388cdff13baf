#include <doctest.h>

#include <cstdlib>

#include <sympiso/cyclotomic.hpp>
#include <sympiso/rational.hpp>

using namespace sympiso;

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK((Rat(3, 4) * Rat(4, 3)) == Rat(1));
    CHECK(Rat::parse("-3/4").str() == "-3/4");
    CHECK(Rat::parse("5") == Rat(5));
    CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("roots of unity reduce canonically") {
    // i * i = -1
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic::rational(Rat(-1)));
    // conj(z8) * z8 = 1
    Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
    CHECK(z8.conj() * z8 == Cyclotomic::one());
    // zeta_3 + zeta_3^2 = -1 (reduction mod x^2 + x + 1)
    CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) ==
          Cyclotomic::rational(Rat(-1)));
}

TEST_CASE("cross-conductor equality") {
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic::rational(Rat(-1)));
    CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic::rational(Rat(-1)));
    CHECK(Cyclotomic::root_of_unity(8, 2) == Cyclotomic::root_of_unity(4, 1));
    CHECK(Cyclotomic::root_of_unity(12, 4) == Cyclotomic::root_of_unity(3, 1));
}

TEST_CASE("ring axioms and canonical idempotence, randomized") {
    std::srand(12345);
    auto random_elt = [](uint32_t m) {
        Cyclotomic z = Cyclotomic::zero();
        for (int t = 0; t < 3; ++t)
            z += Rat(std::rand() % 7 - 3) * Cyclotomic::root_of_unity(m, std::rand() % m);
        return z;
    };
    for (uint32_t m : {3u, 4u, 8u, 12u}) {
        for (int rep = 0; rep < 50; ++rep) {
            Cyclotomic a = random_elt(m), b = random_elt(m), c = random_elt(m);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a - a).is_zero());
            // conj is an automorphism
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("conj(x) * x of a scaled root of unity has nonnegative rational part") {
    for (uint32_t m : {3u, 4u, 8u}) {
        for (uint32_t j = 0; j < m; ++j) {
            Cyclotomic x = Rat(-3, 7) * Cyclotomic::root_of_unity(m, j);
            Cyclotomic norm = x.conj() * x;
            CHECK(norm.is_rational());
            CHECK(norm.rational_part() == Rat(9, 49));
        }
    }
}

TEST_CASE("inverse and division") {
    Cyclotomic z = Cyclotomic::root_of_unity(8, 3) + Cyclotomic::rational(Rat(2));
    CHECK(z * z.inverse() == Cyclotomic::one());
    CHECK((z / z) == Cyclotomic::one());
    CHECK_THROWS_AS(Cyclotomic::zero().inverse(), domain_error);
}

TEST_CASE("exact square roots") {
    CHECK(cyclotomic_sqrt(2) * cyclotomic_sqrt(2) == Cyclotomic::rational(Rat(2)));
    CHECK(cyclotomic_sqrt(3) * cyclotomic_sqrt(3) == Cyclotomic::rational(Rat(3)));
    CHECK(cyclotomic_sqrt(5) * cyclotomic_sqrt(5) == Cyclotomic::rational(Rat(5)));
    CHECK(cyclotomic_sqrt(7) * cyclotomic_sqrt(7) == Cyclotomic::rational(Rat(7)));
}
