#include <catch2/catch_amalgamated.hpp>

#include "pnc/alphabet.hpp"
#include "oracles.hpp"

using namespace pnc;

TEST_CASE("field addition is XOR, ring addition is mod M") {
    const auto gf8 = Alphabet::gf(3);
    CHECK(gf8.add(0b011, 0b101) == 0b110);
    const auto z4 = Alphabet::ring(4);
    CHECK(z4.add(3, 2) == 1);
    for (unsigned a = 0; a < 8; ++a) CHECK(gf8.add(a, 0) == a);
    for (unsigned a = 0; a < 4; ++a) CHECK(z4.add(a, 0) == a);
}

TEST_CASE("field multiplication matches polynomial long division") {
    const auto gf8 = Alphabet::gf(3);
    CHECK(gf8.mul(0b010, 0b100) == 0b011);
    for (unsigned r = 1; r <= 8; ++r) {
        const auto f = Alphabet::gf(r);
        for (unsigned a = 0; a < f.size(); ++a)
            for (unsigned b = 0; b < f.size(); ++b)
                REQUIRE(f.mul(a, b) == oracle::gf_mul_longdiv(r, f.primitive_poly(), a, b));
    }
}

TEST_CASE("ring multiplication and identities") {
    const auto z4 = Alphabet::ring(4);
    CHECK(z4.mul(3, 3) == 1);
    for (unsigned a = 0; a < 4; ++a) CHECK(z4.mul(a, 1) == a);
    const auto gf8 = Alphabet::gf(3);
    for (unsigned a = 0; a < 8; ++a) CHECK(gf8.mul(a, 1) == a);
}

TEST_CASE("units enumeration") {
    CHECK(Alphabet::ring(4).units() == std::vector<unsigned>{1, 3});
    CHECK(Alphabet::ring(5).units() == std::vector<unsigned>{1, 2, 3, 4});
    CHECK(Alphabet::gf(3).units() == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7});
    CHECK(Alphabet::ring(6).units() == std::vector<unsigned>{1, 5});
}

TEST_CASE("inverses") {
    const auto z4 = Alphabet::ring(4);
    CHECK(z4.inv(3) == 3);
    CHECK(Alphabet::gf(3).inv(1) == 1);
    CHECK(Alphabet::ring(5).inv(2) == 3);
    CHECK_THROWS_AS(z4.inv(2), std::domain_error);
    CHECK_THROWS_AS(z4.inv(0), std::domain_error);

    for (const auto& alph : {Alphabet::gf(3), Alphabet::ring(4), Alphabet::ring(6)}) {
        for (unsigned u : alph.units()) {
            CHECK(alph.mul(u, alph.inv(u)) == 1);
            CHECK(alph.inv(alph.inv(u)) == u);
        }
    }
}

TEST_CASE("ring and field axioms hold exhaustively for small alphabets") {
    for (const auto& alph : {Alphabet::gf(1), Alphabet::gf(2), Alphabet::gf(3), Alphabet::gf(4),
                             Alphabet::ring(2), Alphabet::ring(4), Alphabet::ring(5),
                             Alphabet::ring(6), Alphabet::ring(16)}) {
        const unsigned q = alph.size();
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                CHECK(alph.add(a, b) == alph.add(b, a));
                CHECK(alph.mul(a, b) == alph.mul(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    CHECK(alph.add(alph.add(a, b), c) == alph.add(a, alph.add(b, c)));
                    CHECK(alph.mul(alph.mul(a, b), c) == alph.mul(a, alph.mul(b, c)));
                    CHECK(alph.mul(a, alph.add(b, c)) == alph.add(alph.mul(a, b), alph.mul(a, c)));
                }
            }
    }
}

TEST_CASE("multiplication by a unit is a bijection; by a ring non-unit is not") {
    const auto z4 = Alphabet::ring(4);
    for (unsigned u : z4.units()) {
        std::vector<bool> seen(4, false);
        for (unsigned a = 0; a < 4; ++a) seen[z4.mul(u, a)] = true;
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
    }
    // 2 in Z_4 collides: 2*0 = 2*2 = 0
    CHECK(z4.mul(2, 0) == z4.mul(2, 2));

    const auto gf8 = Alphabet::gf(3);
    CHECK(gf8.units().size() == gf8.size() - 1); // every nonzero element is a unit
    for (unsigned u = 1; u < 8; ++u) {
        std::vector<bool> seen(8, false);
        for (unsigned a = 0; a < 8; ++a) seen[gf8.mul(u, a)] = true;
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
    }
}

TEST_CASE("element wrapper enforces matching alphabets") {
    const auto z4 = Alphabet::ring(4);
    const auto gf4 = Alphabet::gf(2);
    const Element a(3, z4), b(2, z4);
    CHECK((a + b).value() == 1);
    CHECK((a * a).value() == 1);
    CHECK(invert(a).value() == 3);
    const Element c(1, gf4);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
    CHECK_THROWS_AS(Element(4, z4), std::invalid_argument);
    CHECK(units(z4).size() == 2);
}

TEST_CASE("non-primitive polynomials are rejected") {
    CHECK_THROWS_AS(Alphabet::gf(3, 0x9), std::invalid_argument);  // x^3+1 reducible
    CHECK_THROWS_AS(Alphabet::gf(4, 0x1F), std::invalid_argument); // x^4+x^3+x^2+x+1 not primitive
    CHECK_THROWS_AS(Alphabet::gf(3, 0x13), std::invalid_argument); // wrong degree
    CHECK_NOTHROW(Alphabet::gf(3, 0xD)); // x^3+x^2+1 is the other primitive choice
    CHECK_THROWS_AS(Alphabet::ring(1), std::invalid_argument);
}
