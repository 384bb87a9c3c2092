#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pnc/ncmap.hpp"

using namespace pnc;

namespace {
/// Brute-force exclusive-law check by quadruple enumeration.
bool exclusive_law_bruteforce(const Alphabet& A, unsigned a, unsigned b) {
    const unsigned q = A.size();
    auto f = [&](unsigned s1, unsigned s2) { return A.add(A.mul(a, s1), A.mul(b, s2)); };
    for (unsigned s1 = 0; s1 < q; ++s1)
        for (unsigned s1p = 0; s1p < q; ++s1p)
            for (unsigned s2 = 0; s2 < q; ++s2)
                for (unsigned s2p = 0; s2p < q; ++s2p) {
                    if (s1 != s1p && s2 == s2p && f(s1, s2) == f(s1p, s2p)) return false;
                    if (s1 == s1p && s2 != s2p && f(s1, s2) == f(s1p, s2p)) return false;
                }
    return true;
}
} // namespace

TEST_CASE("nc map values") {
    const auto z4 = Alphabet::ring(4);
    CHECK(nc_map(NcMap(z4, 1, 1), 3, 2) == 1);
    CHECK(nc_map(NcMap(z4, 3, 1), 1, 2) == 1);
    const auto gf8 = Alphabet::gf(3);
    CHECK(nc_map(NcMap(gf8, 1, 1), 0b011, 0b101) == 0b110);
    CHECK_THROWS_AS(NcMap(z4, 1, 2), std::domain_error);
}

TEST_CASE("exclusive law: unit maps pass, a non-unit coefficient fails") {
    const auto z4 = Alphabet::ring(4);
    CHECK(check_exclusive_law(NcMap(z4, 1, 1)));
    CHECK_FALSE(check_exclusive_law(z4, 1, 2)); // s2 = 0 vs s2 = 2 collide
    const auto gf8 = Alphabet::gf(3);
    for (unsigned a = 1; a < 8; ++a)
        for (unsigned b = 1; b < 8; ++b) CHECK(check_exclusive_law(gf8, a, b));
}

TEST_CASE("exclusive-law checker equals quadruple enumeration for unit maps") {
    for (const auto& A : {Alphabet::gf(1), Alphabet::gf(2), Alphabet::gf(3), Alphabet::ring(4),
                          Alphabet::ring(5), Alphabet::ring(6), Alphabet::ring(8)}) {
        for (unsigned a : A.units())
            for (unsigned b : A.units())
                REQUIRE(check_exclusive_law(A, a, b) == exclusive_law_bruteforce(A, a, b));
        // a couple of non-unit pairs for contrast
        for (unsigned a = 0; a < A.size(); ++a)
            if (!A.is_unit(a)) {
                REQUIRE(check_exclusive_law(A, a, 1) == exclusive_law_bruteforce(A, a, 1));
                break;
            }
    }
}

TEST_CASE("map is a bijection in either argument") {
    for (const auto& A : {Alphabet::gf(4), Alphabet::ring(8), Alphabet::ring(16)}) {
        for (unsigned a : A.units())
            for (unsigned b : A.units()) {
                const NcMap map(A, a, b);
                for (unsigned fixed = 0; fixed < A.size(); ++fixed) {
                    std::vector<bool> seen(A.size(), false);
                    for (unsigned s = 0; s < A.size(); ++s) seen[map(s, fixed)] = true;
                    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
                }
            }
    }
}

TEST_CASE("broadcast recovery inverts the map") {
    const auto z4 = Alphabet::ring(4);
    CHECK(broadcast_recover(2, 1, NcMap(z4, 1, 1), 1) == 3);

    const auto gf8 = Alphabet::gf(3);
    const NcMap x(gf8, 1, 1);
    for (unsigned s1 = 0; s1 < 8; ++s1)
        for (unsigned s2 = 0; s2 < 8; ++s2) {
            CHECK(broadcast_recover(s1, x(s1, s2), x, 1) == s2);
            CHECK(broadcast_recover(s2, x(s1, s2), x, 2) == s1);
        }

    const NcMap m33(z4, 3, 3);
    std::mt19937_64 rng(7);
    std::vector<unsigned> s1(64), s2(64), nc(64);
    for (std::size_t i = 0; i < 64; ++i) {
        s1[i] = rng() % 4;
        s2[i] = rng() % 4;
        nc[i] = m33(s1[i], s2[i]);
    }
    CHECK(broadcast_recover(s1, nc, m33, 1) == s2);
    CHECK(broadcast_recover(s2, nc, m33, 2) == s1);
    CHECK_THROWS_AS(broadcast_recover(0, 0, m33, 3), std::invalid_argument);
}
