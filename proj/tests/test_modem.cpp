#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "pnc/modem.hpp"

using namespace pnc;
using Catch::Approx;

namespace {
unsigned hamming(unsigned a, unsigned b) { return static_cast<unsigned>(__builtin_popcount(a ^ b)); }
} // namespace

TEST_CASE("gray 8PSK: unit circle, adjacent labels at Hamming distance 1") {
    const auto ca = psk_gray(8, 0.0);
    REQUIRE(ca.order() == 8);
    CHECK(ca.average_energy() == Approx(1.0).margin(1e-12));
    for (unsigned k = 0; k < 8; ++k) {
        CHECK(std::abs(ca.point(k)) == Approx(1.0).margin(1e-12));
        CHECK(hamming(ca.bit_label(k), ca.bit_label((k + 1) % 8)) == 1);
    }
    // rotated partner: same labels, every point advanced by pi/8
    const auto cb = psk_gray(8, std::acos(-1.0) / 8);
    for (unsigned k = 0; k < 8; ++k) {
        CHECK(cb.symbol_label(k) == ca.symbol_label(k));
        CHECK(std::arg(cb.point(k) / ca.point(k)) == Approx(std::acos(-1.0) / 8).margin(1e-12));
    }
}

TEST_CASE("BPSK is {+1, -1}") {
    const auto c = psk_gray(2, 0.0);
    CHECK(c.point(0).real() == Approx(1.0));
    CHECK(c.point(1).real() == Approx(-1.0));
    CHECK(std::abs(c.point(0).imag()) < 1e-12);
    CHECK(c.symbol_label(0) == 0);
    CHECK(c.symbol_label(1) == 1);
}

TEST_CASE("uniform 4-PAM is the standard normalized set") {
    const auto c = pam_uniform(4);
    const double s = std::sqrt(5.0);
    CHECK(c.point(0).real() == Approx(-3.0 / s));
    CHECK(c.point(1).real() == Approx(-1.0 / s));
    CHECK(c.point(2).real() == Approx(1.0 / s));
    CHECK(c.point(3).real() == Approx(3.0 / s));
    CHECK(c.average_energy() == Approx(1.0).margin(1e-12));
    for (unsigned k = 0; k < 4; ++k) {
        CHECK(c.point(k).imag() == 0.0);
        CHECK(c.symbol_label(k) == k); // natural Z_M order
        CHECK(c.bit_label(k) == gray_code(k));
    }
    for (unsigned k = 0; k + 1 < 4; ++k)
        CHECK(hamming(c.bit_label(k), c.bit_label(k + 1)) == 1);

    const auto b = pam_uniform(2);
    CHECK(b.point(0).real() == Approx(-1.0));
    CHECK(b.point(1).real() == Approx(1.0));
}

TEST_CASE("non-uniform PAM keeps zero mean and unit energy") {
    const std::vector<double> gaps{1.0, 2.0, 1.0};
    const auto c = pam(4, gaps);
    double mean = 0.0, energy = 0.0;
    for (unsigned k = 0; k < 4; ++k) {
        mean += c.point(k).real();
        energy += std::norm(c.point(k));
    }
    CHECK(mean == Approx(0.0).margin(1e-12));
    CHECK(energy / 4 == Approx(1.0).margin(1e-12));
    // gap ratios preserved by the affine normalization
    const double g01 = c.point(1).real() - c.point(0).real();
    const double g12 = c.point(2).real() - c.point(1).real();
    CHECK(g12 / g01 == Approx(2.0).margin(1e-12));

    CHECK_THROWS_AS(pam(4, std::vector<double>{1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(pam(4, std::vector<double>{1.0, -1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(psk_gray(6), std::invalid_argument);
}

TEST_CASE("relabel permutes labels only") {
    const auto c = psk_gray(8, 0.3);
    std::vector<unsigned> identity(8);
    std::iota(identity.begin(), identity.end(), 0u);
    const auto same = relabel(c, identity);
    for (unsigned k = 0; k < 8; ++k) {
        CHECK(same.symbol_label(k) == c.symbol_label(k));
        CHECK(same.point(k) == c.point(k));
    }

    std::vector<unsigned> perm{3, 0, 7, 1, 6, 2, 5, 4}, inv(8);
    for (unsigned i = 0; i < 8; ++i) inv[perm[i]] = i;
    const auto fwd = relabel(c, perm);
    const auto back = relabel(fwd, inv);
    CHECK(fwd.average_energy() == Approx(1.0).margin(1e-12));
    for (unsigned k = 0; k < 8; ++k) {
        CHECK(fwd.point(k) == c.point(k));
        CHECK(back.symbol_label(k) == c.symbol_label(k));
        CHECK(back.bit_label(k) == c.bit_label(k));
    }
    CHECK_THROWS_AS(relabel(c, std::vector<unsigned>{0, 0, 1, 2, 3, 4, 5, 6}),
                    std::invalid_argument);
}

TEST_CASE("modulate places symbols on their labeled points") {
    const auto c = pam_uniform(4);
    const std::vector<unsigned> syms{0, 1, 2, 3};
    const auto x = modulate(syms, c);
    for (unsigned k = 0; k < 4; ++k) CHECK(x[k] == c.point(k));

    const std::vector<unsigned> zeros(6, 0);
    const auto xz = modulate(zeros, c);
    for (const auto& v : xz) CHECK(v == c.point(c.index_of_symbol(0)));

    // nearest-point round trip on a noiseless PSK grid
    const auto p = psk_gray(8, 0.1);
    std::vector<unsigned> all(8);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<unsigned> labels(8);
    for (unsigned k = 0; k < 8; ++k) labels[k] = p.symbol_label(k);
    const auto tx = modulate(labels, p);
    for (unsigned k = 0; k < 8; ++k) {
        unsigned best = 0;
        for (unsigned j = 1; j < 8; ++j)
            if (std::abs(tx[k] - p.point(j)) < std::abs(tx[k] - p.point(best))) best = j;
        CHECK(p.symbol_label(best) == labels[k]);
    }
}

TEST_CASE("modulate_bits groups MSB-first and uses bit labels") {
    const auto c = psk_gray(4, 0.0);
    const std::vector<unsigned> bits{1, 1, 0, 1, 0, 0};
    const auto x = modulate_bits(bits, c);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == c.point(c.index_of_bits(0b11)));
    CHECK(x[1] == c.point(c.index_of_bits(0b01)));
    CHECK(x[2] == c.point(c.index_of_bits(0b00)));
    CHECK_THROWS_AS(modulate_bits(std::vector<unsigned>{1}, c), std::invalid_argument);
}
