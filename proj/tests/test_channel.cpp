#include <catch2/catch_amalgamated.hpp>

#include "pnc/channel.hpp"

using namespace pnc;
using Catch::Approx;

TEST_CASE("snr to noise variance") {
    CHECK(snr_to_noise_var(0.0) == Approx(1.0));
    CHECK(snr_to_noise_var(10.0) == Approx(0.1));
    CHECK(snr_to_noise_var(3.0103) == Approx(0.5).margin(1e-6));
}

TEST_CASE("awgn realization is all-ones; block partition is near-equal") {
    const auto re = draw_realization(ChannelModel::awgn(), 17, 123);
    REQUIRE(re.blocks() == 1);
    CHECK(re.h1[0] == std::complex<double>(1.0, 0.0));
    CHECK(re.h2[0] == std::complex<double>(1.0, 0.0));
    CHECK(re.length() == 17);

    const auto rb = draw_realization(ChannelModel::block_rayleigh(4), 100, 5);
    REQUIRE(rb.blocks() == 4);
    for (unsigned b = 0; b < 4; ++b)
        CHECK(rb.block_start[b + 1] - rb.block_start[b] == 25);

    const auto ru = draw_realization(ChannelModel::block_rayleigh(4), 10, 5);
    std::vector<std::size_t> sizes;
    for (unsigned b = 0; b < 4; ++b) sizes.push_back(ru.block_start[b + 1] - ru.block_start[b]);
    CHECK(sizes == std::vector<std::size_t>{3, 3, 2, 2});
    CHECK(ru.block_of(0) == 0);
    CHECK(ru.block_of(5) == 1);
    CHECK(ru.block_of(9) == 3);
}

TEST_CASE("rayleigh coefficients have unit mean square") {
    double acc = 0.0;
    std::size_t count = 0;
    for (std::uint64_t s = 0; s < 4000; ++s) {
        const auto re = draw_realization(ChannelModel::block_rayleigh(128), 128, derive_seed(9, s));
        for (const auto& h : re.h1) {
            acc += std::norm(h);
            ++count;
        }
    }
    CHECK(acc / static_cast<double>(count) == Approx(1.0).margin(0.01));
}

TEST_CASE("noiseless superposition") {
    const auto re = draw_realization(ChannelModel::awgn(), 1, 0);
    const std::vector<std::complex<double>> p{{1.0, 0.0}}, n{{-1.0, 0.0}};
    CHECK(transmit_mac(p, p, re, 0.0, 1)[0] == std::complex<double>(2.0, 0.0));
    CHECK(transmit_mac(p, n, re, 0.0, 1)[0] == std::complex<double>(0.0, 0.0));
    CHECK_THROWS_AS(transmit_mac(p, std::vector<std::complex<double>>{}, re, 0.0, 1),
                    std::invalid_argument);
}

TEST_CASE("noise variance and independence are as configured") {
    const std::size_t n = 1000000;
    const auto re = draw_realization(ChannelModel::awgn(), n, 0);
    const std::vector<std::complex<double>> zero(n, 0.0);
    const double nv = 0.37;
    const auto y = transmit_mac(zero, zero, re, nv, 42);

    double var = 0.0;
    for (const auto& v : y) var += std::norm(v);
    var /= static_cast<double>(n);
    CHECK(var == Approx(nv).epsilon(0.01));

    // empirical autocorrelation at lag 1
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) acc += y[i] * std::conj(y[i + 1]);
    CHECK(std::abs(acc) / (static_cast<double>(n) * nv) < 0.01);
}

TEST_CASE("fixed seeds reproduce the channel bit-exactly") {
    const auto re1 = draw_realization(ChannelModel::block_rayleigh(4), 64, 77);
    const auto re2 = draw_realization(ChannelModel::block_rayleigh(4), 64, 77);
    CHECK(re1.h1 == re2.h1);
    CHECK(re1.h2 == re2.h2);

    const std::vector<std::complex<double>> x(64, {1.0, 0.0});
    const auto y1 = transmit_mac(x, x, re1, 0.25, 99);
    const auto y2 = transmit_mac(x, x, re2, 0.25, 99);
    CHECK(y1 == y2);
}
