#pragma once

// Multiple-access phase signal generation: superposition of the two users'
// samples under AWGN or block Rayleigh fading, with explicit seeding.

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/rng.hpp"

namespace pnc {

struct ChannelModel {
    enum class Kind { awgn, block_rayleigh };
    Kind kind = Kind::awgn;
    unsigned blocks = 1; // fading blocks per codeword (block_rayleigh)

    static ChannelModel awgn() { return {Kind::awgn, 1}; }
    static ChannelModel block_rayleigh(unsigned b) {
        if (b < 1) throw std::invalid_argument("block count must be >= 1");
        return {Kind::block_rayleigh, b};
    }
};

/// Per-block channel coefficients for both users; the relay knows them
/// exactly. AWGN is the single-block case with h1 = h2 = 1.
struct ChannelRealization {
    std::vector<std::complex<double>> h1, h2; // one entry per block
    std::vector<std::size_t> block_start;     // size blocks+1, block b covers [start[b], start[b+1])

    unsigned blocks() const { return static_cast<unsigned>(h1.size()); }
    std::size_t length() const { return block_start.empty() ? 0 : block_start.back(); }

    unsigned block_of(std::size_t i) const {
        unsigned b = 0;
        while (block_start[b + 1] <= i) ++b;
        return b;
    }
};

/// Per-user symbol SNR convention: Es/N0 with Es = 1 per user. Returns the
/// total complex-noise variance N0 (N0/2 per real dimension).
inline double snr_to_noise_var(double snr_db) {
    return std::pow(10.0, -snr_db / 10.0);
}

/// Contiguous near-equal partition of n positions into b blocks (sizes
/// differ by at most one).
inline std::vector<std::size_t> partition_blocks(std::size_t n, unsigned b) {
    std::vector<std::size_t> start(b + 1, 0);
    const std::size_t base = n / b, extra = n % b;
    for (unsigned i = 0; i < b; ++i) start[i + 1] = start[i] + base + (i < extra ? 1 : 0);
    return start;
}

inline ChannelRealization draw_realization(const ChannelModel& model, std::size_t n,
                                           std::uint64_t seed) {
    ChannelRealization re;
    const unsigned b = model.kind == ChannelModel::Kind::awgn ? 1u : model.blocks;
    re.block_start = partition_blocks(n, b);
    re.h1.resize(b);
    re.h2.resize(b);
    if (model.kind == ChannelModel::Kind::awgn) {
        re.h1[0] = re.h2[0] = 1.0;
    } else {
        GaussianSampler g(seed);
        const double s = std::sqrt(0.5); // unit-variance circular complex Gaussian
        for (unsigned i = 0; i < b; ++i) re.h1[i] = {s * g(), s * g()};
        for (unsigned i = 0; i < b; ++i) re.h2[i] = {s * g(), s * g()};
    }
    return re;
}

/// y[i] = h1[b(i)] x1[i] + h2[b(i)] x2[i] + n[i] with complex Gaussian noise
/// of total variance noise_var.
inline std::vector<std::complex<double>> transmit_mac(std::span<const std::complex<double>> x1,
                                                      std::span<const std::complex<double>> x2,
                                                      const ChannelRealization& realization,
                                                      double noise_var, std::uint64_t seed) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("transmit_mac: user signal lengths differ");
    if (realization.length() != x1.size())
        throw std::invalid_argument("transmit_mac: realization length mismatch");
    std::vector<std::complex<double>> y(x1.size());
    GaussianSampler g(seed);
    const double s = std::sqrt(noise_var / 2.0);
    for (unsigned b = 0; b < realization.blocks(); ++b) {
        const auto h1 = realization.h1[b], h2 = realization.h2[b];
        for (std::size_t i = realization.block_start[b]; i < realization.block_start[b + 1]; ++i) {
            const double nr = s * g(), ni = s * g();
            y[i] = h1 * x1[i] + h2 * x2[i] + std::complex<double>(nr, ni);
        }
    }
    return y;
}

} // namespace pnc
