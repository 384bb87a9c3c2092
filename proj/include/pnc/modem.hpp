#pragma once

// Constellation construction (M-PSK with rotation, uniform/non-uniform
// M-PAM), Gray bit labeling, and modulation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/alphabet.hpp"

namespace pnc {

using cplx = std::complex<double>;

inline unsigned gray_code(unsigned k) { return k ^ (k >> 1); }

/// Ordered complex points with unit average energy plus two labelings:
/// symbol_label maps a point to its code-alphabet symbol, bit_label to the
/// log2(M) coded bits it carries in BICM schemes.
///
/// PSK: point k (angular order) carries the field element gray_code(k), and
/// bit_label equals that element's bits, so adjacent points differ in one
/// bit and XOR of labels matches field addition.
/// PAM: point k (amplitude order) carries ring element k, so the mod-M NC
/// map acts on amplitude indices; bit_label is gray_code(k) for the
/// binary-coded receivers.
class Constellation {
public:
    enum class Kind { psk, pam };

    Kind kind() const { return kind_; }
    unsigned order() const { return static_cast<unsigned>(points_.size()); }
    unsigned bits_per_symbol() const { return bits_; }
    double rotation() const { return rotation_; }
    const std::vector<double>& spacings() const { return spacings_; }

    const std::vector<cplx>& points() const { return points_; }
    cplx point(unsigned i) const { return points_[i]; }
    unsigned symbol_label(unsigned i) const { return symbol_labels_[i]; }
    unsigned bit_label(unsigned i) const { return bit_labels_[i]; }

    unsigned index_of_symbol(unsigned s) const {
        if (s >= order()) throw std::invalid_argument("symbol out of range");
        return symbol_to_index_[s];
    }
    unsigned index_of_bits(unsigned g) const {
        if (g >= order()) throw std::invalid_argument("bit label out of range");
        return bits_to_index_[g];
    }

    /// Bit b (0 = most significant of the group) of point i's bit label.
    unsigned bit(unsigned i, unsigned b) const {
        return (bit_labels_[i] >> (bits_ - 1 - b)) & 1u;
    }

    double average_energy() const {
        double e = 0.0;
        for (const auto& p : points_) e += std::norm(p);
        return e / static_cast<double>(order());
    }

    friend Constellation psk_gray(unsigned M, double rotation);
    friend Constellation pam(unsigned M, std::span<const double> spacings);
    friend Constellation relabel(const Constellation& c, std::span<const unsigned> permutation);

private:
    Constellation() = default;

    void build_index_maps() {
        const unsigned M = order();
        symbol_to_index_.assign(M, 0);
        bits_to_index_.assign(M, 0);
        std::vector<bool> seen_sym(M, false), seen_bits(M, false);
        for (unsigned i = 0; i < M; ++i) {
            const unsigned s = symbol_labels_[i], g = bit_labels_[i];
            if (s >= M || seen_sym[s]) throw std::logic_error("symbol labels not bijective");
            if (g >= M || seen_bits[g]) throw std::logic_error("bit labels not distinct");
            seen_sym[s] = seen_bits[g] = true;
            symbol_to_index_[s] = i;
            bits_to_index_[g] = i;
        }
    }

    Kind kind_ = Kind::psk;
    unsigned bits_ = 0;
    double rotation_ = 0.0;
    std::vector<double> spacings_;
    std::vector<cplx> points_;
    std::vector<unsigned> symbol_labels_;
    std::vector<unsigned> bit_labels_;
    std::vector<unsigned> symbol_to_index_;
    std::vector<unsigned> bits_to_index_;
};

namespace detail {
inline unsigned checked_log2(unsigned M, unsigned max_order) {
    if (M < 2 || M > max_order || (M & (M - 1)) != 0)
        throw std::invalid_argument("modulation order must be a power of 2 in [2, " +
                                    std::to_string(max_order) + "]");
    unsigned b = 0;
    while ((1u << b) < M) ++b;
    return b;
}
} // namespace detail

/// Gray-mapped M-PSK. Points are e^{i(2 pi k / M + rotation)} in angular
/// order; point k carries field element gray_code(k).
inline Constellation psk_gray(unsigned M, double rotation = 0.0) {
    const unsigned bits = detail::checked_log2(M, 16);
    Constellation c;
    c.kind_ = Constellation::Kind::psk;
    c.bits_ = bits;
    c.rotation_ = rotation;
    c.points_.resize(M);
    c.symbol_labels_.resize(M);
    c.bit_labels_.resize(M);
    const double two_pi = 6.283185307179586476925286766559;
    for (unsigned k = 0; k < M; ++k) {
        const double phi = two_pi * k / M + rotation;
        c.points_[k] = cplx(std::cos(phi), std::sin(phi));
        c.symbol_labels_[k] = gray_code(k);
        c.bit_labels_[k] = gray_code(k);
    }
    c.build_index_maps();
    return c;
}

/// M-PAM with the given consecutive gaps (length M-1, all positive),
/// centered at zero mean and normalized to unit average energy. Point k in
/// amplitude order carries ring element k; bit labels are Gray in position
/// order.
inline Constellation pam(unsigned M, std::span<const double> spacings) {
    const unsigned bits = detail::checked_log2(M, 16);
    if (spacings.size() != M - 1)
        throw std::invalid_argument("pam expects M-1 spacings");
    for (double g : spacings)
        if (!(g > 0.0)) throw std::invalid_argument("pam spacings must be positive");

    std::vector<double> pos(M, 0.0);
    for (unsigned k = 1; k < M; ++k) pos[k] = pos[k - 1] + spacings[k - 1];
    const double mean = std::accumulate(pos.begin(), pos.end(), 0.0) / M;
    double energy = 0.0;
    for (double& p : pos) {
        p -= mean;
        energy += p * p;
    }
    const double scale = 1.0 / std::sqrt(energy / M);

    Constellation c;
    c.kind_ = Constellation::Kind::pam;
    c.bits_ = bits;
    c.spacings_.assign(spacings.begin(), spacings.end());
    c.points_.resize(M);
    c.symbol_labels_.resize(M);
    c.bit_labels_.resize(M);
    for (unsigned k = 0; k < M; ++k) {
        c.points_[k] = cplx(pos[k] * scale, 0.0);
        c.symbol_labels_[k] = k;
        c.bit_labels_[k] = gray_code(k);
    }
    c.build_index_maps();
    return c;
}

/// Uniform M-PAM.
inline Constellation pam_uniform(unsigned M) {
    std::vector<double> gaps(M - 1, 1.0);
    return pam(M, gaps);
}

/// Permute the labeling; points are untouched. The permutation acts on
/// symbol labels; PSK bit labels track the permuted symbol (they are its
/// bits), PAM bit labels stay positional Gray.
inline Constellation relabel(const Constellation& c, std::span<const unsigned> permutation) {
    const unsigned M = c.order();
    if (permutation.size() != M)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(M, false);
    for (unsigned v : permutation) {
        if (v >= M || seen[v]) throw std::invalid_argument("permutation is not a bijection");
        seen[v] = true;
    }
    Constellation out = c;
    for (unsigned i = 0; i < M; ++i) {
        out.symbol_labels_[i] = permutation[c.symbol_labels_[i]];
        if (c.kind_ == Constellation::Kind::psk)
            out.bit_labels_[i] = out.symbol_labels_[i];
    }
    out.build_index_maps();
    return out;
}

/// Map alphabet symbols to constellation samples.
inline std::vector<cplx> modulate(std::span<const unsigned> symbols, const Constellation& c) {
    std::vector<cplx> out(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        out[i] = c.point(c.index_of_symbol(symbols[i]));
    return out;
}

/// Map coded bits (groups of log2 M, MSB first) to samples via bit labels.
inline std::vector<cplx> modulate_bits(std::span<const unsigned> bits, const Constellation& c) {
    const unsigned L = c.bits_per_symbol();
    if (bits.size() % L != 0)
        throw std::invalid_argument("bit count must be a multiple of bits per symbol");
    std::vector<cplx> out(bits.size() / L);
    for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned g = 0;
        for (unsigned b = 0; b < L; ++b) g = (g << 1) | (bits[i * L + b] & 1u);
        out[i] = c.point(c.index_of_bits(g));
    }
    return out;
}

/// Point list with labels, one row per point: index,re,im,symbol,bits.
inline void dump_constellation_csv(const Constellation& c, std::ostream& os) {
    os << "index,re,im,symbol_label,bit_label\n";
    for (unsigned i = 0; i < c.order(); ++i) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%u,%.12g,%.12g,%u,%u\n", i, c.point(i).real(),
                      c.point(i).imag(), c.symbol_label(i), c.bit_label(i));
        os << buf;
    }
}

} // namespace pnc
