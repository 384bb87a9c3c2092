#pragma once

// Additive-group structure used by the sum-product check node: the code
// alphabet itself (C-SPA) or the transmission-pair alphabet of size M^2
// (G-SPA), together with the action of parity-check entries and the group
// transform that diagonalizes convolution (Walsh-Hadamard for GF(2^r)
// symbols and pairs, DFT mod M along each axis for Z_M).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/alphabet.hpp"

namespace pnc {

class SymbolGroup {
public:
    /// Single-symbol group: the alphabet under its own addition.
    static SymbolGroup single(const Alphabet& a) { return SymbolGroup(a, 1); }

    /// Transmission-pair group of size M^2; pair (s1, s2) is flattened as
    /// s1*M + s2 and H entries act componentwise: h*(s1,s2) = (h*s1, h*s2).
    static SymbolGroup pair(const Alphabet& a) { return SymbolGroup(a, 2); }

    const Alphabet& alphabet() const { return *alphabet_; }
    unsigned size() const { return q_; }
    unsigned components() const { return components_; }
    bool is_xor() const { return alphabet_->is_field(); }

    unsigned component(unsigned idx, unsigned sym) const {
        const unsigned m = alphabet_->size();
        if (components_ == 1) return sym;
        return idx == 0 ? sym / m : sym % m;
    }
    unsigned compose(unsigned s1, unsigned s2) const {
        return components_ == 1 ? s1 : s1 * alphabet_->size() + s2;
    }

    unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
    unsigned neg(unsigned x) const { return neg_[x]; }
    unsigned sub(unsigned x, unsigned y) const { return add_[x * q_ + neg_[y]]; }

    /// Action of a parity-check entry h on a group symbol.
    unsigned act(unsigned h, unsigned x) const { return act_[h * q_ + x]; }

    // --- transforms -------------------------------------------------------
    // Probability vectors over the group are transformed so that group
    // convolution becomes a pointwise product. XOR groups use the real
    // Walsh-Hadamard transform; Z_M groups a complex DFT along each axis.
    // Transform workspaces are caller-provided spans of length size().

    /// In-place Walsh-Hadamard butterfly (XOR groups only; unnormalized).
    /// Applying it twice scales by size().
    void wht(std::span<double> v, std::uint64_t* ops = nullptr) const {
        const unsigned nlocal = q_;
        for (unsigned h = 1; h < nlocal; h <<= 1)
            for (unsigned i = 0; i < nlocal; i += h << 1)
                for (unsigned j = i; j < i + h; ++j) {
                    const double a = v[j], b = v[j + h];
                    v[j] = a + b;
                    v[j + h] = a - b;
                }
        if (ops) *ops += static_cast<std::uint64_t>(nlocal) * log2_size_;
    }

    /// Forward/inverse DFT over the group Z_M (components == 1) or
    /// Z_M x Z_M (components == 2), applied along each axis. Inverse
    /// includes the 1/size() normalization.
    void dft(std::span<std::complex<double>> v, bool inverse, std::uint64_t* ops = nullptr) const {
        const unsigned m = alphabet_->size();
        if (components_ == 1) {
            dft_axis(v.data(), m, 1, inverse, ops);
        } else {
            for (unsigned r = 0; r < m; ++r) dft_axis(v.data() + r * m, m, 1, inverse, ops);
            for (unsigned c = 0; c < m; ++c) dft_axis(v.data() + c, m, m, inverse, ops);
        }
        if (inverse) {
            const double s = 1.0 / static_cast<double>(q_);
            for (auto& x : v) x *= s;
        }
    }

    /// out = group convolution of f and g: out[z] = sum_{x+y=z} f[x] g[y].
    /// Direct O(size^2) form; the transform-domain path must match it.
    void convolve_direct(std::span<const double> f, std::span<const double> g,
                         std::span<double> out, std::uint64_t* ops = nullptr) const {
        std::fill(out.begin(), out.end(), 0.0);
        for (unsigned x = 0; x < q_; ++x) {
            const double fx = f[x];
            const unsigned* row = add_.data() + x * q_;
            for (unsigned y = 0; y < q_; ++y) out[row[y]] += fx * g[y];
        }
        if (ops) *ops += static_cast<std::uint64_t>(q_) * q_;
    }

private:
    SymbolGroup(const Alphabet& a, unsigned components)
        : alphabet_(&a), components_(components) {
        const unsigned m = a.size();
        q_ = components_ == 1 ? m : m * m;
        log2_size_ = 0;
        while ((1u << log2_size_) < q_) ++log2_size_;
        if (is_xor() && (1u << log2_size_) != q_)
            throw std::logic_error("field group size must be a power of two");

        add_.resize(static_cast<std::size_t>(q_) * q_);
        neg_.resize(q_);
        for (unsigned x = 0; x < q_; ++x) {
            neg_[x] = map1(x, [&](unsigned c) { return a.neg(c); });
            for (unsigned y = 0; y < q_; ++y)
                add_[x * q_ + y] = map2(x, y, [&](unsigned c1, unsigned c2) { return a.add(c1, c2); });
        }
        act_.resize(static_cast<std::size_t>(m) * q_);
        for (unsigned h = 0; h < m; ++h)
            for (unsigned x = 0; x < q_; ++x)
                act_[h * q_ + x] = map1(x, [&](unsigned c) { return a.mul(h, c); });

        if (!is_xor()) {
            const double two_pi = 6.283185307179586476925286766559;
            tw_fwd_.resize(m);
            tw_inv_.resize(m);
            for (unsigned j = 0; j < m; ++j) {
                const double phi = two_pi * j / m;
                tw_fwd_[j] = {std::cos(phi), -std::sin(phi)};
                tw_inv_[j] = {std::cos(phi), std::sin(phi)};
            }
        }
    }

    template <class F>
    unsigned map1(unsigned x, F f) const {
        if (components_ == 1) return f(x);
        const unsigned m = alphabet_->size();
        return f(x / m) * m + f(x % m);
    }
    template <class F>
    unsigned map2(unsigned x, unsigned y, F f) const {
        if (components_ == 1) return f(x, y);
        const unsigned m = alphabet_->size();
        return f(x / m, y / m) * m + f(x % m, y % m);
    }

    // Length-m DFT with stride; radix-2 when m is a power of two, otherwise
    // the direct form (small m only).
    void dft_axis(std::complex<double>* v, unsigned m, unsigned stride, bool inverse,
                  std::uint64_t* ops) const {
        const auto& tw = inverse ? tw_inv_ : tw_fwd_;
        if ((m & (m - 1)) == 0) {
            // bit-reversal permutation
            for (unsigned i = 1, j = 0; i < m; ++i) {
                unsigned bit = m >> 1;
                for (; j & bit; bit >>= 1) j ^= bit;
                j ^= bit;
                if (i < j) std::swap(v[i * stride], v[j * stride]);
            }
            for (unsigned len = 2; len <= m; len <<= 1) {
                const unsigned step = m / len;
                for (unsigned i = 0; i < m; i += len)
                    for (unsigned j = 0; j < len / 2; ++j) {
                        const auto w = tw[j * step];
                        auto& lo = v[(i + j) * stride];
                        auto& hi = v[(i + j + len / 2) * stride];
                        const auto t = hi * w;
                        hi = lo - t;
                        lo = lo + t;
                    }
            }
            if (ops) {
                unsigned lg = 0;
                while ((1u << lg) < m) ++lg;
                *ops += static_cast<std::uint64_t>(m / 2) * lg;
            }
        } else {
            std::vector<std::complex<double>> tmp(m, 0.0);
            for (unsigned kk = 0; kk < m; ++kk)
                for (unsigned j = 0; j < m; ++j)
                    tmp[kk] += v[j * stride] * tw[(kk * j) % m];
            for (unsigned kk = 0; kk < m; ++kk) v[kk * stride] = tmp[kk];
            if (ops) *ops += static_cast<std::uint64_t>(m) * m;
        }
    }

    const Alphabet* alphabet_;
    unsigned components_;
    unsigned q_ = 0;
    unsigned log2_size_ = 0;
    std::vector<unsigned> add_, neg_, act_;
    std::vector<std::complex<double>> tw_fwd_, tw_inv_;
};

/// Transform-domain group convolution, for checking against the direct
/// form: O(size log size) for power-of-two groups.
inline void convolve_fft(const SymbolGroup& grp, std::span<const double> f,
                         std::span<const double> g, std::span<double> out,
                         std::uint64_t* ops = nullptr) {
    const unsigned q = grp.size();
    if (grp.is_xor()) {
        std::vector<double> F(f.begin(), f.end()), G(g.begin(), g.end());
        grp.wht(F, ops);
        grp.wht(G, ops);
        for (unsigned i = 0; i < q; ++i) F[i] *= G[i];
        if (ops) *ops += q;
        grp.wht(F, ops);
        const double s = 1.0 / q;
        for (unsigned i = 0; i < q; ++i) out[i] = F[i] * s;
    } else {
        std::vector<std::complex<double>> F(q), G(q);
        for (unsigned i = 0; i < q; ++i) F[i] = f[i];
        for (unsigned i = 0; i < q; ++i) G[i] = g[i];
        grp.dft(F, false, ops);
        grp.dft(G, false, ops);
        for (unsigned i = 0; i < q; ++i) F[i] *= G[i];
        if (ops) *ops += q;
        grp.dft(F, true, ops);
        for (unsigned i = 0; i < q; ++i) out[i] = std::max(F[i].real(), 0.0);
    }
}

} // namespace pnc
