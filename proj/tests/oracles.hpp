#pragma once

// Test-only brute-force oracles. Everything here is deliberately naive and
// independent of the library's decoding/encoding paths: exhaustive
// nullspace enumeration, polynomial long division, direct Bayes
// marginalization, exhaustive MAP decoding over all codewords or codeword
// pairs.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "pnc/alphabet.hpp"
#include "pnc/group.hpp"
#include "pnc/ldpc.hpp"
#include "pnc/superimposed.hpp"

namespace oracle {

/// GF(2^r) product by schoolbook carry-less multiply + polynomial long
/// division, no tables.
inline unsigned gf_mul_longdiv(unsigned r, unsigned poly, unsigned a, unsigned b) {
    unsigned prod = 0;
    for (unsigned i = 0; i < r; ++i)
        if ((b >> i) & 1u) prod ^= a << i;
    for (int deg = 2 * static_cast<int>(r) - 2; deg >= static_cast<int>(r); --deg)
        if ((prod >> deg) & 1u) prod ^= poly << (deg - r);
    return prod;
}

/// All words of length n over the alphabet with zero syndrome, found by
/// exhaustive enumeration (q^n words; toy codes only).
inline std::vector<std::vector<unsigned>> nullspace_bruteforce(const pnc::LdpcCode& code) {
    const unsigned q = code.alphabet.size();
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> w(code.n, 0);
    while (true) {
        if (pnc::in_nullspace(code, w)) out.push_back(w);
        std::size_t i = 0;
        while (i < code.n && ++w[i] == q) w[i++] = 0;
        if (i == code.n) break;
    }
    return out;
}

/// Per-position symbol-MAP over an explicit codeword list, log-domain
/// weights: weight(w) = sum_i log beliefs[i][w_i].
inline std::vector<unsigned> symbol_map_decode(const std::vector<std::vector<unsigned>>& codewords,
                                               std::span<const double> beliefs, unsigned q) {
    const std::size_t n = codewords.front().size();
    std::vector<double> logb(beliefs.size());
    for (std::size_t i = 0; i < beliefs.size(); ++i)
        logb[i] = beliefs[i] > 0 ? std::log(beliefs[i]) : -1e9;
    std::vector<std::vector<double>> post(n, std::vector<double>(q, 0.0));
    for (const auto& w : codewords) {
        double lw = 0.0;
        for (std::size_t i = 0; i < n; ++i) lw += logb[i * q + w[i]];
        const double pw = std::exp(lw);
        for (std::size_t i = 0; i < n; ++i) post[i][w[i]] += pw;
    }
    std::vector<unsigned> hard(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned s = 1; s < q; ++s)
            if (post[i][s] > post[i][hard[i]]) hard[i] = s;
    return hard;
}

/// Per-position pair-MAP over all pairs of codewords; pair beliefs are
/// indexed s1*q + s2.
inline std::vector<unsigned> pair_map_decode(const std::vector<std::vector<unsigned>>& codewords,
                                             std::span<const double> pair_beliefs, unsigned q) {
    const std::size_t n = codewords.front().size();
    const unsigned theta = q * q;
    std::vector<double> logb(pair_beliefs.size());
    for (std::size_t i = 0; i < pair_beliefs.size(); ++i)
        logb[i] = pair_beliefs[i] > 0 ? std::log(pair_beliefs[i]) : -1e9;
    std::vector<std::vector<double>> post(n, std::vector<double>(theta, 0.0));
    for (const auto& w1 : codewords)
        for (const auto& w2 : codewords) {
            double lw = 0.0;
            for (std::size_t i = 0; i < n; ++i) lw += logb[i * theta + w1[i] * q + w2[i]];
            const double pw = std::exp(lw);
            for (std::size_t i = 0; i < n; ++i) post[i][w1[i] * q + w2[i]] += pw;
        }
    std::vector<unsigned> hard(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned s = 1; s < theta; ++s)
            if (post[i][s] > post[i][hard[i]]) hard[i] = s;
    return hard;
}

/// Per-bit MAP for a binary code given LLRs (positive => bit 0):
/// log weight(w) = -sum_{i: w_i = 1} L_i.
inline std::vector<unsigned> bit_map_decode(const std::vector<std::vector<unsigned>>& codewords,
                                            std::span<const double> llrs) {
    const std::size_t n = codewords.front().size();
    std::vector<double> p0(n, 0.0), p1(n, 0.0);
    for (const auto& w : codewords) {
        double lw = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i]) lw -= llrs[i];
        const double pw = std::exp(lw);
        for (std::size_t i = 0; i < n; ++i) (w[i] ? p1[i] : p0[i]) += pw;
    }
    std::vector<unsigned> hard(n, 0);
    for (std::size_t i = 0; i < n; ++i) hard[i] = p1[i] > p0[i] ? 1u : 0u;
    return hard;
}

/// Direct Bayes posterior over the M^2 transmission pairs for one sample.
inline std::vector<double> bayes_pair_posterior(std::complex<double> y,
                                                const pnc::SuperimposedSet& set,
                                                double noise_var) {
    const unsigned M = set.order();
    std::vector<double> post(static_cast<std::size_t>(M) * M, 0.0);
    for (const auto& p : set.pairs)
        post[p.s1 * M + p.s2] += std::exp(-std::norm(y - p.point) / noise_var);
    double sum = 0.0;
    for (double x : post) sum += x;
    for (double& x : post) x /= sum;
    return post;
}

/// Direct group convolution by the definition, no tricks.
inline std::vector<double> conv_bruteforce(const pnc::SymbolGroup& grp,
                                           std::span<const double> f, std::span<const double> g) {
    const unsigned q = grp.size();
    std::vector<double> out(q, 0.0);
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) out[grp.add(x, y)] += f[x] * g[y];
    return out;
}

} // namespace oracle
