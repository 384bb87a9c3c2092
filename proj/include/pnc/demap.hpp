#pragma once

// Soft demappers for the relay: likelihoods of the M^2 transmission pairs
// given one received sample, marginalized to NC-symbol probabilities, XOR
// bit LLRs, or per-user bit LLRs. All computed in the log domain with
// max-subtraction; LLR convention is positive => bit 0.

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/superimposed.hpp"

namespace pnc {

namespace detail {

constexpr double kMinNoiseVar = 1e-12;

/// Log-likelihoods -|y - point|^2 / noise_var per transmission pair.
/// Overflowed distances (y far beyond all points) degrade to a uniform
/// vector rather than NaNs.
inline std::vector<double> pair_loglik(cplx y, const SuperimposedSet& set, double noise_var) {
    const double nv = std::max(noise_var, kMinNoiseVar);
    std::vector<double> ll(set.pairs.size());
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < set.pairs.size(); ++p) {
        const double d2 = std::norm(y - set.pairs[p].point);
        ll[p] = std::isfinite(d2) ? -d2 / nv : -std::numeric_limits<double>::infinity();
        mx = std::max(mx, ll[p]);
    }
    if (!std::isfinite(mx)) {
        std::fill(ll.begin(), ll.end(), 0.0);
        return ll;
    }
    for (double& x : ll) x -= mx;
    return ll;
}

inline double log_sum_exp(double acc, double term) {
    if (acc == -std::numeric_limits<double>::infinity()) return term;
    if (term == -std::numeric_limits<double>::infinity()) return acc;
    const double hi = std::max(acc, term), lo = std::min(acc, term);
    return hi + std::log1p(std::exp(lo - hi));
}

constexpr double kLlrCap = 300.0;

} // namespace detail

/// P(pair | y) over the theta = M^2 transmission pairs, flattened as
/// s1*M + s2 on *symbol labels* (the G-SPA pair alphabet order).
inline std::vector<double> demap_pair_prob(cplx y, const SuperimposedSet& set, double noise_var) {
    const unsigned M = set.order();
    const auto ll = detail::pair_loglik(y, set, noise_var);
    std::vector<double> prob(static_cast<std::size_t>(M) * M, 0.0);
    for (std::size_t p = 0; p < set.pairs.size(); ++p)
        prob[set.pairs[p].s1 * M + set.pairs[p].s2] += std::exp(ll[p]);
    double sum = 0.0;
    for (double x : prob) sum += x;
    for (double& x : prob) x /= sum;
    return prob;
}

/// P(nc = v | y): pair likelihoods summed by NC symbol under the map.
inline std::vector<double> demap_nc_symbol_prob(cplx y, const SuperimposedSet& set,
                                                const NcMap& map, double noise_var) {
    const unsigned M = set.order();
    const auto ll = detail::pair_loglik(y, set, noise_var);
    std::vector<double> prob(M, 0.0);
    for (std::size_t p = 0; p < set.pairs.size(); ++p)
        prob[map(set.pairs[p].s1, set.pairs[p].s2)] += std::exp(ll[p]);
    double sum = 0.0;
    for (double x : prob) sum += x;
    for (double& x : prob) x /= sum;
    return prob;
}

/// Extrinsic LLRs of the log2(M) XOR bits of one received sample. The
/// optional prior (one LLR per XOR bit, from the channel decoder) weights
/// the pairs; each output bit excludes its own prior, which is the
/// "posterior minus prior" extrinsic convention.
/// Requires an XOR-unambiguous constellation design.
inline std::vector<double> demap_xor_bit_llr(cplx y, const SuperimposedSet& set, double noise_var,
                                             std::span<const double> prior = {}) {
    if (set.xor_ambiguous())
        throw std::domain_error("demap_xor_bit_llr: constellation design is XOR-ambiguous");
    const unsigned L = set.user_a.bits_per_symbol();
    if (!prior.empty() && prior.size() != L)
        throw std::invalid_argument("demap_xor_bit_llr: prior length mismatch");
    const auto ll = detail::pair_loglik(y, set, noise_var);
    const double ninf = -std::numeric_limits<double>::infinity();
    std::vector<double> out(L);
    for (unsigned b = 0; b < L; ++b) {
        double num = ninf, den = ninf;
        for (std::size_t p = 0; p < set.pairs.size(); ++p) {
            double w = ll[p];
            for (unsigned b2 = 0; b2 < L && !prior.empty(); ++b2) {
                if (b2 == b) continue;
                const unsigned bit = (set.pairs[p].xor_label >> (L - 1 - b2)) & 1u;
                w += bit == 0 ? 0.5 * prior[b2] : -0.5 * prior[b2];
            }
            const unsigned bit = (set.pairs[p].xor_label >> (L - 1 - b)) & 1u;
            (bit == 0 ? num : den) = detail::log_sum_exp(bit == 0 ? num : den, w);
        }
        out[b] = std::clamp(num - den, -detail::kLlrCap, detail::kLlrCap);
    }
    return out;
}

/// Extrinsic per-user bit LLRs of one received sample (MUD front end).
/// Pair weights include both users' priors; each output bit excludes its
/// own prior. Requires a unique-pair constellation design.
inline std::pair<std::vector<double>, std::vector<double>> demap_user_bit_llr(
    cplx y, const SuperimposedSet& set, double noise_var, std::span<const double> prior1 = {},
    std::span<const double> prior2 = {}) {
    if (!set.unique_pair())
        throw std::domain_error("demap_user_bit_llr: constellation design is not unique-pair");
    const unsigned L = set.user_a.bits_per_symbol();
    if ((!prior1.empty() && prior1.size() != L) || (!prior2.empty() && prior2.size() != L))
        throw std::invalid_argument("demap_user_bit_llr: prior length mismatch");
    const auto ll = detail::pair_loglik(y, set, noise_var);
    const double ninf = -std::numeric_limits<double>::infinity();

    std::vector<double> w(set.pairs.size());
    for (std::size_t p = 0; p < set.pairs.size(); ++p) {
        double acc = ll[p];
        const unsigned g1 = set.user_a.bit_label(set.pairs[p].i1);
        const unsigned g2 = set.user_b.bit_label(set.pairs[p].i2);
        for (unsigned b = 0; b < L && !prior1.empty(); ++b)
            acc += ((g1 >> (L - 1 - b)) & 1u) == 0 ? 0.5 * prior1[b] : -0.5 * prior1[b];
        for (unsigned b = 0; b < L && !prior2.empty(); ++b)
            acc += ((g2 >> (L - 1 - b)) & 1u) == 0 ? 0.5 * prior2[b] : -0.5 * prior2[b];
        w[p] = acc;
    }

    auto marginal = [&](bool user1, std::span<const double> own_prior) {
        std::vector<double> out(L);
        for (unsigned b = 0; b < L; ++b) {
            double num = ninf, den = ninf;
            for (std::size_t p = 0; p < set.pairs.size(); ++p) {
                const unsigned g = user1 ? set.user_a.bit_label(set.pairs[p].i1)
                                         : set.user_b.bit_label(set.pairs[p].i2);
                const unsigned bit = (g >> (L - 1 - b)) & 1u;
                double acc = w[p];
                if (!own_prior.empty())
                    acc -= bit == 0 ? 0.5 * own_prior[b] : -0.5 * own_prior[b];
                (bit == 0 ? num : den) = detail::log_sum_exp(bit == 0 ? num : den, acc);
            }
            out[b] = std::clamp(num - den, -detail::kLlrCap, detail::kLlrCap);
        }
        return out;
    };
    return {marginal(true, prior1), marginal(false, prior2)};
}

} // namespace pnc
