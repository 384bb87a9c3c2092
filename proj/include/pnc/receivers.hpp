#pragma once

// The relay receiver family for channel-coded PNC: XOR-CD, iterative
// XOR-CD, MUD-XOR (binary-coded), NC-CD, CD-NC, MUD-NC (nonbinary-coded).
// Every receiver consumes the multiple-access-phase samples plus the exact
// channel realization and produces the NC codeword the relay broadcasts.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/channel.hpp"
#include "pnc/decoder.hpp"
#include "pnc/demap.hpp"

namespace pnc {

enum class CoeffStrategy { all_pairs, selected };

struct RelayConfig {
    DecoderConfig decoder;
    int outer_iters = 6;          // iterative XOR-CD demapper/decoder loops
    int inner_iters = 25;         // decoder iterations per outer pass
    bool mud_iterative = false;   // extrinsic exchange between MUD-XOR decoders
    int mud_exchange_rounds = 3;
    CoeffStrategy coeff_strategy = CoeffStrategy::selected;
    double merge_tolerance = 1e-9;
};

struct RelayOutput {
    std::vector<unsigned> nc_symbols; // NC codeword; bits for the binary-coded receivers
    bool converged = false;
    int iterations = 0; // total decoder iterations spent
    int attempts = 1;   // coefficient pairs tried (NC-CD)
    NcMap map = NcMap::xor_map(Alphabet::gf(1)); // the map defining nc_symbols
};

inline std::vector<SuperimposedSet> build_block_sets(const Constellation& ca,
                                                     const Constellation& cb,
                                                     const ChannelRealization& re,
                                                     double tolerance) {
    std::vector<SuperimposedSet> sets;
    sets.reserve(re.blocks());
    for (unsigned b = 0; b < re.blocks(); ++b)
        sets.push_back(build_superimposed_set(ca, cb, re.h1[b], re.h2[b], tolerance));
    return sets;
}

namespace detail {

inline void require_binary(const LdpcCode& code, std::size_t n_sym, unsigned bits_per_symbol) {
    if (code.alphabet.size() != 2)
        throw std::invalid_argument("receiver requires a binary code");
    if (code.n != n_sym * bits_per_symbol)
        throw std::invalid_argument("code length does not match symbol count");
}

inline void require_nonbinary(const LdpcCode& code, std::size_t n_sym, unsigned M) {
    if (code.alphabet.size() != M)
        throw std::invalid_argument("code alphabet size must equal the modulation order");
    if (code.n != n_sym) throw std::invalid_argument("code length does not match symbol count");
}

} // namespace detail

/// Symbol-by-symbol XOR-bit demapping followed by one binary SPA decode.
inline RelayOutput receive_xor_cd(std::span<const cplx> y, const LdpcCode& code,
                                  const Constellation& ca, const Constellation& cb,
                                  const ChannelRealization& re, double noise_var,
                                  const RelayConfig& cfg) {
    const unsigned L = ca.bits_per_symbol();
    detail::require_binary(code, y.size(), L);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);
    for (const auto& s : sets)
        if (s.xor_ambiguous())
            throw std::domain_error("receive_xor_cd: XOR-ambiguous constellation design");

    std::vector<double> llrs(code.n);
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto l = demap_xor_bit_llr(y[i], sets[re.block_of(i)], noise_var);
        std::copy(l.begin(), l.end(), llrs.begin() + i * L);
    }
    auto r = decode_binary_spa(llrs, code, cfg.decoder);
    RelayOutput out;
    out.nc_symbols = std::move(r.bits);
    out.converged = r.converged;
    out.iterations = r.iterations;
    out.map = NcMap::xor_map(Alphabet::gf(1));
    return out;
}

/// XOR-CD with outer iterations: the decoder's extrinsic bit information
/// feeds back into the demapper as XOR-bit priors. outer_iters = 1 is the
/// plain XOR-CD schedule with inner_iters decoder iterations.
inline RelayOutput receive_iterative_xor_cd(std::span<const cplx> y, const LdpcCode& code,
                                            const Constellation& ca, const Constellation& cb,
                                            const ChannelRealization& re, double noise_var,
                                            const RelayConfig& cfg) {
    const unsigned L = ca.bits_per_symbol();
    detail::require_binary(code, y.size(), L);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);
    for (const auto& s : sets)
        if (s.xor_ambiguous())
            throw std::domain_error("receive_iterative_xor_cd: XOR-ambiguous constellation design");

    DecoderConfig inner_cfg = cfg.decoder;
    inner_cfg.max_iter = cfg.inner_iters;

    RelayOutput out;
    std::vector<double> priors(code.n, 0.0);
    std::vector<double> llrs(code.n);
    for (int outer = 0; outer < cfg.outer_iters; ++outer) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto l = demap_xor_bit_llr(y[i], sets[re.block_of(i)], noise_var,
                                             std::span(priors).subspan(i * L, L));
            std::copy(l.begin(), l.end(), llrs.begin() + i * L);
        }
        auto r = decode_binary_spa(llrs, code, inner_cfg);
        out.iterations += r.iterations;
        out.nc_symbols = std::move(r.bits);
        out.converged = r.converged;
        if (out.converged) break;
        for (std::size_t v = 0; v < code.n; ++v)
            priors[v] = std::clamp(r.posterior_llrs[v] - llrs[v], -detail::kLlrCap,
                                   detail::kLlrCap);
    }
    out.map = NcMap::xor_map(Alphabet::gf(1));
    return out;
}

/// Demap both users, run two binary SPA decodes (optionally exchanging
/// extrinsic information), and XOR the decoded codewords.
inline RelayOutput receive_mud_xor(std::span<const cplx> y, const LdpcCode& code,
                                   const Constellation& ca, const Constellation& cb,
                                   const ChannelRealization& re, double noise_var,
                                   const RelayConfig& cfg, bool iterative = false) {
    const unsigned L = ca.bits_per_symbol();
    detail::require_binary(code, y.size(), L);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);
    for (const auto& s : sets)
        if (!s.unique_pair())
            throw std::domain_error("receive_mud_xor: constellation design is not unique-pair");

    RelayOutput out;
    std::vector<double> pri1(code.n, 0.0), pri2(code.n, 0.0);
    std::vector<double> l1(code.n), l2(code.n);
    BinaryDecodeResult r1, r2;
    const int rounds = iterative ? cfg.mud_exchange_rounds : 1;
    for (int round = 0; round < rounds; ++round) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto [a, b] =
                demap_user_bit_llr(y[i], sets[re.block_of(i)], noise_var,
                                   std::span(pri1).subspan(i * L, L),
                                   std::span(pri2).subspan(i * L, L));
            std::copy(a.begin(), a.end(), l1.begin() + i * L);
            std::copy(b.begin(), b.end(), l2.begin() + i * L);
        }
        r1 = decode_binary_spa(l1, code, cfg.decoder);
        r2 = decode_binary_spa(l2, code, cfg.decoder);
        out.iterations += r1.iterations + r2.iterations;
        if (r1.converged && r2.converged) break;
        for (std::size_t v = 0; v < code.n; ++v) {
            pri1[v] = std::clamp(r1.posterior_llrs[v] - l1[v], -detail::kLlrCap, detail::kLlrCap);
            pri2[v] = std::clamp(r2.posterior_llrs[v] - l2[v], -detail::kLlrCap, detail::kLlrCap);
        }
    }
    out.converged = r1.converged && r2.converged;
    out.nc_symbols.resize(code.n);
    for (std::size_t v = 0; v < code.n; ++v) out.nc_symbols[v] = r1.bits[v] ^ r2.bits[v];
    out.map = NcMap::xor_map(Alphabet::gf(1));
    return out;
}

/// Deterministic candidate order for NC-CD coefficient pairs: the
/// effective-minimum-distance argmax first (selected strategy), then the
/// remaining unit pairs in lexicographic order.
inline std::vector<NcMap> nc_cd_candidates(const Constellation& ca, const Constellation& cb,
                                           const ChannelRealization& re, const Alphabet& alphabet,
                                           CoeffStrategy strategy, double tolerance) {
    std::vector<NcMap> cands;
    if (strategy == CoeffStrategy::selected)
        cands.push_back(select_coefficients(ca, cb, re.h1[0], re.h2[0], alphabet, tolerance));
    for (unsigned a : alphabet.units())
        for (unsigned b : alphabet.units()) {
            if (!cands.empty() && cands.front().a == a && cands.front().b == b &&
                strategy == CoeffStrategy::selected)
                continue;
            cands.emplace_back(alphabet, a, b);
        }
    return cands;
}

/// NC-CD: demap NC-symbol beliefs under a candidate coefficient pair and
/// run C-SPA; stop at the first zero-syndrome success. On total failure
/// the first attempt's hard decision is returned flagged unconverged.
inline RelayOutput receive_nc_cd(std::span<const cplx> y, const LdpcCode& code,
                                 const Constellation& ca, const Constellation& cb,
                                 const ChannelRealization& re, double noise_var,
                                 const RelayConfig& cfg) {
    const unsigned M = ca.order();
    detail::require_nonbinary(code, y.size(), M);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);
    const auto candidates =
        nc_cd_candidates(ca, cb, re, code.alphabet, cfg.coeff_strategy, cfg.merge_tolerance);

    RelayOutput out;
    out.attempts = 0;
    std::optional<RelayOutput> fallback;
    std::vector<double> beliefs(code.n * static_cast<std::size_t>(M));
    for (const auto& map : candidates) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto p = demap_nc_symbol_prob(y[i], sets[re.block_of(i)], map, noise_var);
            std::copy(p.begin(), p.end(), beliefs.begin() + i * M);
        }
        auto r = decode_cspa(beliefs, code, cfg.decoder);
        ++out.attempts;
        out.iterations += r.iterations;
        if (r.converged) {
            out.nc_symbols = std::move(r.symbols);
            out.converged = true;
            out.map = map;
            return out;
        }
        if (!fallback) {
            fallback = out;
            fallback->nc_symbols = std::move(r.symbols);
            fallback->map = map;
        }
    }
    fallback->attempts = out.attempts;
    fallback->iterations = out.iterations;
    fallback->converged = false;
    return *fallback;
}

/// CD-NC: demap the M^2 transmission-pair beliefs, decode the pair vector
/// with G-SPA, then map the per-position argmax pairs to NC symbols with
/// the selected coefficients.
inline RelayOutput receive_cd_nc(std::span<const cplx> y, const LdpcCode& code,
                                 const Constellation& ca, const Constellation& cb,
                                 const ChannelRealization& re, double noise_var,
                                 const RelayConfig& cfg) {
    const unsigned M = ca.order();
    detail::require_nonbinary(code, y.size(), M);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);

    std::vector<double> beliefs(code.n * static_cast<std::size_t>(M) * M);
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto p = demap_pair_prob(y[i], sets[re.block_of(i)], noise_var);
        std::copy(p.begin(), p.end(), beliefs.begin() + i * M * M);
    }
    auto r = decode_gspa(beliefs, code, cfg.decoder);

    RelayOutput out;
    out.converged = r.converged;
    out.iterations = r.iterations;
    out.map = select_coefficients(ca, cb, re.h1[0], re.h2[0], code.alphabet, cfg.merge_tolerance);
    out.nc_symbols.resize(code.n);
    for (std::size_t i = 0; i < code.n; ++i)
        out.nc_symbols[i] = out.map(r.symbols[i] / M, r.symbols[i] % M);
    return out;
}

/// MUD-NC: marginalize the pair beliefs per user, run two C-SPA decodes,
/// and map the decoded codewords.
inline RelayOutput receive_mud_nc(std::span<const cplx> y, const LdpcCode& code,
                                  const Constellation& ca, const Constellation& cb,
                                  const ChannelRealization& re, double noise_var,
                                  const RelayConfig& cfg) {
    const unsigned M = ca.order();
    detail::require_nonbinary(code, y.size(), M);
    const auto sets = build_block_sets(ca, cb, re, cfg.merge_tolerance);
    for (const auto& s : sets)
        if (!s.unique_pair())
            throw std::domain_error("receive_mud_nc: constellation design is not unique-pair");

    std::vector<double> b1(code.n * static_cast<std::size_t>(M), 0.0), b2 = b1;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const auto p = demap_pair_prob(y[i], sets[re.block_of(i)], noise_var);
        for (unsigned s1 = 0; s1 < M; ++s1)
            for (unsigned s2 = 0; s2 < M; ++s2) {
                b1[i * M + s1] += p[s1 * M + s2];
                b2[i * M + s2] += p[s1 * M + s2];
            }
    }
    auto r1 = decode_cspa(b1, code, cfg.decoder);
    auto r2 = decode_cspa(b2, code, cfg.decoder);

    RelayOutput out;
    out.converged = r1.converged && r2.converged;
    out.iterations = r1.iterations + r2.iterations;
    out.map = NcMap(code.alphabet, 1, 1);
    out.nc_symbols.resize(code.n);
    for (std::size_t i = 0; i < code.n; ++i)
        out.nc_symbols[i] = out.map(r1.symbols[i], r2.symbols[i]);
    return out;
}

} // namespace pnc
