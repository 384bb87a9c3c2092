#pragma once

// Belief-propagation decoder family: binary sum-product in the LLR domain,
// the nonbinary sum-product algorithm over the code alphabet (C-SPA), and
// its generalization over the transmission-pair alphabet (G-SPA) with
// direct, transform-domain, or extended-min-sum check updates.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/group.hpp"
#include "pnc/ldpc.hpp"

namespace pnc {

enum class CheckUpdate { direct, fft, ems };

struct DecoderConfig {
    int max_iter = 150;
    CheckUpdate check_update = CheckUpdate::direct;
    unsigned ems_list_size = 0; // n_m; 0 means the full alphabet
    double ems_offset = 0.0;    // floor compensation below the n_m-th value
    double damping = 1.0;       // 1.0 = no damping
    bool early_stop = true;
};

struct DecodeResult {
    std::vector<unsigned> symbols;
    bool converged = false;
    int iterations = 0;
    std::uint64_t check_ops = 0; // multiply-add count inside check updates
};

struct BinaryDecodeResult {
    std::vector<unsigned> bits;
    bool converged = false;
    int iterations = 0;
    std::vector<double> posterior_llrs;
};

namespace detail {

inline void normalize_or_uniform(std::span<double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    if (!(s > 0.0) || !std::isfinite(s)) {
        const double u = 1.0 / static_cast<double>(v.size());
        std::fill(v.begin(), v.end(), u);
        return;
    }
    const double inv = 1.0 / s;
    for (double& x : v) x *= inv;
}

/// argmax with lowest-value tie break; reports whether a tie occurred.
inline unsigned argmax_lowest(std::span<const double> v, bool& tie) {
    unsigned best = 0;
    tie = false;
    for (unsigned i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) {
            best = i;
            tie = false;
        } else if (v[i] == v[best]) {
            tie = true;
        }
    }
    if (std::isnan(v[best])) tie = true;
    return best;
}

struct EdgeLayout {
    std::vector<std::uint32_t> row_edge_begin;       // per check, first edge id
    std::vector<std::vector<std::uint32_t>> var_edges; // per var, incident edge ids
    std::size_t edges = 0;

    explicit EdgeLayout(const LdpcCode& code) {
        row_edge_begin.resize(code.rows.size() + 1, 0);
        var_edges.assign(code.n, {});
        std::uint32_t e = 0;
        for (std::size_t r = 0; r < code.rows.size(); ++r) {
            row_edge_begin[r] = e;
            for (const auto& entry : code.rows[r]) var_edges[entry.index].push_back(e++);
        }
        row_edge_begin[code.rows.size()] = e;
        edges = e;
    }
};

inline bool hard_decision_valid(const LdpcCode& code, const SymbolGroup& grp,
                                std::span<const unsigned> hard) {
    std::vector<unsigned> stream(code.n);
    for (unsigned comp = 0; comp < grp.components(); ++comp) {
        for (std::size_t i = 0; i < code.n; ++i) stream[i] = grp.component(comp, hard[i]);
        if (!in_nullspace(code, stream)) return false;
    }
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Standalone check-node kernels (leave-one-out group convolutions of the
// d permuted incoming messages). Exposed for transform-equivalence and
// complexity instrumentation; the decoders use the same code paths.
// ---------------------------------------------------------------------------

/// Direct-form check update: out_j = convolution of all messages but j.
/// Messages and outputs are d rows of grp.size() probabilities, row-major.
inline std::vector<double> check_update_direct(const SymbolGroup& grp,
                                               std::span<const double> msgs, unsigned d,
                                               std::uint64_t* ops = nullptr) {
    const unsigned q = grp.size();
    if (msgs.size() != static_cast<std::size_t>(d) * q)
        throw std::invalid_argument("check_update_direct: size mismatch");
    if (d < 2) throw std::invalid_argument("check update needs degree >= 2");
    std::vector<double> pre((d - 1) * q), suf((d - 1) * q), out(d * q);
    std::copy(msgs.begin(), msgs.begin() + q, pre.begin());
    for (unsigned j = 1; j + 1 < d; ++j)
        grp.convolve_direct(std::span(pre).subspan((j - 1) * q, q), msgs.subspan(j * q, q),
                            std::span(pre).subspan(j * q, q), ops);
    std::copy(msgs.end() - q, msgs.end(), suf.end() - q);
    for (unsigned j = d - 2; j >= 1; --j)
        grp.convolve_direct(msgs.subspan(j * q, q), std::span(suf).subspan(j * q, q),
                            std::span(suf).subspan((j - 1) * q, q), ops);
    std::copy(suf.begin(), suf.begin() + q, out.begin());
    std::copy(pre.end() - q, pre.end(), out.begin() + (d - 1) * q);
    for (unsigned j = 1; j + 1 < d; ++j)
        grp.convolve_direct(std::span(pre).subspan((j - 1) * q, q),
                            std::span(suf).subspan(j * q, q), std::span(out).subspan(j * q, q),
                            ops);
    return out;
}

/// Transform-domain check update, identical contract to the direct form.
/// XOR groups use the Walsh-Hadamard transform; Z_M groups the DFT along
/// each pair coordinate (the 2D-FFT update for pair alphabets).
inline std::vector<double> check_update_fft(const SymbolGroup& grp, std::span<const double> msgs,
                                            unsigned d, std::uint64_t* ops = nullptr) {
    const unsigned q = grp.size();
    if (msgs.size() != static_cast<std::size_t>(d) * q)
        throw std::invalid_argument("check_update_fft: size mismatch");
    if (d < 2) throw std::invalid_argument("check update needs degree >= 2");
    std::vector<double> out(d * q);
    if (grp.is_xor()) {
        std::vector<double> spec(d * q), pre((d - 1) * q), suf((d - 1) * q), tmp(q);
        std::copy(msgs.begin(), msgs.end(), spec.begin());
        for (unsigned j = 0; j < d; ++j) grp.wht(std::span(spec).subspan(j * q, q), ops);
        auto mulrows = [&](const double* a, const double* b, double* dst) {
            for (unsigned i = 0; i < q; ++i) dst[i] = a[i] * b[i];
            if (ops) *ops += q;
        };
        std::copy(spec.begin(), spec.begin() + q, pre.begin());
        for (unsigned j = 1; j + 1 < d; ++j)
            mulrows(&pre[(j - 1) * q], &spec[j * q], &pre[j * q]);
        std::copy(spec.end() - q, spec.end(), suf.end() - q);
        for (unsigned j = d - 2; j >= 1; --j)
            mulrows(&spec[j * q], &suf[j * q], &suf[(j - 1) * q]);
        const double scale = 1.0 / q;
        for (unsigned j = 0; j < d; ++j) {
            if (j == 0)
                std::copy(suf.begin(), suf.begin() + q, tmp.begin());
            else if (j == d - 1)
                std::copy(pre.end() - q, pre.end(), tmp.begin());
            else
                mulrows(&pre[(j - 1) * q], &suf[j * q], tmp.data());
            grp.wht(tmp, ops);
            for (unsigned i = 0; i < q; ++i) out[j * q + i] = tmp[i] * scale;
        }
    } else {
        std::vector<std::complex<double>> spec(d * q), pre((d - 1) * q), suf((d - 1) * q), tmp(q);
        for (std::size_t i = 0; i < msgs.size(); ++i) spec[i] = msgs[i];
        for (unsigned j = 0; j < d; ++j) grp.dft(std::span(spec).subspan(j * q, q), false, ops);
        auto mulrows = [&](const std::complex<double>* a, const std::complex<double>* b,
                           std::complex<double>* dst) {
            for (unsigned i = 0; i < q; ++i) dst[i] = a[i] * b[i];
            if (ops) *ops += q;
        };
        std::copy(spec.begin(), spec.begin() + q, pre.begin());
        for (unsigned j = 1; j + 1 < d; ++j)
            mulrows(&pre[(j - 1) * q], &spec[j * q], &pre[j * q]);
        std::copy(spec.end() - q, spec.end(), suf.end() - q);
        for (unsigned j = d - 2; j >= 1; --j)
            mulrows(&spec[j * q], &suf[j * q], &suf[(j - 1) * q]);
        for (unsigned j = 0; j < d; ++j) {
            if (j == 0)
                std::copy(suf.begin(), suf.begin() + q, tmp.begin());
            else if (j == d - 1)
                std::copy(pre.end() - q, pre.end(), tmp.begin());
            else
                mulrows(&pre[(j - 1) * q], &suf[j * q], tmp.data());
            grp.dft(tmp, true, ops);
            for (unsigned i = 0; i < q; ++i) out[j * q + i] = std::max(tmp[i].real(), 0.0);
        }
    }
    return out;
}

/// Pair-alphabet names for the G-SPA check updates.
inline std::vector<double> gspa_check_update_2dfft(const SymbolGroup& pair_grp,
                                                   std::span<const double> msgs, unsigned d,
                                                   std::uint64_t* ops = nullptr) {
    return check_update_fft(pair_grp, msgs, d, ops);
}
inline std::vector<double> gspa_check_update_direct(const SymbolGroup& pair_grp,
                                                    std::span<const double> msgs, unsigned d,
                                                    std::uint64_t* ops = nullptr) {
    return check_update_direct(pair_grp, msgs, d, ops);
}

// ---------------------------------------------------------------------------
// Extended min-sum: log-domain check update keeping only the n_m most
// reliable entries per message, the rest floored a configurable offset
// below the n_m-th value.
// ---------------------------------------------------------------------------

namespace detail {

struct EmsScratch {
    std::vector<std::uint32_t> top_f, top_g, order;
};

/// Max-sum convolution of two log-domain messages restricted to their top
/// n_m entries; entries outside the candidate set fall back to the floor
/// combinations. Output is not normalized.
inline void ems_max_conv(const SymbolGroup& grp, std::span<const double> f,
                         std::span<const double> g, unsigned n_m, double offset,
                         std::span<double> out, EmsScratch& scratch) {
    const unsigned q = grp.size();
    const unsigned keep = std::min(n_m == 0 ? q : n_m, q);
    auto top_indices = [&](std::span<const double> v, std::vector<std::uint32_t>& idx) {
        idx.resize(q);
        for (unsigned i = 0; i < q; ++i) idx[i] = i;
        std::partial_sort(idx.begin(), idx.begin() + keep, idx.end(),
                          [&](std::uint32_t a, std::uint32_t b) {
                              return v[a] > v[b] || (v[a] == v[b] && a < b);
                          });
        idx.resize(keep);
    };
    top_indices(f, scratch.top_f);
    top_indices(g, scratch.top_g);
    const double floor_f = f[scratch.top_f[keep - 1]] - offset;
    const double floor_g = g[scratch.top_g[keep - 1]] - offset;
    const double fmax = f[scratch.top_f[0]], gmax = g[scratch.top_g[0]];

    const double base = std::max(fmax + floor_g, floor_f + gmax);
    std::fill(out.begin(), out.end(), base);
    for (std::uint32_t x : scratch.top_f) {
        const double fx = f[x];
        for (std::uint32_t y : scratch.top_g) {
            const unsigned z = grp.add(x, y);
            const double cand = fx + g[y];
            if (cand > out[z]) out[z] = cand;
        }
    }
}

} // namespace detail

/// EMS leave-one-out check update on d permuted log-domain messages;
/// outputs are normalized so the maximum log value is 0.
inline std::vector<double> gspa_check_update_ems(const SymbolGroup& grp,
                                                 std::span<const double> msgs, unsigned d,
                                                 unsigned n_m, double offset = 0.0) {
    const unsigned q = grp.size();
    if (msgs.size() != static_cast<std::size_t>(d) * q)
        throw std::invalid_argument("gspa_check_update_ems: size mismatch");
    if (d < 2) throw std::invalid_argument("check update needs degree >= 2");
    detail::EmsScratch scratch;
    std::vector<double> pre((d - 1) * q), suf((d - 1) * q), out(d * q);
    std::copy(msgs.begin(), msgs.begin() + q, pre.begin());
    for (unsigned j = 1; j + 1 < d; ++j)
        detail::ems_max_conv(grp, std::span(pre).subspan((j - 1) * q, q), msgs.subspan(j * q, q),
                             n_m, offset, std::span(pre).subspan(j * q, q), scratch);
    std::copy(msgs.end() - q, msgs.end(), suf.end() - q);
    for (unsigned j = d - 2; j >= 1; --j)
        detail::ems_max_conv(grp, msgs.subspan(j * q, q), std::span(suf).subspan(j * q, q), n_m,
                             offset, std::span(suf).subspan((j - 1) * q, q), scratch);
    std::copy(suf.begin(), suf.begin() + q, out.begin());
    std::copy(pre.end() - q, pre.end(), out.begin() + (d - 1) * q);
    for (unsigned j = 1; j + 1 < d; ++j)
        detail::ems_max_conv(grp, std::span(pre).subspan((j - 1) * q, q),
                             std::span(suf).subspan(j * q, q), n_m, offset,
                             std::span(out).subspan(j * q, q), scratch);
    for (unsigned j = 0; j < d; ++j) {
        auto row = std::span(out).subspan(j * q, q);
        const double mx = *std::max_element(row.begin(), row.end());
        for (double& x : row) x -= mx;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Binary sum-product decoder (LLR domain, flooding schedule).
// Convention: positive LLR means bit 0 is more likely.
// ---------------------------------------------------------------------------

inline BinaryDecodeResult decode_binary_spa(std::span<const double> bit_llrs,
                                            const LdpcCode& code, const DecoderConfig& cfg) {
    if (code.alphabet.size() != 2)
        throw std::invalid_argument("decode_binary_spa: code must be over GF(2)");
    if (bit_llrs.size() != code.n)
        throw std::invalid_argument("decode_binary_spa: llr length mismatch");

    const detail::EdgeLayout layout(code);
    const std::size_t m = code.checks();
    std::vector<double> V(layout.edges), R(layout.edges, 0.0);
    std::vector<double> in(bit_llrs.begin(), bit_llrs.end());

    BinaryDecodeResult res;
    res.bits.assign(code.n, 0);
    res.posterior_llrs.assign(code.n, 0.0);

    for (std::size_t v = 0; v < code.n; ++v)
        for (auto e : layout.var_edges[v]) V[e] = in[v];

    std::vector<double> t;
    std::vector<unsigned> hard(code.n, 0);
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        // check nodes: tanh rule via leave-one-out products
        for (std::size_t r = 0; r < m; ++r) {
            const auto e0 = layout.row_edge_begin[r], e1 = layout.row_edge_begin[r + 1];
            const unsigned d = e1 - e0;
            t.assign(d, 0.0);
            double prod = 1.0;
            for (unsigned j = 0; j < d; ++j) {
                double x = std::tanh(0.5 * V[e0 + j]);
                x = std::clamp(x, -(1.0 - 1e-15), 1.0 - 1e-15);
                t[j] = x;
                prod *= x;
            }
            for (unsigned j = 0; j < d; ++j) {
                const double rest = prod / t[j];
                const double fresh = 2.0 * std::atanh(std::clamp(rest, -(1.0 - 1e-15), 1.0 - 1e-15));
                R[e0 + j] = cfg.damping * fresh + (1.0 - cfg.damping) * R[e0 + j];
            }
        }
        // variable nodes
        bool any_tie = false;
        for (std::size_t v = 0; v < code.n; ++v) {
            double total = in[v];
            for (auto e : layout.var_edges[v]) total += R[e];
            res.posterior_llrs[v] = total;
            hard[v] = total < 0.0 ? 1u : 0u;
            if (total == 0.0 || std::isnan(total)) any_tie = true;
            for (auto e : layout.var_edges[v]) V[e] = total - R[e];
        }
        res.iterations = iter;
        if (cfg.early_stop && !any_tie && in_nullspace(code, hard)) {
            res.converged = true;
            break;
        }
    }
    res.bits = hard;
    return res;
}

// ---------------------------------------------------------------------------
// Group sum-product engine shared by C-SPA and G-SPA.
// ---------------------------------------------------------------------------

namespace detail {

inline DecodeResult decode_group_prob(const LdpcCode& code, const SymbolGroup& grp,
                                      std::span<const double> beliefs, const DecoderConfig& cfg) {
    const unsigned q = grp.size();
    if (beliefs.size() != code.n * static_cast<std::size_t>(q))
        throw std::invalid_argument("decode: belief length mismatch");
    const EdgeLayout layout(code);
    const std::size_t m = code.checks();
    const Alphabet& A = code.alphabet;

    std::vector<double> prior(beliefs.begin(), beliefs.end());
    for (std::size_t v = 0; v < code.n; ++v)
        normalize_or_uniform(std::span(prior).subspan(v * q, q));

    std::vector<double> V(layout.edges * q), R(layout.edges * q, 1.0 / q);
    for (std::size_t v = 0; v < code.n; ++v)
        for (auto e : layout.var_edges[v])
            std::copy_n(prior.begin() + v * q, q, V.begin() + static_cast<std::size_t>(e) * q);

    DecodeResult res;
    res.symbols.assign(code.n, 0);
    std::vector<unsigned> hard(code.n, 0);
    std::vector<double> z, fresh, post(q), acc(q);

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        for (std::size_t r = 0; r < m; ++r) {
            const auto e0 = layout.row_edge_begin[r];
            const unsigned d = layout.row_edge_begin[r + 1] - e0;
            z.assign(static_cast<std::size_t>(d) * q, 0.0);
            for (unsigned j = 0; j < d; ++j) {
                const unsigned h = code.rows[r][j].value;
                const double* src = &V[static_cast<std::size_t>(e0 + j) * q];
                double* dst = &z[static_cast<std::size_t>(j) * q];
                for (unsigned s = 0; s < q; ++s) dst[grp.act(h, s)] = src[s];
            }
            fresh = cfg.check_update == CheckUpdate::fft
                        ? check_update_fft(grp, z, d, &res.check_ops)
                        : check_update_direct(grp, z, d, &res.check_ops);
            for (unsigned j = 0; j < d; ++j) {
                const unsigned h = code.rows[r][j].value;
                const double* cj = &fresh[static_cast<std::size_t>(j) * q];
                double* out = &R[static_cast<std::size_t>(e0 + j) * q];
                for (unsigned s = 0; s < q; ++s) {
                    const double val = cj[grp.neg(grp.act(h, s))];
                    out[s] = cfg.damping * val + (1.0 - cfg.damping) * out[s];
                }
                normalize_or_uniform(std::span(out, q));
            }
        }
        bool any_tie = false;
        for (std::size_t v = 0; v < code.n; ++v) {
            const double* pv = &prior[v * q];
            const auto& edges = layout.var_edges[v];
            std::copy_n(pv, q, post.begin());
            for (auto e : edges) {
                const double* rm = &R[static_cast<std::size_t>(e) * q];
                for (unsigned s = 0; s < q; ++s) post[s] *= rm[s];
            }
            normalize_or_uniform(post);
            bool tie = false;
            hard[v] = argmax_lowest(post, tie);
            any_tie = any_tie || tie;
            // outgoing messages: divide the posterior product by each
            // incoming factor via leave-one-out products
            for (std::size_t i = 0; i < edges.size(); ++i) {
                std::copy_n(pv, q, acc.begin());
                for (std::size_t j = 0; j < edges.size(); ++j) {
                    if (j == i) continue;
                    const double* rm = &R[static_cast<std::size_t>(edges[j]) * q];
                    for (unsigned s = 0; s < q; ++s) acc[s] *= rm[s];
                }
                double* out = &V[static_cast<std::size_t>(edges[i]) * q];
                std::copy_n(acc.begin(), q, out);
                normalize_or_uniform(std::span(out, q));
            }
        }
        res.iterations = iter;
#ifndef NDEBUG
        for (std::size_t e = 0; e < layout.edges; ++e) {
            double s = 0.0;
            for (unsigned x = 0; x < q; ++x) s += R[e * q + x];
            assert(std::abs(s - 1.0) <= 1e-6);
        }
#endif
        if (cfg.early_stop && !any_tie && hard_decision_valid(code, grp, hard)) {
            res.converged = true;
            break;
        }
    }
    res.symbols = hard;
    (void)A;
    return res;
}

inline DecodeResult decode_group_ems(const LdpcCode& code, const SymbolGroup& grp,
                                     std::span<const double> beliefs, const DecoderConfig& cfg) {
    const unsigned q = grp.size();
    if (beliefs.size() != code.n * static_cast<std::size_t>(q))
        throw std::invalid_argument("decode: belief length mismatch");
    const EdgeLayout layout(code);
    const std::size_t m = code.checks();
    const unsigned n_m = cfg.ems_list_size == 0 ? q : std::min(cfg.ems_list_size, q);
    constexpr double kLogFloor = -1e4;

    // log-domain priors, normalized so the maximum is 0
    std::vector<double> prior(code.n * static_cast<std::size_t>(q));
    for (std::size_t v = 0; v < code.n; ++v) {
        double mx = -std::numeric_limits<double>::infinity();
        for (unsigned s = 0; s < q; ++s) mx = std::max(mx, beliefs[v * q + s]);
        for (unsigned s = 0; s < q; ++s) {
            const double p = beliefs[v * q + s];
            prior[v * q + s] = p > 0.0 && mx > 0.0 ? std::max(std::log(p / mx), kLogFloor)
                                                   : kLogFloor;
        }
    }

    std::vector<double> V(layout.edges * q), R(layout.edges * q, 0.0);
    for (std::size_t v = 0; v < code.n; ++v)
        for (auto e : layout.var_edges[v])
            std::copy_n(prior.begin() + v * q, q, V.begin() + static_cast<std::size_t>(e) * q);

    DecodeResult res;
    res.symbols.assign(code.n, 0);
    std::vector<unsigned> hard(code.n, 0);
    std::vector<double> z, post(q);

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        for (std::size_t r = 0; r < m; ++r) {
            const auto e0 = layout.row_edge_begin[r];
            const unsigned d = layout.row_edge_begin[r + 1] - e0;
            z.assign(static_cast<std::size_t>(d) * q, 0.0);
            for (unsigned j = 0; j < d; ++j) {
                const unsigned h = code.rows[r][j].value;
                const double* src = &V[static_cast<std::size_t>(e0 + j) * q];
                double* dst = &z[static_cast<std::size_t>(j) * q];
                for (unsigned s = 0; s < q; ++s) dst[grp.act(h, s)] = src[s];
            }
            const auto fresh = gspa_check_update_ems(grp, z, d, n_m, cfg.ems_offset);
            for (unsigned j = 0; j < d; ++j) {
                const unsigned h = code.rows[r][j].value;
                const double* cj = &fresh[static_cast<std::size_t>(j) * q];
                double* out = &R[static_cast<std::size_t>(e0 + j) * q];
                double mx = -std::numeric_limits<double>::infinity();
                for (unsigned s = 0; s < q; ++s) {
                    const double val = cj[grp.neg(grp.act(h, s))];
                    out[s] = cfg.damping * val + (1.0 - cfg.damping) * out[s];
                    mx = std::max(mx, out[s]);
                }
                for (unsigned s = 0; s < q; ++s) out[s] -= mx;
            }
        }
        bool any_tie = false;
        for (std::size_t v = 0; v < code.n; ++v) {
            const double* pv = &prior[v * q];
            const auto& edges = layout.var_edges[v];
            std::copy_n(pv, q, post.begin());
            for (auto e : edges) {
                const double* rm = &R[static_cast<std::size_t>(e) * q];
                for (unsigned s = 0; s < q; ++s) post[s] += rm[s];
            }
            bool tie = false;
            hard[v] = argmax_lowest(post, tie);
            any_tie = any_tie || tie;
            for (auto e : edges) {
                const double* rm = &R[static_cast<std::size_t>(e) * q];
                double* out = &V[static_cast<std::size_t>(e) * q];
                double mx = -std::numeric_limits<double>::infinity();
                for (unsigned s = 0; s < q; ++s) {
                    out[s] = post[s] - rm[s];
                    mx = std::max(mx, out[s]);
                }
                for (unsigned s = 0; s < q; ++s) out[s] = std::max(out[s] - mx, kLogFloor);
            }
        }
        res.iterations = iter;
        if (cfg.early_stop && !any_tie && hard_decision_valid(code, grp, hard)) {
            res.converged = true;
            break;
        }
    }
    res.symbols = hard;
    return res;
}

} // namespace detail

/// Conventional sum-product over the code alphabet. Beliefs are n rows of
/// alphabet-size probabilities, row-major.
inline DecodeResult decode_cspa(std::span<const double> beliefs, const LdpcCode& code,
                                const DecoderConfig& cfg) {
    const SymbolGroup grp = SymbolGroup::single(code.alphabet);
    return cfg.check_update == CheckUpdate::ems ? detail::decode_group_ems(code, grp, beliefs, cfg)
                                                : detail::decode_group_prob(code, grp, beliefs, cfg);
}

/// Generalized sum-product over the transmission-pair alphabet of size
/// M^2. A pair vector is valid iff each coordinate stream satisfies H;
/// the result symbols are flattened pairs s1*M + s2.
inline DecodeResult decode_gspa(std::span<const double> pair_beliefs, const LdpcCode& code,
                                const DecoderConfig& cfg) {
    const SymbolGroup grp = SymbolGroup::pair(code.alphabet);
    return cfg.check_update == CheckUpdate::ems
               ? detail::decode_group_ems(code, grp, pair_beliefs, cfg)
               : detail::decode_group_prob(code, grp, pair_beliefs, cfg);
}

} // namespace pnc
