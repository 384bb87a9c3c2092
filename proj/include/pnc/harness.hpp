#pragma once

// Monte Carlo engine: frame simulation for every receiver scheme, per-SNR
// sweeps with a frame-error stopping rule, deterministic parallelism over
// frames, and CSV emission with a JSON config sidecar.

#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pnc/ldpc.hpp"
#include "pnc/receivers.hpp"

namespace pnc {

enum class Scheme { xor_cd, iter_xor_cd, mud_xor, nc_cd, cd_nc, mud_nc };

inline const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::xor_cd: return "xor-cd";
        case Scheme::iter_xor_cd: return "iter-xor-cd";
        case Scheme::mud_xor: return "mud-xor";
        case Scheme::nc_cd: return "nc-cd";
        case Scheme::cd_nc: return "cd-nc";
        case Scheme::mud_nc: return "mud-nc";
    }
    return "?";
}

inline bool scheme_is_binary(Scheme s) {
    return s == Scheme::xor_cd || s == Scheme::iter_xor_cd || s == Scheme::mud_xor;
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModulationConfig {
    enum class Kind { psk, pam };
    Kind kind = Kind::psk;
    unsigned M = 8;
    double rotation_a = 0.0, rotation_b = 0.0;     // PSK
    std::vector<double> spacings_a, spacings_b;    // PAM; empty = uniform
};

struct CodeConfig {
    std::size_t n = 2064, k = 1032;
    unsigned dv = 3, dc = 6;
    std::uint64_t seed = 1;
    enum class AlphabetChoice { autodetect, field, ring } alphabet = AlphabetChoice::autodetect;
};

struct StoppingRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 1000000;
};

struct SimulationConfig {
    Scheme scheme = Scheme::xor_cd;
    ModulationConfig modulation;
    CodeConfig code;
    ChannelModel channel = ChannelModel::awgn();
    std::vector<double> snr_grid_db;
    StoppingRule stopping;
    RelayConfig relay;
    std::uint64_t master_seed = 1;
    unsigned threads = 1;        // 0 = hardware concurrency
    bool record_timing = false;  // keep CSV byte-reproducible by default
    bool force_noiseless = false; // debug: zero the channel noise
};

struct PointResult {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0, fer = 0.0;
    double mean_iters = 0.0;
    double seconds = 0.0;
};

struct SweepResult {
    std::vector<PointResult> rows;
    std::uint64_t master_seed = 0;
    std::uint64_t config_hash = 0;
};

// ---------------------------------------------------------------------------
// Configuration resolution
// ---------------------------------------------------------------------------

/// Code alphabet implied by scheme and modulation: GF(2) for the
/// binary-coded schemes, GF(M) for M-PSK CM schemes, Z_M for M-PAM CM
/// schemes (coding/mapping consistency).
inline Alphabet resolve_alphabet(const SimulationConfig& cfg) {
    if (scheme_is_binary(cfg.scheme)) {
        if (cfg.code.alphabet == CodeConfig::AlphabetChoice::ring)
            throw ConfigError("binary-coded scheme requires a GF(2) code, not a ring");
        return Alphabet::gf(1);
    }
    const unsigned M = cfg.modulation.M;
    if (cfg.modulation.kind == ModulationConfig::Kind::psk) {
        if (cfg.code.alphabet == CodeConfig::AlphabetChoice::ring)
            throw ConfigError("M-PSK CM-PNC codes over GF(M); ring alphabet contradicts the NC map");
        unsigned r = 0;
        while ((1u << r) < M) ++r;
        return Alphabet::gf(r);
    }
    if (cfg.code.alphabet == CodeConfig::AlphabetChoice::field)
        throw ConfigError("M-PAM CM-PNC codes over Z_M; field alphabet contradicts the NC map");
    return Alphabet::ring(M);
}

inline void validate(const SimulationConfig& cfg) {
    const auto& m = cfg.modulation;
    if (m.M < 2 || m.M > 16 || (m.M & (m.M - 1)) != 0)
        throw ConfigError("modulation order must be a power of 2 in [2, 16]");
    if (cfg.snr_grid_db.empty()) throw ConfigError("SNR grid is empty");
    if (cfg.stopping.min_frame_errors < 1) throw ConfigError("min_frame_errors must be >= 1");
    if (cfg.code.k == 0 || cfg.code.k >= cfg.code.n) throw ConfigError("need 0 < k < n");
    if (cfg.code.n * cfg.code.dv != (cfg.code.n - cfg.code.k) * cfg.code.dc)
        throw ConfigError("degree equation n*dv = (n-k)*dc violated");
    const Alphabet alph = resolve_alphabet(cfg);
    if (scheme_is_binary(cfg.scheme)) {
        unsigned L = 0;
        while ((1u << L) < m.M) ++L;
        if (cfg.code.n % L != 0)
            throw ConfigError("binary code length must be a multiple of bits per symbol");
    } else if (alph.size() != m.M) {
        throw ConfigError("nonbinary code alphabet size must equal M");
    }
    if (cfg.relay.decoder.max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (cfg.relay.outer_iters < 1 || cfg.relay.inner_iters < 1)
        throw ConfigError("outer/inner iteration counts must be >= 1");
    if (cfg.channel.kind == ChannelModel::Kind::block_rayleigh && cfg.channel.blocks < 1)
        throw ConfigError("block count must be >= 1");
}

// ---------------------------------------------------------------------------
// Prepared simulation state (code and constellations built once per sweep)
// ---------------------------------------------------------------------------

struct Prepared {
    SimulationConfig cfg;
    LdpcCode code;
    Constellation ca, cb;
    unsigned bits_per_symbol = 1;
    std::size_t n_symbols = 0;

    static Prepared build(const SimulationConfig& cfg) {
        validate(cfg);
        Prepared p{cfg,
                   construct_regular(cfg.code.n, cfg.code.k, cfg.code.dv, cfg.code.dc,
                                     resolve_alphabet(cfg), cfg.code.seed),
                   psk_gray(2), psk_gray(2)};
        const auto& m = cfg.modulation;
        if (m.kind == ModulationConfig::Kind::psk) {
            p.ca = psk_gray(m.M, m.rotation_a);
            p.cb = psk_gray(m.M, m.rotation_b);
        } else {
            p.ca = m.spacings_a.empty() ? pam_uniform(m.M) : pam(m.M, m.spacings_a);
            p.cb = m.spacings_b.empty() ? pam_uniform(m.M) : pam(m.M, m.spacings_b);
        }
        p.bits_per_symbol = p.ca.bits_per_symbol();
        p.n_symbols = scheme_is_binary(cfg.scheme) ? cfg.code.n / p.bits_per_symbol : cfg.code.n;
        return p;
    }
};

struct FrameStats {
    std::uint64_t bit_errors = 0;
    bool frame_error = false;
    int iterations = 0;
};

/// One multiple-access frame: draw both messages, encode, modulate,
/// superimpose, run the configured receiver, and count errors against the
/// NC message (the map of the two true codewords under the receiver's
/// coefficients), on the systematic positions.
inline FrameStats simulate_frame(const Prepared& p, double snr_db, std::size_t snr_index,
                                 std::uint64_t frame_index) {
    const auto& cfg = p.cfg;
    const std::uint64_t base = derive_seed(cfg.master_seed, snr_index, frame_index);
    const Alphabet& A = p.code.alphabet;
    const unsigned q = A.size();

    std::mt19937_64 msg_rng(derive_seed(base, 1));
    std::vector<unsigned> m1(p.code.k), m2(p.code.k);
    for (auto& s : m1) s = static_cast<unsigned>(uniform_below(msg_rng, q));
    for (auto& s : m2) s = static_cast<unsigned>(uniform_below(msg_rng, q));
    const auto c1 = encode(p.code, m1);
    const auto c2 = encode(p.code, m2);

    std::vector<cplx> x1, x2;
    if (scheme_is_binary(cfg.scheme)) {
        x1 = modulate_bits(c1, p.ca);
        x2 = modulate_bits(c2, p.cb);
    } else {
        x1 = modulate(c1, p.ca);
        x2 = modulate(c2, p.cb);
    }

    const auto realization = draw_realization(cfg.channel, p.n_symbols, derive_seed(base, 2));
    const double noise_var = cfg.force_noiseless ? 0.0 : snr_to_noise_var(snr_db);
    const auto y = transmit_mac(x1, x2, realization, noise_var, derive_seed(base, 3));

    RelayOutput out;
    switch (cfg.scheme) {
        case Scheme::xor_cd:
            out = receive_xor_cd(y, p.code, p.ca, p.cb, realization, noise_var, cfg.relay);
            break;
        case Scheme::iter_xor_cd:
            out = receive_iterative_xor_cd(y, p.code, p.ca, p.cb, realization, noise_var,
                                           cfg.relay);
            break;
        case Scheme::mud_xor:
            out = receive_mud_xor(y, p.code, p.ca, p.cb, realization, noise_var, cfg.relay,
                                  cfg.relay.mud_iterative);
            break;
        case Scheme::nc_cd:
            out = receive_nc_cd(y, p.code, p.ca, p.cb, realization, noise_var, cfg.relay);
            break;
        case Scheme::cd_nc:
            out = receive_cd_nc(y, p.code, p.ca, p.cb, realization, noise_var, cfg.relay);
            break;
        case Scheme::mud_nc:
            out = receive_mud_nc(y, p.code, p.ca, p.cb, realization, noise_var, cfg.relay);
            break;
    }

    FrameStats st;
    st.iterations = out.iterations;
    const unsigned bps = scheme_is_binary(cfg.scheme) ? 1u : A.bits_per_symbol();
    for (auto pos : p.code.info_positions()) {
        const unsigned truth = scheme_is_binary(cfg.scheme)
                                   ? (c1[pos] ^ c2[pos])
                                   : out.map(c1[pos], c2[pos]);
        const unsigned diff = truth ^ out.nc_symbols[pos];
        if (diff) {
            st.frame_error = true;
            st.bit_errors += static_cast<unsigned>(std::popcount(diff & ((1u << bps) - 1u)));
        }
    }
    return st;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// One SNR point. Frames are independent given their derived seed, so they
/// run on any number of workers; statistics are folded in frame order and
/// the stopping rule is applied to the ordered fold, making the result
/// identical for every thread count.
inline PointResult run_point_prepared(const Prepared& p, double snr_db, std::size_t snr_index) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& stop = p.cfg.stopping;
    const unsigned workers =
        p.cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : p.cfg.threads;

    PointResult row;
    row.snr_db = snr_db;
    std::uint64_t iter_sum = 0;
    std::uint64_t next_frame = 0;
    bool done = false;
    while (!done) {
        const std::uint64_t batch =
            std::min<std::uint64_t>(workers, stop.max_frames - next_frame);
        if (batch == 0) break;
        std::vector<FrameStats> results(batch);
        if (workers == 1 || batch == 1) {
            for (std::uint64_t i = 0; i < batch; ++i)
                results[i] = simulate_frame(p, snr_db, snr_index, next_frame + i);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    for (std::uint64_t i = t; i < batch; i += workers)
                        results[i] = simulate_frame(p, snr_db, snr_index, next_frame + i);
                });
            for (auto& th : pool) th.join();
        }
        for (std::uint64_t i = 0; i < batch; ++i) {
            row.frames += 1;
            row.bit_errors += results[i].bit_errors;
            row.frame_errors += results[i].frame_error ? 1 : 0;
            iter_sum += static_cast<std::uint64_t>(results[i].iterations);
            if (row.frame_errors >= stop.min_frame_errors || row.frames >= stop.max_frames) {
                done = true;
                break;
            }
        }
        next_frame += batch;
    }

    const unsigned bps = scheme_is_binary(p.cfg.scheme) ? 1u : p.code.alphabet.bits_per_symbol();
    const double bit_denom = static_cast<double>(row.frames) * p.cfg.code.k * bps;
    row.ber = row.frames ? static_cast<double>(row.bit_errors) / bit_denom : 0.0;
    row.fer = row.frames ? static_cast<double>(row.frame_errors) / row.frames : 0.0;
    row.mean_iters = row.frames ? static_cast<double>(iter_sum) / row.frames : 0.0;
    if (p.cfg.record_timing)
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

inline PointResult run_point(const SimulationConfig& cfg, double snr_db,
                             std::size_t snr_index = 0) {
    return run_point_prepared(Prepared::build(cfg), snr_db, snr_index);
}

/// Every resolved parameter in a canonical text form; the sidecar echo and
/// the config hash both derive from it.
inline std::string config_canonical_string(const SimulationConfig& cfg) {
    std::ostringstream os;
    os << "scheme=" << scheme_name(cfg.scheme);
    os << ";mod=" << (cfg.modulation.kind == ModulationConfig::Kind::psk ? "psk" : "pam");
    os << ";M=" << cfg.modulation.M;
    char buf[64];
    std::snprintf(buf, sizeof buf, ";rot_a=%.17g;rot_b=%.17g", cfg.modulation.rotation_a,
                  cfg.modulation.rotation_b);
    os << buf;
    os << ";spacings_a=";
    for (double s : cfg.modulation.spacings_a) os << s << ',';
    os << ";spacings_b=";
    for (double s : cfg.modulation.spacings_b) os << s << ',';
    os << ";n=" << cfg.code.n << ";k=" << cfg.code.k << ";dv=" << cfg.code.dv
       << ";dc=" << cfg.code.dc << ";code_seed=" << cfg.code.seed;
    os << ";alphabet=" << resolve_alphabet(cfg).describe();
    os << ";channel=" << (cfg.channel.kind == ChannelModel::Kind::awgn ? "awgn" : "block-rayleigh")
       << ";blocks=" << cfg.channel.blocks;
    os << ";snr=";
    for (double s : cfg.snr_grid_db) {
        std::snprintf(buf, sizeof buf, "%.17g,", s);
        os << buf;
    }
    os << ";min_fe=" << cfg.stopping.min_frame_errors << ";max_frames=" << cfg.stopping.max_frames;
    os << ";max_iter=" << cfg.relay.decoder.max_iter << ";check_update="
       << (cfg.relay.decoder.check_update == CheckUpdate::direct
               ? "direct"
               : cfg.relay.decoder.check_update == CheckUpdate::fft ? "fft" : "ems")
       << ";nm=" << cfg.relay.decoder.ems_list_size
       << ";ems_offset=" << cfg.relay.decoder.ems_offset
       << ";damping=" << cfg.relay.decoder.damping
       << ";early_stop=" << (cfg.relay.decoder.early_stop ? 1 : 0);
    os << ";outer=" << cfg.relay.outer_iters << ";inner=" << cfg.relay.inner_iters
       << ";mud_iterative=" << (cfg.relay.mud_iterative ? 1 : 0)
       << ";mud_rounds=" << cfg.relay.mud_exchange_rounds
       << ";strategy="
       << (cfg.relay.coeff_strategy == CoeffStrategy::selected ? "selected" : "all-pairs")
       << ";tolerance=" << cfg.relay.merge_tolerance;
    os << ";master_seed=" << cfg.master_seed << ";noiseless=" << (cfg.force_noiseless ? 1 : 0);
    return os.str();
}

inline std::uint64_t config_hash(const SimulationConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : config_canonical_string(cfg)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline SweepResult run_sweep(const SimulationConfig& cfg) {
    const Prepared p = Prepared::build(cfg);
    SweepResult res;
    res.master_seed = cfg.master_seed;
    res.config_hash = config_hash(cfg);
    for (std::size_t i = 0; i < cfg.snr_grid_db.size(); ++i)
        res.rows.push_back(run_point_prepared(p, cfg.snr_grid_db[i], i));
    return res;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

inline void write_csv(const SweepResult& result, std::ostream& os) {
    os << "snr_db,frames,bit_errors,frame_errors,ber,fer,mean_iters,seconds\n";
    for (const auto& r : result.rows) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%.10g,%llu,%llu,%llu,%.10g,%.10g,%.10g,%.10g\n", r.snr_db,
                      static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.bit_errors),
                      static_cast<unsigned long long>(r.frame_errors), r.ber, r.fer, r.mean_iters,
                      r.seconds);
        os << buf;
    }
}

inline void write_csv(const SweepResult& result, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(result, os);
    if (!os.good()) throw std::runtime_error("write failed: " + path);
}

} // namespace pnc
