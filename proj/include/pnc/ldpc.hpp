#pragma once

// Regular LDPC codes over GF(2^r) or Z_M: seeded progressive-edge-growth
// construction, systematic encoding via a unit-pivot elimination plan,
// syndrome computation, and alist-style import/export.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pnc/alphabet.hpp"
#include "pnc/rng.hpp"

namespace pnc {

struct LdpcCode {
    struct Entry {
        std::uint32_t index; // column (in row adjacency) or row (in column adjacency)
        unsigned value;      // nonzero alphabet element
    };

    std::size_t n = 0, k = 0;
    unsigned dv = 0, dc = 0;
    Alphabet alphabet = Alphabet::gf(1);
    std::uint64_t seed = 0;

    std::vector<std::vector<Entry>> rows; // one list per check
    std::vector<std::vector<Entry>> cols; // one list per variable

    // Encoder plan from a unit-pivot Gauss-Jordan reduction of H:
    // x[pivot_cols[i]] = -sum_j parity_gen[i*k+j] * x[info_cols[j]].
    std::vector<std::uint32_t> pivot_cols;
    std::vector<std::uint32_t> info_cols;
    std::vector<std::uint8_t> parity_gen;

    std::size_t checks() const { return n - k; }
    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
    const std::vector<std::uint32_t>& info_positions() const { return info_cols; }
};

/// Row i of H applied to word: sum_j H[i][j] * word[j].
inline std::vector<unsigned> syndrome(const LdpcCode& code, std::span<const unsigned> word) {
    if (word.size() != code.n) throw std::invalid_argument("syndrome: word length mismatch");
    const Alphabet& A = code.alphabet;
    std::vector<unsigned> s(code.checks(), 0);
    for (std::size_t r = 0; r < code.rows.size(); ++r)
        for (const auto& e : code.rows[r])
            s[r] = A.add(s[r], A.mul(e.value, word[e.index]));
    return s;
}

inline bool in_nullspace(const LdpcCode& code, std::span<const unsigned> word) {
    const auto s = syndrome(code, word);
    return std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 0; });
}

/// Systematic encoding: info symbols are placed on info_cols, parity on
/// pivot_cols from the precomputed plan. The result has zero syndrome.
inline std::vector<unsigned> encode(const LdpcCode& code, std::span<const unsigned> info) {
    if (info.size() != code.k) throw std::invalid_argument("encode: info length mismatch");
    const Alphabet& A = code.alphabet;
    for (unsigned s : info)
        if (s >= A.size()) throw std::invalid_argument("encode: symbol out of alphabet");
    std::vector<unsigned> x(code.n, 0);
    for (std::size_t j = 0; j < code.k; ++j) x[code.info_cols[j]] = info[j];
    for (std::size_t i = 0; i < code.checks(); ++i) {
        unsigned acc = 0;
        const std::uint8_t* row = code.parity_gen.data() + i * code.k;
        for (std::size_t j = 0; j < code.k; ++j)
            if (row[j] && info[j]) acc = A.add(acc, A.mul(row[j], info[j]));
        x[code.pivot_cols[i]] = A.neg(acc);
    }
    return x;
}

/// True if no two variables share two checks (no 4-cycles).
inline bool has_girth_ge6(const LdpcCode& code) {
    const std::size_t m = code.checks();
    std::vector<std::vector<std::uint32_t>> seen(m); // per lower check, partner checks
    for (const auto& col : code.cols) {
        for (std::size_t a = 0; a + 1 < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b) {
                auto lo = std::min(col[a].index, col[b].index);
                auto hi = std::max(col[a].index, col[b].index);
                auto& lst = seen[lo];
                if (std::find(lst.begin(), lst.end(), hi) != lst.end()) return false;
                lst.push_back(hi);
            }
    }
    return true;
}

/// Counting bound: a 4-cycle-free placement requires both
/// m*C(dc,2) <= C(n,2) and n*C(dv,2) <= C(m,2).
inline bool girth6_feasible(std::size_t n, std::size_t m, unsigned dv, unsigned dc) {
    auto c2 = [](double x) { return x * (x - 1.0) / 2.0; };
    return static_cast<double>(m) * c2(dc) <= c2(static_cast<double>(n)) &&
           static_cast<double>(n) * c2(dv) <= c2(static_cast<double>(m));
}

namespace detail {

// PEG edge placement: per variable, per edge, pick the lowest-degree check
// outside the variable's distance-<=3 neighborhood (which preserves girth
// >= 6). Returns per-variable check lists, or empty on failure.
inline std::vector<std::vector<std::uint32_t>> peg_place(std::size_t n, std::size_t m, unsigned dv,
                                                         unsigned dc, bool need_girth6,
                                                         std::mt19937_64& rng) {
    std::vector<std::vector<std::uint32_t>> var_checks(n);
    std::vector<std::vector<std::uint32_t>> check_vars(m);
    std::vector<unsigned> check_deg(m, 0);
    std::vector<std::uint8_t> forbidden(m, 0);
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> candidates;

    for (std::size_t v = 0; v < n; ++v) {
        for (unsigned e = 0; e < dv; ++e) {
            touched.clear();
            auto forbid = [&](std::uint32_t c) {
                if (!forbidden[c]) {
                    forbidden[c] = 1;
                    touched.push_back(c);
                }
            };
            for (auto c : var_checks[v]) forbid(c);
            if (need_girth6) {
                for (auto c : var_checks[v])
                    for (auto v2 : check_vars[c])
                        for (auto c2 : var_checks[v2]) forbid(c2);
            }
            candidates.clear();
            unsigned best = ~0u;
            for (std::uint32_t c = 0; c < m; ++c) {
                if (forbidden[c] || check_deg[c] >= dc) continue;
                if (check_deg[c] < best) {
                    best = check_deg[c];
                    candidates.clear();
                }
                if (check_deg[c] == best) candidates.push_back(c);
            }
            for (auto c : touched) forbidden[c] = 0;
            if (candidates.empty()) return {};
            const auto pick = candidates[uniform_below(rng, candidates.size())];
            var_checks[v].push_back(pick);
            check_vars[pick].push_back(v);
            ++check_deg[pick];
        }
    }
    return var_checks;
}

// Gauss-Jordan over the alphabet restricted to unit pivots. Fills the
// encoder plan; returns false if fewer than m pivots can be found.
inline bool build_encoder_plan(LdpcCode& code) {
    const Alphabet& A = code.alphabet;
    const std::size_t m = code.checks(), n = code.n;
    std::vector<std::uint8_t> h(m * n, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (const auto& e : code.rows[r]) h[r * n + e.index] = static_cast<std::uint8_t>(e.value);

    std::vector<std::uint32_t> pivot_col_of_row;
    std::vector<std::uint8_t> is_pivot_col(n, 0);
    std::size_t next_row = 0;
    for (std::uint32_t c = 0; c < n && next_row < m; ++c) {
        std::size_t pr = m;
        for (std::size_t r = next_row; r < m; ++r)
            if (A.is_unit(h[r * n + c])) {
                pr = r;
                break;
            }
        if (pr == m) continue;
        if (pr != next_row)
            for (std::size_t j = 0; j < n; ++j) std::swap(h[pr * n + j], h[next_row * n + j]);
        const unsigned pinv = A.inv(h[next_row * n + c]);
        if (pinv != 1)
            for (std::size_t j = 0; j < n; ++j)
                h[next_row * n + j] = static_cast<std::uint8_t>(A.mul(pinv, h[next_row * n + j]));
        for (std::size_t r = 0; r < m; ++r) {
            if (r == next_row) continue;
            const unsigned f = h[r * n + c];
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (h[next_row * n + j])
                    h[r * n + j] = static_cast<std::uint8_t>(
                        A.sub(h[r * n + j], A.mul(f, h[next_row * n + j])));
        }
        pivot_col_of_row.push_back(c);
        is_pivot_col[c] = 1;
        ++next_row;
    }
    if (next_row != m) return false;

    code.pivot_cols = pivot_col_of_row;
    code.info_cols.clear();
    for (std::uint32_t c = 0; c < n; ++c)
        if (!is_pivot_col[c]) code.info_cols.push_back(c);
    code.parity_gen.assign(m * code.k, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < code.k; ++j)
            code.parity_gen[i * code.k + j] = h[i * n + code.info_cols[j]];
    return true;
}

inline void rebuild_cols(LdpcCode& code) {
    code.cols.assign(code.n, {});
    for (std::uint32_t r = 0; r < code.rows.size(); ++r)
        for (const auto& e : code.rows[r])
            code.cols[e.index].push_back({r, e.value});
}

} // namespace detail

/// Seeded construction of a (dv, dc)-regular code. Entries are drawn
/// uniformly from the nonzero elements (field) or units (ring), so every
/// code is encodable by unit-pivot elimination. Girth >= 6 is enforced
/// whenever the degree parameters admit it.
inline LdpcCode construct_regular(std::size_t n, std::size_t k, unsigned dv, unsigned dc,
                                  const Alphabet& alphabet, std::uint64_t seed) {
    if (k == 0 || k >= n) throw std::invalid_argument("construct_regular: need 0 < k < n");
    const std::size_t m = n - k;
    if (n * dv != m * dc)
        throw std::invalid_argument("construct_regular: degree equation n*dv = (n-k)*dc violated");
    if (dv < 2 || dc < 2 || dc > n || dv > m)
        throw std::invalid_argument("construct_regular: infeasible degrees");

    const bool want_girth6 = girth6_feasible(n, m, dv, dc);
    std::vector<unsigned> entry_pool;
    if (alphabet.is_field()) {
        for (unsigned v = 1; v < alphabet.size(); ++v) entry_pool.push_back(v);
    } else {
        entry_pool = alphabet.units();
    }

    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, 0x70656761u, attempt));
        auto var_checks = detail::peg_place(n, m, dv, dc, want_girth6, rng);
        if (var_checks.empty()) continue;

        LdpcCode code;
        code.n = n;
        code.k = k;
        code.dv = dv;
        code.dc = dc;
        code.alphabet = alphabet;
        code.seed = seed;
        code.rows.assign(m, {});
        for (std::uint32_t v = 0; v < n; ++v)
            for (auto c : var_checks[v]) {
                const unsigned val = entry_pool[uniform_below(rng, entry_pool.size())];
                code.rows[c].push_back({v, val});
            }
        for (auto& row : code.rows)
            std::sort(row.begin(), row.end(),
                      [](const LdpcCode::Entry& a, const LdpcCode::Entry& b) {
                          return a.index < b.index;
                      });
        detail::rebuild_cols(code);
        if (!detail::build_encoder_plan(code)) continue;
        return code;
    }
    throw std::runtime_error("construct_regular: no valid placement after bounded retries");
}

/// Alist-style text export: header (n m), max degrees, per-column and
/// per-row degree lists, then 1-based (index value) pairs per column and
/// per row.
inline void write_alist(const LdpcCode& code, std::ostream& os) {
    os << code.n << ' ' << code.checks() << '\n';
    os << code.dv << ' ' << code.dc << '\n';
    for (std::size_t c = 0; c < code.n; ++c)
        os << code.cols[c].size() << (c + 1 < code.n ? ' ' : '\n');
    for (std::size_t r = 0; r < code.checks(); ++r)
        os << code.rows[r].size() << (r + 1 < code.checks() ? ' ' : '\n');
    for (const auto& col : code.cols) {
        for (std::size_t i = 0; i < col.size(); ++i)
            os << (col[i].index + 1) << ' ' << col[i].value << (i + 1 < col.size() ? ' ' : '\n');
    }
    for (const auto& row : code.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (row[i].index + 1) << ' ' << row[i].value << (i + 1 < row.size() ? ' ' : '\n');
    }
}

/// Inverse of write_alist. The alphabet is supplied by the caller; entry
/// values are validated against it and the encoder plan is rebuilt.
inline LdpcCode read_alist(std::istream& is, const Alphabet& alphabet) {
    std::size_t n = 0, m = 0;
    unsigned dv = 0, dc = 0;
    if (!(is >> n >> m >> dv >> dc)) throw std::runtime_error("alist: malformed header");
    if (m == 0 || n <= m) throw std::runtime_error("alist: need n > m > 0");

    std::vector<unsigned> col_deg(n), row_deg(m);
    for (auto& d : col_deg)
        if (!(is >> d)) throw std::runtime_error("alist: malformed column degrees");
    for (auto& d : row_deg)
        if (!(is >> d)) throw std::runtime_error("alist: malformed row degrees");

    LdpcCode code;
    code.n = n;
    code.k = n - m;
    code.dv = dv;
    code.dc = dc;
    code.alphabet = alphabet;
    code.rows.assign(m, {});

    // Column section is read for validation only; rows are authoritative.
    for (std::size_t c = 0; c < n; ++c)
        for (unsigned i = 0; i < col_deg[c]; ++i) {
            std::size_t r;
            unsigned v;
            if (!(is >> r >> v) || r < 1 || r > m)
                throw std::runtime_error("alist: malformed column entry");
        }
    for (std::size_t r = 0; r < m; ++r)
        for (unsigned i = 0; i < row_deg[r]; ++i) {
            std::size_t c;
            unsigned v;
            if (!(is >> c >> v) || c < 1 || c > n)
                throw std::runtime_error("alist: malformed row entry");
            if (v == 0 || v >= alphabet.size())
                throw std::runtime_error("alist: entry value outside alphabet");
            code.rows[r].push_back({static_cast<std::uint32_t>(c - 1), v});
        }
    detail::rebuild_cols(code);
    for (std::size_t c = 0; c < n; ++c)
        if (code.cols[c].size() != col_deg[c])
            throw std::runtime_error("alist: column/row sections disagree");
    if (!detail::build_encoder_plan(code))
        throw std::runtime_error("alist: matrix admits no unit-pivot encoder plan");
    return code;
}

} // namespace pnc
