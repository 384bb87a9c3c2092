#pragma once

// Relay-side superimposed constellation: the M^2 points h1*x1 + h2*x2,
// merged within a tolerance and annotated with their generating
// transmission pairs, plus exclusive-law/ambiguity analysis and
// effective-minimum-distance coefficient selection.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "pnc/modem.hpp"
#include "pnc/ncmap.hpp"

namespace pnc {

/// A transmission pair, stored as constellation point indices of user 1
/// and user 2.
struct TxPair {
    unsigned i1 = 0, i2 = 0;
};

struct SuperimposedSet {
    struct PairInfo {
        cplx point;     // h1*point_a(i1) + h2*point_b(i2)
        unsigned i1, i2;      // constellation point indices
        unsigned s1, s2;      // symbol labels
        unsigned xor_label;   // bitwise XOR of the users' bit labels
        unsigned entry;       // merged-entry id
    };
    struct Entry {
        cplx point;
        std::vector<unsigned> pair_ids;
    };

    Constellation user_a, user_b;
    cplx h1 = 1.0, h2 = 1.0;
    double tolerance = 1e-9;
    std::vector<PairInfo> pairs;  // all M^2 pairs, index = i1*M + i2
    std::vector<Entry> entries;   // distinct points

    unsigned order() const { return user_a.order(); }

    /// True iff some merged point is generated by pairs whose XOR bit
    /// labels differ.
    bool xor_ambiguous() const {
        for (const auto& e : entries) {
            const unsigned first = pairs[e.pair_ids.front()].xor_label;
            for (unsigned id : e.pair_ids)
                if (pairs[id].xor_label != first) return true;
        }
        return false;
    }

    /// True iff every superimposed point identifies its transmission pair.
    bool unique_pair() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const Entry& e) { return e.pair_ids.size() == 1; });
    }
};

/// Enumerate all M^2 transmission pairs and merge coincident points.
inline SuperimposedSet build_superimposed_set(const Constellation& ca, const Constellation& cb,
                                              cplx h1, cplx h2, double tolerance = 1e-9) {
    if (ca.order() != cb.order())
        throw std::invalid_argument("build_superimposed_set: users must use the same order M");
    SuperimposedSet set;
    set.user_a = ca;
    set.user_b = cb;
    set.h1 = h1;
    set.h2 = h2;
    set.tolerance = tolerance;
    const unsigned M = ca.order();
    set.pairs.reserve(static_cast<std::size_t>(M) * M);
    for (unsigned i1 = 0; i1 < M; ++i1)
        for (unsigned i2 = 0; i2 < M; ++i2) {
            SuperimposedSet::PairInfo p;
            p.point = h1 * ca.point(i1) + h2 * cb.point(i2);
            p.i1 = i1;
            p.i2 = i2;
            p.s1 = ca.symbol_label(i1);
            p.s2 = cb.symbol_label(i2);
            p.xor_label = ca.bit_label(i1) ^ cb.bit_label(i2);
            unsigned entry = static_cast<unsigned>(set.entries.size());
            for (unsigned e = 0; e < set.entries.size(); ++e)
                if (std::abs(set.entries[e].point - p.point) <= tolerance) {
                    entry = e;
                    break;
                }
            if (entry == set.entries.size()) set.entries.push_back({p.point, {}});
            p.entry = entry;
            set.entries[entry].pair_ids.push_back(static_cast<unsigned>(set.pairs.size()));
            set.pairs.push_back(p);
        }
    return set;
}

struct AmbiguityReport {
    bool is_exclusive = true;             // no merged point maps to several NC symbols
    std::vector<unsigned> ambiguous_entries;
    bool unique_pair = true;
};

/// NC symbols generated at one merged point under the given map.
inline std::set<unsigned> entry_nc_symbols(const SuperimposedSet& set, unsigned entry,
                                           const NcMap& map) {
    std::set<unsigned> out;
    for (unsigned id : set.entries[entry].pair_ids)
        out.insert(map(set.pairs[id].s1, set.pairs[id].s2));
    return out;
}

inline AmbiguityReport detect_ambiguity(const SuperimposedSet& set, const NcMap& map) {
    AmbiguityReport rep;
    rep.unique_pair = set.unique_pair();
    for (unsigned e = 0; e < set.entries.size(); ++e)
        if (entry_nc_symbols(set, e, map).size() > 1) rep.ambiguous_entries.push_back(e);
    rep.is_exclusive = rep.ambiguous_entries.empty();
    return rep;
}

/// Minimum Euclidean distance between superimposed points carrying
/// different NC symbols; zero when any point is ambiguous under the map.
inline double effective_min_distance(const SuperimposedSet& set, const NcMap& map) {
    std::vector<unsigned> nc(set.entries.size());
    for (unsigned e = 0; e < set.entries.size(); ++e) {
        const auto syms = entry_nc_symbols(set, e, map);
        if (syms.size() > 1) return 0.0;
        nc[e] = *syms.begin();
    }
    double dmin = std::numeric_limits<double>::infinity();
    for (unsigned a = 0; a < set.entries.size(); ++a)
        for (unsigned b = a + 1; b < set.entries.size(); ++b)
            if (nc[a] != nc[b])
                dmin = std::min(dmin, std::abs(set.entries[a].point - set.entries[b].point));
    return std::isfinite(dmin) ? dmin : 0.0;
}

/// Search all unit coefficient pairs (a, b) for the one maximizing the
/// effective minimum distance between NC-mapped symbols; ties break to the
/// lexicographically smallest pair.
inline NcMap select_coefficients(const Constellation& ca, const Constellation& cb, cplx h1,
                                 cplx h2, const Alphabet& alphabet, double tolerance = 1e-9) {
    const auto set = build_superimposed_set(ca, cb, h1, h2, tolerance);
    const auto& us = alphabet.units();
    double best = -1.0;
    unsigned best_a = us.front(), best_b = us.front();
    for (unsigned a : us)
        for (unsigned b : us) {
            const double d = effective_min_distance(set, NcMap(alphabet, a, b));
            if (d > best) {
                best = d;
                best_a = a;
                best_b = b;
            }
        }
    return NcMap(alphabet, best_a, best_b);
}

/// One row per transmission pair: entry id, point, labels, NC symbol under
/// the supplied map, and the XOR bit label.
inline void dump_superimposed_csv(const SuperimposedSet& set, const NcMap& map, std::ostream& os) {
    os << "entry,point_re,point_im,s1,s2,nc_symbol,xor_label\n";
    for (const auto& p : set.pairs) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%u,%.12g,%.12g,%u,%u,%u,%u\n", p.entry, p.point.real(),
                      p.point.imag(), p.s1, p.s2, map(p.s1, p.s2), p.xor_label);
        os << buf;
    }
}

} // namespace pnc
