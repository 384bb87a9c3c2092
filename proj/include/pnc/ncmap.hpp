#pragma once

// NC mapping algebra: the linear map a*s1 + b*s2 over a field or ring,
// exclusive-law verification, and broadcast-phase recovery.

#include <span>
#include <stdexcept>
#include <vector>

#include "pnc/alphabet.hpp"

namespace pnc {

/// nc = a*s1 + b*s2 over the alphabet. Both coefficients must be units,
/// which makes the map a bijection in either argument (the exclusive law)
/// and invertible at the user nodes. The field case with a = b = 1 is the
/// bitwise XOR map.
struct NcMap {
    Alphabet alphabet;
    unsigned a = 1, b = 1;

    NcMap(const Alphabet& alph, unsigned ca, unsigned cb) : alphabet(alph), a(ca), b(cb) {
        if (!alphabet.is_unit(a) || !alphabet.is_unit(b))
            throw std::domain_error("NC map coefficients must be units of " + alphabet.describe());
    }

    static NcMap xor_map(const Alphabet& alph) { return NcMap(alph, 1, 1); }

    unsigned operator()(unsigned s1, unsigned s2) const {
        return alphabet.add(alphabet.mul(a, s1), alphabet.mul(b, s2));
    }
};

inline unsigned nc_map(const NcMap& map, unsigned s1, unsigned s2) { return map(s1, s2); }

/// True iff fixing either argument makes the map injective in the other.
/// Exhaustive over the alphabet; also meaningful for candidate coefficient
/// pairs that are not both units (then it reports the violation).
inline bool check_exclusive_law(const Alphabet& alphabet, unsigned a, unsigned b) {
    const unsigned q = alphabet.size();
    auto f = [&](unsigned s1, unsigned s2) {
        return alphabet.add(alphabet.mul(a, s1), alphabet.mul(b, s2));
    };
    for (unsigned fixed = 0; fixed < q; ++fixed) {
        std::vector<bool> seen1(q, false), seen2(q, false);
        for (unsigned s = 0; s < q; ++s) {
            const unsigned v1 = f(s, fixed);
            const unsigned v2 = f(fixed, s);
            if (seen1[v1] || seen2[v2]) return false;
            seen1[v1] = seen2[v2] = true;
        }
    }
    return true;
}

inline bool check_exclusive_law(const NcMap& map) {
    return check_exclusive_law(map.alphabet, map.a, map.b);
}

/// Solve a*s1 + b*s2 = nc for the unknown user's symbol given the other.
/// which_user identifies the *known* message: passing self = s1 (user 1's
/// own message) recovers s2, and symmetrically.
inline unsigned broadcast_recover(unsigned self, unsigned nc, const NcMap& map, unsigned which_user) {
    const Alphabet& A = map.alphabet;
    if (which_user == 1)
        return A.mul(A.inv(map.b), A.sub(nc, A.mul(map.a, self)));
    if (which_user == 2)
        return A.mul(A.inv(map.a), A.sub(nc, A.mul(map.b, self)));
    throw std::invalid_argument("which_user must be 1 or 2");
}

inline std::vector<unsigned> broadcast_recover(std::span<const unsigned> self,
                                               std::span<const unsigned> nc, const NcMap& map,
                                               unsigned which_user) {
    if (self.size() != nc.size())
        throw std::invalid_argument("broadcast_recover: length mismatch");
    std::vector<unsigned> out(self.size());
    for (std::size_t i = 0; i < self.size(); ++i)
        out[i] = broadcast_recover(self[i], nc[i], map, which_user);
    return out;
}

} // namespace pnc
