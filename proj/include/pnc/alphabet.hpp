#pragma once

// Exact arithmetic over GF(2^r) and the integer ring Z_M, plus enumeration
// of decoding coefficients (multiplicative units).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnc {

/// Arithmetic home of code and NC symbols: a binary extension field
/// GF(2^r) with a primitive polynomial, or the integer ring Z_M.
/// Immutable after construction and freely shareable across threads.
class Alphabet {
public:
    enum class Kind { field, ring };

    /// GF(2^r) with the default primitive polynomial for r in [1, 8].
    static Alphabet gf(unsigned r) { return gf(r, default_poly(r)); }

    /// GF(2^r) with an explicit primitive polynomial (bitmask including
    /// the x^r term, e.g. 0xB for x^3+x+1). Throws if the polynomial is
    /// not primitive of degree r.
    static Alphabet gf(unsigned r, unsigned poly) { return Alphabet(Kind::field, 1u << r, poly); }

    /// Z_M, 2 <= M <= 256.
    static Alphabet ring(unsigned m) { return Alphabet(Kind::ring, m, 0); }

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::field; }
    unsigned size() const { return size_; }
    unsigned primitive_poly() const { return poly_; }

    /// log2(size); valid only when size is a power of two.
    unsigned bits_per_symbol() const {
        if ((size_ & (size_ - 1)) != 0)
            throw std::logic_error("alphabet size is not a power of two");
        unsigned b = 0;
        while ((1u << b) < size_) ++b;
        return b;
    }

    unsigned add(unsigned a, unsigned b) const {
        return is_field() ? (a ^ b) : (a + b) % size_;
    }
    unsigned neg(unsigned a) const {
        return is_field() ? a : (size_ - a) % size_;
    }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * size_ + b]; }

    bool is_unit(unsigned a) const { return a < size_ && inv_[a] != kNoInverse; }

    /// Multiplicative inverse; throws std::domain_error for non-units.
    unsigned inv(unsigned a) const {
        if (a >= size_ || inv_[a] == kNoInverse)
            throw std::domain_error("not a unit in " + describe());
        return inv_[a];
    }

    /// All invertible elements in ascending order: the nonzero elements of
    /// a field, or the k with gcd(k, M) = 1 in a ring.
    const std::vector<unsigned>& units() const { return units_; }

    bool operator==(const Alphabet& o) const {
        return kind_ == o.kind_ && size_ == o.size_ && poly_ == o.poly_;
    }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    std::string describe() const {
        return is_field() ? "GF(" + std::to_string(size_) + ")"
                          : "Z_" + std::to_string(size_);
    }

    static unsigned default_poly(unsigned r) {
        static constexpr unsigned polys[9] = {0,    0x3,  0x7,  0xB, 0x13,
                                              0x25, 0x43, 0x89, 0x11D};
        if (r < 1 || r > 8)
            throw std::invalid_argument("GF(2^r) supported for 1 <= r <= 8");
        return polys[r];
    }

private:
    static constexpr unsigned kNoInverse = ~0u;

    Alphabet(Kind kind, unsigned size, unsigned poly)
        : kind_(kind), size_(size), poly_(poly) {
        if (size_ < 2 || size_ > 256)
            throw std::invalid_argument("alphabet size must be in [2, 256]");
        if (is_field())
            build_field_tables();
        else
            build_ring_tables();
        for (unsigned u = 0; u < size_; ++u)
            if (inv_[u] != kNoInverse) units_.push_back(u);
    }

    void build_field_tables() {
        unsigned r = 0;
        while ((1u << r) < size_) ++r;
        if (poly_ >> r != 1u)
            throw std::invalid_argument("primitive polynomial must have degree exactly r");
        // Generate the multiplicative group by x; a polynomial is accepted
        // only if x has full order 2^r - 1, which also implies irreducibility.
        std::vector<unsigned> log(size_, kNoInverse), alog(size_ - 1, 0);
        unsigned b = 1;
        for (unsigned j = 0; j < size_ - 1; ++j) {
            if (log[b] != kNoInverse)
                throw std::invalid_argument("polynomial is not primitive over GF(2)");
            log[b] = j;
            alog[j] = b;
            b <<= 1;
            if (b & size_) b = (b ^ poly_) & (size_ - 1);
        }
        if (b != 1)
            throw std::invalid_argument("polynomial is not primitive over GF(2)");

        mul_.assign(size_ * size_, 0);
        for (unsigned a = 1; a < size_; ++a)
            for (unsigned c = 1; c < size_; ++c)
                mul_[a * size_ + c] = alog[(log[a] + log[c]) % (size_ - 1)];

        inv_.assign(size_, kNoInverse);
        for (unsigned a = 1; a < size_; ++a)
            inv_[a] = alog[(size_ - 1 - log[a]) % (size_ - 1)];
    }

    void build_ring_tables() {
        mul_.assign(size_ * size_, 0);
        for (unsigned a = 0; a < size_; ++a)
            for (unsigned c = 0; c < size_; ++c)
                mul_[a * size_ + c] = (a * c) % size_;

        inv_.assign(size_, kNoInverse);
        for (unsigned a = 0; a < size_; ++a) {
            if (std::gcd(a, size_) != 1) continue;
            for (unsigned c = 0; c < size_; ++c)
                if ((a * c) % size_ == 1) { inv_[a] = c; break; }
        }
    }

    Kind kind_;
    unsigned size_;
    unsigned poly_;
    std::vector<unsigned> mul_;
    std::vector<unsigned> inv_;
    std::vector<unsigned> units_;
};

/// A symbol value bound to its alphabet. Combining elements of different
/// alphabets is a usage error.
class Element {
public:
    Element(unsigned value, const Alphabet& alphabet)
        : value_(value), alphabet_(&alphabet) {
        if (value_ >= alphabet.size())
            throw std::invalid_argument("element value out of range for " + alphabet.describe());
    }

    unsigned value() const { return value_; }
    const Alphabet& alphabet() const { return *alphabet_; }

    friend Element operator+(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.alphabet_->add(a.value_, b.value_), *a.alphabet_);
    }
    friend Element operator*(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.alphabet_->mul(a.value_, b.value_), *a.alphabet_);
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.alphabet_->sub(a.value_, b.value_), *a.alphabet_);
    }
    friend bool operator==(const Element& a, const Element& b) {
        return a.value_ == b.value_ && *a.alphabet_ == *b.alphabet_;
    }

private:
    static void check_same(const Element& a, const Element& b) {
        if (*a.alphabet_ != *b.alphabet_)
            throw std::invalid_argument("alphabet mismatch: " + a.alphabet_->describe() +
                                        " vs " + b.alphabet_->describe());
    }

    unsigned value_;
    const Alphabet* alphabet_;
};

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element mul(const Element& a, const Element& b) { return a * b; }

inline Element invert(const Element& u) {
    return Element(u.alphabet().inv(u.value()), u.alphabet());
}

inline std::vector<Element> units(const Alphabet& alphabet) {
    std::vector<Element> out;
    out.reserve(alphabet.units().size());
    for (unsigned u : alphabet.units()) out.emplace_back(u, alphabet);
    return out;
}

} // namespace pnc
