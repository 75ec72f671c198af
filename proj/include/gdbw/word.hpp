#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdbw/config.hpp"
#include "gdbw/numtheory.hpp"

namespace gdbw {

// A word over the alphabet {0, ..., k-1}, k in [2, 36]. Digits render as
// 0-9 then a-z. Immutable after construction.
class Word {
public:
    Word(std::vector<std::uint8_t> digits, int alphabet_size);

    // Parses a digit string. alphabet_size 0 means "smallest alphabet that
    // fits the digits" (at least 2).
    static Word parse(std::string_view text, int alphabet_size = 0);

    std::span<const std::uint8_t> digits() const { return digits_; }
    int alphabet() const { return k_; }
    std::size_t size() const { return digits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return digits_[i]; }

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) = default;
    // Lexicographic on digits; alphabet breaks ties so ordering is total.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.digits_ <=> b.digits_; c != 0) return c;
        return a.k_ <=> b.k_;
    }

private:
    std::vector<std::uint8_t> digits_;
    int k_;
};

struct ParikhVector {
    std::vector<std::int64_t> counts;  // counts[i] = occurrences of digit i

    bool operator==(const ParikhVector&) const = default;
    bool balanced() const;
};

// sigma(w) = w_{n-1} w_0 ... w_{n-2}.
Word shift(const Word& w);

// w = v^m forces m = 1.
bool is_primitive(const Word& w);

// Length of the primitive root of w (smallest d | n with w = root^{n/d}).
std::size_t primitive_root_length(const Word& w);

// Lexicographically least rotation (Booth's algorithm).
Word canonical_rotation(const Word& w);

// Index of the least rotation; exposed for reuse by enumeration loops.
std::size_t least_rotation_index(std::span<const std::uint8_t> digits);

std::int64_t weight(const Word& w);

ParikhVector parikh(const Word& w);

// Alphabet-permutation power: |w| = k*m and every length-k block is a
// permutation of {0, ..., k-1}. Non-divisible lengths yield false.
bool is_app(const Word& w, int k);

// A conjugacy class of words, keyed by its lexicographically least rotation.
class Necklace {
public:
    explicit Necklace(const Word& w);

    const Word& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }
    int alphabet() const { return canonical_.alphabet(); }

    // Length of the primitive root; equals size() iff the necklace is aperiodic.
    std::size_t period() const { return period_; }
    bool aperiodic() const { return period_ == canonical_.size(); }

    std::int64_t weight() const;

    // Canonical representative in brackets, e.g. "[0011]".
    std::string str() const;

    friend bool operator==(const Necklace& a, const Necklace& b) {
        return a.canonical_ == b.canonical_;
    }
    friend std::strong_ordering operator<=>(const Necklace& a, const Necklace& b) {
        return a.canonical_ <=> b.canonical_;
    }

private:
    Word canonical_;
    std::size_t period_;
};

// All necklaces of length n over k letters, canonical representatives in
// lexicographic order. Raises BoundExceeded when k^n > bound.
std::vector<Necklace> enumerate_necklaces(int k, std::int64_t n, bool aperiodic_only,
                                          std::uint64_t bound = kDefaultEnumerationBound);

// Steps digits through all k^n words in lexicographic order. Starts from
// 0^n; returns false after the last word. Utility for exhaustive scans.
bool next_word(std::vector<std::uint8_t>& digits, int k);

}  // namespace gdbw
