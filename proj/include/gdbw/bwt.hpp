#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdbw/permutation.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

// The n rotations of a word in ascending lexicographic order, kept with
// multiplicity for periodic input.
struct BwtMatrix {
    std::vector<Word> rows;

    Word first_column() const;
    Word last_column() const;
};

BwtMatrix bwt_matrix(const Necklace& neck);

// Burrows-Wheeler transform: last column of the sorted-rotation matrix.
Word bwt(const Necklace& neck);

// pi_u with pi_u(i) < pi_u(j) iff u_i < u_j, or u_i = u_j and i < j.
Permutation standard_permutation(const Word& u);

// Cycle of pi_u^{-1} through 0, as (0, i_1, ..., i_{n-1}). Raises NotACycle
// when the permutation splits into more than one cycle.
std::vector<std::int64_t> inverse_standard_permutation_cycle(const Word& u);

struct BwtImageResult {
    enum class Kind { aperiodic, power, no };

    Kind kind;
    // Set for Kind::power: u is the letter-wise c-th power of root, and root
    // is the BWT image of an aperiodic necklace.
    std::int64_t c = 0;
    std::optional<Word> root;

    bool is_image() const { return kind != Kind::no; }
};

BwtImageResult is_bwt_image(const Word& u);

// The unique necklace with BWT u. Raises NotABwtImage.
Necklace inverse_bwt(const Word& u);

// Balanced-Parikh fast path: rebuilds the necklace by mapping each cycle
// element i to floor(i / (n/k)). Raises NotBalanced / NotACycle.
Necklace inverse_bwt_balanced(const Word& u, int k);

// A necklace of length k*m is a generalized de Bruijn word iff its BWT is an
// alphabet-permutation power over k letters.
bool is_generalized_de_bruijn(const Necklace& neck, int k);

}  // namespace gdbw
