#pragma once

#include <cstdint>
#include <vector>

#include "gdbw/config.hpp"
#include "gdbw/matrix.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

// Generalized de Bruijn graph DB(k, n): vertices {0..n-1}, edge multiset
// {(m, (k*m + i) mod n) : 0 <= i < k}. Never materialized as adjacency
// storage; everything is derived from the arithmetic description.
class GdbGraph {
public:
    GdbGraph(std::int64_t k, std::int64_t n);

    std::int64_t out_degree() const { return k_; }
    std::int64_t vertex_count() const { return n_; }

    // The k successors of m, in edge order i = 0..k-1, with multiplicity.
    std::vector<std::int64_t> successors(std::int64_t m) const;

    // Number of parallel edges u -> v.
    std::int64_t edge_multiplicity(std::int64_t u, std::int64_t v) const;

    bool operator==(const GdbGraph&) const = default;

private:
    std::int64_t k_;
    std::int64_t n_;
};

struct Edge {
    std::int64_t src;
    std::int64_t dst;

    bool operator==(const Edge&) const = default;
};

// All k*n edges sorted by (src, edge index).
std::vector<Edge> edge_list(const GdbGraph& g);

// L = D - A with self-loops reducing the diagonal.
IntMatrix laplacian(const GdbGraph& g);

// Laplacian with last row and column removed.
IntMatrix reduced_laplacian(const GdbGraph& g);

// Number of oriented spanning trees, det of the reduced Laplacian.
BigInt kappa(const GdbGraph& g);

// BEST theorem: kappa(G) * ((k-1)!)^n distinct Eulerian cycles.
BigInt eulerian_cycle_count(const GdbGraph& g);

// All Hamiltonian cycles as vertex sequences rotated to start at 0, in
// lexicographic order. Raises BoundExceeded when k^n exceeds the bound.
std::vector<std::vector<std::int64_t>> enumerate_hamiltonian_cycles(
    const GdbGraph& g, std::uint64_t bound = kDefaultEnumerationBound);

// Label map of the Hamiltonian-cycle correspondence: vertex v of
// DB(k, n_total) becomes digit floor(v / (n_total / k)).
Necklace cycle_to_gdb_word(const std::vector<std::int64_t>& cycle, int k, std::int64_t n_total);

// Generalized de Bruijn words of the given length over k letters, obtained
// from the Hamiltonian cycles of DB(k, length). Raises DivisibilityError
// when k does not divide length.
std::vector<Necklace> enumerate_gdb_words(int k, std::int64_t length,
                                          std::uint64_t bound = kDefaultEnumerationBound);

// Counting formula ((k-1)!)^n * kappa(DB(k, n)) with n = length / k.
BigInt count_gdb_words(int k, std::int64_t length);

}  // namespace gdbw
