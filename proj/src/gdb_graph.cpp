#include "gdbw/gdb_graph.hpp"

#include <algorithm>

#include "gdbw/errors.hpp"

namespace gdbw {

GdbGraph::GdbGraph(std::int64_t k, std::int64_t n) : k_(k), n_(n) {
    if (k < 2 || k > (std::int64_t{1} << 16)) raise(errc::out_of_range, "out-degree must be in [2, 2^16]");
    if (n < 1 || n > (std::int64_t{1} << 20)) raise(errc::out_of_range, "vertex count must be in [1, 2^20]");
}

std::vector<std::int64_t> GdbGraph::successors(std::int64_t m) const {
    if (m < 0 || m >= n_) raise(errc::out_of_range, "vertex index out of range");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (std::int64_t i = 0; i < k_; ++i) out.push_back((k_ * m + i) % n_);
    return out;
}

std::int64_t GdbGraph::edge_multiplicity(std::int64_t u, std::int64_t v) const {
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < k_; ++i)
        if ((k_ * u + i) % n_ == v) ++count;
    return count;
}

std::vector<Edge> edge_list(const GdbGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.out_degree() * g.vertex_count()));
    for (std::int64_t m = 0; m < g.vertex_count(); ++m)
        for (std::int64_t t : g.successors(m)) edges.push_back({m, t});
    return edges;
}

IntMatrix laplacian(const GdbGraph& g) {
    const std::int64_t n = g.vertex_count();
    IntMatrix l = IntMatrix::Zero(n, n);
    for (std::int64_t u = 0; u < n; ++u) {
        l(u, u) = g.out_degree();
        for (std::int64_t t : g.successors(u)) l(u, t) -= 1;
    }
    return l;
}

IntMatrix reduced_laplacian(const GdbGraph& g) {
    const std::int64_t n = g.vertex_count();
    return IntMatrix(laplacian(g).topLeftCorner(n - 1, n - 1));
}

BigInt kappa(const GdbGraph& g) { return bareiss_determinant(reduced_laplacian(g)); }

BigInt eulerian_cycle_count(const GdbGraph& g) {
    return kappa(g) * pow_int(factorial(g.out_degree() - 1), static_cast<std::uint64_t>(g.vertex_count()));
}

namespace {

struct HamiltonianSearch {
    const GdbGraph& g;
    std::uint64_t visited = 0;
    std::vector<std::int64_t> path = {};
    std::vector<std::vector<std::int64_t>> found = {};

    void dfs() {
        const std::int64_t n = g.vertex_count();
        if (static_cast<std::int64_t>(path.size()) == n) {
            for (std::int64_t t : g.successors(path.back()))
                if (t == 0) {
                    found.push_back(path);
                    break;
                }
            return;
        }
        auto targets = g.successors(path.back());
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::int64_t t : targets) {
            if (visited & (std::uint64_t{1} << t)) continue;
            visited |= std::uint64_t{1} << t;
            path.push_back(t);
            dfs();
            path.pop_back();
            visited &= ~(std::uint64_t{1} << t);
        }
    }
};

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_hamiltonian_cycles(const GdbGraph& g, std::uint64_t bound) {
    const std::int64_t n = g.vertex_count();
    if (n > 63 || pow_int(g.out_degree(), static_cast<std::uint64_t>(n)) > bound)
        raise(errc::bound_exceeded, "Hamiltonian search space exceeds the enumeration bound");

    HamiltonianSearch search{g};
    search.visited = 1;
    search.path.push_back(0);
    search.dfs();
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

Necklace cycle_to_gdb_word(const std::vector<std::int64_t>& cycle, int k, std::int64_t n_total) {
    if (k < 2) raise(errc::out_of_range, "alphabet size must be >= 2");
    if (n_total % k != 0) raise(errc::divisibility, "cycle label map needs k | n_total");
    if (static_cast<std::int64_t>(cycle.size()) != n_total)
        raise(errc::dimension_mismatch, "cycle must visit every vertex exactly once");
    const std::int64_t block = n_total / k;
    std::vector<std::uint8_t> digits;
    digits.reserve(cycle.size());
    for (std::int64_t v : cycle) {
        if (v < 0 || v >= n_total) raise(errc::out_of_range, "cycle vertex out of range");
        digits.push_back(static_cast<std::uint8_t>(v / block));
    }
    return Necklace(Word(std::move(digits), k));
}

std::vector<Necklace> enumerate_gdb_words(int k, std::int64_t length, std::uint64_t bound) {
    if (k < 2) raise(errc::out_of_range, "alphabet size must be >= 2");
    if (length < 1 || length % k != 0)
        raise(errc::divisibility, "generalized de Bruijn words have length divisible by k");
    std::vector<Necklace> words;
    for (const auto& cycle : enumerate_hamiltonian_cycles(GdbGraph(k, length), bound))
        words.push_back(cycle_to_gdb_word(cycle, k, length));
    std::sort(words.begin(), words.end());
    return words;
}

BigInt count_gdb_words(int k, std::int64_t length) {
    if (k < 2) raise(errc::out_of_range, "alphabet size must be >= 2");
    if (length < 1 || length % k != 0)
        raise(errc::divisibility, "generalized de Bruijn words have length divisible by k");
    const std::int64_t n = length / k;
    return pow_int(factorial(k - 1), static_cast<std::uint64_t>(n)) * kappa(GdbGraph(k, n));
}

}  // namespace gdbw
