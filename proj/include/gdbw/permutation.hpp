#pragma once

#include <cstdint>
#include <vector>

namespace gdbw {

// A bijection on {0, ..., n-1} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<std::int64_t> one_line);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return one_line_.size(); }
    std::int64_t operator()(std::size_t i) const { return one_line_[i]; }
    const std::vector<std::int64_t>& one_line() const { return one_line_; }

    Permutation inverse() const;

    // Disjoint cycles, each rotated to start at its least element, sorted by
    // that element. Fixed points appear as singleton cycles.
    std::vector<std::vector<std::int64_t>> cycles() const;

    bool is_single_cycle() const;

    // Number of indices i with p(i+1) < p(i).
    std::int64_t descents() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::int64_t> one_line_;
};

}  // namespace gdbw
