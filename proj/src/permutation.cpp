#include "gdbw/permutation.hpp"

#include <algorithm>

#include "gdbw/errors.hpp"

namespace gdbw {

Permutation::Permutation(std::vector<std::int64_t> one_line) : one_line_(std::move(one_line)) {
    std::vector<bool> seen(one_line_.size(), false);
    for (std::int64_t v : one_line_) {
        if (v < 0 || static_cast<std::size_t>(v) >= one_line_.size() || seen[static_cast<std::size_t>(v)])
            raise(errc::out_of_range, "one-line form is not a bijection on {0..n-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<std::int64_t> inv(one_line_.size());
    for (std::size_t i = 0; i < one_line_.size(); ++i)
        inv[static_cast<std::size_t>(one_line_[i])] = static_cast<std::int64_t>(i);
    return Permutation(std::move(inv));
}

std::vector<std::vector<std::int64_t>> Permutation::cycles() const {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<bool> seen(one_line_.size(), false);
    for (std::size_t start = 0; start < one_line_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::int64_t> cycle;
        std::size_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(static_cast<std::int64_t>(x));
            x = static_cast<std::size_t>(one_line_[x]);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

bool Permutation::is_single_cycle() const {
    std::size_t len = 0;
    std::size_t x = 0;
    do {
        x = static_cast<std::size_t>(one_line_[x]);
        ++len;
    } while (x != 0 && len <= one_line_.size());
    return len == one_line_.size() && x == 0;
}

std::int64_t Permutation::descents() const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i + 1 < one_line_.size(); ++i)
        if (one_line_[i + 1] < one_line_[i]) ++d;
    return d;
}

}  // namespace gdbw
