#include "gdbw/bwt.hpp"

#include <algorithm>

#include "gdbw/errors.hpp"
#include "gdbw/numtheory.hpp"

namespace gdbw {

Word BwtMatrix::first_column() const {
    std::vector<std::uint8_t> col;
    col.reserve(rows.size());
    for (const Word& r : rows) col.push_back(r[0]);
    return Word(std::move(col), rows.front().alphabet());
}

Word BwtMatrix::last_column() const {
    std::vector<std::uint8_t> col;
    col.reserve(rows.size());
    for (const Word& r : rows) col.push_back(r[r.size() - 1]);
    return Word(std::move(col), rows.front().alphabet());
}

BwtMatrix bwt_matrix(const Necklace& neck) {
    const Word& w = neck.canonical();
    const std::size_t n = w.size();
    BwtMatrix m;
    m.rows.reserve(n);
    std::vector<std::uint8_t> rot(w.digits().begin(), w.digits().end());
    for (std::size_t r = 0; r < n; ++r) {
        m.rows.emplace_back(rot, w.alphabet());
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    std::sort(m.rows.begin(), m.rows.end());
    return m;
}

Word bwt(const Necklace& neck) { return bwt_matrix(neck).last_column(); }

Permutation standard_permutation(const Word& u) {
    const std::size_t n = u.size();
    std::vector<std::int64_t> inv;
    inv.reserve(n);
    for (int letter = 0; letter < u.alphabet(); ++letter)
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] == letter) inv.push_back(static_cast<std::int64_t>(i));
    std::vector<std::int64_t> pi(n);
    for (std::size_t rank = 0; rank < n; ++rank) pi[static_cast<std::size_t>(inv[rank])] = static_cast<std::int64_t>(rank);
    return Permutation(std::move(pi));
}

std::vector<std::int64_t> inverse_standard_permutation_cycle(const Word& u) {
    const Permutation inv = standard_permutation(u).inverse();
    std::vector<std::int64_t> cycle;
    cycle.reserve(u.size());
    std::int64_t x = 0;
    do {
        cycle.push_back(x);
        x = inv(static_cast<std::size_t>(x));
    } while (x != 0 && cycle.size() <= u.size());
    if (cycle.size() != u.size())
        raise(errc::not_a_cycle, "standard permutation of '" + u.str() + "' is not a single cycle");
    return cycle;
}

BwtImageResult is_bwt_image(const Word& u) {
    if (standard_permutation(u).is_single_cycle()) return {BwtImageResult::Kind::aperiodic, 0, std::nullopt};
    const std::size_t n = u.size();
    for (std::int64_t c : divisors(static_cast<std::int64_t>(n))) {
        if (c == 1) continue;
        const std::size_t cc = static_cast<std::size_t>(c);
        const std::size_t m = n / cc;
        bool blocky = true;
        for (std::size_t b = 0; b < m && blocky; ++b)
            for (std::size_t i = 1; i < cc && blocky; ++i) blocky = u[b * cc + i] == u[b * cc];
        if (!blocky) continue;
        std::vector<std::uint8_t> root;
        root.reserve(m);
        for (std::size_t b = 0; b < m; ++b) root.push_back(u[b * cc]);
        Word v(std::move(root), u.alphabet());
        if (standard_permutation(v).is_single_cycle())
            return {BwtImageResult::Kind::power, c, std::move(v)};
    }
    return {BwtImageResult::Kind::no, 0, std::nullopt};
}

namespace {

Necklace inverse_bwt_aperiodic(const Word& u) {
    const std::vector<std::int64_t> cycle = inverse_standard_permutation_cycle(u);
    std::vector<std::uint8_t> first(u.digits().begin(), u.digits().end());
    std::sort(first.begin(), first.end());
    std::vector<std::uint8_t> row;
    row.reserve(u.size());
    for (std::int64_t i : cycle) row.push_back(first[static_cast<std::size_t>(i)]);
    return Necklace(Word(std::move(row), u.alphabet()));
}

}  // namespace

Necklace inverse_bwt(const Word& u) {
    const BwtImageResult r = is_bwt_image(u);
    switch (r.kind) {
        case BwtImageResult::Kind::aperiodic:
            return inverse_bwt_aperiodic(u);
        case BwtImageResult::Kind::power: {
            const Necklace root = inverse_bwt_aperiodic(*r.root);
            const auto d = root.canonical().digits();
            std::vector<std::uint8_t> rep;
            rep.reserve(u.size());
            for (std::int64_t i = 0; i < r.c; ++i) rep.insert(rep.end(), d.begin(), d.end());
            return Necklace(Word(std::move(rep), u.alphabet()));
        }
        case BwtImageResult::Kind::no:
            break;
    }
    raise(errc::not_a_bwt_image, "'" + u.str() + "' is not the BWT of any necklace");
}

Necklace inverse_bwt_balanced(const Word& u, int k) {
    if (k < 2 || k > 36) raise(errc::out_of_range, "alphabet size must be in [2, 36]");
    const std::size_t n = u.size();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
    for (std::uint8_t d : u.digits()) {
        if (d >= k) raise(errc::not_balanced, "digit " + std::to_string(d) + " outside the " + std::to_string(k) + "-letter alphabet");
        ++counts[d];
    }
    if (n % static_cast<std::size_t>(k) != 0 ||
        !std::all_of(counts.begin(), counts.end(), [&](std::int64_t c) { return c == counts[0]; }))
        raise(errc::not_balanced, "'" + u.str() + "' does not have a balanced Parikh vector over " + std::to_string(k) + " letters");

    const std::int64_t run = static_cast<std::int64_t>(n) / k;
    const std::vector<std::int64_t> cycle = inverse_standard_permutation_cycle(u);
    std::vector<std::uint8_t> row;
    row.reserve(n);
    for (std::int64_t i : cycle) row.push_back(static_cast<std::uint8_t>(i / run));
    return Necklace(Word(std::move(row), k));
}

bool is_generalized_de_bruijn(const Necklace& neck, int k) { return is_app(bwt(neck), k); }

}  // namespace gdbw
