#include "gdbw/word.hpp"

#include <algorithm>

#include "gdbw/errors.hpp"

namespace gdbw {

namespace {

char digit_char(std::uint8_t d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

int char_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

Word::Word(std::vector<std::uint8_t> digits, int alphabet_size)
    : digits_(std::move(digits)), k_(alphabet_size) {
    if (k_ < 2 || k_ > 36) raise(errc::out_of_range, "alphabet size must be in [2, 36]");
    if (digits_.empty()) raise(errc::out_of_range, "words must have length >= 1");
    for (std::uint8_t d : digits_)
        if (d >= k_) raise(errc::digit_out_of_range, "digit " + std::to_string(d) + " not below alphabet size " + std::to_string(k_));
}

Word Word::parse(std::string_view text, int alphabet_size) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    int max_digit = 0;
    for (char c : text) {
        int d = char_digit(c);
        if (d < 0) raise(errc::digit_out_of_range, std::string("invalid digit character '") + c + "'");
        max_digit = std::max(max_digit, d);
        digits.push_back(static_cast<std::uint8_t>(d));
    }
    int k = alphabet_size == 0 ? std::max(2, max_digit + 1) : alphabet_size;
    return Word(std::move(digits), k);
}

std::string Word::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s.push_back(digit_char(d));
    return s;
}

bool ParikhVector::balanced() const {
    if (counts.empty()) return false;
    return std::all_of(counts.begin(), counts.end(), [&](std::int64_t c) { return c == counts[0]; });
}

Word shift(const Word& w) {
    std::vector<std::uint8_t> d(w.digits().begin(), w.digits().end());
    std::rotate(d.rbegin(), d.rbegin() + 1, d.rend());
    return Word(std::move(d), w.alphabet());
}

std::size_t primitive_root_length(const Word& w) {
    const auto d = w.digits();
    const std::size_t n = d.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool periodic = true;
        for (std::size_t i = len; i < n && periodic; ++i) periodic = d[i] == d[i - len];
        if (periodic) return len;
    }
    return n;
}

bool is_primitive(const Word& w) { return primitive_root_length(w) == w.size(); }

std::size_t least_rotation_index(std::span<const std::uint8_t> s) {
    // Booth's least-rotation algorithm on the doubled word.
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    auto at = [&](std::size_t i) { return s[i % n]; };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        std::uint8_t sj = at(j);
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1)) k = j - i - 1;
            i = f[i];
        }
        if (sj != at(k + i + 1)) {
            if (sj < at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Word canonical_rotation(const Word& w) {
    const auto d = w.digits();
    const std::size_t n = d.size();
    const std::size_t r = least_rotation_index(d);
    std::vector<std::uint8_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d[(r + i) % n]);
    return Word(std::move(out), w.alphabet());
}

std::int64_t weight(const Word& w) {
    std::int64_t sum = 0;
    for (std::uint8_t d : w.digits()) sum += d;
    return sum;
}

ParikhVector parikh(const Word& w) {
    ParikhVector p;
    p.counts.assign(static_cast<std::size_t>(w.alphabet()), 0);
    for (std::uint8_t d : w.digits()) ++p.counts[d];
    return p;
}

bool is_app(const Word& w, int k) {
    if (k < 2 || k > 36) raise(errc::out_of_range, "alphabet size must be in [2, 36]");
    const auto d = w.digits();
    if (d.size() % static_cast<std::size_t>(k) != 0) return false;
    const std::uint64_t full = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    for (std::size_t block = 0; block < d.size(); block += k) {
        std::uint64_t seen = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            std::uint8_t digit = d[block + i];
            if (digit >= k) return false;
            seen |= std::uint64_t{1} << digit;
        }
        if (seen != full) return false;
    }
    return true;
}

Necklace::Necklace(const Word& w)
    : canonical_(canonical_rotation(w)), period_(primitive_root_length(canonical_)) {}

std::int64_t Necklace::weight() const { return gdbw::weight(canonical_); }

std::string Necklace::str() const { return "[" + canonical_.str() + "]"; }

bool next_word(std::vector<std::uint8_t>& digits, int k) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] + 1 < k) {
            ++digits[i];
            std::fill(digits.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits.end(), 0);
            return true;
        }
    }
    return false;
}

std::vector<Necklace> enumerate_necklaces(int k, std::int64_t n, bool aperiodic_only, std::uint64_t bound) {
    if (k < 2 || k > 36) raise(errc::out_of_range, "alphabet size must be in [2, 36]");
    if (n < 1) raise(errc::out_of_range, "necklace length must be >= 1");
    if (pow_int(k, static_cast<std::uint64_t>(n)) > bound)
        raise(errc::bound_exceeded, "k^n exceeds the enumeration bound");

    // Booth may report any index of an equal minimal rotation for periodic
    // words, so canonicity is "the least rotation spells the word itself".
    auto is_canonical = [](std::span<const std::uint8_t> d) {
        const std::size_t r = least_rotation_index(d);
        if (r == 0) return true;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[(r + i) % d.size()] != d[i]) return false;
        return true;
    };

    std::vector<Necklace> out;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
    do {
        if (!is_canonical(digits)) continue;
        Word w(digits, k);
        if (aperiodic_only && !is_primitive(w)) continue;
        out.emplace_back(w);
    } while (next_word(digits, k));
    return out;
}

}  // namespace gdbw
