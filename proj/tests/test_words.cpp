#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gdbw/errors.hpp"
#include "gdbw/numtheory.hpp"
#include "gdbw/word.hpp"
#include "oracles.hpp"

using namespace gdbw;

namespace {

Word w(const std::string& text, int k = 0) { return Word::parse(text, k); }

}  // namespace

TEST_CASE("word parsing and rendering") {
    CHECK(w("220120011").str() == "220120011");
    CHECK(w("220120011").alphabet() == 3);
    CHECK(w("0011", 3).alphabet() == 3);
    CHECK(Word::parse("a0", 11).str() == "a0");
    CHECK_THROWS_AS(Word::parse("012", 2), DomainError);
    CHECK_THROWS_AS(Word::parse("0!1"), DomainError);
    CHECK_THROWS_AS(Word({}, 2), DomainError);
    CHECK_THROWS_AS(Word({0}, 1), DomainError);
    CHECK_THROWS_AS(Word({0}, 37), DomainError);
}

TEST_CASE("shift") {
    CHECK(shift(w("011")).str() == "101");
    CHECK(shift(w("0", 2)).str() == "0");
    Word x = w("1100");
    for (int i = 0; i < 4; ++i) x = shift(x);
    CHECK(x == w("1100"));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(w("1100")));
    CHECK_FALSE(is_primitive(w("1010")));
    CHECK(is_primitive(w("0", 2)));
    CHECK(primitive_root_length(w("101101")) == 3);

    // Against the distinct-rotation-count oracle.
    for (int n = 1; n <= 10; ++n) {
        std::vector<std::uint8_t> digits(n, 0);
        do {
            Word word(digits, 2);
            CAPTURE(word.str());
            CHECK(is_primitive(word) == oracles::is_primitive_brute(word));
        } while (next_word(digits, 2));
    }
}

TEST_CASE("canonical rotation matches brute force") {
    CHECK(canonical_rotation(w("0110")).str() == "0011");
    CHECK(canonical_rotation(w("000")).str() == "000");

    // Least of the nine rotations; also the first row of the BWT matrix of
    // [220120011].
    Word paper = w("220120011");
    CHECK(oracles::least_rotation_brute(paper).str() == "001122012");
    CHECK(canonical_rotation(paper).str() == "001122012");

    for (int k = 2; k <= 3; ++k) {
        for (int n = 1; n <= 8; ++n) {
            std::vector<std::uint8_t> digits(n, 0);
            do {
                Word word(digits, k);
                CAPTURE(word.str());
                const Word canon = canonical_rotation(word);
                CHECK(canon == oracles::least_rotation_brute(word));
                CHECK(canonical_rotation(canon) == canon);  // idempotent
                CHECK(canonical_rotation(shift(word)) == canon);
            } while (next_word(digits, k));
        }
    }
}

TEST_CASE("weight and parikh") {
    CHECK(weight(w("1110")) == 3);
    CHECK(weight(w("220120011")) == 9);
    CHECK(weight(w("00000")) == 0);

    CHECK(parikh(w("210201102102120")).counts == std::vector<std::int64_t>{5, 5, 5});
    CHECK(parikh(w("1100")).counts == std::vector<std::int64_t>{2, 2});
    CHECK(parikh(w("000", 2)).counts == std::vector<std::int64_t>{3, 0});

    std::vector<std::uint8_t> digits(6, 0);
    do {
        Word word(digits, 3);
        CHECK(parikh(shift(word)) == parikh(word));
        CHECK(weight(shift(word)) == weight(word));
    } while (next_word(digits, 3));
}

TEST_CASE("alphabet-permutation powers") {
    CHECK(is_app(w("210201102102120"), 3));
    CHECK(is_app(w("21302031"), 4));
    CHECK_FALSE(is_app(w("1100"), 2));
    CHECK_FALSE(is_app(w("011"), 2));  // length not divisible

    // Binary words are APPs exactly when the Thue-Morse substitution
    // inverts, and APPs always have balanced Parikh vectors.
    for (int n = 2; n <= 12; n += 2) {
        std::vector<std::uint8_t> digits(n, 0);
        do {
            Word word(digits, 2);
            CAPTURE(word.str());
            CHECK(is_app(word, 2) == oracles::thue_morse_preimage(word).has_value());
            if (is_app(word, 2)) CHECK(parikh(word).balanced());
        } while (next_word(digits, 2));
    }
    std::vector<std::uint8_t> digits(6, 0);
    do {
        Word word(digits, 3);
        if (is_app(word, 3)) CHECK(parikh(word).balanced());
    } while (next_word(digits, 3));
}

TEST_CASE("mobius and totient") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(7) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    // phi by gcd counting
    for (std::int64_t n = 1; n <= 60; ++n) {
        std::int64_t count = 0;
        for (std::int64_t a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 1) == 1);
}

TEST_CASE("necklace counting formulas vs enumeration") {
    CHECK(count_lyn(2, 4) == 3);
    CHECK(count_lyn(2, 1) == 2);
    CHECK(oracles::all_necklaces_brute(2, 4, false).size() == 6);
    CHECK(count_neck(2, 4) == 6);

    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 9; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(count_lyn(k, n) == BigInt(static_cast<long>(oracles::all_necklaces_brute(k, n, true).size())));
            CHECK(count_neck(k, n) == BigInt(static_cast<long>(oracles::all_necklaces_brute(k, n, false).size())));
        }
}

TEST_CASE("necklace type") {
    Necklace periodic(w("1010"));
    CHECK(periodic.canonical().str() == "0101");
    CHECK(periodic.period() == 2);
    CHECK_FALSE(periodic.aperiodic());

    Necklace ap(w("1100"));
    CHECK(ap.canonical().str() == "0011");
    CHECK(ap.period() == 4);
    CHECK(ap.aperiodic());
    CHECK(ap.str() == "[0011]");
    CHECK(ap.weight() == 2);

    CHECK(Necklace(w("11110")) == Necklace(w("01111")));
}

TEST_CASE("necklace enumeration") {
    auto names = [](const std::vector<Necklace>& list) {
        std::vector<std::string> out;
        for (const auto& n : list) out.push_back(n.canonical().str());
        return out;
    };

    CHECK(names(enumerate_necklaces(2, 4, true)) == std::vector<std::string>{"0001", "0011", "0111"});
    CHECK(names(enumerate_necklaces(2, 1, false)) == std::vector<std::string>{"0", "1"});
    CHECK(names(enumerate_necklaces(3, 2, true)) == std::vector<std::string>{"01", "02", "12"});

    for (int k = 2; k <= 3; ++k)
        for (int n = 1; n <= 8; ++n) {
            CHECK(names(enumerate_necklaces(k, n, true)) == oracles::all_necklaces_brute(k, n, true));
            CHECK(names(enumerate_necklaces(k, n, false)) == oracles::all_necklaces_brute(k, n, false));
        }

    CHECK_THROWS_AS(enumerate_necklaces(2, 60, false), DomainError);
    CHECK_THROWS_AS(enumerate_necklaces(2, 15, false, /*bound=*/1 << 10), DomainError);
    try {
        enumerate_necklaces(2, 15, false, 1 << 10);
    } catch (const DomainError& e) {
        CHECK(std::string(e.kind()) == "BoundExceeded");
    }
}
