#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gdbw/errors.hpp"
#include "gdbw/gfp.hpp"
#include "gdbw/group.hpp"
#include "gdbw/snf.hpp"
#include "gdbw/verify.hpp"
#include "oracles.hpp"

using namespace gdbw;

namespace {

std::vector<long> factors_of(const AbelianGroup& g) {
    std::vector<long> out;
    for (const BigInt& f : g.invariant_factors()) out.push_back(f.get_si());
    return out;
}

std::vector<long> snf_of_laplacian(const GdbGraph& g) {
    std::vector<long> out;
    for (const BigInt& f : smith_normal_form(laplacian(g)).invariant_factors) out.push_back(f.get_si());
    return out;
}

AbelianGroup group_from(const std::vector<long>& factors) {
    std::vector<BigInt> f(factors.begin(), factors.end());
    return AbelianGroup::from_factors(f);
}

}  // namespace

TEST_CASE("canonical invariant factors") {
    CHECK(groups_isomorphic(group_from({2, 3}), AbelianGroup::cyclic(6)));
    CHECK_FALSE(groups_isomorphic(AbelianGroup::cyclic(4), group_from({2, 2})));
    CHECK(group_from({1, 1, 1}).trivial());
    CHECK(factors_of(group_from({4, 2, 8, 3})) == std::vector<long>{2, 4, 24});
    CHECK(group_order(group_from({4, 2, 8, 3})) == 192);
    CHECK(group_from({}).str() == "0");
    CHECK(group_from({3, 3, 2}).str() == "Z_3 + Z_6");
    CHECK_THROWS_AS(group_from({0}), DomainError);
}

TEST_CASE("element order histograms") {
    for (const auto& factors :
         std::vector<std::vector<long>>{{6}, {2, 2}, {4}, {2, 4}, {3, 3, 2}, {2, 2, 4}, {60}}) {
        const auto brute = oracles::element_orders_brute({factors.begin(), factors.end()});
        std::map<std::int64_t, BigInt> expected;
        for (std::int64_t o : brute) expected[o] += 1;
        CHECK(group_from(factors).element_order_histogram() == expected);
    }
}

TEST_CASE("smith normal forms of the worked Laplacians") {
    CHECK(snf_of_laplacian(GdbGraph(3, 6)) == std::vector<long>{1, 1, 3, 3, 3, 0});
    CHECK(snf_of_laplacian(GdbGraph(2, 6)) == std::vector<long>{1, 1, 1, 2, 2, 0});
}

TEST_CASE("sandpile groups") {
    CHECK(sandpile_group(GdbGraph(3, 6)) == group_from({3, 3, 3}));
    CHECK(sandpile_group(GdbGraph(2, 6)) == group_from({2, 2}));

    // Reduced-Laplacian invariant factors for DB(3, n), n = 3..12.
    const std::map<std::int64_t, std::vector<long>> reduced_factors{
        {3, {1, 3}},
        {4, {1, 1, 4}},
        {5, {1, 1, 1, 16}},
        {6, {1, 1, 3, 3, 3}},
        {7, {1, 1, 1, 1, 1, 104}},
        {8, {1, 1, 1, 1, 2, 8, 8}},
        {9, {1, 1, 1, 3, 3, 3, 3, 9}},
        {10, {1, 1, 1, 1, 1, 1, 1, 16, 80}},
        {11, {1, 1, 1, 1, 1, 1, 1, 1, 22, 242}},
        {12, {1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 12}},
    };
    for (const auto& [n, expected] : reduced_factors) {
        std::vector<long> got;
        for (const BigInt& f : smith_normal_form(reduced_laplacian(GdbGraph(3, n))).invariant_factors)
            got.push_back(f.get_si());
        CHECK(got == expected);
        std::vector<long> nonunit;
        for (long f : expected)
            if (f > 1) nonunit.push_back(f);
        CHECK(sandpile_group(GdbGraph(3, n)) == group_from(nonunit));
    }

    // |K(G)| = kappa(G).
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t n = 1; n <= 10; ++n)
            CHECK(group_order(sandpile_group(GdbGraph(k, n))) == kappa(GdbGraph(k, n)));
}

TEST_CASE("reutenauer group structure") {
    CHECK(reutenauer_group_structure(2, 4) == AbelianGroup::cyclic(2));
    CHECK(reutenauer_group_structure(2, 8) == group_from({2, 2, 4}));
    CHECK(reutenauer_group_structure(3, 6) == direct_sum(group_from({3, 3, 3}), AbelianGroup::cyclic(2)));

    // Order is Phi_p(n)/n.
    for (std::int64_t p : {2, 3})
        for (std::int64_t n = 2; n <= (p == 2 ? 12 : 9); ++n)
            CHECK(group_order(reutenauer_group_structure(p, n)) == count_normal_elements(p, n) / n);

    CHECK(group_order(reutenauer_group_structure(3, 6)) == 54);
    CHECK_THROWS_AS(reutenauer_group_structure(4, 3), DomainError);
}

TEST_CASE("prime power structure") {
    CHECK(sandpile_prime_power(2, 3) == group_from({2, 2, 4}));
    CHECK(sandpile_prime_power(3, 2) == group_from({3, 3, 3, 3, 9}));
    CHECK(sandpile_prime_power(2, 1).trivial());

    for (auto [p, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}}) {
        std::int64_t n = 1;
        for (std::int64_t i = 0; i < d; ++i) n *= p;
        CHECK(sandpile_prime_power(p, d) == sandpile_group(GdbGraph(p, n)));
    }
    for (std::int64_t d = 1; d <= 6; ++d) CHECK(levine_group(d) == sandpile_prime_power(2, d));
}

TEST_CASE("prime-alphabet counting formula") {
    CHECK(count_gdb_words_prime(2, 12) == 4);
    CHECK(count_gdb_words_prime(3, 18) == 1728);
    CHECK_THROWS_AS(count_gdb_words_prime(3, 8), DomainError);
    CHECK_THROWS_AS(count_gdb_words_prime(2, 2), DomainError);

    for (std::int64_t len = 4; len <= 24; len += 2)
        CHECK(count_gdb_words_prime(2, len) == count_gdb_words(2, len));
    for (std::int64_t len = 6; len <= 21; len += 3)
        CHECK(count_gdb_words_prime(3, len) == count_gdb_words(3, len));
}

TEST_CASE("concrete multiplication tables match the abstract structure") {
    for (auto [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}}) {
        std::vector<CirculantClass> elems;
        for (const Necklace& nk : enumerate_invertible_necklaces(p, n)) elems.emplace_back(nk, p);

        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i].representative().str()] = i;
        std::vector<std::uint8_t> id(static_cast<std::size_t>(n), 0);
        id[0] = 1;
        const std::size_t e = index.at(Necklace(Word(id, static_cast<int>(p))).str());

        std::map<std::int64_t, BigInt> concrete;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::size_t x = i;
            std::int64_t ord = 1;
            while (x != e) {
                x = index.at(reutenauer_mul(elems[x], elems[i]).representative().str());
                ++ord;
            }
            concrete[ord] += 1;
        }
        CHECK(concrete == reutenauer_group_structure(p, n).element_order_histogram());
    }
}

TEST_CASE("verification reports") {
    const VerificationReport tables = verify_tables(6);
    CHECK(tables.overall());
    CHECK_FALSE(tables.checks.empty());

    const VerificationReport bij4 = verify_bijection(2, 4);
    CHECK(bij4.overall());
    bool saw_odd_weight = false;
    for (const Check& c : bij4.checks) {
        if (c.name.find("odd-weight") != std::string::npos) {
            saw_odd_weight = true;
            CHECK(c.expected == "2");
        }
    }
    CHECK(saw_odd_weight);

    CHECK(verify_bijection(3, 3).overall());
    CHECK(verify_dichotomy(2, 10).overall());
    CHECK(verify_dichotomy(3, 6).overall());
}
