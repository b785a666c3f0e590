#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "permstat/canonical.hpp"
#include "permstat/statistics.hpp"
#include "support/oracles.hpp"

using namespace permstat;

namespace {

// Every product with one factor per level, via an index odometer.
std::vector<SignedPermutation> all_products(
    const std::vector<std::vector<SignedPermutation>>& tables, int rank) {
    std::vector<SignedPermutation> out;
    std::vector<std::size_t> idx(tables.size(), 0);
    while (true) {
        auto prod = SignedPermutation::identity(rank);
        for (std::size_t j = 0; j < tables.size(); ++j)
            prod = prod * tables[j][idx[j]];
        out.push_back(prod);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == tables[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("factor tables by level") {
    auto t1 = r_table_s(1, 2);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0] == SignedPermutation::identity(2));
    CHECK(t1[1] == generator_s(1, 2));

    auto t2 = r_table_s(2, 3);
    REQUIRE(t2.size() == 3);
    CHECK(t2[0] == SignedPermutation::identity(3));
    CHECK(t2[1] == generator_s(2, 3));
    CHECK(t2[2] == generator_s(2, 3) * generator_s(1, 3));

    auto a1 = r_table_a(1, 3);
    REQUIRE(a1.size() == 3);
    CHECK(a1[0] == SignedPermutation::identity(3));
    CHECK(a1[1] == generator_a(1, 3));
    CHECK(a1[2] == generator_a(1, 3, true));
    CHECK(a1[1].window() == std::vector<int>{2, 3, 1});
    CHECK(a1[2].window() == std::vector<int>{3, 1, 2});

    auto a2 = r_table_a(2, 4);
    REQUIRE(a2.size() == 4);
    CHECK(a2[1] == generator_a(2, 4));
    CHECK(a2[2] == generator_a(2, 4) * generator_a(1, 4));
    CHECK(a2[3] == generator_a(2, 4) * generator_a(1, 4, true));

    CHECK_THROWS_AS(r_table_s(0, 3), std::out_of_range);
    CHECK_THROWS_AS(r_table_s(3, 3), std::out_of_range);
    CHECK_THROWS_AS(r_table_a(3, 4), std::out_of_range);
}

TEST_CASE("factor windows embed at the ambient rank") {
    SFactor tail{2, 1};
    auto w = factor_window(tail, 5);
    CHECK(w == generator_s(2, 5) * generator_s(1, 5));
    CHECK(w(4) == 4);
    CHECK(w(5) == 5);
    CHECK(factor_window(SFactor{3, 4}, 6) == SignedPermutation::identity(6));
    AFactor inv_tail{3, 1, true};
    CHECK(factor_window(inv_tail, 6) ==
          generator_a(3, 6) * generator_a(2, 6) * generator_a(1, 6, true));
    CHECK_THROWS_AS(factor_window(SFactor{5, 1}, 4), std::out_of_range);
    CHECK_THROWS_AS(factor_window(SFactor{2, 4}, 5), std::invalid_argument);
    CHECK_THROWS_AS(factor_window(AFactor{2, 2, true}, 5),
                    std::invalid_argument);
}

TEST_CASE("s words round trip and count inversions") {
    for (int rank = 1; rank <= 5; ++rank) {
        for (const auto& w : test::unsigned_windows(rank)) {
            SignedPermutation sigma(w);
            auto word = s_factorize(sigma);
            CHECK(word.levels() == rank - 1);
            CHECK(evaluate(word, rank) == sigma);
            CHECK(word.letters() == inv(sigma));
        }
    }
    CHECK_THROWS_AS(s_factorize(SignedPermutation({-1, 2})),
                    std::domain_error);
}

TEST_CASE("a words round trip and count ell_a") {
    for (int rank = 2; rank <= 6; ++rank) {
        for (const auto& v : test::brute_group(GroupLabel::A, rank)) {
            auto word = a_factorize(v);
            CHECK(word.levels() == rank - 2);
            CHECK(evaluate(word, rank) == v);
            CHECK(word.letters() == ell_a(v));
        }
    }
    CHECK_THROWS_AS(a_factorize(SignedPermutation({2, 1, 3})),
                    std::domain_error);
    CHECK_THROWS_AS(a_factorize(SignedPermutation({-2, 1, 3})),
                    std::domain_error);
}

TEST_CASE("canonical products hit each element exactly once") {
    for (int rank = 2; rank <= 5; ++rank) {
        std::vector<std::vector<SignedPermutation>> s_tables;
        for (int j = 1; j <= rank - 1; ++j)
            s_tables.push_back(r_table_s(j, rank));
        auto s_products = all_products(s_tables, rank);
        std::set<SignedPermutation> s_seen(s_products.begin(),
                                           s_products.end());
        CHECK(s_products.size() == test::factorial_oracle(rank));
        CHECK(s_seen.size() == s_products.size());
    }
    for (int rank = 3; rank <= 5; ++rank) {
        std::vector<std::vector<SignedPermutation>> a_tables;
        for (int j = 1; j <= rank - 2; ++j)
            a_tables.push_back(r_table_a(j, rank));
        auto a_products = all_products(a_tables, rank);
        std::set<SignedPermutation> a_seen(a_products.begin(),
                                           a_products.end());
        CHECK(a_products.size() == test::factorial_oracle(rank) / 2);
        CHECK(a_seen.size() == a_products.size());
    }
}

TEST_CASE("frozen a word of the running example") {
    auto word = a_factorize(SignedPermutation({5, 2, 1, 6, 4, 3}));
    REQUIRE(word.levels() == 4);
    CHECK(word.factors[0] == AFactor{1, 2, false});  // identity
    CHECK(word.factors[1] == AFactor{2, 2, false});  // a_2
    CHECK(word.factors[2] == AFactor{3, 1, true});   // a_3 a_2 a_1^-1
    CHECK(word.factors[3] == AFactor{4, 3, false});  // a_4 a_3
    CHECK(word.letters() == 6);
}

TEST_CASE("covering map erases exponents factor-wise") {
    auto word = a_factorize(SignedPermutation({5, 2, 1, 6, 4, 3}));
    auto image = covering_f(word);
    REQUIRE(image.levels() == 4);
    CHECK(image.factors[0] == SFactor{1, 2});
    CHECK(image.factors[1] == SFactor{2, 2});
    CHECK(image.factors[2] == SFactor{3, 1});
    CHECK(image.factors[3] == SFactor{4, 3});
    CHECK(evaluate(image, 5).window() == std::vector<int>{4, 1, 5, 3, 2});
}

TEST_CASE("lift is a local inverse of the covering map") {
    for (const auto& v : test::brute_group(GroupLabel::A, 5)) {
        auto word = a_factorize(v);
        CHECK(lift_g(word, covering_f(word)) == word);
    }
    // Lifting the transformed word from the running example.
    auto u_word = a_factorize(SignedPermutation({5, 2, 1, 6, 4, 3}));
    auto s_word = s_factorize(SignedPermutation({4, 5, 1, 3, 2}));
    auto lifted = lift_g(u_word, s_word);
    REQUIRE(lifted.levels() == 4);
    CHECK(lifted.factors[0] == AFactor{1, 2, false});
    CHECK(lifted.factors[1] == AFactor{2, 2, false});
    CHECK(lifted.factors[2] == AFactor{3, 1, true});
    CHECK(lifted.factors[3] == AFactor{4, 2, false});  // a_4 a_3 a_2
    CHECK(evaluate(lifted, 6).window() ==
          std::vector<int>{2, 5, 6, 1, 4, 3});
}

TEST_CASE("evaluate validates the word shape") {
    SCanonicalWord gap{{SFactor{2, 2}}};
    CHECK_THROWS_AS(evaluate(gap, 4), std::invalid_argument);
    SCanonicalWord fine{{SFactor{1, 1}, SFactor{2, 2}}};
    CHECK_NOTHROW(evaluate(fine, 3));
    CHECK_THROWS_AS(evaluate(fine, 2), std::invalid_argument);
    ACanonicalWord aword{{AFactor{1, 1, false}}};
    CHECK_NOTHROW(evaluate(aword, 3));
    CHECK_THROWS_AS(evaluate(aword, 2), std::invalid_argument);
    CHECK(evaluate(SCanonicalWord{}, 1) == SignedPermutation::identity(1));
    CHECK(evaluate(ACanonicalWord{}, 2) == SignedPermutation::identity(2));
}

TEST_CASE("lift rejects mismatched level counts") {
    ACanonicalWord u{{AFactor{1, 2, false}}};
    SCanonicalWord w{{SFactor{1, 2}, SFactor{2, 3}}};
    CHECK_THROWS_AS(lift_g(u, w), std::invalid_argument);
}

TEST_CASE("factorizing the identity yields identity factors") {
    for (int rank = 2; rank <= 5; ++rank) {
        auto word = s_factorize(SignedPermutation::identity(rank));
        CHECK(word.letters() == 0);
        for (const auto& f : word.factors) CHECK(f.is_identity());
    }
    auto aw = a_factorize(SignedPermutation::identity(5));
    CHECK(aw.letters() == 0);
    for (const auto& f : aw.factors) CHECK(f.is_identity());
}
