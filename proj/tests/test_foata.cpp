#include <doctest.h>

#include <set>
#include <vector>

#include "permstat/foata.hpp"
#include "permstat/statistics.hpp"
#include "support/oracles.hpp"

using namespace permstat;

namespace {

void check_phi_class(const std::vector<std::vector<int>>& words) {
    std::set<std::vector<int>> images;
    for (const auto& w : words) {
        LetterWord r(w);
        auto image = phi(r);
        CHECK(inv(image) == test::maj_oracle(w));
        CHECK(sorted(image) == sorted(r));
        if (!w.empty()) CHECK(image.letters.back() == w.back());
        images.insert(image.letters);
    }
    // Injective on the rearrangement class.
    CHECK(images.size() == words.size());
}

}  // namespace

TEST_CASE("the worked trace") {
    LetterWord r({2, 3, 5, 1, 4});
    CHECK(phi(r).letters == std::vector<int>{2, 3, 1, 5, 4});

    auto trace = phi_trace(r);
    REQUIRE(trace.steps.size() == 4);
    CHECK(trace.steps[0] ==
          std::vector<LetterWord>{LetterWord({2})});
    CHECK(trace.steps[1] ==
          std::vector<LetterWord>{LetterWord({2}), LetterWord({3})});
    CHECK(trace.steps[2] ==
          std::vector<LetterWord>{LetterWord({2}), LetterWord({3}),
                                  LetterWord({5})});
    CHECK(trace.steps[3] ==
          std::vector<LetterWord>{LetterWord({2}), LetterWord({3}),
                                  LetterWord({5, 1})});
    CHECK(trace.result == phi(r));
}

TEST_CASE("short words are fixed") {
    CHECK(phi(LetterWord{}) == LetterWord{});
    CHECK(phi(LetterWord({7})) == LetterWord({7}));
    CHECK(phi(LetterWord({1, 2})) == LetterWord({1, 2}));
    CHECK(phi(LetterWord({2, 1})) == LetterWord({2, 1}));
    CHECK(phi_trace(LetterWord{}).steps.empty());
    CHECK(phi_trace(LetterWord({7})).steps.empty());
}

TEST_CASE("maj sums the descent positions") {
    CHECK(maj(LetterWord({2, 3, 5, 1, 4})) == 3);
    CHECK(maj(LetterWord{}) == 0);
    CHECK(maj(LetterWord({3, 2, 1})) == 3);
    CHECK(maj(LetterWord({1, 1, 2, 2})) == 0);
    for (const auto& w : test::unsigned_windows(5))
        CHECK(maj(LetterWord(w)) == test::maj_oracle(w));
}

TEST_CASE("phi sends maj to inv on permutations") {
    for (int m = 1; m <= 6; ++m) check_phi_class(test::unsigned_windows(m));
}

TEST_CASE("phi sends maj to inv on words with repeated letters") {
    check_phi_class(test::rearrangements({1, 1, 2, 2, 3}));
    check_phi_class(test::rearrangements({1, 1, 1, 2, 2}));
    check_phi_class(test::rearrangements({2, 2, 2, 2}));
    check_phi_class(test::rearrangements({1, 2, 2, 3, 3, 3}));
}

TEST_CASE("rtl variant is the reverse conjugate") {
    CHECK(rtl_phi(LetterWord({4, 1, 5, 3, 2})).letters ==
          std::vector<int>{4, 5, 1, 3, 2});
    for (const auto& w : test::unsigned_windows(5)) {
        LetterWord r(w);
        CHECK(rtl_phi(r) == reverse(phi(reverse(r))));
    }
    // First letter is preserved instead of the last.
    for (const auto& w : test::unsigned_windows(4)) {
        CHECK(rtl_phi(LetterWord(w)).letters.front() == w.front());
    }
}

TEST_CASE("trace agrees with phi and has one step per adjoined letter") {
    for (const auto& w : test::unsigned_windows(5)) {
        LetterWord r(w);
        auto trace = phi_trace(r);
        CHECK(trace.result == phi(r));
        CHECK(trace.steps.size() == w.size() - 1);
        // Compartments of each step concatenate to a prefix permutation.
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            std::vector<int> flat;
            for (const auto& comp : trace.steps[i])
                flat.insert(flat.end(), comp.letters.begin(),
                            comp.letters.end());
            std::vector<int> prefix(w.begin(), w.begin() + i + 1);
            CHECK(sorted(LetterWord(flat)) == sorted(LetterWord(prefix)));
        }
    }
}

TEST_CASE("signed letters order as integers") {
    LetterWord r({-2, 3, -5, 1});
    auto image = phi(r);
    CHECK(inv(image) == maj(r));
    CHECK(sorted(image) == sorted(r));
    CHECK(image.letters.back() == 1);
}
