#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "extal/extremal.hpp"
#include "extal/rng.hpp"
#include "../support/random_sequences.hpp"

using namespace extal;
using testing::random_sequence;
using testing::seq;

namespace {

Alignment align(std::vector<MatchPair> pairs) { return Alignment{std::move(pairs)}; }

Alignment transpose(const Alignment& a) {
    Alignment t;
    for (const auto& p : a.pairs) t.pairs.push_back(MatchPair{p.j, p.i});
    return t;
}

}  // namespace

TEST_CASE("worked example: enumeration and extremal pair") {
    const Sequence x = seq("ATACCGT", "x"), y = seq("CAACATG", "y");

    const auto all = enumerate_optimal_alignments(x, y);
    REQUIRE(all.size() == 4);
    for (const auto& a : all) check_alignment(a, x, y, 4);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Alignment& a, const Alignment& b) {
        return a.pairs < b.pairs;
    }));

    const ExtremalPair pair = extremal_pair(x, y);
    CHECK(pair.lcs == 4);
    CHECK(pair.highest == align({{1, 2}, {3, 3}, {4, 4}, {6, 7}}));
    CHECK(pair.lowest == align({{1, 2}, {3, 3}, {5, 4}, {7, 6}}));

    // both extremal alignments appear in the enumeration
    CHECK(std::find(all.begin(), all.end(), pair.highest) != all.end());
    CHECK(std::find(all.begin(), all.end(), pair.lowest) != all.end());
}

TEST_CASE("degenerate instances") {
    SUBCASE("identical sequences with distinct letters") {
        const ExtremalPair pair = extremal_pair(seq("ACGT"), seq("ACGT"));
        CHECK(pair.highest == pair.lowest);
        CHECK(pair.highest == align({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
        CHECK(enumerate_optimal_alignments(seq("ACGT"), seq("ACGT")).size() == 1);
    }
    SUBCASE("no common letters") {
        const ExtremalPair pair = extremal_pair(seq("AAAA"), seq("CCCC"));
        CHECK(pair.lcs == 0);
        CHECK(pair.highest.empty());
        CHECK(pair.lowest.empty());
        const auto all = enumerate_optimal_alignments(seq("AAAA"), seq("CCCC"));
        REQUIRE(all.size() == 1);
        CHECK(all[0].empty());
    }
    SUBCASE("two crossing matches") {
        const auto all = enumerate_optimal_alignments(seq("AB"), seq("BA"));
        REQUIRE(all.size() == 2);
        CHECK(all[0] == align({{1, 2}}));
        CHECK(all[1] == align({{2, 1}}));
        const ExtremalPair pair = extremal_pair(seq("AB"), seq("BA"));
        CHECK(pair.highest == align({{1, 2}}));
        CHECK(pair.lowest == align({{2, 1}}));
    }
    SUBCASE("all-match block has the single diagonal alignment") {
        const auto all = enumerate_optimal_alignments(seq("AA"), seq("AA"));
        REQUIRE(all.size() == 1);
        CHECK(all[0] == align({{1, 1}, {2, 2}}));
    }
}

TEST_CASE("enumeration cap") {
    // rank-1 classes {(1,1),(2,1)} give two optimal alignments
    CHECK(enumerate_optimal_alignments(seq("AA"), seq("A")).size() == 2);
    CHECK_THROWS_AS(enumerate_optimal_alignments(seq("AA"), seq("A"), 1), TooManyAlignmentsError);
}

TEST_CASE("oracle equals the construction on random instances") {
    Rng rng(424242);
    const Alphabet two("AB");
    for (int t = 0; t < 400; ++t) {
        const Alphabet& alphabet = (t % 2 == 0) ? Alphabet::dna() : two;
        const Sequence x = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 10), alphabet, "x");
        const Sequence y = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 10), alphabet, "y");

        const ExtremalPair fast = extremal_pair(x, y);
        const ExtremalPair slow = oracle_extremal(x, y);
        REQUIRE_MESSAGE(fast.highest == slow.highest, x.letters, " / ", y.letters);
        REQUIRE_MESSAGE(fast.lowest == slow.lowest, x.letters, " / ", y.letters);

        check_alignment(fast.highest, x, y, fast.lcs);
        check_alignment(fast.lowest, x, y, fast.lcs);
    }
}

TEST_CASE("envelope, membership and uniqueness degeneracy on random instances") {
    Rng rng(5150);
    for (int t = 0; t < 200; ++t) {
        const Alphabet& alphabet = (t % 2 == 0) ? Alphabet::dna() : Alphabet("AB");
        const Sequence x = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 9), alphabet, "x");
        const Sequence y = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 9), alphabet, "y");

        const ExtremalPair pair = extremal_pair(x, y);
        const auto all = enumerate_optimal_alignments(x, y);

        for (const auto& a : all) {
            for (int k = 0; k < pair.lcs; ++k) {
                const auto ks = static_cast<std::size_t>(k);
                CHECK(pair.highest.pairs[ks].j >= a.pairs[ks].j);
                CHECK(a.pairs[ks].j >= pair.lowest.pairs[ks].j);
                CHECK(pair.highest.pairs[ks].i <= a.pairs[ks].i);
                CHECK(a.pairs[ks].i <= pair.lowest.pairs[ks].i);
            }
        }

        if (all.size() == 1 && pair.lcs > 0) CHECK(pair.highest == pair.lowest);

        // the co-optimal set is exactly the union of enumerated alignments
        std::set<std::tuple<int, int, int>> from_enum;
        for (const auto& a : all) {
            for (std::size_t k = 0; k < a.pairs.size(); ++k) {
                from_enum.emplace(static_cast<int>(k) + 1, a.pairs[k].i, a.pairs[k].j);
            }
        }
        std::set<std::tuple<int, int, int>> from_set;
        for (const auto& c : pair.co_optimal.cells) from_set.emplace(c.rank, c.i, c.j);
        CHECK(from_enum == from_set);
    }
}

TEST_CASE("transposition swaps highest and lowest") {
    Rng rng(31337);
    for (int t = 0; t < 150; ++t) {
        const Alphabet& alphabet = (t % 2 == 0) ? Alphabet::dna() : Alphabet("AB");
        const Sequence x = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 10), alphabet, "x");
        const Sequence y = random_sequence(rng, 1 + static_cast<int>(rng.next_u64() % 10), alphabet, "y");
        const ExtremalPair xy = extremal_pair(x, y);
        const ExtremalPair yx = extremal_pair(y, x);
        CHECK(yx.highest == transpose(xy.lowest));
        CHECK(yx.lowest == transpose(xy.highest));
    }
}
