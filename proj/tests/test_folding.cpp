#include <catch_amalgamated.hpp>

#include "cliquelab/folding.hpp"
#include "cliquelab/util.hpp"
#include "support/oracles.hpp"

using namespace cliquelab;
using cliquelab::testing::lcs_classic;
using cliquelab::testing::seq_of;

namespace {

TokenSeq seq_with_alpha(const std::vector<std::string>& names, MatchedAlphabet& out,
                        const std::vector<std::pair<std::string, int64_t>>& weights = {}) {
    TokenSeq s = seq_of(names);
    out = MatchedAlphabet::prime_convention(*s.vocab, weights);
    return s;
}

std::vector<std::string> random_names(SplitMix64& rng, const std::vector<std::string>& letters,
                                      size_t len) {
    std::vector<std::string> out;
    for (size_t i = 0; i < len; ++i) out.push_back(letters[rng.next_below(letters.size())]);
    return out;
}

const std::vector<std::string> kTwo = {"a", "a'"};
const std::vector<std::string> kSix = {"a", "a'", "b", "b'", "c", "c'"};

}  // namespace

TEST_CASE("rna_fold basics") {
    MatchedAlphabet a;
    CHECK(rna_fold(seq_with_alpha({"a", "a'"}, a), a).score == 1);
    CHECK(rna_fold(seq_with_alpha({}, a), a).score == 0);
    // the two candidate pairs cross, only one survives
    CHECK(rna_fold(seq_with_alpha({"a", "b", "a'", "b'"}, a), a).score == 1);
    CHECK(rna_fold(seq_with_alpha({"a", "b", "b'", "a'"}, a), a).score == 2);
    CHECK(rna_fold(seq_with_alpha({"a", "a"}, a), a).score == 0);
}

TEST_CASE("rna_fold rejects foreign tokens") {
    TokenSeq s = seq_of({"a", "a'"});
    MatchedAlphabet a = MatchedAlphabet::prime_convention(*s.vocab);
    TokenSeq bad = s;
    bad.push("zz");
    CHECK_THROWS_AS(rna_fold(bad, a), parse_error);
}

TEST_CASE("wrna_fold weights pairs by the base letter") {
    MatchedAlphabet a;
    TokenSeq s = seq_with_alpha({"a", "a'"}, a, {{"a", 7}});
    CHECK(wrna_fold(s, a).score == 7);
    TokenSeq s2 = seq_with_alpha({"a", "b", "a'", "b'"}, a, {{"a", 1}, {"b", 5}});
    CHECK(wrna_fold(s2, a).score == 5);
}

TEST_CASE("rna_bruteforce spot values and the length cap") {
    MatchedAlphabet a;
    TokenSeq s = seq_with_alpha({"a", "a'", "a", "a'"}, a);
    CHECK(rna_bruteforce(s, a) == 2);
    TokenSeq s2 = seq_with_alpha({"a", "a"}, a);
    CHECK(rna_bruteforce(s2, a) == 0);
    TokenSeq big = seq_with_alpha(std::vector<std::string>(17, "a"), a);
    CHECK_THROWS_AS(rna_bruteforce(big, a), domain_error);
}

TEST_CASE("rna_fold equals the brute force on all short two-letter strings") {
    auto vocab = std::make_shared<Vocab>();
    TokenSeq probe = make_token_seq(vocab, kTwo);
    MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab);
    for (size_t len = 0; len <= 10; ++len) {
        std::vector<size_t> idx(len, 0);
        for (;;) {
            std::vector<std::string> names;
            for (size_t i = 0; i < len; ++i) names.push_back(kTwo[idx[i]]);
            TokenSeq s = make_token_seq(vocab, names);
            REQUIRE(rna_fold(s, a).score == rna_bruteforce(s, a));
            size_t pos = 0;
            while (pos < len && ++idx[pos] == kTwo.size()) idx[pos++] = 0;
            if (pos == len) break;
        }
        if (len == 0) continue;
    }
}

TEST_CASE("rna_fold equals the brute force on random three-letter strings") {
    auto vocab = std::make_shared<Vocab>();
    make_token_seq(vocab, kSix);
    MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab);
    SplitMix64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        TokenSeq s = make_token_seq(vocab, random_names(rng, kSix, rng.next_below(15)));
        REQUIRE(rna_fold(s, a).score == rna_bruteforce(s, a));
    }
}

TEST_CASE("expand_weighted realizes the weighted score in the unweighted problem") {
    MatchedAlphabet a;
    TokenSeq s = seq_with_alpha({"a", "a'"}, a, {{"a", 3}});
    TokenSeq expanded = expand_weighted(s, a);
    REQUIRE(expanded.size() == 6);
    CHECK(expanded.name_at(0) == "a");
    CHECK(expanded.name_at(2) == "a");
    CHECK(expanded.name_at(3) == "a'");
    CHECK(expanded.name_at(5) == "a'");

    // all-weights-1 expansion is the identity
    MatchedAlphabet b;
    TokenSeq t = seq_with_alpha({"a", "b", "a'"}, b);
    CHECK(expand_weighted(t, b).ids == t.ids);
}

TEST_CASE("weighted score equals unweighted score of the expansion") {
    SplitMix64 rng(12);
    const std::vector<std::string> letters = {"a", "a'", "b", "b'", "c", "c'"};
    for (int trial = 0; trial < 100; ++trial) {
        auto vocab = std::make_shared<Vocab>();
        make_token_seq(vocab, letters);
        std::vector<std::pair<std::string, int64_t>> weights = {
            {"a", 1 + int64_t(rng.next_below(4))},
            {"b", 1 + int64_t(rng.next_below(4))},
            {"c", 1 + int64_t(rng.next_below(4))}};
        TokenSeq s = make_token_seq(vocab, random_names(rng, letters, rng.next_below(13)));
        MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab, weights);
        TokenSeq expanded = expand_weighted(s, a);
        REQUIRE(int64_t(expanded.size()) <= a.max_weight() * int64_t(s.size()));
        REQUIRE(wrna_fold(s, a).score == rna_fold(expanded, a).score);
    }
}

TEST_CASE("all-weights-one folding equals the unweighted score") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto vocab = std::make_shared<Vocab>();
        TokenSeq s = make_token_seq(vocab, random_names(rng, kSix, rng.next_below(21)));
        MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab);
        CHECK(wrna_fold(s, a).score == rna_fold(s, a).score);
    }
}

TEST_CASE("score is invariant under prime-and-reverse; appending never hurts") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        auto vocab = std::make_shared<Vocab>();
        make_token_seq(vocab, kSix);
        auto names = random_names(rng, kSix, 1 + rng.next_below(14));
        TokenSeq s = make_token_seq(vocab, names);
        MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab);
        // prime every letter, then reverse the whole sequence
        std::vector<std::string> flipped;
        for (auto it = names.rbegin(); it != names.rend(); ++it)
            flipped.push_back(it->back() == '\'' ? it->substr(0, it->size() - 1) : *it + "'");
        TokenSeq f = make_token_seq(vocab, flipped);
        CHECK(rna_fold(s, a).score == rna_fold(f, a).score);

        TokenSeq longer = s;
        longer.push(kSix[rng.next_below(kSix.size())]);
        CHECK(rna_fold(longer, a).score >= rna_fold(s, a).score);
    }
}

TEST_CASE("reconstructed pair sets are valid and account for the score") {
    SplitMix64 rng(15);
    auto vocab = std::make_shared<Vocab>();
    make_token_seq(vocab, kSix);
    MatchedAlphabet a = MatchedAlphabet::prime_convention(*vocab, {{"b", 3}});
    for (int trial = 0; trial < 40; ++trial) {
        TokenSeq s = make_token_seq(vocab, random_names(rng, kSix, rng.next_below(16)));
        FoldResult r = wrna_fold(s, a, /*with_pairs=*/true);
        int64_t total = 0;
        std::vector<bool> used(s.size(), false);
        for (auto [i, j] : r.pairs) {
            REQUIRE(i < j);
            REQUIRE(!used[size_t(i)]);
            REQUIRE(!used[size_t(j)]);
            used[size_t(i)] = used[size_t(j)] = true;
            REQUIRE(a.match(s.ids[size_t(i)], s.ids[size_t(j)]));
            total += a.weight[size_t(s.ids[size_t(i)])];
        }
        for (auto [i1, j1] : r.pairs)
            for (auto [i2, j2] : r.pairs)
                if (i1 < i2 && i2 < j1) REQUIRE(j2 < j1);
        CHECK(total == r.score);
    }
}

TEST_CASE("lcs_via_rna equals the classic quadratic table") {
    CHECK(lcs_via_rna(seq_of({"a", "b", "c"}), seq_of({"a", "b", "c"})) == 3);
    CHECK(lcs_via_rna(seq_of({"a", "b"}), seq_of({"b", "a"})) == 1);
    CHECK_THROWS_AS(lcs_via_rna(seq_of({"a'"}), seq_of({"a"})), parse_error);

    SplitMix64 rng(16);
    const std::vector<std::string> letters = {"a", "b", "c"};
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_names(rng, letters, rng.next_below(16));
        auto y = random_names(rng, letters, rng.next_below(16));
        REQUIRE(lcs_via_rna(seq_of(x), seq_of(y)) == lcs_classic(x, y));
    }
}
