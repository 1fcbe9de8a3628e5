#include <catch_amalgamated.hpp>

#include "cliquelab/dyck.hpp"
#include "cliquelab/util.hpp"
#include "support/oracles.hpp"

using namespace cliquelab;
using cliquelab::testing::seq_of;

namespace {

struct Fixture {
    TokenSeq seq;
    BracketAlphabet alpha;
};

Fixture make(const std::vector<std::string>& names) {
    Fixture f;
    f.seq = seq_of(names);
    // make sure the standard pairs exist in the vocab before pairing
    for (const char* t : {"(", ")", "[", "]"}) f.seq.vocab->intern(t);
    f.alpha = BracketAlphabet::standard(*f.seq.vocab);
    return f;
}

std::vector<std::string> random_brackets(SplitMix64& rng, const std::vector<std::string>& sigma,
                                         size_t len) {
    std::vector<std::string> out;
    for (size_t i = 0; i < len; ++i) out.push_back(sigma[rng.next_below(sigma.size())]);
    return out;
}

}  // namespace

TEST_CASE("dyck_distance basics") {
    CHECK(dyck_distance(make({"(", ")"}).seq, make({"(", ")"}).alpha) == 0);
    auto f1 = make({"("});
    CHECK(dyck_distance(f1.seq, f1.alpha) == 1);
    // aligning the pair as a mismatch costs 1, beating two deletions
    auto f2 = make({")", "("});
    CHECK(dyck_distance(f2.seq, f2.alpha) == 1);
    auto f3 = make({"(", "]"});
    CHECK(dyck_distance(f3.seq, f3.alpha) == 1);
    auto f4 = make({});
    CHECK(dyck_distance(f4.seq, f4.alpha) == 0);
}

TEST_CASE("dyck_distance rejects unknown brackets") {
    auto f = make({"(", ")"});
    TokenSeq bad = f.seq;
    bad.push("q");
    CHECK_THROWS_AS(dyck_distance(bad, f.alpha), parse_error);
}

TEST_CASE("dyck_bruteforce spot values and length cap") {
    auto f = make({"(", "(", ")", ")"});
    CHECK(dyck_bruteforce(f.seq, f.alpha) == 0);
    auto f2 = make({"(", "]"});
    CHECK(dyck_bruteforce(f2.seq, f2.alpha) == 1);
    auto big = make(std::vector<std::string>(13, "("));
    CHECK_THROWS_AS(dyck_bruteforce(big.seq, big.alpha), domain_error);
}

TEST_CASE("dyck_distance equals the brute force on all short one-type strings") {
    auto vocab = std::make_shared<Vocab>();
    vocab->intern("(");
    vocab->intern(")");
    BracketAlphabet alpha = BracketAlphabet::standard(*vocab);
    const std::vector<std::string> sigma = {"(", ")"};
    for (size_t len = 0; len <= 8; ++len) {
        std::vector<size_t> idx(len, 0);
        for (;;) {
            std::vector<std::string> names;
            for (size_t i = 0; i < len; ++i) names.push_back(sigma[idx[i]]);
            TokenSeq s = make_token_seq(vocab, names);
            REQUIRE(dyck_distance(s, alpha) == dyck_bruteforce(s, alpha));
            size_t pos = 0;
            while (pos < len && ++idx[pos] == sigma.size()) idx[pos++] = 0;
            if (pos == len) break;
        }
        if (len == 0) continue;
    }
}

TEST_CASE("dyck_distance equals the brute force on random two-type strings") {
    auto vocab = std::make_shared<Vocab>();
    for (const char* t : {"(", ")", "[", "]"}) vocab->intern(t);
    BracketAlphabet alpha = BracketAlphabet::standard(*vocab);
    const std::vector<std::string> sigma = {"(", ")", "[", "]"};
    SplitMix64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        TokenSeq s = make_token_seq(vocab, random_brackets(rng, sigma, rng.next_below(13)));
        REQUIRE(dyck_distance(s, alpha) == dyck_bruteforce(s, alpha));
    }
}

TEST_CASE("distance is zero exactly on balanced strings") {
    auto vocab = std::make_shared<Vocab>();
    for (const char* t : {"(", ")", "[", "]"}) vocab->intern(t);
    BracketAlphabet alpha = BracketAlphabet::standard(*vocab);
    const std::vector<std::string> sigma = {"(", ")", "[", "]"};
    SplitMix64 rng(22);
    int balanced_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        TokenSeq s = make_token_seq(vocab, random_brackets(rng, sigma, rng.next_below(11)));
        bool balanced = dyck_balanced(s, alpha);
        balanced_seen += balanced;
        REQUIRE((dyck_distance(s, alpha) == 0) == balanced);
    }
    CHECK(balanced_seen > 0);
}

TEST_CASE("distance bounds and concatenation subadditivity") {
    auto vocab = std::make_shared<Vocab>();
    for (const char* t : {"(", ")", "[", "]"}) vocab->intern(t);
    BracketAlphabet alpha = BracketAlphabet::standard(*vocab);
    const std::vector<std::string> sigma = {"(", ")", "[", "]"};
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto a_names = random_brackets(rng, sigma, rng.next_below(12));
        auto b_names = random_brackets(rng, sigma, rng.next_below(12));
        TokenSeq sa = make_token_seq(vocab, a_names);
        TokenSeq sb = make_token_seq(vocab, b_names);
        auto joined = a_names;
        joined.insert(joined.end(), b_names.begin(), b_names.end());
        TokenSeq sab = make_token_seq(vocab, joined);
        int64_t da = dyck_distance(sa, alpha), db = dyck_distance(sb, alpha);
        int64_t dab = dyck_distance(sab, alpha);
        REQUIRE(dab <= da + db);
        REQUIRE(dab <= int64_t(sab.size()));
        // per-letter surplus bound: letters without a same-type partner can
        // only mismatch (1/2 each) or be deleted, so the summed surpluses
        // halve into a floor the DP must respect
        int paren = 0, bracket = 0;
        for (const auto& t : joined) {
            if (t == "(") ++paren;
            if (t == ")") --paren;
            if (t == "[") ++bracket;
            if (t == "]") --bracket;
        }
        REQUIRE(dab >= (std::abs(paren) + std::abs(bracket)) / 2);
    }
    // all-opening strings cost ceil(len/2) via pairwise mismatches
    for (size_t len : {size_t(1), size_t(4), size_t(7), size_t(10)}) {
        TokenSeq s = make_token_seq(vocab, std::vector<std::string>(len, "("));
        CHECK(dyck_distance(s, alpha) == int64_t((len + 1) / 2));
    }
}

TEST_CASE("alignment validity and cost accounting") {
    auto f = make({"(", "[", "]", ")"});
    Alignment good{{{0, 3}, {1, 2}}};
    CHECK(good.valid(f.seq));
    CHECK(good.cost(f.seq, f.alpha) == 0);
    Alignment crossing{{{0, 2}, {1, 3}}};
    CHECK_FALSE(crossing.valid(f.seq));
    Alignment partial{{{0, 1}}};  // "(" aligned with "[" is a mismatch, 2 deletions
    CHECK(partial.valid(f.seq));
    CHECK(partial.cost(f.seq, f.alpha) == 3);
}
