#include <catch_amalgamated.hpp>

#include <map>

#include "cliquelab/cnf.hpp"
#include "cliquelab/recognition.hpp"
#include "cliquelab/util.hpp"
#include "support/oracles.hpp"

using namespace cliquelab;
using cliquelab::testing::random_grammar;
using cliquelab::testing::seq_of;

namespace {

Grammar balanced_parens() {
    Grammar g;
    g.set_start("S");
    g.add_terminal("(");
    g.add_terminal(")");
    g.add_rule("S", {});
    g.add_rule("S", {"S", "S"});
    g.add_rule("S", {"(", "S", ")"});
    return g;
}

BoolMatrix random_matrix(SplitMix64& rng, int n, double density) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.next_double() < density) m.set(i, j);
    return m;
}

BoolMatrix identity(int n) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

std::vector<std::string> random_string(SplitMix64& rng, const std::vector<std::string>& sigma,
                                       size_t len) {
    std::vector<std::string> s;
    for (size_t i = 0; i < len; ++i) s.push_back(sigma[rng.next_below(sigma.size())]);
    return s;
}

}  // namespace

TEST_CASE("cyk on the balanced-paren grammar") {
    CnfGrammar cnf = to_cnf(balanced_parens());
    CHECK(cnf.start_derives_empty);
    CHECK(cyk(cnf, seq_of({"(", ")"})));
    CHECK_FALSE(cyk(cnf, seq_of({")", "("})));
    CHECK(cyk(cnf, seq_of({"(", "(", ")", ")", "(", ")"})));
    CHECK_FALSE(cyk(cnf, seq_of({"(", "(", ")"})));
    CHECK(cyk(cnf, seq_of({})));  // empty input via the flag
}

TEST_CASE("cyk rejects unknown tokens with the position") {
    CnfGrammar cnf = to_cnf(balanced_parens());
    try {
        cyk(cnf, seq_of({"(", "x", ")"}));
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("recognition table satisfies the closure property") {
    CnfGrammar cnf = to_cnf(balanced_parens());
    SplitMix64 rng(77);
    const std::vector<std::string> sigma = {"(", ")"};
    for (int trial = 0; trial < 25; ++trial) {
        auto s = random_string(rng, sigma, 2 + rng.next_below(28));
        RecognitionTable t;
        cyk(cnf, seq_of(s), &t);
        int n = t.n();
        // recompute every interior cell by the naive split loop
        std::map<std::pair<int, int>, NtSet> by_pair;
        for (const auto& r : cnf.bin_rules) by_pair[{r.left, r.right}].set(r.head);
        for (int len = 2; len <= n; ++len)
            for (int i = 0; i + len <= n; ++i) {
                int j = i + len;
                NtSet expect;
                for (int k = i + 1; k < j; ++k)
                    for (const auto& [lr, heads] : by_pair)
                        if (t.at(i, k).test(lr.first) && t.at(k, j).test(lr.second))
                            expect |= heads;
                CHECK(t.at(i, j) == expect);
            }
    }
}

TEST_CASE("bmm identity and all-ones") {
    SplitMix64 rng(3);
    BoolMatrix m = random_matrix(rng, 9, 0.4);
    CHECK(bmm_naive(identity(9), m) == m);
    CHECK(bmm_packed(identity(9), m) == m);
    BoolMatrix ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones.set(i, j);
    CHECK(bmm_naive(ones, ones) == ones);
    CHECK(bmm_packed(ones, ones) == ones);
}

TEST_CASE("bmm dimension mismatch is an error") {
    CHECK_THROWS_AS(bmm_naive(BoolMatrix(2), BoolMatrix(3)), domain_error);
    CHECK_THROWS_AS(bmm_packed(BoolMatrix(2), BoolMatrix(3)), domain_error);
}

TEST_CASE("packed bmm agrees with the naive oracle") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng.next_below(32));
        BoolMatrix a = random_matrix(rng, n, rng.next_double());
        BoolMatrix b = random_matrix(rng, n, rng.next_double());
        CHECK(bmm_packed(a, b) == bmm_naive(a, b));
    }
    // a few larger sizes up to 256
    for (int n : {63, 64, 65, 128, 200, 256}) {
        BoolMatrix a = random_matrix(rng, n, 0.3);
        BoolMatrix b = random_matrix(rng, n, 0.3);
        CHECK(bmm_packed(a, b) == bmm_naive(a, b));
    }
}

TEST_CASE("valiant agrees with cyk on random grammar/string pairs") {
    SplitMix64 rng(4242);
    const std::vector<std::string> sigma = {"x", "y"};
    int agreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Grammar g = random_grammar(rng, sigma);
        CnfGrammar cnf = to_cnf(g);
        auto s = random_string(rng, sigma, rng.next_below(41));
        TokenSeq seq = seq_of(s);
        bool want = cyk(cnf, seq);
        CHECK(valiant_recognize(cnf, seq, bmm_packed) == want);
        CHECK(valiant_recognize(cnf, seq, bmm_naive) == want);
        ++agreements;
    }
    CHECK(agreements == 200);
}

TEST_CASE("valiant on long paren strings crosses the recursion cutoff") {
    CnfGrammar cnf = to_cnf(balanced_parens());
    SplitMix64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        // random balanced strings, 150..400 tokens, occasionally corrupted
        size_t half = 75 + rng.next_below(126);
        std::vector<std::string> s;
        size_t opened = 0, closed = 0;
        int depth = 0;
        while (opened + closed < 2 * half) {
            bool open = opened < half && (depth == 0 || rng.next_below(2));
            s.push_back(open ? "(" : ")");
            depth += open ? 1 : -1;
            (open ? opened : closed) += 1;
        }
        if (trial % 3 == 0) s[rng.next_below(s.size())] = "(";
        TokenSeq seq = seq_of(s);
        CHECK(valiant_recognize(cnf, seq, bmm_packed) == cyk(cnf, seq));
    }
    CHECK(valiant_recognize(cnf, seq_of({}), bmm_packed));  // empty + flag
}
