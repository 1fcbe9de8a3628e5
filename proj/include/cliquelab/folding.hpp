#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/tokens.hpp"

namespace cliquelab {

// Matched alphabet over a vocab: every base letter sigma pairs with exactly
// one primed letter sigma'. Weights attach to base letters and extend to
// their primes. Letters outside the alphabet have partner -1.
struct MatchedAlphabet {
    std::vector<int32_t> partner;  // token id -> matching id, -1 if none
    std::vector<int64_t> weight;   // token id -> weight (>= 1)
    std::vector<bool> is_base;     // token id -> true for unprimed letters

    bool match(int32_t a, int32_t b) const {
        return a >= 0 && size_t(a) < partner.size() && partner[size_t(a)] == b;
    }
    int64_t max_weight() const;
    void ensure_covers(const TokenSeq& seq) const;  // parse_error on foreign tokens

    // Pairs every vocab entry by the trailing-prime convention: "x" <-> "x'",
    // interning missing partners. Weights default to 1; override per base
    // letter via the weights list.
    static MatchedAlphabet prime_convention(
        Vocab& vocab, const std::vector<std::pair<std::string, int64_t>>& weights = {});
};

struct FoldResult {
    int64_t score = 0;
    std::vector<std::pair<int, int>> pairs;  // filled only when requested
};

// Maximum non-crossing matching, each pair worth 1 (rna) or the letter's
// weight (wrna). Cubic interval DP. Pair reconstruction is off by default.
FoldResult rna_fold(const TokenSeq& s, const MatchedAlphabet& a, bool with_pairs = false);
FoldResult wrna_fold(const TokenSeq& s, const MatchedAlphabet& a, bool with_pairs = false);

// Weighted-to-unweighted expansion: each letter repeated weight-many times.
// WRNA of the input equals RNA of the expansion.
TokenSeq expand_weighted(const TokenSeq& s, const MatchedAlphabet& a);

// Exhaustive recursion over pair choices; refuses inputs longer than 16.
int64_t rna_bruteforce(const TokenSeq& s, const MatchedAlphabet& a);

// LCS(x,y) via folding x . prime(reverse(y)). Inputs must be prime-free.
int64_t lcs_via_rna(const TokenSeq& x, const TokenSeq& y);

// Weighted sequence file pair: a token stream plus a sidecar weight table
// with one "letter weight" line per base letter.
std::string weight_table_text(const Vocab& vocab, const MatchedAlphabet& a);
MatchedAlphabet parse_weight_table(const std::string& text, Vocab& vocab);

}  // namespace cliquelab
