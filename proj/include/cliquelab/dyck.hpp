#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cliquelab/tokens.hpp"

namespace cliquelab {

// Typed brackets: opener sigma is closed only by its own closer sigma'.
struct BracketAlphabet {
    std::vector<int32_t> closer_of;  // opener id -> closer id, else -1
    std::vector<int32_t> opener_of;  // closer id -> opener id, else -1

    bool is_opener(int32_t id) const {
        return size_t(id) < closer_of.size() && closer_of[size_t(id)] >= 0;
    }
    bool is_closer(int32_t id) const {
        return size_t(id) < opener_of.size() && opener_of[size_t(id)] >= 0;
    }
    // An aligned pair (i before j) is a match only for (sigma, sigma').
    bool match(int32_t first, int32_t second) const {
        return is_opener(first) && closer_of[size_t(first)] == second;
    }
    void ensure_covers(const TokenSeq& seq) const;

    // Pairs "(" ")", "[" "]", "{" "}" plus the trailing-prime convention for
    // everything else in the vocab.
    static BracketAlphabet standard(const Vocab& vocab);
};

// Minimum alignment cost: mismatched aligned pairs plus deleted letters,
// over non-crossing alignments. Insertions are excluded by the cost model.
// Cubic interval DP over the full O(n^2) triangle.
int64_t dyck_distance(const TokenSeq& s, const BracketAlphabet& a);

// Exact minimum by recursion over alignment choices; refuses inputs longer
// than 12.
int64_t dyck_bruteforce(const TokenSeq& s, const BracketAlphabet& a);

// Linear stack scan: true iff the string is well-balanced.
bool dyck_balanced(const TokenSeq& s, const BracketAlphabet& a);

// Non-crossing index-pair set with the alignment cost accounting; used by
// tests to validate reconstructed or hand-built alignments.
struct Alignment {
    std::vector<std::pair<int, int>> pairs;  // i < j, non-crossing, disjoint

    bool valid(const TokenSeq& s) const;
    int64_t cost(const TokenSeq& s, const BracketAlphabet& a) const;
};

}  // namespace cliquelab
