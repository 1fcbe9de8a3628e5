#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cliquelab/dyck.hpp"
#include "cliquelab/folding.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/tokens.hpp"
#include "cliquelab/util.hpp"

namespace cliquelab {

// Pair-of-types marking: letters are suffixed _ab / _ag / _bg.
enum class TypeMark { ab, ag, bg };
const char* mark_suffix(TypeMark m);

// Pointwise relabelings. mark() refuses already-marked letters; prime() and
// reverse() are involutions.
TokenSeq mark(const TokenSeq& s, TypeMark m);
TokenSeq prime(const TokenSeq& s);
TokenSeq reverse(const TokenSeq& s);

// Weight schedule for the folding reduction. All logs are ceil(log2 n).
struct RnaParams {
    int n = 0, k = 0;
    int64_t w_dollar = 0;  // 10*ceil(log2 n)
    int64_t l1 = 0;        // 10 k^2 n ceil(log2 n), weight of '#'
    int64_t l2 = 0;        // 10 k^2 l1, weight of 'g'
    int64_t l3 = 0;        // 10 l2, weight of alpha/beta/gamma

    static RnaParams make(int n, int k);
};

// Run-length schedule for the Dyck reduction.
//
// paper_exact uses l_i = (1000 n^2)^(i+1); those instances exceed any
// realistic token budget (l5 > 10^23 already at n=3) and exist for symbolic
// length accounting only. The operational scaled(b) schedule derives the
// run lengths from the score chain at the given (n, k): the base b sets the
// node-gadget run l1 (floored so every $' can match), and each level above
// it is sized to just dominate the structures beneath -- see lengths() for
// the exact chain. Thresholds are recomputed from the actual lengths and
// validated against the brute-force oracle / mutual separation before
// campaigns trust them.
struct DyckPadding {
    enum class Schedule { paper_exact, scaled };
    Schedule schedule = Schedule::scaled;
    int64_t base = 0;  // b for scaled; ignored for paper_exact

    static DyckPadding scaled(int64_t b);
    static DyckPadding paper_exact();
    static DyckPadding scaled_default(int n) { return scaled(4 * int64_t(n)); }

    // Saturating 128-bit lengths (paper_exact overflows 64 bits fast).
    std::array<unsigned __int128, 6> lengths(int n, int k) const;
    std::string describe(int n, int k) const;
};

std::string u128_to_string(unsigned __int128 v);

// Exact score chain for one reduction instance. For RNA, scores equal ec
// exactly when a 3k-clique exists and are <= ec-1 otherwise; for Dyck the
// direction flips (== ec with a clique, >= ec+1 without).
struct Thresholds {
    int64_t e1 = 0, e2 = 0, e3 = 0, el = 0, ec = 0;
    int64_t n_cliques = 0;  // N = |C_k|
};

// ---- Section 2: graph -> CFG string ---------------------------------------

// w = (o CG_a(t)) (o CG_b(t)) (o CG_c(t)) over k-cliques in lexicographic
// order; recognized by clique_grammar() iff g has a 3k-clique. An empty
// clique set yields the empty string (callers short-circuit).
TokenSeq build_cfg_string(const Graph& g, int k);

// ---- Section 3: graph -> weighted RNA sequence -----------------------------

struct RnaInstance {
    TokenSeq seq;
    MatchedAlphabet alphabet;
    RnaParams params;
    Thresholds thresholds;
};
RnaInstance build_rna_instance(const Graph& g, int k);

// Stand-alone sub-gadget sequences for the claim-level score checks:
// [NG(u) . p(LG(v))^R]_m and [CNG(t1) . p(CLG(t2))^R]_m, and the bare
// three-gadget concatenation CG_a(ta) CG_b(tb) CG_c(tc).
TokenSeq rna_neighbor_probe(const Graph& g, int u, int v, TypeMark m, VocabPtr vocab);
TokenSeq rna_biclique_probe(const Graph& g, int k, const Clique& t1, const Clique& t2, TypeMark m,
                            VocabPtr vocab);
TokenSeq rna_triple_probe(const Graph& g, int k, const Clique& ta, const Clique& tb,
                          const Clique& tc, VocabPtr vocab);
MatchedAlphabet rna_alphabet(Vocab& vocab, const RnaParams& p);

// ---- Section 4: graph -> Dyck sequence -------------------------------------

inline constexpr int64_t kDefaultTokenBudget = 5'000'000;

struct DyckInstance {
    TokenSeq seq;
    BracketAlphabet alphabet;
    DyckPadding padding;
    Thresholds thresholds;
};
// Refuses (budget_error) when the computed length exceeds token_budget;
// paper_exact at any n >= 2 does.
DyckInstance build_dyck_instance(const Graph& g, int k, const DyckPadding& padding,
                                 int64_t token_budget = kDefaultTokenBudget);

TokenSeq dyck_neighbor_probe(const Graph& g, int v, int u, TypeMark m, const DyckPadding& padding,
                             VocabPtr vocab);
TokenSeq dyck_biclique_probe(const Graph& g, int k, const Clique& t1, const Clique& t2, TypeMark m,
                             const DyckPadding& padding, VocabPtr vocab);
// The claim-level triple: x-flanked CG_a(ta) CG_b(tb) CG_c(tc).
TokenSeq dyck_triple_probe(const Graph& g, int k, const Clique& ta, const Clique& tb,
                           const Clique& tc, const DyckPadding& padding, VocabPtr vocab);
BracketAlphabet dyck_alphabet(const Vocab& vocab);

Thresholds dyck_thresholds(const Graph& g, int k, const DyckPadding& padding);
Thresholds rna_thresholds(const Graph& g, int k);

// Builder metadata sidecar (JSON): n, k, N, schedule, lengths, weights,
// thresholds, token count, builder version.
std::string reduction_metadata(const std::string& problem, const Graph& g, int k,
                               const Thresholds& th, size_t token_count,
                               const std::string& schedule_desc);

inline constexpr const char* kBuilderVersion = "1";

}  // namespace cliquelab
