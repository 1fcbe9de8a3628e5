#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cliquelab/cnf.hpp"
#include "cliquelab/tokens.hpp"

namespace cliquelab {

// Nonterminal set packed into two machine words (CNF grammars here stay well
// under 128 nonterminals).
struct NtSet {
    uint64_t w0 = 0, w1 = 0;

    static constexpr int kMax = 128;

    void set(int i) { (i < 64 ? w0 : w1) |= 1ull << (i & 63); }
    bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1; }
    bool empty() const { return (w0 | w1) == 0; }
    NtSet& operator|=(const NtSet& o) {
        w0 |= o.w0;
        w1 |= o.w1;
        return *this;
    }
    bool operator==(const NtSet& o) const { return w0 == o.w0 && w1 == o.w1; }

    template <class F>
    void for_each(F f) const {
        for (uint64_t w = w0; w;) {
            int b = __builtin_ctzll(w);
            w &= w - 1;
            f(b);
        }
        for (uint64_t w = w1; w;) {
            int b = __builtin_ctzll(w);
            w &= w - 1;
            f(64 + b);
        }
    }
};

// Upper-triangular table over boundary positions 0..n: cell (i,j) with
// i < j <= n holds the nonterminals deriving tokens [i, j).
class RecognitionTable {
  public:
    RecognitionTable() = default;
    explicit RecognitionTable(int n);

    int n() const { return n_; }
    NtSet& at(int i, int j) { return cells_[index(i, j)]; }
    const NtSet& at(int i, int j) const { return cells_[index(i, j)]; }

  private:
    size_t index(int i, int j) const { return row_off_[size_t(i)] + size_t(j - i - 1); }

    int n_ = 0;
    std::vector<size_t> row_off_;
    std::vector<NtSet> cells_;
};

// Square 0/1 matrix with rows packed into 64-bit words.
class BoolMatrix {
  public:
    BoolMatrix() = default;
    explicit BoolMatrix(int n) : n_(n), words_(size_t(n + 63) / 64), bits_(size_t(n) * words_) {}

    int dim() const { return n_; }
    size_t words_per_row() const { return words_; }
    void set(int r, int c) { bits_[size_t(r) * words_ + size_t(c) / 64] |= 1ull << (c & 63); }
    bool get(int r, int c) const {
        return (bits_[size_t(r) * words_ + size_t(c) / 64] >> (c & 63)) & 1;
    }
    uint64_t* row(int r) { return bits_.data() + size_t(r) * words_; }
    const uint64_t* row(int r) const { return bits_.data() + size_t(r) * words_; }
    bool operator==(const BoolMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  private:
    int n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

// c[i][j] = OR_k a[i][k] AND b[k][j]. Naive: scalar triple loop.
// Packed: word-parallel over rows of b. Both demand equal dimensions.
BoolMatrix bmm_naive(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bmm_packed(const BoolMatrix& a, const BoolMatrix& b);

using BmmKernel = std::function<BoolMatrix(const BoolMatrix&, const BoolMatrix&)>;

// Classic cubic CYK. Tokens must name terminals of g; unknown tokens raise
// parse_error with the offending position. Empty input decides via
// start_derives_empty. Pass a table to retain the filled triangle.
bool cyk(const CnfGrammar& g, const TokenSeq& tokens, RecognitionTable* table_out = nullptr);

// Divide-and-conquer transitive closure of the recognition table. The combine
// step performs, per rule A -> B C, one boolean matrix product between the
// B-indicator and C-indicator submatrices and ORs the result into the
// A-indicator. Blocks that are all-zero are skipped, all-ones blocks reduce
// to row/column ORs and very sparse blocks to row gathers; remaining dense
// products go through the supplied kernel. Decision always equals cyk's.
bool valiant_recognize(const CnfGrammar& g, const TokenSeq& tokens, const BmmKernel& kernel);

}  // namespace cliquelab
