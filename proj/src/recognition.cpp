#include "cliquelab/recognition.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cliquelab/util.hpp"

namespace cliquelab {

RecognitionTable::RecognitionTable(int n) : n_(n) {
    row_off_.resize(size_t(n) + 1, 0);
    size_t off = 0;
    for (int i = 0; i <= n; ++i) {
        row_off_[size_t(i)] = off;
        off += size_t(n - i);
    }
    cells_.assign(off, NtSet{});
}

BoolMatrix bmm_naive(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("bmm: dimension mismatch");
    int n = a.dim();
    BoolMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                if (a.get(i, k) && b.get(k, j)) {
                    c.set(i, j);
                    break;
                }
        }
    return c;
}

BoolMatrix bmm_packed(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("bmm: dimension mismatch");
    int n = a.dim();
    BoolMatrix c(n);
    size_t words = b.words_per_row();
    for (int i = 0; i < n; ++i) {
        uint64_t* out = c.row(i);
        const uint64_t* arow = a.row(i);
        for (int k = 0; k < n; ++k) {
            if (!((arow[size_t(k) / 64] >> (k & 63)) & 1)) continue;
            const uint64_t* brow = b.row(k);
            for (size_t w = 0; w < words; ++w) out[w] |= brow[w];
        }
    }
    return c;
}

namespace {

// CnfGrammar compiled for mask-based table fills: terminal masks plus binary
// rules aggregated by (left, right) and grouped by left symbol.
struct Compiled {
    int num_nts = 0;
    int start = 0;
    std::vector<NtSet> term_mask;  // terminal id -> possible heads
    struct Entry {
        int right;
        NtSet heads;
    };
    std::vector<std::vector<Entry>> by_left;
    struct Pair {
        int left, right;
        NtSet heads;
    };
    std::vector<Pair> pairs;  // unique (left, right) with aggregated heads

    explicit Compiled(const CnfGrammar& g) {
        num_nts = g.num_nts();
        if (num_nts > NtSet::kMax)
            throw domain_error("CNF grammar exceeds " + std::to_string(NtSet::kMax) +
                               " nonterminals");
        start = g.start;
        term_mask.assign(g.term_names.size(), NtSet{});
        for (auto [head, term] : g.term_rules) term_mask[size_t(term)].set(head);
        std::map<std::pair<int, int>, NtSet> agg;
        for (const auto& r : g.bin_rules) agg[{r.left, r.right}].set(r.head);
        by_left.assign(size_t(num_nts), {});
        for (const auto& [lr, heads] : agg) {
            by_left[size_t(lr.first)].push_back(Entry{lr.second, heads});
            pairs.push_back(Pair{lr.first, lr.second, heads});
        }
    }

    NtSet combine(const NtSet& l, const NtSet& r) const {
        NtSet acc;
        l.for_each([&](int b) {
            for (const Entry& e : by_left[size_t(b)])
                if (r.test(e.right)) acc |= e.heads;
        });
        return acc;
    }
};

std::vector<int> map_terminals(const CnfGrammar& g, const TokenSeq& tokens) {
    std::vector<int> out(tokens.size());
    std::unordered_map<std::string, int> lut;
    for (size_t i = 0; i < g.term_names.size(); ++i) lut[g.term_names[i]] = int(i);
    for (size_t p = 0; p < tokens.size(); ++p) {
        auto it = lut.find(tokens.name_at(p));
        if (it == lut.end())
            throw parse_error("unknown token '" + tokens.name_at(p) + "' at position " +
                              std::to_string(p + 1));
        out[p] = it->second;
    }
    return out;
}

void fill_diagonal(const Compiled& cg, const std::vector<int>& terms, RecognitionTable& t) {
    for (size_t p = 0; p < terms.size(); ++p) t.at(int(p), int(p) + 1) = cg.term_mask[size_t(terms[p])];
}

// Plain cubic fill of the sub-triangle over boundaries [lo, hi]; diagonal
// cells must already be present.
void cyk_fill_range(const Compiled& cg, RecognitionTable& t, int lo, int hi) {
    for (int len = 2; len <= hi - lo; ++len)
        for (int i = lo; i + len <= hi; ++i) {
            int j = i + len;
            NtSet acc;
            for (int k = i + 1; k < j; ++k) {
                const NtSet& l = t.at(i, k);
                if (l.empty()) continue;
                const NtSet& r = t.at(k, j);
                if (r.empty()) continue;
                l.for_each([&](int b) {
                    for (const Compiled::Entry& e : cg.by_left[size_t(b)])
                        if (r.test(e.right)) acc |= e.heads;
                });
            }
            t.at(i, j) = acc;
        }
}

// ---- Valiant-style divide and conquer --------------------------------------

// Rectangle completion works on index ranges of boundary positions:
// rows [r0, r1) and cols [c0, c1), standing for cells (i, j).
struct Block {
    int begin = 0, end = 0;
    int size() const { return end - begin; }
};

struct Extracted {
    BoolMatrix mat;     // padded to the call's square dimension
    size_t nnz = 0;
    bool full = false;  // every valid (a x b) position set
};

class ValiantEngine {
  public:
    ValiantEngine(const Compiled& cg, RecognitionTable& t, const BmmKernel& kernel)
        : cg_(cg), t_(t), kernel_(kernel) {}

    void run() {
        if (t_.n() >= 1) compute(0, t_.n());
    }

  private:
    static constexpr int kCutoff = 64;

    void compute(int l, int r) {
        if (r - l <= kCutoff) {
            cyk_fill_range(cg_, t_, l, r);
            return;
        }
        int m = (l + r) / 2;
        compute(l, m);
        compute(m, r);
        Block rows{l, m}, cols{m + 1, r + 1};
        // splits through the middle boundary m
        for (int i = rows.begin; i < rows.end; ++i) {
            const NtSet& left = t_.at(i, m);
            if (left.empty()) continue;
            for (int j = cols.begin; j < cols.end; ++j) {
                const NtSet& right = t_.at(m, j);
                if (right.empty()) continue;
                t_.at(i, j) |= cg_.combine(left, right);
            }
        }
        complete(rows, cols);
    }

    // Precondition: all cells strictly between rows and cols are final, and
    // every contribution through a split outside rows/cols is already ORed
    // into the rectangle.
    void complete(Block rows, Block cols) {
        if (rows.size() == 0 || cols.size() == 0) return;
        if (rows.size() == 1 && cols.size() == 1) return;
        Block r1{rows.begin, rows.begin + rows.size() / 2};
        Block r2{r1.end, rows.end};
        Block c1{cols.begin, cols.begin + cols.size() / 2};
        Block c2{c1.end, cols.end};
        complete(r2, c1);
        product(r1, r2, c1);
        complete(r1, c1);
        product(r2, c1, c2);
        complete(r2, c2);
        product(r1, r2, c2);
        product(r1, c1, c2);
        complete(r1, c2);
    }

    // T[rows x cols] |= OR over rules A -> B C of B[rows x mid] * C[mid x cols].
    void product(Block rows, Block mid, Block cols) {
        int a = rows.size(), b = mid.size(), c = cols.size();
        if (a == 0 || b == 0 || c == 0) return;
        int s = std::max({a, b, c});
        auto left = extract(rows, mid, s);
        auto right = extract(mid, cols, s);
        for (const auto& pr : cg_.pairs) {
            auto li = left.find(pr.left);
            if (li == left.end()) continue;
            auto ri = right.find(pr.right);
            if (ri == right.end()) continue;
            apply_product(li->second, ri->second, a, b, c, s, rows, cols, pr.heads);
        }
    }

    std::unordered_map<int, Extracted> extract(Block rb, Block cb, int s) {
        std::unordered_map<int, Extracted> out;
        int a = rb.size(), b = cb.size();
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                int bi = rb.begin + i, bj = cb.begin + j;
                if (bi >= bj) continue;  // lower side of the triangle stays empty
                const NtSet& m = t_.at(bi, bj);
                if (m.empty()) continue;
                m.for_each([&](int nt) {
                    auto [it, fresh] = out.try_emplace(nt);
                    if (fresh) it->second.mat = BoolMatrix(s);
                    it->second.mat.set(i, j);
                    ++it->second.nnz;
                });
            }
        for (auto& [nt, e] : out) e.full = e.nnz == size_t(a) * size_t(b);
        return out;
    }

    void apply_product(const Extracted& bm, const Extracted& cm, int a, int b, int c, int s,
                       Block rows, Block cols, const NtSet& heads) {
        if (bm.full) {
            // every row of the result is the union of C's valid rows
            BoolMatrix u(s);
            uint64_t* urow = u.row(0);
            for (int k = 0; k < b; ++k) {
                const uint64_t* crow = cm.mat.row(k);
                for (size_t w = 0; w < u.words_per_row(); ++w) urow[w] |= crow[w];
            }
            for (int j = 0; j < c; ++j)
                if (u.get(0, j))
                    for (int i = 0; i < a; ++i) t_.at(rows.begin + i, cols.begin + j) |= heads;
            return;
        }
        if (cm.full) {
            for (int i = 0; i < a; ++i) {
                bool any = false;
                const uint64_t* brow = bm.mat.row(i);
                for (size_t w = 0; w < bm.mat.words_per_row() && !any; ++w) any = brow[w] != 0;
                if (any)
                    for (int j = 0; j < c; ++j) t_.at(rows.begin + i, cols.begin + j) |= heads;
            }
            return;
        }
        BoolMatrix prod(s);
        if (bm.nnz <= size_t(s)) {
            // sparse row gather
            for (int i = 0; i < a; ++i) {
                uint64_t* out = prod.row(i);
                const uint64_t* brow = bm.mat.row(i);
                for (int k = 0; k < b; ++k)
                    if ((brow[size_t(k) / 64] >> (k & 63)) & 1) {
                        const uint64_t* crow = cm.mat.row(k);
                        for (size_t w = 0; w < prod.words_per_row(); ++w) out[w] |= crow[w];
                    }
            }
        } else {
            prod = kernel_(bm.mat, cm.mat);
        }
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < c; ++j)
                if (prod.get(i, j)) t_.at(rows.begin + i, cols.begin + j) |= heads;
    }

    const Compiled& cg_;
    RecognitionTable& t_;
    const BmmKernel& kernel_;
};

}  // namespace

bool cyk(const CnfGrammar& g, const TokenSeq& tokens, RecognitionTable* table_out) {
    auto terms = map_terminals(g, tokens);
    int n = int(terms.size());
    if (n == 0) return g.start_derives_empty;
    Compiled cg(g);
    RecognitionTable t(n);
    fill_diagonal(cg, terms, t);
    cyk_fill_range(cg, t, 0, n);
    bool ok = t.at(0, n).test(cg.start);
    if (table_out) *table_out = std::move(t);
    return ok;
}

bool valiant_recognize(const CnfGrammar& g, const TokenSeq& tokens, const BmmKernel& kernel) {
    auto terms = map_terminals(g, tokens);
    int n = int(terms.size());
    if (n == 0) return g.start_derives_empty;
    Compiled cg(g);
    RecognitionTable t(n);
    fill_diagonal(cg, terms, t);
    ValiantEngine(cg, t, kernel).run();
    return t.at(0, n).test(cg.start);
}

}  // namespace cliquelab
