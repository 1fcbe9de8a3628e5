#include "cliquelab/folding.hpp"

#include <algorithm>
#include <sstream>

#include "cliquelab/util.hpp"

namespace cliquelab {

int64_t MatchedAlphabet::max_weight() const {
    int64_t m = 1;
    for (size_t i = 0; i < weight.size(); ++i)
        if (i < is_base.size() && is_base[i]) m = std::max(m, weight[i]);
    return m;
}

void MatchedAlphabet::ensure_covers(const TokenSeq& seq) const {
    for (size_t p = 0; p < seq.size(); ++p) {
        int32_t id = seq.ids[p];
        if (size_t(id) >= partner.size() || partner[size_t(id)] < 0)
            throw parse_error("unknown letter '" + seq.name_at(p) + "' at position " +
                              std::to_string(p + 1));
    }
}

MatchedAlphabet MatchedAlphabet::prime_convention(
    Vocab& v, const std::vector<std::pair<std::string, int64_t>>& weights) {
    MatchedAlphabet a;
    // The vocab grows while partners are interned; snapshot the names first.
    std::vector<std::string> snapshot;
    for (int32_t i = 0; i < v.size(); ++i) snapshot.push_back(v.name(i));
    size_t n_before = snapshot.size();
    for (size_t i = 0; i < n_before; ++i) {
        const std::string& name = snapshot[i];
        if (!name.empty() && name.back() == '\'') {
            v.intern(name.substr(0, name.size() - 1));
        } else {
            v.intern(name + "'");
        }
    }
    size_t n = size_t(v.size());
    a.partner.assign(n, -1);
    a.weight.assign(n, 1);
    a.is_base.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        const std::string& name = v.name(int32_t(i));
        if (name.empty() || name.back() == '\'') continue;
        int32_t primed = v.find(name + "'");
        a.partner[i] = primed;
        a.partner[size_t(primed)] = int32_t(i);
        a.is_base[i] = true;
    }
    for (const auto& [name, w] : weights) {
        int32_t id = v.find(name);
        if (id < 0 || !a.is_base[size_t(id)])
            throw parse_error("weight given for unknown base letter '" + name + "'");
        if (w < 1) throw parse_error("weight for '" + name + "' must be positive");
        a.weight[size_t(id)] = w;
        a.weight[size_t(a.partner[size_t(id)])] = w;
    }
    return a;
}

namespace {

// Shared interval DP. gain(k) is the pair weight contributed by matching
// position k with the interval's right end.
FoldResult fold_impl(const TokenSeq& s, const MatchedAlphabet& a, bool weighted,
                     bool with_pairs) {
    a.ensure_covers(s);
    int n = int(s.size());
    FoldResult res;
    if (n < 2) return res;
    // best[i][j] = score of tokens [i, j), stored as best[j * (n+1) + i]
    std::vector<int64_t> best(size_t(n + 1) * size_t(n + 1), 0);
    auto at = [&](int i, int j) -> int64_t& { return best[size_t(j) * size_t(n + 1) + size_t(i)]; };
    for (int j = 2; j <= n; ++j) {
        int32_t last = s.ids[size_t(j - 1)];
        int32_t want = a.partner[size_t(last)];
        int64_t gain = weighted ? a.weight[size_t(last)] : 1;
        for (int i = j - 2; i >= 0; --i) {
            int64_t v = at(i, j - 1);
            for (int k = i; k < j - 1; ++k) {
                if (s.ids[size_t(k)] != want) continue;
                int64_t cand = at(k + 1, j - 1) + gain + (k > i ? at(i, k) : 0);
                v = std::max(v, cand);
            }
            at(i, j) = v;
        }
    }
    res.score = at(0, n);
    if (with_pairs) {
        // Recover one optimal pair set by replaying the DP decisions.
        std::vector<std::pair<int, int>> stack{{0, n}};
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            if (j - i < 2) continue;
            if (at(i, j) == at(i, j - 1)) {
                stack.emplace_back(i, j - 1);
                continue;
            }
            int32_t last = s.ids[size_t(j - 1)];
            int32_t want = a.partner[size_t(last)];
            int64_t gain = weighted ? a.weight[size_t(last)] : 1;
            for (int k = i; k < j - 1; ++k) {
                if (s.ids[size_t(k)] != want) continue;
                int64_t cand = at(k + 1, j - 1) + gain + (k > i ? at(i, k) : 0);
                if (cand == at(i, j)) {
                    res.pairs.emplace_back(k, j - 1);
                    if (k > i) stack.emplace_back(i, k);
                    stack.emplace_back(k + 1, j - 1);
                    break;
                }
            }
        }
        std::sort(res.pairs.begin(), res.pairs.end());
    }
    return res;
}

}  // namespace

FoldResult rna_fold(const TokenSeq& s, const MatchedAlphabet& a, bool with_pairs) {
    return fold_impl(s, a, false, with_pairs);
}

FoldResult wrna_fold(const TokenSeq& s, const MatchedAlphabet& a, bool with_pairs) {
    return fold_impl(s, a, true, with_pairs);
}

TokenSeq expand_weighted(const TokenSeq& s, const MatchedAlphabet& a) {
    a.ensure_covers(s);
    TokenSeq out{s.vocab, {}};
    for (int32_t id : s.ids) out.append_run(id, size_t(a.weight[size_t(id)]));
    return out;
}

namespace {

int64_t brute(const TokenSeq& s, const MatchedAlphabet& a, int i, int j) {
    if (j - i < 2) return 0;
    // leave position i unpaired
    int64_t best = brute(s, a, i + 1, j);
    int32_t want = a.partner[size_t(s.ids[size_t(i)])];
    for (int k = i + 1; k < j; ++k) {
        if (s.ids[size_t(k)] != want) continue;
        best = std::max(best, a.weight[size_t(s.ids[size_t(i)])] + brute(s, a, i + 1, k) +
                                  brute(s, a, k + 1, j));
    }
    return best;
}

}  // namespace

int64_t rna_bruteforce(const TokenSeq& s, const MatchedAlphabet& a) {
    if (s.size() > 16) throw domain_error("rna_bruteforce refuses inputs longer than 16");
    a.ensure_covers(s);
    // unweighted oracle: pair gains are all 1
    MatchedAlphabet unw = a;
    std::fill(unw.weight.begin(), unw.weight.end(), 1);
    return brute(s, unw, 0, int(s.size()));
}

int64_t lcs_via_rna(const TokenSeq& x, const TokenSeq& y) {
    for (size_t p = 0; p < x.size(); ++p)
        if (!x.name_at(p).empty() && x.name_at(p).back() == '\'')
            throw parse_error("lcs_via_rna: primed letter '" + x.name_at(p) + "' in first input");
    for (size_t p = 0; p < y.size(); ++p)
        if (!y.name_at(p).empty() && y.name_at(p).back() == '\'')
            throw parse_error("lcs_via_rna: primed letter '" + y.name_at(p) + "' in second input");
    TokenSeq joined{x.vocab, x.ids};
    for (size_t p = y.size(); p > 0; --p)
        joined.push(y.name_at(p - 1) + "'");
    MatchedAlphabet a = MatchedAlphabet::prime_convention(*joined.vocab);
    return rna_fold(joined, a).score;
}

std::string weight_table_text(const Vocab& vocab, const MatchedAlphabet& a) {
    std::string out;
    for (int32_t i = 0; i < vocab.size(); ++i)
        if (size_t(i) < a.is_base.size() && a.is_base[size_t(i)])
            out += vocab.name(i) + " " + std::to_string(a.weight[size_t(i)]) + "\n";
    return out;
}

MatchedAlphabet parse_weight_table(const std::string& text, Vocab& vocab) {
    std::vector<std::pair<std::string, int64_t>> weights;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // no comment syntax: letters like "#_ab" are legitimate
        std::istringstream ls(line);
        std::string letter;
        long long w;
        if (!(ls >> letter)) continue;
        if (!(ls >> w))
            throw parse_error("weight table line " + std::to_string(lineno) +
                              ": expected '<letter> <weight>'");
        vocab.intern(letter);
        weights.emplace_back(letter, w);
    }
    return MatchedAlphabet::prime_convention(vocab, weights);
}

}  // namespace cliquelab
