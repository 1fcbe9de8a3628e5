#include "cliquelab/dyck.hpp"

#include <algorithm>
#include <cstring>

#include "cliquelab/util.hpp"

namespace cliquelab {

void BracketAlphabet::ensure_covers(const TokenSeq& seq) const {
    for (size_t p = 0; p < seq.size(); ++p) {
        int32_t id = seq.ids[p];
        if (!is_opener(id) && !is_closer(id))
            throw parse_error("unknown bracket '" + seq.name_at(p) + "' at position " +
                              std::to_string(p + 1));
    }
}

BracketAlphabet BracketAlphabet::standard(const Vocab& vocab) {
    BracketAlphabet a;
    size_t n = size_t(vocab.size());
    a.closer_of.assign(n, -1);
    a.opener_of.assign(n, -1);
    auto pair_up = [&](int32_t open, int32_t close) {
        if (open < 0 || close < 0) return;
        a.closer_of[size_t(open)] = close;
        a.opener_of[size_t(close)] = open;
    };
    pair_up(vocab.find("("), vocab.find(")"));
    pair_up(vocab.find("["), vocab.find("]"));
    pair_up(vocab.find("{"), vocab.find("}"));
    for (int32_t i = 0; i < vocab.size(); ++i) {
        const std::string& name = vocab.name(i);
        if (name.empty() || name.back() == '\'') continue;
        if (a.closer_of[size_t(i)] >= 0 || a.opener_of[size_t(i)] >= 0) continue;
        int32_t primed = vocab.find(name + "'");
        if (primed >= 0) pair_up(i, primed);
    }
    return a;
}

bool dyck_balanced(const TokenSeq& s, const BracketAlphabet& a) {
    a.ensure_covers(s);
    std::vector<int32_t> stack;
    for (int32_t id : s.ids) {
        if (a.is_opener(id)) {
            stack.push_back(id);
        } else {
            if (stack.empty() || a.closer_of[size_t(stack.back())] != id) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

namespace {

// Interval DP over spans [i, j). Cost type is chosen by length so the big
// reduction instances stay in 16-bit rows (half the memory traffic; the
// split loop is the hot path and auto-vectorizes).
template <typename Cost>
int64_t dyck_dp(const std::vector<int32_t>& ids, const BracketAlphabet& a) {
    const int n = int(ids.size());
    if (n == 0) return 0;
    // d[i][j] stored row-major with row stride n+1; col[j] mirrors column j
    // of the triangle so the split scan runs over contiguous memory.
    std::vector<Cost> d(size_t(n + 1) * size_t(n + 1), 0);
    auto at = [&](int i, int j) -> Cost& { return d[size_t(i) * size_t(n + 1) + size_t(j)]; };
    std::vector<Cost> col(size_t(n + 1));
    for (int j = 1; j <= n; ++j) {
        for (int k = 0; k <= j; ++k) col[size_t(k)] = at(k, j);
        for (int i = j - 1; i >= 0; --i) {
            Cost best;
            if (i + 1 == j) {
                best = 1;
            } else {
                // delete s[i] / delete s[j-1] / align s[i] with s[j-1]
                best = Cost(at(i + 1, j) + 1);
                best = std::min(best, Cost(at(i, j - 1) + 1));
                Cost pair_cost = a.match(ids[size_t(i)], ids[size_t(j - 1)]) ? 0 : 1;
                best = std::min(best, Cost(at(i + 1, j - 1) + pair_cost));
                const Cost* row = &at(i, 0);
                const Cost* cl = col.data();
                Cost m = best;
                for (int k = i + 1; k < j; ++k) {
                    Cost cand = Cost(row[k] + cl[k]);
                    m = std::min(m, cand);
                }
                best = m;
            }
            at(i, j) = best;
            col[size_t(i)] = best;
        }
    }
    return int64_t(at(0, n));
}

}  // namespace

int64_t dyck_distance(const TokenSeq& s, const BracketAlphabet& a) {
    a.ensure_covers(s);
    if (s.size() < 30000) return dyck_dp<uint16_t>(s.ids, a);
    return dyck_dp<int32_t>(s.ids, a);
}

namespace {

int64_t dyck_brute(const std::vector<int32_t>& ids, const BracketAlphabet& a, int i, int j) {
    if (i >= j) return 0;
    // delete s[i]
    int64_t best = 1 + dyck_brute(ids, a, i + 1, j);
    // align s[i] with each later position
    for (int k = i + 1; k < j; ++k) {
        int64_t pair_cost = a.match(ids[size_t(i)], ids[size_t(k)]) ? 0 : 1;
        best = std::min(best, pair_cost + dyck_brute(ids, a, i + 1, k) + dyck_brute(ids, a, k + 1, j));
    }
    return best;
}

}  // namespace

int64_t dyck_bruteforce(const TokenSeq& s, const BracketAlphabet& a) {
    if (s.size() > 12) throw domain_error("dyck_bruteforce refuses inputs longer than 12");
    a.ensure_covers(s);
    return dyck_brute(s.ids, a, 0, int(s.size()));
}

bool Alignment::valid(const TokenSeq& s) const {
    int n = int(s.size());
    std::vector<int> used(size_t(n), 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || j <= i || j >= n) return false;
        if (used[size_t(i)]++ || used[size_t(j)]++) return false;
    }
    for (auto [i1, j1] : pairs)
        for (auto [i2, j2] : pairs) {
            if (i1 == i2 && j1 == j2) continue;
            if (i1 < i2 && i2 < j1 && j1 < j2) return false;
        }
    return true;
}

int64_t Alignment::cost(const TokenSeq& s, const BracketAlphabet& a) const {
    int64_t mismatches = 0;
    std::vector<bool> covered(s.size(), false);
    for (auto [i, j] : pairs) {
        covered[size_t(i)] = covered[size_t(j)] = true;
        if (!a.match(s.ids[size_t(i)], s.ids[size_t(j)])) ++mismatches;
    }
    int64_t deletions = int64_t(std::count(covered.begin(), covered.end(), false));
    return mismatches + deletions;
}

}  // namespace cliquelab
