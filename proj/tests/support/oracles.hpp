// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cliquelab/grammar.hpp"
#include "cliquelab/tokens.hpp"
#include "cliquelab/util.hpp"

namespace cliquelab::testing {

// All strings of length <= max_len derivable from g, by breadth-first
// expansion of sentential forms with length pruning (terminal count never
// shrinks, so forms whose terminal count exceeds max_len are dead).
inline std::set<std::vector<std::string>> derivable_strings(const Grammar& g, size_t max_len) {
    using Form = std::vector<int>;  // symbol ids, mixed terminals/nonterminals
    std::set<Form> visited;
    std::vector<Form> frontier{{g.start()}};
    visited.insert(frontier[0]);
    std::set<std::vector<std::string>> out;

    auto terminal_count = [&](const Form& f) {
        size_t c = 0;
        for (int s : f)
            if (g.is_terminal(s)) ++c;
        return c;
    };

    while (!frontier.empty()) {
        std::vector<Form> next;
        for (const Form& form : frontier) {
            int nt_pos = -1;
            for (size_t i = 0; i < form.size(); ++i)
                if (!g.is_terminal(form[i])) {
                    nt_pos = int(i);
                    break;
                }
            if (nt_pos < 0) {
                if (form.size() <= max_len) {
                    std::vector<std::string> s;
                    for (int id : form) s.push_back(g.symbol_name(id));
                    out.insert(std::move(s));
                }
                continue;
            }
            for (const auto& r : g.rules()) {
                if (r.head != form[size_t(nt_pos)]) continue;
                Form child;
                child.insert(child.end(), form.begin(), form.begin() + nt_pos);
                child.insert(child.end(), r.body.begin(), r.body.end());
                child.insert(child.end(), form.begin() + nt_pos + 1, form.end());
                if (terminal_count(child) > max_len) continue;
                if (child.size() > max_len + 24) continue;  // nonterminal pile-up guard
                if (visited.insert(child).second) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Random small grammar over up to 3 nonterminals and the given terminals.
// Shapes are kept short so the derivation enumerator stays cheap.
inline Grammar random_grammar(SplitMix64& rng, const std::vector<std::string>& terminals) {
    Grammar g;
    const char* nts[3] = {"A", "B", "C"};
    int num_nts = 2 + int(rng.next_below(2));
    g.set_start("A");
    for (int i = 0; i < num_nts; ++i) g.add_nonterminal(nts[i]);
    for (const auto& t : terminals) g.add_terminal(t);
    int num_rules = 3 + int(rng.next_below(4));
    for (int r = 0; r < num_rules; ++r) {
        std::string head = nts[rng.next_below(uint64_t(num_nts))];
        std::vector<std::string> body;
        size_t len = rng.next_below(4);  // 0..3
        for (size_t i = 0; i < len; ++i) {
            if (rng.next_below(2))
                body.push_back(terminals[rng.next_below(terminals.size())]);
            else
                body.push_back(nts[rng.next_below(uint64_t(num_nts))]);
        }
        g.add_rule(head, body);
    }
    return g;
}

// Classic quadratic LCS table.
inline int lcs_classic(const std::vector<std::string>& x, const std::vector<std::string>& y) {
    std::vector<std::vector<int>> d(x.size() + 1, std::vector<int>(y.size() + 1, 0));
    for (size_t i = 1; i <= x.size(); ++i)
        for (size_t j = 1; j <= y.size(); ++j)
            d[i][j] = x[i - 1] == y[j - 1] ? d[i - 1][j - 1] + 1
                                           : std::max(d[i - 1][j], d[i][j - 1]);
    return d[x.size()][y.size()];
}

inline TokenSeq seq_of(const std::vector<std::string>& names, VocabPtr vocab = nullptr) {
    return make_token_seq(std::move(vocab), names);
}

}  // namespace cliquelab::testing
