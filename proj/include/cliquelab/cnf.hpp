#pragma once

#include <string>
#include <vector>

#include "cliquelab/grammar.hpp"

namespace cliquelab {

// Chomsky-normal-form image of a Grammar. Nonterminals and terminals live in
// separate id spaces. The start symbol never appears on a right-hand side;
// eps-membership of the original start survives only in start_derives_empty.
struct CnfGrammar {
    std::vector<std::string> nt_names;
    std::vector<std::string> term_names;
    int start = 0;
    bool start_derives_empty = false;

    struct BinRule {
        int head, left, right;
    };
    std::vector<BinRule> bin_rules;
    std::vector<std::pair<int, int>> term_rules;  // (head, terminal)

    int num_nts() const { return int(nt_names.size()); }
    int find_terminal(const std::string& name) const;

    std::string to_text() const;
};

// Normalization pipeline: fresh start symbol, eps-elimination, unit-rule
// elimination (transitive closure), terminal lifting inside bodies of length
// >= 2, then left-to-right binarization. Fresh nonterminals are named
// "<head>%<ruleIndex>%<position>" (binarization), "<terminal>%lift", and
// "<start>%start", so identical inputs produce identical rule lists.
// Unreachable and unproductive symbols are pruned. Language-preserving on
// non-empty strings.
CnfGrammar to_cnf(const Grammar& g);

}  // namespace cliquelab
