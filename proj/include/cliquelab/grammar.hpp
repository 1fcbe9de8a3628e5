#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cliquelab {

// General CFG: rules may be empty (eps) or arbitrarily long, bodies mix
// terminals and nonterminals. Symbols are interned; terminal-ness is a
// property of the symbol.
class Grammar {
  public:
    struct Rule {
        int head;
        std::vector<int> body;  // empty = eps
    };

    int add_terminal(std::string_view name);
    int add_nonterminal(std::string_view name);
    void add_rule(std::string_view head, const std::vector<std::string>& body);
    void add_rule(int head, std::vector<int> body);
    void set_start(std::string_view name);

    int find_symbol(std::string_view name) const;  // -1 if absent
    const std::string& symbol_name(int id) const { return names_[size_t(id)]; }
    bool is_terminal(int id) const { return is_term_[size_t(id)]; }
    int start() const { return start_; }
    int symbol_count() const { return int(names_.size()); }
    const std::vector<Rule>& rules() const { return rules_; }

    int num_terminals() const;
    int num_nonterminals() const;
    int rule_count() const { return int(rules_.size()); }

    // Grammar size metric: 2 per rule plus one per terminal occurrence in
    // rule bodies.
    int size() const;

    // One rule per line "Head -> sym sym ..." with "eps" for empty bodies,
    // preceded by a "start: <Name>" header. '#' starts a comment.
    std::string to_text() const;
    static Grammar parse(const std::string& text);

  private:
    int intern(std::string_view name, bool terminal);

    std::vector<std::string> names_;
    std::vector<bool> is_term_;
    std::vector<Rule> rules_;
    int start_ = -1;
};

// The fixed clique-detecting grammar: 13 terminals, 13 nonterminals,
// 38 rules, size 132. Strings built by build_cfg_string are in its language
// exactly when the source graph has a 3k-clique.
const Grammar& clique_grammar();

}  // namespace cliquelab
