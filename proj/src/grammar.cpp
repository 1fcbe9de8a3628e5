#include "cliquelab/grammar.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cliquelab/util.hpp"

namespace cliquelab {

int Grammar::intern(std::string_view name, bool terminal) {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) {
            if (is_term_[i] != terminal)
                throw parse_error("symbol '" + std::string(name) +
                                  "' used as both terminal and nonterminal");
            return int(i);
        }
    names_.emplace_back(name);
    is_term_.push_back(terminal);
    return int(names_.size()) - 1;
}

int Grammar::add_terminal(std::string_view name) { return intern(name, true); }
int Grammar::add_nonterminal(std::string_view name) { return intern(name, false); }

void Grammar::set_start(std::string_view name) { start_ = add_nonterminal(name); }

int Grammar::find_symbol(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

void Grammar::add_rule(std::string_view head, const std::vector<std::string>& body) {
    Rule r;
    r.head = add_nonterminal(head);
    for (const auto& s : body) {
        int id = find_symbol(s);
        if (id < 0) throw parse_error("rule body uses undeclared symbol '" + s + "'");
        r.body.push_back(id);
    }
    rules_.push_back(std::move(r));
}

void Grammar::add_rule(int head, std::vector<int> body) {
    rules_.push_back(Rule{head, std::move(body)});
}

int Grammar::num_terminals() const {
    return int(std::count(is_term_.begin(), is_term_.end(), true));
}

int Grammar::num_nonterminals() const {
    return int(names_.size()) - num_terminals();
}

int Grammar::size() const {
    int total = 0;
    for (const auto& r : rules_) {
        total += 2;
        for (int s : r.body)
            if (is_terminal(s)) ++total;
    }
    return total;
}

std::string Grammar::to_text() const {
    std::string out = "start: " + names_[size_t(start_)] + "\n";
    for (const auto& r : rules_) {
        out += names_[size_t(r.head)] + " ->";
        if (r.body.empty()) {
            out += " eps";
        } else {
            for (int s : r.body) out += " " + names_[size_t(s)];
        }
        out += "\n";
    }
    return out;
}

Grammar Grammar::parse(const std::string& text) {
    // Two passes: heads are nonterminals, everything else in a body that never
    // appears as a head is a terminal.
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::vector<std::string>>> raw;
    std::string start_name;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // '#' is a legitimate body symbol, so comments are whole lines only
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "start:") {
            if (!(ls >> start_name))
                throw parse_error("grammar line " + std::to_string(lineno) + ": missing start symbol");
            continue;
        }
        std::string arrow;
        if (!(ls >> arrow) || arrow != "->")
            throw parse_error("grammar line " + std::to_string(lineno) + ": expected '->'");
        std::vector<std::string> body;
        std::string tok;
        while (ls >> tok) body.push_back(tok);
        if (body.size() == 1 && body[0] == "eps") body.clear();
        raw.emplace_back(head, std::move(body));
    }
    if (start_name.empty()) throw parse_error("grammar: missing 'start:' header");

    Grammar g;
    g.set_start(start_name);
    for (const auto& [head, body] : raw) g.add_nonterminal(head);
    for (const auto& [head, body] : raw)
        for (const auto& s : body)
            if (g.find_symbol(s) < 0) g.add_terminal(s);
    for (const auto& [head, body] : raw) {
        Rule r;
        r.head = g.find_symbol(head);
        for (const auto& s : body) r.body.push_back(g.find_symbol(s));
        g.rules_.push_back(std::move(r));
    }
    return g;
}

const Grammar& clique_grammar() {
    static const Grammar g = [] {
        Grammar g;
        const std::vector<std::string> terms = {"0",       "1",     "$",     "#",
                                                "a_start", "a_mid", "a_end", "b_start",
                                                "b_mid",   "b_end", "c_start", "c_mid", "c_end"};
        g.set_start("S");
        for (const auto& nt : {"S", "W", "W'", "V", "S_ag", "S_ab", "S_bg", "Ss_ag", "Ss_ab",
                               "Ss_bg", "N_ag", "N_ab", "N_bg"})
            g.add_nonterminal(nt);
        for (const auto& t : terms) g.add_terminal(t);

        // main rules
        g.add_rule("S", {"W", "a_start", "S_ag", "c_end", "W"});
        g.add_rule("Ss_ag", {"a_mid", "S_ab", "b_mid", "S_bg", "c_mid"});
        g.add_rule("Ss_ab", {"a_end", "W", "b_start"});
        g.add_rule("Ss_bg", {"b_end", "W", "c_start"});
        // listing rules, one block per type pair
        for (const std::string xy : {"ab", "ag", "bg"}) {
            g.add_rule("S_" + xy, {"Ss_" + xy});
            g.add_rule("S_" + xy, {"#", "N_" + xy, "$", "V", "#"});
            g.add_rule("N_" + xy, {"#", "S_" + xy, "#", "V", "$"});
            for (const std::string sigma : {"0", "1"})
                g.add_rule("N_" + xy, {sigma, "N_" + xy, sigma});
        }
        // assisting rules
        g.add_rule("W", {});
        for (const auto& t : terms) g.add_rule("W", {t, "W"});
        g.add_rule("W'", {});
        for (const std::string sigma : {"0", "1"}) g.add_rule("W'", {sigma, "W'"});
        g.add_rule("V", {});
        g.add_rule("V", {"$", "W'", "$", "V"});
        return g;
    }();
    return g;
}

}  // namespace cliquelab
