#include "cliquelab/cnf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cliquelab/util.hpp"

namespace cliquelab {

int CnfGrammar::find_terminal(const std::string& name) const {
    for (size_t i = 0; i < term_names.size(); ++i)
        if (term_names[i] == name) return int(i);
    return -1;
}

std::string CnfGrammar::to_text() const {
    std::string out = "start: " + nt_names[size_t(start)] + "\n";
    out += std::string("# start_derives_empty: ") + (start_derives_empty ? "true" : "false") + "\n";
    for (const auto& r : bin_rules)
        out += nt_names[size_t(r.head)] + " -> " + nt_names[size_t(r.left)] + " " +
               nt_names[size_t(r.right)] + "\n";
    for (const auto& [head, term] : term_rules)
        out += nt_names[size_t(head)] + " -> " + term_names[size_t(term)] + "\n";
    return out;
}

namespace {

struct WorkRule {
    int head;
    std::vector<int> body;  // symbol ids in an extended id space
    bool operator<(const WorkRule& o) const {
        return std::tie(head, body) < std::tie(o.head, o.body);
    }
    bool operator==(const WorkRule& o) const { return head == o.head && body == o.body; }
};

}  // namespace

CnfGrammar to_cnf(const Grammar& g) {
    // Extended symbol space: original ids, then fresh nonterminals appended.
    std::vector<std::string> names;
    std::vector<bool> is_term;
    for (int i = 0; i < g.symbol_count(); ++i) {
        names.push_back(g.symbol_name(i));
        is_term.push_back(g.is_terminal(i));
    }
    auto fresh_nt = [&](const std::string& name) {
        names.push_back(name);
        is_term.push_back(false);
        return int(names.size()) - 1;
    };

    if (g.start() < 0) throw domain_error("grammar has no start symbol");
    int start0 = fresh_nt(g.symbol_name(g.start()) + "%start");
    std::vector<WorkRule> rules;
    rules.push_back(WorkRule{start0, {g.start()}});
    for (const auto& r : g.rules()) rules.push_back(WorkRule{r.head, r.body});

    // eps-elimination
    std::set<int> nullable;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : rules) {
            if (nullable.count(r.head)) continue;
            bool all = true;
            for (int s : r.body)
                if (is_term[size_t(s)] || !nullable.count(s)) {
                    all = false;
                    break;
                }
            if (all) {
                nullable.insert(r.head);
                changed = true;
            }
        }
    }
    bool start_eps = nullable.count(start0) > 0;

    std::vector<WorkRule> no_eps;
    std::set<WorkRule> seen;
    for (const auto& r : rules) {
        std::vector<size_t> null_pos;
        for (size_t i = 0; i < r.body.size(); ++i)
            if (!is_term[size_t(r.body[i])] && nullable.count(r.body[i])) null_pos.push_back(i);
        size_t combos = size_t(1) << null_pos.size();
        for (size_t mask = 0; mask < combos; ++mask) {
            WorkRule v{r.head, {}};
            size_t npi = 0;
            for (size_t i = 0; i < r.body.size(); ++i) {
                if (npi < null_pos.size() && null_pos[npi] == i) {
                    bool drop = (mask >> npi) & 1;
                    ++npi;
                    if (drop) continue;
                }
                v.body.push_back(r.body[i]);
            }
            if (v.body.empty()) continue;
            if (seen.insert(v).second) no_eps.push_back(std::move(v));
        }
    }

    // unit-rule elimination via transitive closure of the unit relation
    std::map<int, std::set<int>> unit_to;  // A -> {B : A =>* B by unit rules}
    for (const auto& r : no_eps)
        if (r.body.size() == 1 && !is_term[size_t(r.body[0])]) unit_to[r.head].insert(r.body[0]);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& [a, bs] : unit_to) {
            std::set<int> add;
            for (int b : bs) {
                auto it = unit_to.find(b);
                if (it == unit_to.end()) continue;
                for (int c : it->second)
                    if (c != a && !bs.count(c)) add.insert(c);
            }
            if (!add.empty()) {
                bs.insert(add.begin(), add.end());
                changed = true;
            }
        }
    }

    std::map<int, std::vector<const WorkRule*>> non_unit_by_head;
    for (const auto& r : no_eps)
        if (!(r.body.size() == 1 && !is_term[size_t(r.body[0])]))
            non_unit_by_head[r.head].push_back(&r);

    std::vector<WorkRule> no_unit;
    seen.clear();
    std::set<int> heads_in_order;
    for (const auto& r : no_eps) heads_in_order.insert(r.head);
    for (int a : heads_in_order) {
        auto emit = [&](const WorkRule* r) {
            WorkRule v{a, r->body};
            if (seen.insert(v).second) no_unit.push_back(std::move(v));
        };
        for (const WorkRule* r : non_unit_by_head[a]) emit(r);
        auto it = unit_to.find(a);
        if (it != unit_to.end())
            for (int b : it->second)
                for (const WorkRule* r : non_unit_by_head[b]) emit(r);
    }

    // terminal lifting inside bodies of length >= 2
    std::map<int, int> lift_of;
    std::vector<WorkRule> lifted;
    for (const auto& r : no_unit) {
        WorkRule v{r.head, r.body};
        if (v.body.size() >= 2) {
            for (auto& s : v.body) {
                if (!is_term[size_t(s)]) continue;
                auto it = lift_of.find(s);
                if (it == lift_of.end()) {
                    int nt = fresh_nt(names[size_t(s)] + "%lift");
                    it = lift_of.emplace(s, nt).first;
                }
                s = it->second;
            }
        }
        lifted.push_back(std::move(v));
    }
    for (auto [term, nt] : lift_of) lifted.push_back(WorkRule{nt, {term}});

    // left-to-right binarization
    std::vector<WorkRule> cnf_rules;
    for (size_t ri = 0; ri < lifted.size(); ++ri) {
        const auto& r = lifted[ri];
        if (r.body.size() <= 2) {
            cnf_rules.push_back(r);
            continue;
        }
        const std::string head_name = names[size_t(r.head)];
        int prev = r.head;
        for (size_t pos = 0; pos + 2 < r.body.size(); ++pos) {
            int next = fresh_nt(head_name + "%" + std::to_string(ri) + "%" +
                                std::to_string(pos + 1));
            cnf_rules.push_back(WorkRule{prev, {r.body[pos], next}});
            prev = next;
        }
        cnf_rules.push_back(
            WorkRule{prev, {r.body[r.body.size() - 2], r.body[r.body.size() - 1]}});
    }

    // prune unproductive, then unreachable (start survives unconditionally)
    std::set<int> productive;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : cnf_rules) {
            if (productive.count(r.head)) continue;
            bool ok = true;
            for (int s : r.body)
                if (!is_term[size_t(s)] && !productive.count(s)) {
                    ok = false;
                    break;
                }
            if (ok) {
                productive.insert(r.head);
                changed = true;
            }
        }
    }
    std::vector<WorkRule> pruned;
    for (const auto& r : cnf_rules) {
        bool ok = productive.count(r.head) > 0;
        for (int s : r.body)
            if (!is_term[size_t(s)] && !productive.count(s)) ok = false;
        if (ok) pruned.push_back(r);
    }
    std::set<int> reachable{start0};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : pruned) {
            if (!reachable.count(r.head)) continue;
            for (int s : r.body)
                if (!is_term[size_t(s)] && reachable.insert(s).second) changed = true;
        }
    }
    std::vector<WorkRule> final_rules;
    for (const auto& r : pruned)
        if (reachable.count(r.head)) final_rules.push_back(r);

    // assemble: nonterminal ids in first-appearance order, start first
    CnfGrammar out;
    out.start_derives_empty = start_eps;
    std::map<int, int> nt_id;
    auto nt = [&](int sym) {
        auto it = nt_id.find(sym);
        if (it != nt_id.end()) return it->second;
        int id = int(out.nt_names.size());
        out.nt_names.push_back(names[size_t(sym)]);
        nt_id.emplace(sym, id);
        return id;
    };
    out.start = nt(start0);
    std::map<int, int> term_id;
    for (int i = 0; i < g.symbol_count(); ++i)
        if (g.is_terminal(i)) {
            term_id[i] = int(out.term_names.size());
            out.term_names.push_back(g.symbol_name(i));
        }
    for (const auto& r : final_rules) {
        if (r.body.size() == 2) {
            out.bin_rules.push_back(CnfGrammar::BinRule{nt(r.head), nt(r.body[0]), nt(r.body[1])});
        } else if (r.body.size() == 1 && is_term[size_t(r.body[0])]) {
            out.term_rules.emplace_back(nt(r.head), term_id.at(r.body[0]));
        } else {
            throw domain_error("internal: non-CNF rule survived normalization");
        }
    }
    return out;
}

}  // namespace cliquelab
