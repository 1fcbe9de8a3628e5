#include "cliquelab/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cliquelab/util.hpp"

namespace cliquelab {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n <= 0) throw parse_error("node count must be positive");
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw parse_error("self-loop at node " + std::to_string(u));
        if (u < 1 || v > n)
            throw parse_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " out of range 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw parse_error("duplicate edge");
    g.edges = std::move(edges);
    g.adj_.assign(size_t(n) + 1, {});
    for (auto [u, v] : g.edges) {
        g.adj_[size_t(u)].push_back(v);
        g.adj_[size_t(v)].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n || v > n) return false;
    const auto& nb = adj_[size_t(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::to_text() const {
    std::string out = "n=" + std::to_string(n) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + "-" + std::to_string(v) + "\n";
    return out;
}

std::string Graph::digest() const { return fnv1a_digest(to_text()); }

namespace {

Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph document: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("edges"))
        throw parse_error("graph document needs fields 'n' and 'edges'");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw parse_error("edge entries must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(doc["n"].get<int>(), std::move(edges));
}

}  // namespace

Graph parse_graph(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);

    std::istringstream in(text);
    std::string line;
    int n = -1, lineno = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                if (n < 0) {
                    if (tok.rfind("n=", 0) != 0) throw parse_error("first entry must be n=<int>");
                    n = std::stoi(tok.substr(2));
                    continue;
                }
                auto dash = tok.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                    throw parse_error("expected <u>-<v>");
                int u = std::stoi(tok.substr(0, dash));
                int v = std::stoi(tok.substr(dash + 1));
                edges.emplace_back(u, v);
            } catch (const std::exception& e) {
                throw parse_error("graph line " + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (n < 0) throw parse_error("missing n=<int> header");
    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const parse_error& e) {
        throw parse_error(std::string("graph: ") + e.what());
    }
}

namespace {

void extend_clique(const Graph& g, int k, std::vector<int>& cur, int next,
                   std::vector<Clique>& out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = next; v <= g.n; ++v) {
        bool ok = true;
        for (int u : cur)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        extend_clique(g, k, cur, v + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Clique> enumerate_k_cliques(const Graph& g, int k) {
    std::vector<Clique> out;
    if (k < 1 || k > g.n) return out;
    std::vector<int> cur;
    extend_clique(g, k, cur, 1, out);
    return out;
}

bool has_3k_clique(const Graph& g, int k) {
    return !enumerate_k_cliques(g, 3 * k).empty();
}

int encoding_width(int n) { return 2 * int(ceil_log2(n + 1)); }

std::string encode_node(int v, int n) {
    if (v < 1 || v > n)
        throw domain_error("node id " + std::to_string(v) + " outside 1.." + std::to_string(n));
    int width = encoding_width(n);
    std::string bits(size_t(width), '0');
    for (int i = 0; i < width; ++i)
        if (v >> i & 1) bits[size_t(width - 1 - i)] = '1';
    return bits;
}

Graph gen_random_gnp(int n, double p, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_planted_3k_clique(int n, double p, int k, uint64_t seed) {
    if (3 * k > n) throw domain_error("cannot plant a 3k-clique: 3k > n");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    std::vector<int> nodes(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) nodes[size_t(i)] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(nodes[size_t(i)], nodes[size_t(rng.next_below(uint64_t(i) + 1))]);
    nodes.resize(size_t(3 * k));
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            edges.emplace_back(nodes[a], nodes[b]);
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace cliquelab
