#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cliquelab {

// Undirected simple graph, 1-based node ids. Id 0 is reserved: the Dyck
// reduction uses the all-zeros word as a guaranteed non-node encoding.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[size_t(v)]; }
    int degree(int v) const { return int(adj_[size_t(v)].size()); }

    // Canonical file form: "n=<n>" then one "u-v" line per edge, sorted.
    std::string to_text() const;
    std::string digest() const;

  private:
    std::vector<std::vector<int>> adj_;  // ascending per node
};

// Accepts the edge-list format ("n=<int>" header, "u-v" lines, '#' comments)
// or a JSON document {"n": ..., "edges": [[u,v], ...]}.
Graph parse_graph(const std::string& text);

using Clique = std::vector<int>;  // sorted node ids

// All k-cliques in lexicographic order of their sorted node lists.
// k > n yields an empty list.
std::vector<Clique> enumerate_k_cliques(const Graph& g, int k);

bool has_3k_clique(const Graph& g, int k);

// Fixed-width binary encoding of a node id. Width L(n) = 2*ceil(log2(n+1)),
// so the all-zeros word never encodes a node.
int encoding_width(int n);
std::string encode_node(int v, int n);

Graph gen_random_gnp(int n, double p, uint64_t seed);
Graph gen_planted_3k_clique(int n, double p, int k, uint64_t seed);

}  // namespace cliquelab
