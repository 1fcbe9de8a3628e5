#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "cliquelab/graph.hpp"
#include "cliquelab/util.hpp"

using namespace cliquelab;

namespace {

Graph triangle() { return parse_graph("n=3\n1-2 2-3 1-3\n"); }
Graph path3() { return parse_graph("n=3\n1-2 2-3\n"); }

// Independent 3k-clique check: direct scan over all (3k)-subsets.
bool subsets_have_clique(const Graph& g, int size) {
    std::vector<int> idx(static_cast<size_t>(size), 0);
    std::function<bool(int, int)> rec = [&](int pos, int from) {
        if (pos == size) {
            for (int a = 0; a < size; ++a)
                for (int b = a + 1; b < size; ++b)
                    if (!g.has_edge(idx[size_t(a)], idx[size_t(b)])) return false;
            return true;
        }
        for (int v = from; v <= g.n; ++v) {
            idx[size_t(pos)] = v;
            if (rec(pos + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(0, 1);
}

}  // namespace

TEST_CASE("parse_graph accepts edge lists and json") {
    Graph g = triangle();
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 3);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));

    Graph j = parse_graph(R"({"n": 3, "edges": [[1,2],[2,3]]})");
    CHECK(j.to_text() == path3().to_text());
}

TEST_CASE("parse_graph rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("n=3\n2-2\n"), parse_error);        // self-loop
    CHECK_THROWS_AS(parse_graph("n=3\n1-2 1-2\n"), parse_error);    // duplicate
    CHECK_THROWS_AS(parse_graph("n=3\n1-4\n"), parse_error);        // out of range
    CHECK_THROWS_AS(parse_graph("n=3\n0-1\n"), parse_error);        // id 0 reserved
    CHECK_THROWS_AS(parse_graph("1-2\n"), parse_error);             // missing header
}

TEST_CASE("graph text round-trips and comments are ignored") {
    Graph g = parse_graph("# a triangle\nn=3\n1-2 2-3\n1-3 # last\n");
    CHECK(parse_graph(g.to_text()).to_text() == g.to_text());
    CHECK(g.digest() == triangle().digest());
}

TEST_CASE("enumerate_k_cliques basics") {
    Graph k4 = parse_graph("n=4\n1-2 1-3 1-4 2-3 2-4 3-4\n");
    CHECK(enumerate_k_cliques(k4, 2).size() == 6);
    auto singles = enumerate_k_cliques(triangle(), 1);
    REQUIRE(singles.size() == 3);
    CHECK(singles[0] == Clique{1});
    CHECK(singles[2] == Clique{3});
    CHECK(enumerate_k_cliques(path3(), 3).empty());
    CHECK(enumerate_k_cliques(path3(), 5).empty());  // k > n is empty, not an error
}

TEST_CASE("enumerate_k_cliques is lexicographic, duplicate-free, pairwise adjacent") {
    Graph g = gen_random_gnp(7, 0.6, 42);
    for (int k = 1; k <= 3; ++k) {
        auto cliques = enumerate_k_cliques(g, k);
        std::set<Clique> seen;
        Clique prev;
        for (const auto& c : cliques) {
            REQUIRE(int(c.size()) == k);
            CHECK(seen.insert(c).second);
            if (!prev.empty()) CHECK(prev < c);
            prev = c;
            for (size_t a = 0; a < c.size(); ++a)
                for (size_t b = a + 1; b < c.size(); ++b) CHECK(g.has_edge(c[a], c[b]));
        }
    }
}

TEST_CASE("has_3k_clique matches direct subset search") {
    CHECK(has_3k_clique(triangle(), 1));
    CHECK_FALSE(has_3k_clique(path3(), 1));

    // K6 minus one edge has no 6-clique
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            if (!(u == 1 && v == 2)) edges.emplace_back(u, v);
    Graph k6_minus = Graph::from_edges(6, edges);
    CHECK_FALSE(has_3k_clique(k6_minus, 2));
    CHECK(subsets_have_clique(k6_minus, 6) == has_3k_clique(k6_minus, 2));

    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_random_gnp(8, 0.55, seed);
        for (int k = 1; k <= 2; ++k)
            CHECK(has_3k_clique(g, k) == subsets_have_clique(g, 3 * k));
    }
}

TEST_CASE("node encoding width and values") {
    CHECK(encoding_width(1) == 2);
    CHECK(encoding_width(3) == 4);
    CHECK(encode_node(3, 3) == "0011");
    CHECK(encode_node(1, 1) == "01");
    CHECK_THROWS_AS(encode_node(5, 4), domain_error);
    CHECK_THROWS_AS(encode_node(0, 4), domain_error);
}

TEST_CASE("node encoding is injective and never all-zeros") {
    for (int n : {1, 2, 3, 4, 7, 8, 13}) {
        std::set<std::string> seen;
        for (int v = 1; v <= n; ++v) {
            std::string bits = encode_node(v, n);
            CHECK(int(bits.size()) == encoding_width(n));
            CHECK(bits.find('1') != std::string::npos);
            CHECK(seen.insert(bits).second);
        }
    }
}

TEST_CASE("gnp generator endpoints and determinism") {
    Graph empty = gen_random_gnp(5, 0.0, 9);
    CHECK(empty.edges.empty());
    Graph full = gen_random_gnp(5, 1.0, 9);
    CHECK(full.edges.size() == 10);
    CHECK(gen_random_gnp(6, 0.5, 7).to_text() == gen_random_gnp(6, 0.5, 7).to_text());
}

TEST_CASE("planted generator guarantees a 3k-clique") {
    Graph g = gen_planted_3k_clique(6, 0.0, 1, 7);
    CHECK(has_3k_clique(g, 1));
    CHECK(enumerate_k_cliques(g, 3).size() == 1);  // p=0 leaves exactly the planted triangle
    for (uint64_t seed = 0; seed < 10; ++seed)
        CHECK(has_3k_clique(gen_planted_3k_clique(7, 0.4, 2, seed), 2));
}
