#include <random>

#include "doctest.h"
#include "netclique/graph.hpp"
#include "oracles.hpp"

using namespace netclique;

TEST_SUITE("graph") {
  TEST_CASE("builder produces a symmetric loopless graph") {
    GraphBuilder b(70);
    b.add_edge(0, 69);
    b.add_edge(3, 64);
    b.add_edge(64, 3);
    CHECK(b.has_edge(69, 0));
    const Graph g = std::move(b).build();
    CHECK(g.size() == 70);
    CHECK(g.words() == 2);
    CHECK(g.adjacent(0, 69));
    CHECK(g.adjacent(69, 0));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.neighbors(64) == std::vector<Vertex>{3});
  }

  TEST_CASE("self loops and out-of-range edges are rejected") {
    GraphBuilder b(4);
    CHECK_THROWS(b.add_edge(2, 2));
    CHECK_THROWS(b.add_edge(0, 4));
  }

  TEST_CASE("complement and edge list") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      const Graph g = oracle::random_graph(1 + t % 13, 0.4, rng);
      const Graph c = g.complement();
      CHECK(g.edge_count() + c.edge_count() == g.size() * (g.size() - 1) / 2);
      for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = 0; v < g.size(); ++v) {
          if (u != v) CHECK(g.adjacent(u, v) != c.adjacent(u, v));
        }
        CHECK_FALSE(c.adjacent(u, u));
      }
      CHECK(c.complement() == g);
      CHECK(g.edges().size() == g.edge_count());
    }
  }

  TEST_CASE("bit helpers") {
    std::vector<Word> row(3, 0);
    set_bit(row, 0);
    set_bit(row, 64);
    set_bit(row, 130);
    CHECK(popcount(row) == 3);
    clear_bit(row, 64);
    CHECK_FALSE(test_bit(row, 64));
    std::vector<Vertex> seen;
    for_each_bit(row, [&](Vertex v) { seen.push_back(v); });
    CHECK(seen == std::vector<Vertex>{0, 130});
    std::vector<Word> other(3, ~Word{0});
    CHECK(and_popcount(row, other) == 2);
    CHECK(any_bit(row));
  }
}
