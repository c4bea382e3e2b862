#include <sstream>

#include "doctest.h"
#include "netclique/netgraph.hpp"

using namespace netclique;

namespace {

FieldPtr square(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  return make_field(pp.p, 2 * pp.e);
}

}  // namespace

TEST_SUITE("netgraph") {
  TEST_CASE("net graphs are strongly regular with the net parameters") {
    for (std::uint32_t r : {2u, 3u, 4u, 5u, 7u}) {
      const FieldPtr f = square(r);
      for (std::uint32_t m = 1; m <= r; ++m) {
        const Graph g = build_net_graph(*f, canonical_net(r, m));
        const SrgCheck chk = check_srg(g);
        REQUIRE(chk.ok());
        const std::size_t n = r;
        CHECK(chk.params.v == n * n);
        CHECK(chk.params.k == m * (n - 1));
        CHECK(chk.params.lambda == (n - 2) + (m - 1) * (m - 2));
        CHECK(chk.params.mu == m * (m - 1));
        CHECK(net_srg_params(r, m) == chk.params);
      }
      CHECK(check_srg(build_net_graph(*f, canonical_net(r, r + 1))).kind == SrgCheck::Kind::complete);
    }
  }

  TEST_CASE("adjacency is the coset class of the difference") {
    const FieldPtr f = square(5);
    const NetSpec net = make_net_spec(5, {1, 4});
    const Graph g = build_net_graph(*f, net);
    for (FieldElement u : f->elements()) {
      for (FieldElement v : f->elements()) {
        if (u == v) continue;
        CHECK(g.adjacent(u.code, v.code) == net.has_direction(direction_class(*f, f->sub(u, v))));
      }
    }
  }

  TEST_CASE("net spec validation") {
    CHECK_THROWS(make_net_spec(5, {6}));
    CHECK_THROWS(make_net_spec(5, {1, 1}));
    CHECK(make_net_spec(5, {3, 0}).directions == std::vector<std::uint32_t>{0, 3});
  }

  TEST_CASE("Paley graph P(q)") {
    for (std::uint32_t q : {5u, 9u, 13u, 25u, 49u}) {
      const PrimePower pp = factor_prime_power(q);
      const FieldPtr f = make_field(pp.p, pp.e);
      const PaleyGraph pg = build_paley(*f);
      const SrgCheck chk = check_srg(pg.graph);
      REQUIRE(chk.ok());
      CHECK(chk.params.k == (q - 1) / 2);
      CHECK(chk.params.lambda == (q - 5) / 4);
      CHECK(chk.params.mu == (q - 1) / 4);
      CHECK(pg.net.has_value() == (pp.e % 2 == 0));
      if (pg.net) {
        CHECK(pg.net->m() == (subfield_order(*f) + 1) / 2);
        CHECK(build_net_graph(*f, *pg.net) == pg.graph);
      }
      // self-complementary: x -> beta x swaps edges and non-edges
      for (Vertex v = 1; v < q; ++v) {
        const Vertex w = f->mul(FieldElement{v}, f->primitive()).code;
        CHECK(pg.graph.adjacent(0, v) != pg.graph.adjacent(0, w));
      }
    }
    CHECK_THROWS(build_paley(*make_field(7, 1)));
  }

  TEST_CASE("Peisert graph") {
    for (std::uint32_t r : {3u, 7u, 9u}) {
      const FieldPtr f = square(r);
      const Graph g = build_peisert(*f);
      const SrgCheck chk = check_srg(g);
      REQUIRE(chk.ok());
      CHECK(chk.params.k == (f->q() - 1) / 2);
      for (Vertex v = 1; v < f->q(); ++v) {
        const std::uint32_t l = f->log(FieldElement{v}) % 4;
        CHECK(g.adjacent(0, v) == (l == 0 || l == 1));
      }
      const auto net = peisert_as_net(*f);
      CHECK(net.has_value() == (r % 4 == 3));
      if (net) CHECK(build_net_graph(*f, *net) == g);
    }
    CHECK_THROWS(build_peisert(*make_field(5, 2)));
  }

  TEST_CASE("Taylor double cover is antipodal distance-regular") {
    for (std::uint32_t r : {3u, 5u}) {
      const FieldPtr f = square(r);
      const Graph gamma = build_paley(*f).graph;
      const Graph t = build_taylor(gamma);
      const std::size_t v = gamma.size(), k = gamma.degree(0);
      CHECK(t.size() == 2 * v + 2);
      const auto ia = intersection_array(t);
      REQUIRE(ia.has_value());
      CHECK(ia->b == std::vector<std::size_t>{v, v - k - 1, 1});
      CHECK(ia->c == std::vector<std::size_t>{1, v - k - 1, v});
      CHECK(t.adjacent(taylor::kInfPlus, taylor::plus(v, 0)));
      CHECK(t.adjacent(taylor::kInfMinus, taylor::minus(v, 0)));
      CHECK_FALSE(t.adjacent(taylor::kInfPlus, taylor::kInfMinus));
    }
    CHECK_THROWS(build_taylor(build_net_graph(*square(4), canonical_net(4, 2))));
  }

  TEST_CASE("intersection array rejects graphs that are not distance-regular") {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 3);
    CHECK_FALSE(intersection_array(std::move(b).build()).has_value());
  }

  TEST_CASE("edge-list round trip and parse errors") {
    const Graph g = build_paley(*square(3)).graph;
    std::stringstream ss;
    export_graph(g, ss);
    std::stringstream in(ss.str());
    CHECK(ingest_graph(in) == g);

    std::stringstream comments("# header\n3\n\n0 1 # not allowed\n");
    CHECK_THROWS_AS(ingest_graph(comments), ParseError);
    std::stringstream bad("3\n0 1\n1 x\n");
    try {
      ingest_graph(bad);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::stringstream range("3\n0 3\n");
    CHECK_THROWS_AS(ingest_graph(range), ParseError);
    std::stringstream loop("3\n1 1\n");
    CHECK_THROWS_AS(ingest_graph(loop), ParseError);
    std::stringstream empty("# nothing\n");
    CHECK_THROWS_AS(ingest_graph(empty), ParseError);
  }
}
