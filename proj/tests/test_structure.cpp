#include <set>

#include "doctest.h"
#include "json.hpp"
#include "netclique/structure.hpp"

using namespace netclique;

namespace {

FieldPtr square(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  return make_field(pp.p, 2 * pp.e);
}

FieldPtr small_field(std::uint32_t r) {
  const PrimePower pp = factor_prime_power(r);
  return make_field(pp.p, pp.e);
}

std::set<std::uint64_t> sizes(const std::vector<SizeCertificate>& cs) {
  std::set<std::uint64_t> out;
  for (const auto& c : cs) out.insert(c.clique_size());
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("lines") {
    const FieldPtr f = square(5);
    const NetSpec net = canonical_net(5, 3);
    const Graph g = build_net_graph(*f, net);
    const Clique sub = line(*f, net, 0, f->zero());
    std::vector<Vertex> expect;
    for (FieldElement s : subfield_elements(*f)) expect.push_back(s.code);
    CHECK(sub.vertices == Clique{expect}.vertices);
    for (std::uint32_t d : net.directions) {
      for (FieldElement b : {f->zero(), f->primitive(), f->from_log(7)}) {
        const Clique l = line(*f, net, d, b);
        CHECK(l.size() == 5);
        CHECK(is_maximal_clique(g, l.vertices));
      }
    }
    const Clique a = line(*f, net, 1, f->zero());
    const Clique b = line(*f, net, 1, f->from_log(2));  // beta^2 is not on beta F_5
    for (Vertex v : a.vertices) CHECK_FALSE(b.contains(v));
    CHECK_THROWS_AS(line(*f, net, 4, f->zero()), std::invalid_argument);
  }

  TEST_CASE("configurations have |A| = m - 1") {
    const FieldPtr f = square(7);
    for (std::uint32_t m = 1; m <= 7; ++m) {
      const NetSpec net = canonical_net(7, m);
      const LinePointConfig cfg = make_config(*f, net, 0, f->one(), f->from_log(3));
      CHECK(cfg.A.size() == m - 1);
      CHECK(cfg.L.size() == 7);
    }
    CHECK_THROWS_AS(make_config(*f, canonical_net(7, 2), 0, f->zero(), f->one()), std::invalid_argument);
  }

  TEST_CASE("Baker cliques in P(25) and P(49)") {
    {
      const FieldPtr f = square(5);
      const PaleyGraph pg = build_paley(*f);
      for (FieldElement x : f->elements()) {
        if (f->in_subfield(x, 1)) continue;
        const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), x);
        CHECK(cfg.A.size() == 2);
        const Clique c = baker_clique(cfg);
        CHECK(c.size() == 3);
        CHECK(is_maximal_clique(pg.graph, c.vertices));
      }
    }
    {
      const FieldPtr f = square(7);
      const PaleyGraph pg = build_paley(*f);
      for (FieldElement x : {f->primitive(), f->from_log(5), f->from_log(11)}) {
        const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), x);
        CHECK(cfg.A.size() == 3);
        const Clique c = baker_conjugate_clique(*f, cfg);
        CHECK(c.size() == 5);
        CHECK(is_maximal_clique(pg.graph, c.vertices));
      }
      const Clique shifted = line(*f, *pg.net, 0, f->primitive());
      FieldElement y = f->one();
      while (shifted.contains(y.code)) y = f->mul(y, f->primitive());
      const LinePointConfig off = make_config(*f, *pg.net, 0, f->primitive(), y);
      CHECK_THROWS_AS(baker_conjugate_clique(*f, off), std::invalid_argument);
    }
  }

  TEST_CASE("inverse companion") {
    const FieldPtr f = square(5);
    const Graph g = build_paley(*f).graph;
    CHECK(inverse_companion(*f, g, Clique{{0, 1}}) == Clique{{0, 1}});
    std::vector<Vertex> sub;
    for (FieldElement s : subfield_elements(*f)) sub.push_back(s.code);
    CHECK(inverse_companion(*f, g, Clique{sub}) == Clique{sub});
    for (const auto& c : collect_maximal_cliques(g, std::vector<Vertex>{0})) {
      const Clique inv = inverse_companion(*f, g, c);
      CHECK(inv.size() == c.size());
      CHECK(is_clique(g, inv.vertices));
    }
    CHECK_THROWS_AS(inverse_companion(*f, g, Clique{{1, 2}}), std::invalid_argument);
  }

  TEST_CASE("conic sets") {
    const FieldPtr f11 = square(11);
    const Graph g11 = build_paley(*f11).graph;
    const GoryainovSet a = goryainov_set(*f11, g11);
    CHECK(a.is_clique);
    CHECK(a.set.size() == 7);
    CHECK(a.maximal);
    CHECK(is_maximal_clique(g11, a.set.vertices));
    CHECK(a.norm_identity);

    const FieldPtr f5 = square(5);
    const Graph g5 = build_paley(*f5).graph;
    const GoryainovSet b = goryainov_set(*f5, g5);
    CHECK_FALSE(b.is_clique);
    CHECK(b.set.size() == 3);
    CHECK(is_maximal_clique(g5.complement(), b.set.vertices));
    CHECK(is_maximal_coclique(g5, b.set.vertices));
  }

  TEST_CASE("Mobius correspondence") {
    for (std::uint32_t r : {5u, 7u, 9u, 11u, 13u}) {
      const FieldPtr f = square(r);
      const Graph g = build_paley(*f).graph;
      const MobiusCheck mc = goryainov_mobius_map(*f, g);
      CHECK(mc.matches);
      CHECK(mc.zero_image_ok);
      CHECK(mc.image.size() == (r % 4 == 3 ? (r + 3) / 2 : (r + 1) / 2));
      const FieldElement eps_inv = f->inv(f->from_log((r + 1) / 2));
      CHECK(mobius_image(*f, f->one()) == eps_inv);
      CHECK(mobius_image(*f, f->zero()) == f->neg(eps_inv));
    }
  }

  TEST_CASE("closure cliques") {
    {
      const FieldPtr f = square(5);
      const PaleyGraph pg = build_paley(*f);
      const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), f->primitive());
      CHECK(cxl_closure(pg.graph, cfg) == baker_clique(cfg));
    }
    {
      const FieldPtr f = square(7);
      const PaleyGraph pg = build_paley(*f);
      // x = beta^4 has -x = x^7 and A symmetric about 0
      const FieldElement x = f->from_log(4);
      const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), x);
      const Clique c = cxl_closure(pg.graph, cfg);
      CHECK(c.size() == 5);
      CHECK(c.contains(f->neg(x).code));
    }
    const FieldPtr f = square(7);
    const LinePointConfig two = make_config(*f, canonical_net(7, 2), 0, f->zero(), f->from_log(3));
    CHECK(cxl_closure(build_net_graph(*f, two.net), two).size() == 7);
    const LinePointConfig all = make_config(*f, canonical_net(7, 8), 0, f->zero(), f->from_log(3));
    CHECK(cxl_closure(build_net_graph(*f, all.net), all).size() == 49);
  }

  TEST_CASE("unique maximal clique in P(25) for every outside point") {
    const FieldPtr f = square(5);
    const PaleyGraph pg = build_paley(*f);
    for (FieldElement x : f->elements()) {
      if (f->in_subfield(x, 1)) continue;
      const LinePointConfig cfg = make_config(*f, *pg.net, 0, f->zero(), x);
      const UniquenessReport rep = verify_unique_maximal(pg.graph, cfg);
      CHECK(rep.unique);
      CHECK(rep.maximal_cliques == 1);
    }
  }

  TEST_CASE("size candidates") {
    CHECK(sizes(cxl_size_candidates(13, 7)) == std::set<std::uint64_t>{7});
    CHECK(sizes(cxl_size_candidates(11, 7)) == std::set<std::uint64_t>{7, 11});
    CHECK(sizes(cxl_size_candidates(9, 4)) == std::set<std::uint64_t>{4, 9});
    for (const auto& c : cxl_size_candidates(9, 4)) {
      CHECK(satisfies_divisibility(9, 4, c.h, c.f));
      CHECK_FALSE(excluded_pattern(9, 4, c.h, c.f));
    }
    CHECK(excluded_pattern(9, 4, 1, 1));  // m-1 = p^f with h+1 = 2
    CHECK_THROWS_AS(cxl_size_candidates(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(cxl_size_candidates(9, 8), std::invalid_argument);
    CHECK_THROWS_AS(cxl_size_candidates(10, 4), std::invalid_argument);
  }

  TEST_CASE("admissible groups are groups") {
    const FieldPtr s = small_field(13);
    std::vector<FieldElement> A{s->zero(), s->one(), s->from_log(4), s->from_log(8)};  // {0} u <beta^4>
    const auto G = admissible_group(*s, A);
    CHECK(G.size() == 3);
    std::set<LinearMap> set(G.begin(), G.end());
    for (const auto& a : G) {
      for (const auto& b : G) {
        CHECK(set.count(LinearMap{s->mul(a.c, b.c), s->add(s->mul(a.c, b.d), a.d)}) == 1);
      }
    }
  }

  TEST_CASE("constructions realise their certificates") {
    struct Case {
      std::uint32_t r, m, h, f;
      std::uint64_t size;
      const char* recipe;
    };
    for (const Case& c : {Case{11, 7, 5, 0, 11, "orbits"}, Case{13, 7, 1, 0, 7, "sum-zero"},
                          Case{9, 4, 2, 1, 9, "subspace"}, Case{8, 5, 1, 2, 8, "subspace"}}) {
      const FieldPtr s = small_field(c.r), big = square(c.r);
      SizeCertificate cert;
      for (const auto& k : cxl_size_candidates(c.r, c.m)) {
        if (k.h == c.h && k.f == c.f) cert = k;
      }
      REQUIRE(cert.r == c.r);
      const Construction con = construct_A(*s, cert);
      CHECK(con.A.size() == c.m - 1);
      CHECK(con.recipe == c.recipe);
      CHECK(con.admissible_order == std::uint64_t{c.h} * cert.pf);
      const LinePointConfig cfg = net_for_subset(*big, *s, con.A);
      const Graph g = build_net_graph(*big, cfg.net);
      CHECK(verify_unique_maximal(g, cfg).closure.size() == c.size);
    }
    SizeCertificate bogus{9, 4, 4, 1, 3};
    CHECK_THROWS_AS(construct_A(*small_field(9), bogus), std::invalid_argument);
  }

  TEST_CASE("stabilizer structure") {
    {
      const FieldPtr f = square(5);
      const PaleyGraph pg = build_paley(*f);
      const StabilizerReport rep = verify_stabilizer_structure(*f, make_config(*f, *pg.net, 0, f->zero(), f->primitive()));
      CHECK(rep.group.size() == 1);
      CHECK(rep.clique_size == 3);
    }
    {
      const FieldPtr f = square(7);
      const PaleyGraph pg = build_paley(*f);
      const FieldElement x = f->from_log(4);
      const StabilizerReport rep = verify_stabilizer_structure(*f, make_config(*f, *pg.net, 0, f->zero(), x));
      REQUIRE(rep.group.size() == 2);
      CHECK(rep.closed);
      CHECK(rep.transitive);
      CHECK(rep.fixed_points_single_orbit);
      CHECK(rep.fixed_points_in_A);
      const LinearMap swap = rep.group[0].c == f->one() ? rep.group[1] : rep.group[0];
      CHECK(f->add(f->mul(swap.c, x), swap.d) == f->neg(x));
    }
    {
      // a line not through 0 is normalised first
      const FieldPtr f = square(7);
      const NetSpec net = make_net_spec(7, {1, 2, 5, 6});
      const LinePointConfig cfg = make_config(*f, net, 2, f->from_log(9), f->from_log(20));
      const StabilizerReport rep = verify_stabilizer_structure(*f, cfg);
      CHECK(rep.closed);
      CHECK(rep.transitive);
      CHECK(rep.translations * rep.h + 3 == rep.clique_size);
      const LinePointConfig n = normalise_config(*f, cfg);
      CHECK(n.line_direction == 0);
      CHECK(n.A.size() == cfg.A.size());
    }
  }

  TEST_CASE("C_{y,N} example") {
    const CynReport r13 = cyn_example(*square(13));
    CHECK(r13.cyn_size == 9);
    CHECK(r13.cyl_size == 13);
    CHECK(r13.clique_is_cyl);
    CHECK(r13.reflection_preserves_n0);
    CHECK(cyn_example(*square(11)).cyn_size == 7);
    CHECK_THROWS_AS(cyn_example(*square(9)), std::invalid_argument);
  }

  TEST_CASE("non-line maximum cliques") {
    const FieldPtr f = square(5);
    CHECK(search_nonline_max_cliques(*f, 3).nonline_cliques.empty());
    const NonlineResult at = search_nonline_max_cliques(*f, 4, true);
    CHECK_FALSE(at.nonline_cliques.empty());
    CHECK(at.direction_sets == 15);
    for (const auto& c : at.nonline_cliques) CHECK_FALSE(is_line(*f, c.vertices));
    for (const auto& p : agaml2_generators(*f)) {
      std::vector<Vertex> s = p;
      std::sort(s.begin(), s.end());
      for (Vertex v = 0; v < s.size(); ++v) CHECK(s[v] == v);
    }
  }

  TEST_CASE("witness documents") {
    const FieldPtr f = square(5);
    const LinePointConfig cfg = make_config(*f, canonical_net(5, 3), 0, f->zero(), f->primitive());
    const Witness w = make_witness(cfg, {1, 2, 3}, "example");
    const auto j = nlohmann::json::parse(w.to_json());
    CHECK(j["r"] == 5);
    CHECK(j["m"] == 3);
    CHECK(j["directions"] == nlohmann::json({0, 1, 2}));
    CHECK(j["L"]["dir"] == 0);
    CHECK(j["x"] == f->primitive().code);
    CHECK(j["A"].size() == 2);
    CHECK(j["clique"] == nlohmann::json({1, 2, 3}));
    CHECK(j["assertion"] == "example");
    const TheoremFalsified e(w);
    CHECK(std::string(e.what()) == "example");
  }
}
