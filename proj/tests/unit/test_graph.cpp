#include "doctest.h"

#include <random>

#include "../oracles.hpp"
#include "hraag/errors.hpp"
#include "hraag/graph.hpp"

using namespace hraag;

namespace {

SimplicialGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("x" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<LabelPair> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(vs[i], vs[j]);
  return build_graph(vs, es);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("build_graph validates its input") {
  auto g = build_graph({"a", "b"}, {{"a", "b"}});
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.adjacent("a", "b"));

  CHECK_THROWS_WITH_AS(build_graph({"a"}, {{"a", "a"}}), doctest::Contains("loop"), InputError);
  CHECK_THROWS_WITH_AS(build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), doctest::Contains("edges[1]"), InputError);
  CHECK_THROWS_WITH_AS(build_graph({"a"}, {{"a", "z"}}), doctest::Contains("'z'"), InputError);
  CHECK_THROWS_WITH_AS(build_graph({"a", "a"}, {}), doctest::Contains("vertices[1]"), InputError);
}

TEST_CASE("Gamma0 from its edge list") {
  auto g = build_graph({"a", "b", "c", "d", "g", "h", "q"},
                       {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"q", "a"}, {"q", "b"},
                        {"q", "c"}, {"q", "d"}, {"g", "a"}, {"g", "c"}, {"h", "b"}, {"h", "d"}});
  CHECK(g == gamma0_graph());
  CHECK(g.size() == 12);
}

TEST_CASE("standard graphs") {
  auto c4 = standard_graph("C4");
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);

  auto g1 = standard_graph("Gamma1");
  CHECK(g1.order() == 8);
  CHECK(g1.size() == 19);
  CHECK(is_clique(g1, {g1.require_index("e"), g1.require_index("f"), g1.require_index("a"), g1.require_index("b")}));
  for (auto [u, v] : std::vector<LabelPair>{{"g", "h"}, {"g", "f"}, {"h", "e"}, {"g", "b"}, {"g", "d"}, {"h", "a"}, {"h", "c"}}) {
    CHECK_FALSE(g1.adjacent(u, v));
  }

  CHECK(standard_graph("empty(0)").empty());
  CHECK(standard_graph("K_n(4)").size() == 6);
  CHECK(standard_graph("K3") == complete_graph(3));
  CHECK(standard_graph("path(3)").size() == 2);
  CHECK_THROWS_AS(standard_graph("Gamma7"), InputError);
  CHECK_THROWS_AS(standard_graph("K_n(x)"), InputError);
}

TEST_CASE("Gamma0 is Gamma1 with e and f merged into q") {
  const auto g1 = gamma1_graph();
  std::vector<std::string> vs;
  std::vector<LabelPair> es;
  for (const auto& v : g1.vertices())
    if (v != "e" && v != "f") vs.push_back(v);
  for (const auto& [u, v] : g1.edge_labels())
    if (u != "e" && u != "f" && v != "e" && v != "f") es.emplace_back(u, v);
  vs.push_back("q");
  for (const char* x : {"a", "b", "c", "d"}) es.emplace_back("q", x);
  CHECK(build_graph(vs, es) == gamma0_graph());
}

TEST_CASE("link and star") {
  CHECK(link(gamma1_graph(), "g") == std::vector<std::string>{"a", "c", "e"});
  CHECK(link(cycle4_graph(), "a") == std::vector<std::string>{"b", "d"});
  CHECK(link(empty_graph(3), "v1").empty());
  CHECK(star(cycle4_graph(), "a") == std::vector<std::string>{"a", "b", "d"});
  CHECK_THROWS_AS(link(cycle4_graph(), "z"), InputError);
}

TEST_CASE("induced embeddings") {
  auto w = find_induced_embedding(cycle4_graph(), gamma0_graph());
  REQUIRE(w);
  CHECK(is_induced_embedding(cycle4_graph(), gamma0_graph(), *w));

  CHECK_FALSE(find_induced_embedding(complete_graph(3), cycle4_graph()));

  auto k3 = find_induced_embedding(complete_graph(3), gamma1_graph());
  REQUIRE(k3);
  CHECK(is_induced_embedding(complete_graph(3), gamma1_graph(), *k3));
  // {e,f,a} is one of the triangles.
  const auto g1 = gamma1_graph();
  CHECK(is_clique(g1, {g1.require_index("e"), g1.require_index("f"), g1.require_index("a")}));
}

TEST_CASE("induced embedding search honours its budget") {
  CHECK_THROWS_AS(find_induced_embedding(complete_graph(5), gamma1_graph(), {3}), BudgetExceeded);
  try {
    find_induced_embedding(complete_graph(5), gamma1_graph(), {3});
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes_visited() == 4);
  }
}

TEST_CASE("induced embedding search agrees with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto pattern = random_graph(rng, 1 + trial % 5, 0.5);
    auto host = random_graph(rng, 4 + trial % 6, 0.45);
    auto w = find_induced_embedding(pattern, host);
    CHECK(w.has_value() == oracle::has_induced_copy(pattern, host));
    if (w) CHECK(is_induced_embedding(pattern, host, *w));
  }
}

TEST_CASE("cliques and triangles") {
  CHECK(max_clique_size(gamma1_graph()) == 4);
  CHECK(max_clique_size(cycle4_graph()) == 2);
  CHECK(max_clique_size(gamma0_graph()) == 3);
  CHECK(max_clique_size(empty_graph(0)) == 0);
  CHECK(max_clique_size(empty_graph(3)) == 1);

  CHECK(is_triangle_free(cycle4_graph()));
  CHECK_FALSE(is_triangle_free(gamma0_graph()));
  CHECK_FALSE(is_triangle_free(gamma1_graph()));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 2 + trial % 9, 0.4);
    CHECK(max_clique_size(g) == oracle::max_clique(g));
    if (g.size() > 0) CHECK(is_triangle_free(g) == (max_clique_size(g) <= 2));
  }
}

TEST_CASE("thick stars") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto stars = has_thick_stars(complete_graph(2 * n - 1), n);
    REQUIRE(stars);
    CHECK(stars->size() == 2 * n - 1);
  }
  auto c4 = has_thick_stars(cycle4_graph(), 2);
  REQUIRE(c4);
  CHECK((*c4)[0].vertex == "a");
  CHECK(sorted((*c4)[0].clique1) == std::vector<std::string>{"a", "b"});
  CHECK(sorted((*c4)[0].clique2) == std::vector<std::string>{"a", "d"});

  CHECK_FALSE(has_thick_stars(gamma1_graph(), 4));
  CHECK(has_thick_stars(gamma1_graph(), 1));
  CHECK_THROWS_AS(has_thick_stars(cycle4_graph(), 0), PreconditionError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 1 + trial % 8, 0.6);
    const std::size_t n = 1 + trial % 3;
    auto stars = has_thick_stars(g, n);
    CHECK(stars.has_value() == oracle::thick_stars(g, n));
    if (!stars) continue;
    for (const auto& w : *stars) {
      std::vector<std::size_t> k1, k2;
      for (const auto& x : w.clique1) k1.push_back(g.require_index(x));
      for (const auto& x : w.clique2) k2.push_back(g.require_index(x));
      CHECK(k1.size() == n);
      CHECK(k2.size() == n);
      CHECK(is_clique(g, k1));
      CHECK(is_clique(g, k2));
      std::vector<std::string> common;
      std::set_intersection(w.clique1.begin(), w.clique1.end(), w.clique2.begin(), w.clique2.end(),
                            std::back_inserter(common));
      if (n > 1) CHECK(common == std::vector<std::string>{w.vertex});
    }
  }
}

TEST_CASE("induced subgraph keeps order and labels") {
  const auto g = gamma1_graph();
  auto sub = g.induced({g.require_index("a"), g.require_index("b"), g.require_index("c"), g.require_index("d")});
  CHECK(sub == cycle4_graph());
}
