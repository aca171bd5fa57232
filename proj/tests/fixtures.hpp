#pragma once

// Shared fixtures for unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "hraag/catalog.hpp"
#include "hraag/graph.hpp"

namespace fixtures {

struct SmallCase {
  std::string name;
  hraag::SimplicialGraph graph;
  hraag::HandlebodyType handlebody;
  hraag::SmallDecision expected;
};

/// Verdicts of the complexity <= 2 classification.
inline std::vector<SmallCase> small_cases() {
  using hraag::SmallDecision;
  auto k2 = hraag::complete_graph(2);
  auto one = hraag::complete_graph(1);
  auto none = hraag::empty_graph(0);
  auto two = hraag::empty_graph(2);
  auto path = hraag::path_graph(3);
  return {
      {"empty graph in H0,3", none, {0, 3}, SmallDecision::EMBEDS},
      {"vertex in H0,2", one, {0, 2}, SmallDecision::NOT_EMBEDS},
      {"vertex in H1,0", one, {1, 0}, SmallDecision::EMBEDS},
      {"two vertices in H1,0", two, {1, 0}, SmallDecision::NOT_EMBEDS},
      {"vertex in H1,1", one, {1, 1}, SmallDecision::EMBEDS},
      {"edge in H1,1", k2, {1, 1}, SmallDecision::NOT_EMBEDS},
      {"edgeless graph in H0,4", hraag::empty_graph(5), {0, 4}, SmallDecision::EMBEDS},
      {"edge in H0,4", k2, {0, 4}, SmallDecision::NOT_EMBEDS},
      {"path in H0,4", path, {0, 4}, SmallDecision::NOT_EMBEDS},
      {"triangle in H0,5", hraag::complete_graph(3), {0, 5}, SmallDecision::NECESSARY_FAIL},
      {"C4 in H1,2", hraag::cycle4_graph(), {1, 2}, SmallDecision::UNKNOWN},
      {"Gamma0 in H1,2", hraag::gamma0_graph(), {1, 2}, SmallDecision::NECESSARY_FAIL},
  };
}

/// A random instance that passes validate() and has n-thick stars.
inline hraag::StandardEmbeddingData random_embedding_data(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const std::size_t order = 2 + rng() % 4;
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < order; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<hraag::LabelPair> es;
    std::bernoulli_distribution dense(0.75);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = i + 1; j < order; ++j)
        if (dense(rng)) es.emplace_back(vs[i], vs[j]);
    auto g = hraag::build_graph(vs, es);
    if (!hraag::has_thick_stars(g, n)) continue;

    const std::size_t disks = order + rng() % 3;
    std::vector<std::string> ds;
    for (std::size_t i = 0; i < disks; ++i) ds.push_back("D" + std::to_string(i));
    std::vector<hraag::LabelPair> disjoint;
    std::bernoulli_distribution link(0.7);
    for (std::size_t i = 0; i < disks; ++i)
      for (std::size_t j = i + 1; j < disks; ++j)
        if (link(rng)) disjoint.emplace_back(ds[i], ds[j]);

    hraag::StandardEmbeddingData data{g, {}, disjoint};
    std::bernoulli_distribution wide(0.2);
    for (const auto& v : vs) {
      std::vector<std::string> s{ds[rng() % disks]};
      if (wide(rng)) {
        const auto& extra = ds[rng() % disks];
        if (extra != s.front()) s.push_back(extra);
      }
      data.supports[v] = s;
    }
    if (!hraag::validate(data)) return data;
  }
}

}  // namespace fixtures
