#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hraag {

using LabelPair = std::pair<std::string, std::string>;

/// Finite simplicial graph with opaque string labels.
///
/// Vertices keep their declaration order; that order is the canonical total
/// order used by every search in the library (lexicographic witnesses, RAAG
/// normal forms). Instances are immutable once built.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Validating constructor. Throws InputError on duplicate labels, loops,
  /// duplicate edges, or edges naming undeclared vertices; the message names
  /// the offending item and its position.
  static SimplicialGraph build(std::vector<std::string> vertices,
                               const std::vector<LabelPair>& edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& label(std::size_t i) const { return vertices_.at(i); }

  /// Edges as index pairs, in declaration order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
    return edges_;
  }
  std::vector<LabelPair> edge_labels() const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Like index_of but throws InputError("unknown vertex ...").
  std::size_t require_index(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return adj_[u * vertices_.size() + v] != 0;
  }
  bool adjacent(std::string_view u, std::string_view v) const;
  std::size_t degree(std::size_t v) const;

  /// Subgraph induced on the given vertex indices, preserving their order.
  SimplicialGraph induced(const std::vector<std::size_t>& keep) const;

  /// Label-sensitive equality: same vertex set and same edge set.
  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b);

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::uint8_t> adj_;
};

SimplicialGraph build_graph(std::vector<std::string> vertices, const std::vector<LabelPair>& edges);

/// Built-in graphs: "C4", "Gamma0", "Gamma1", "K_n(n)" (also "K3"), "path(n)",
/// "empty(n)". Generic families use labels v1..vn. Throws InputError on an
/// unknown name or bad parameter.
SimplicialGraph standard_graph(std::string_view name);
bool is_standard_graph_name(std::string_view name);

SimplicialGraph complete_graph(std::size_t n);
SimplicialGraph path_graph(std::size_t n);
SimplicialGraph empty_graph(std::size_t n);
SimplicialGraph cycle4_graph();
SimplicialGraph gamma0_graph();
SimplicialGraph gamma1_graph();

/// Neighbours of v, in vertex order.
std::vector<std::string> link(const SimplicialGraph& g, std::string_view v);
/// link(v) together with v, in vertex order.
std::vector<std::string> star(const SimplicialGraph& g, std::string_view v);

// ---------------------------------------------------------------------------
// Induced subgraph search

/// Injective map pattern -> host with edge-iff-edge on every pair.
struct InducedEmbedding {
  /// image[i] is the host label assigned to pattern vertex i.
  std::vector<std::string> image;
};

struct SearchOptions {
  /// Abort with BudgetExceeded after visiting this many search nodes (0 = no limit).
  std::uint64_t node_budget = 0;
};

/// Exhaustive backtracking search. Returns the first witness in lexicographic
/// assignment order (pattern vertices in order, host candidates by index).
std::optional<InducedEmbedding> find_induced_embedding(const SimplicialGraph& pattern,
                                                       const SimplicialGraph& host,
                                                       SearchOptions options = {});

/// Checks the induced-embedding invariant for an explicit assignment.
bool is_induced_embedding(const SimplicialGraph& pattern, const SimplicialGraph& host,
                          const InducedEmbedding& embedding);

// ---------------------------------------------------------------------------
// Cliques

bool is_clique(const SimplicialGraph& g, const std::vector<std::size_t>& vertices);
bool is_triangle_free(const SimplicialGraph& g);
std::size_t max_clique_size(const SimplicialGraph& g);

/// v lies in two N-cliques meeting exactly in v. For N = 1 both cliques are {v}.
struct ThickStarWitness {
  std::string vertex;
  std::vector<std::string> clique1;
  std::vector<std::string> clique2;
};

/// One witness per vertex (vertex order) or nullopt if some vertex has none.
/// Throws PreconditionError for N == 0.
std::optional<std::vector<ThickStarWitness>> has_thick_stars(const SimplicialGraph& g, std::size_t n);

}  // namespace hraag
