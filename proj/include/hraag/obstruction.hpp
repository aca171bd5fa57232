#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hraag/decomposition.hpp"
#include "hraag/graph.hpp"
#include "hraag/surface.hpp"

namespace hraag {

/// Where a curve may live relative to the decomposition cut out by a C4
/// (a, b, c, d). S1 is the neighbourhood of a and c, S2 that of b and d.
enum class Region {
  INSIDE_S0,  ///< disjoint from all four: lies in S0
  AVOID_S1,   ///< disjoint from a and c, crosses b or d
  AVOID_S2,   ///< disjoint from b and d, crosses a or c
  NONE,
};

enum class PairRule { MUST_BE_DISJOINT, MUST_INTERSECT, UNCONSTRAINED };

struct PlacementProblem {
  std::vector<std::string> curves;
  std::vector<Region> regions;
  /// Symmetric; the diagonal is UNCONSTRAINED.
  std::vector<std::vector<PairRule>> pairs;

  std::size_t size() const noexcept { return curves.size(); }
  PairRule pair(std::size_t i, std::size_t j) const { return pairs.at(i).at(j); }
  void set_pair(std::size_t i, std::size_t j, PairRule r);
  std::optional<std::size_t> index_of(const std::string& curve) const;
};

/// Throws InputError when c4 is not an induced 4-cycle in that order.
PlacementProblem derive_constraints(const SimplicialGraph& target, const std::array<std::string, 4>& c4);

enum class Outcome { CONTRADICTION, NO_OBSTRUCTION };

/// Trace lines name the rule that fired. A CONTRADICTION trace ends with
/// "violated: x MUST_INTERSECT y" (or MUST_BE_DISJOINT / DISTINCT).
struct Verdict {
  Outcome outcome = Outcome::NO_OBSTRUCTION;
  std::vector<std::string> trace;
};

Verdict check_case(const PlacementProblem& p, const Decomposition& d);

/// Re-checks every step of a CONTRADICTION trace against the placement
/// semantics, using only the problem, the decomposition and the trace.
bool replay_contradiction(const PlacementProblem& p, const Decomposition& d, const Verdict& v);

enum class OverallVerdict { NOT_EMBEDDABLE, INCONCLUSIVE };

struct CaseReport {
  CaseKey key;
  std::optional<std::string> label;
  Outcome outcome = Outcome::CONTRADICTION;
  std::vector<std::string> trace;
  std::size_t decompositions = 0;
};

struct EmbeddingReport {
  std::string graph;
  HandlebodyType handlebody;
  OverallVerdict verdict = OverallVerdict::INCONCLUSIVE;
  /// Set when the verdict did not need the case walk.
  std::optional<std::string> shortcut;
  std::vector<CaseReport> cases;  ///< sorted by key

  std::vector<std::string> surviving_labels() const;
  std::vector<CaseKey> surviving_keys() const;
};

/// Runs check_case on both orientations of every decomposition of the
/// boundary. A key survives when any decomposition survives in either
/// orientation. Throws PreconditionError unless the complexity is 3, 4 or 5.
EmbeddingReport check_all_cases(const SimplicialGraph& target, const std::array<std::string, 4>& c4,
                                HandlebodyType h, unsigned workers = 0, const std::string& graph_name = "");

/// First induced 4-cycle in lexicographic vertex order, preferring a,b,c,d
/// when those labels span one.
std::optional<std::array<std::string, 4>> default_c4(const SimplicialGraph& g);

std::string to_string(Region r);
std::string to_string(PairRule r);
std::string to_string(Outcome o);
std::string to_string(OverallVerdict v);

}  // namespace hraag
