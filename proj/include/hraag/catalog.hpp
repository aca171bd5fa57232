#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hraag/graph.hpp"
#include "hraag/surface.hpp"

namespace hraag {

/// A labelled disk system in a handlebody with its pairwise intersection
/// pattern. Only zero versus nonzero entries matter.
struct CurveCertificate {
  std::string name;
  HandlebodyType handlebody;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> intersections;
  /// Trusted flag: the drawn curves bound no bigons.
  bool minimal_position = true;
};

/// Throws InputError on asymmetry, a nonzero diagonal, negative entries or
/// mismatched dimensions.
void validate_certificate(const CurveCertificate& c);

/// Vertices are the labels; an edge joins disjoint curves.
SimplicialGraph induced_graph_of_certificate(const CurveCertificate& c);

/// FIG3_H07, FIG3_H15, FIG3_H23 (Gamma1) and FIG7_H08 (Gamma0).
std::vector<std::string> builtin_certificate_names();
bool is_builtin_certificate(const std::string& name);
/// Throws InputError for an unknown name.
CurveCertificate builtin_certificate(const std::string& name);
/// Name of the standard graph a built-in certificate realizes.
std::string builtin_certificate_target(const std::string& name);

struct CertificateCheck {
  bool ok = false;
  bool label_preserving = false;
  /// Label-preserving mode: pairs whose adjacency differs.
  std::vector<LabelPair> mismatches;
  /// Isomorphism mode: image of each target vertex among certificate labels.
  std::optional<InducedEmbedding> isomorphism;
  std::string reason;
};

CertificateCheck verify_certificate(const CurveCertificate& c, const SimplicialGraph& target);

struct Gamma1Decision {
  bool embeds = false;
  std::vector<std::string> justification;
};

/// Whether Gamma1 is an induced subgraph of the disk graph of h.
Gamma1Decision gamma1_embeddability(HandlebodyType h);

enum class SmallDecision { EMBEDS, NOT_EMBEDS, NECESSARY_FAIL, UNKNOWN };
std::string to_string(SmallDecision d);

/// Exact for complexity <= 1; only a necessary test at complexity 2.
/// Throws PreconditionError above 2.
SmallDecision small_complexity_decision(const SimplicialGraph& g, HandlebodyType h);

/// Vertices sent to multi-disk twists, described by their supports.
struct StandardEmbeddingData {
  SimplicialGraph graph;
  std::map<std::string, std::vector<std::string>> supports;
  /// Unordered pairs of distinct disks that are disjoint.
  std::vector<LabelPair> disjoint_pairs;
};

/// First violated invariant, or nullopt.
std::optional<std::string> validate(const StandardEmbeddingData& data);

struct ReductionResult {
  /// Vertex to its single disk, on success.
  std::optional<std::map<std::string, std::string>> assignment;
  std::optional<std::string> failure;
};

/// Reduces a standard embedding of a graph with N-thick stars to a map into
/// the disk graph. Throws PreconditionError when the data is invalid or the
/// graph lacks N-thick stars.
ReductionResult standard_embedding_reduction(const StandardEmbeddingData& data, std::size_t n);

struct TwistRow {
  std::string u;
  std::string v;
  std::string disk_u;
  std::string disk_v;
};

struct TwistSpec {
  /// (vertex, "delta(<disk>)^N") in vertex order.
  std::vector<std::pair<std::string, std::string>> assignments;
  /// Edges: the disks are disjoint so the twists commute.
  std::vector<TwistRow> commuting;
  /// Non-edges: the disks intersect.
  std::vector<TwistRow> intersecting;
};

/// Throws VerificationError when the certificate does not realize g.
TwistSpec twist_embedding_spec(const SimplicialGraph& g, const CurveCertificate& c);

}  // namespace hraag
