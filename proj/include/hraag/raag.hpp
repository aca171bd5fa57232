#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hraag/graph.hpp"

namespace hraag {

/// A signed generator. Letters are totally ordered by (generator index, sign)
/// with the positive letter first.
struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  std::uint32_t code() const noexcept { return gen * 2 + (inverse ? 1 : 0); }
  Letter inverted() const noexcept { return {gen, !inverse}; }

  friend bool operator==(Letter a, Letter b) noexcept { return a.code() == b.code(); }
  friend bool operator<(Letter a, Letter b) noexcept { return a.code() < b.code(); }
};

struct RaagWord {
  std::vector<Letter> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const RaagWord&, const RaagWord&) = default;
};

/// Shortest, lexicographically least representative of a group element.
struct NormalForm {
  std::vector<Letter> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }
  RaagWord word() const { return {letters}; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// A(G): generators are the vertices of G, and two generators commute exactly
/// when they span an edge.
class RaagPresentation {
 public:
  explicit RaagPresentation(SimplicialGraph graph) : graph_(std::move(graph)) {}

  const SimplicialGraph& graph() const noexcept { return graph_; }
  std::size_t rank() const noexcept { return graph_.order(); }
  const std::string& name(std::uint32_t gen) const { return graph_.label(gen); }

  /// True when the two generators are equal or adjacent.
  bool commute(std::uint32_t x, std::uint32_t y) const noexcept {
    return x == y || graph_.adjacent(x, y);
  }

 private:
  SimplicialGraph graph_;
};

/// Parses whitespace separated tokens "a" and "a^-1". The empty string and
/// "1" denote the identity. Throws InputError on unknown generators.
RaagWord parse_word(const RaagPresentation& p, std::string_view text);
std::string format_word(const RaagPresentation& p, const std::vector<Letter>& letters);
inline std::string format_word(const RaagPresentation& p, const RaagWord& w) {
  return format_word(p, w.letters);
}

RaagWord inverse(const RaagWord& w);
RaagWord concat(const RaagWord& u, const RaagWord& v);
/// u v u^-1 v^-1
RaagWord commutator(const RaagWord& u, const RaagWord& v);

/// Freely reduced under commutation, not yet canonically ordered.
std::vector<Letter> reduce(const RaagPresentation& p, const std::vector<Letter>& letters);
NormalForm normal_form(const RaagPresentation& p, const RaagWord& w);
bool is_identity(const RaagPresentation& p, const RaagWord& w);
bool is_normal_form(const RaagPresentation& p, const std::vector<Letter>& letters);

struct RaagHom {
  RaagPresentation source;
  RaagPresentation target;
  /// images[i] is the image of source generator i.
  std::vector<RaagWord> images;
};

struct HomVerification {
  std::optional<RaagHom> hom;
  /// First source edge (declaration order) whose commutator does not die.
  std::optional<LabelPair> failed_relator;
  /// Normal form of the failing relator's image.
  std::string failed_image;

  bool valid() const noexcept { return hom.has_value(); }
};

/// Checks that every commuting relation of the source maps to the identity.
/// Throws InputError when a source generator has no image.
HomVerification verify_hom(const RaagPresentation& source, const RaagPresentation& target,
                           const std::map<std::string, RaagWord>& images);

/// Concatenation of images, unreduced.
RaagWord apply_hom(const RaagHom& h, const RaagWord& w);

struct KernelSearchOptions {
  /// Abort with BudgetExceeded after this many normal forms (0 = no limit).
  std::uint64_t node_budget = 0;
  unsigned workers = 0;
};

struct KernelSearchResult {
  /// Least nontrivial normal form (by length, then lexicographically) whose
  /// image is trivial.
  std::optional<RaagWord> witness;
  std::uint64_t normal_forms_checked = 0;
};

/// Throws PreconditionError when max_len == 0.
KernelSearchResult kernel_ball_search(const RaagHom& h, std::size_t max_len,
                                      KernelSearchOptions options = {});

}  // namespace hraag
