#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hraag/surface.hpp"

namespace hraag {

/// One side of the decomposition: a regular neighbourhood of a pair of
/// opposite C4 curves, completed by whatever it swallows.
struct SidePiece {
  int genus = 0;
  int circles = 0;    ///< boundary circles shared with S0
  int punctures = 0;  ///< marked points of the ambient surface inside

  SurfaceType type() const noexcept { return {genus, circles + punctures}; }
  friend auto operator<=>(const SidePiece&, const SidePiece&) = default;
};

/// A connected component of S0, the complement of the two side pieces.
struct S0Component {
  int genus = 0;
  int circles_to_s1 = 0;
  int circles_to_s2 = 0;
  int punctures = 0;

  int circles() const noexcept { return circles_to_s1 + circles_to_s2; }
  SurfaceType type() const noexcept { return {genus, circles() + punctures}; }
  bool is_annulus() const noexcept { return genus == 0 && punctures == 0 && circles() == 2; }
  S0Component swapped() const noexcept { return {genus, circles_to_s2, circles_to_s1, punctures}; }

  friend auto operator<=>(const S0Component&, const S0Component&) = default;
};

struct Decomposition {
  SurfaceType ambient;
  SidePiece s1;
  SidePiece s2;
  std::vector<S0Component> s0;  ///< kept sorted

  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

/// First violated structural invariant, or nullopt. The xi identity is
/// checked separately.
std::optional<std::string> validate(const Decomposition& d);

/// First Betti number of the attachment multigraph (nodes S1, S2 and the S0
/// components; one edge per circle).
int attachment_betti(const Decomposition& d);
/// Free isotopy classes of attachment circles: an annulus counts once.
int alpha(const Decomposition& d);
bool verify_xi_identity(const Decomposition& d);

/// Same decomposition with S1 and S2 exchanged (components re-sorted).
Decomposition swapped(const Decomposition& d);
/// Lesser of d and swapped(d), with sorted components.
Decomposition canonical(Decomposition d);

struct CaseKeyPart {
  int genus = 0;
  int marks = 0;
  int c1 = 0;
  int c2 = 0;

  friend auto operator<=>(const CaseKeyPart&, const CaseKeyPart&) = default;
};

/// Multiset of component types with their attachment split, up to the S1/S2
/// swap. Side piece types and puncture placement are forgotten.
struct CaseKey {
  std::vector<CaseKeyPart> parts;

  /// e.g. "S0,2:1/1 + S0,3:2/0"
  std::string to_string() const;
  friend auto operator<=>(const CaseKey&, const CaseKey&) = default;
};

/// Normalizes arbitrary parts into a key.
CaseKey make_case_key(std::vector<CaseKeyPart> parts);
CaseKey case_key(const Decomposition& d);
/// Inverse of CaseKey::to_string; throws InputError.
CaseKey parse_case_key(const std::string& text);

/// All decompositions of the ambient surface, canonical and sorted. Empty
/// when the complexity is below 3.
std::vector<Decomposition> enumerate_decompositions(SurfaceType ambient, Mode mode, unsigned workers = 0);

struct CatalogEntry {
  CaseKey key;
  std::optional<std::string> label;
  std::vector<SurfaceType> ambients;
  Decomposition representative;
  std::size_t decompositions = 0;
};

/// Groups every decomposition of every ambient of complexity xi by key.
/// Sorted by key. Throws PreconditionError when xi < 3.
std::vector<CatalogEntry> case_catalog(int xi, Mode mode, unsigned workers = 0);

/// Case number for a key ("(8)", "(2)'"); several keys may share a number.
std::optional<std::string> case_label(const CaseKey& key, int xi);
/// Every label the table knows for this complexity, in table order.
std::vector<std::string> case_labels(int xi);
/// Keys carrying the label, sorted.
std::vector<CaseKey> keys_for_label(const std::string& label, int xi);

}  // namespace hraag
