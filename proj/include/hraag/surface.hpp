#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hraag {

/// S_{g,n}: closed orientable surface of genus g with n marked points.
struct SurfaceType {
  int genus = 0;
  int marks = 0;

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

/// H_{g,n}; its boundary is the SurfaceType with the same (g, n).
struct HandlebodyType {
  int genus = 0;
  int marks = 0;

  SurfaceType boundary() const noexcept { return {genus, marks}; }
  friend auto operator<=>(const HandlebodyType&, const HandlebodyType&) = default;
};

enum class DiskCountClass { NONE, UNIQUE, INFINITE };
enum class Mode { HANDLEBODY, SURFACE };

/// max(3g - 3 + n, 0)
int complexity(SurfaceType t) noexcept;
int complexity(HandlebodyType t) noexcept;

/// All types of the given complexity with genus <= cap_genus, sorted by
/// genus. Throws PreconditionError on negative arguments.
std::vector<SurfaceType> surfaces_with_complexity(int xi, int cap_genus);

DiskCountClass disk_count_class(HandlebodyType h) noexcept;

/// Whether a side piece of a C4 decomposition can carry the two disjoint
/// curves it needs. In HANDLEBODY mode a one-holed torus only has one disk.
bool admits_two_disjoint_disks(SurfaceType piece, Mode mode) noexcept;

std::string to_string(SurfaceType t);
std::string to_string(DiskCountClass c);
std::string to_string(Mode m);
/// Accepts "handlebody" or "surface" (case-insensitive); throws InputError.
Mode parse_mode(const std::string& text);
/// Parses "g,n"; throws InputError.
HandlebodyType parse_handlebody(const std::string& text);

}  // namespace hraag
