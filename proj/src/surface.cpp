#include "hraag/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hraag/errors.hpp"

namespace hraag {

int complexity(SurfaceType t) noexcept { return std::max(3 * t.genus - 3 + t.marks, 0); }
int complexity(HandlebodyType t) noexcept { return complexity(t.boundary()); }

std::vector<SurfaceType> surfaces_with_complexity(int xi, int cap_genus) {
  if (xi < 0 || cap_genus < 0) throw PreconditionError("complexity and genus cap must be nonnegative");
  std::vector<SurfaceType> out;
  for (int g = 0; g <= cap_genus; ++g) {
    if (xi > 0) {
      const int n = xi + 3 - 3 * g;
      if (n >= 0) out.push_back({g, n});
      continue;
    }
    // Complexity zero: every n with 3g - 3 + n <= 0.
    for (int n = 0; 3 * g - 3 + n <= 0; ++n) out.push_back({g, n});
  }
  return out;
}

DiskCountClass disk_count_class(HandlebodyType h) noexcept {
  if (h.genus == 0 && h.marks <= 3) return DiskCountClass::NONE;
  if (h.genus == 1 && h.marks <= 1) return DiskCountClass::UNIQUE;
  return DiskCountClass::INFINITE;
}

bool admits_two_disjoint_disks(SurfaceType piece, Mode mode) noexcept {
  const int xi = complexity(piece);
  if (xi == 0) return false;
  if (xi >= 2) return true;
  if (piece == SurfaceType{0, 4}) return true;
  return mode == Mode::SURFACE && piece == SurfaceType{1, 1};
}

std::string to_string(SurfaceType t) { return "S" + std::to_string(t.genus) + "," + std::to_string(t.marks); }

std::string to_string(DiskCountClass c) {
  switch (c) {
    case DiskCountClass::NONE: return "NONE";
    case DiskCountClass::UNIQUE: return "UNIQUE";
    case DiskCountClass::INFINITE: return "INFINITE";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::HANDLEBODY ? "handlebody" : "surface"; }

Mode parse_mode(const std::string& text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "handlebody") return Mode::HANDLEBODY;
  if (lower == "surface") return Mode::SURFACE;
  throw InputError("unknown mode '" + text + "' (expected handlebody or surface)");
}

HandlebodyType parse_handlebody(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view s) {
    int v = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
      throw InputError("bad handlebody '" + text + "' (expected g,n with nonnegative integers)");
    }
    return v;
  };
  if (comma == std::string::npos) throw InputError("bad handlebody '" + text + "' (expected g,n)");
  std::string_view all(text);
  return {number(all.substr(0, comma)), number(all.substr(comma + 1))};
}

}  // namespace hraag
