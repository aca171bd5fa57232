#include "hraag/decomposition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hraag/errors.hpp"
#include "hraag/parallel.hpp"

namespace hraag {

namespace {

bool attachment_connected(const Decomposition& d) {
  // Components only touch S1 and S2, so the graph is connected iff each
  // component is attached and one of them touches both sides.
  for (const auto& c : d.s0) {
    if (c.circles() == 0) return false;
  }
  return std::any_of(d.s0.begin(), d.s0.end(),
                     [](const S0Component& c) { return c.circles_to_s1 > 0 && c.circles_to_s2 > 0; });
}

int euler(SurfaceType t) { return 2 - 2 * t.genus - t.marks; }

}  // namespace

int attachment_betti(const Decomposition& d) {
  int edges = 0;
  for (const auto& c : d.s0) edges += c.circles();
  const int nodes = 2 + static_cast<int>(d.s0.size());
  return edges - nodes + 1;
}

int alpha(const Decomposition& d) {
  int total = 0;
  for (const auto& c : d.s0) total += c.is_annulus() ? 1 : c.circles();
  return total;
}

std::optional<std::string> validate(const Decomposition& d) {
  const auto& a = d.ambient;
  if (a.genus < 0 || a.marks < 0) return "ambient type has a negative entry";
  for (const auto* s : {&d.s1, &d.s2}) {
    if (s->genus < 0 || s->circles < 0 || s->punctures < 0) return "side piece has a negative entry";
  }
  if (d.s0.empty()) return "S0 has no components";
  int b1 = 0, b2 = 0, punct = d.s1.punctures + d.s2.punctures, genus = d.s1.genus + d.s2.genus;
  for (std::size_t i = 0; i < d.s0.size(); ++i) {
    const auto& c = d.s0[i];
    const std::string where = "component " + std::to_string(i);
    if (c.genus < 0 || c.circles_to_s1 < 0 || c.circles_to_s2 < 0 || c.punctures < 0) {
      return where + " has a negative entry";
    }
    if (c.circles() == 0) return where + " is not attached to S1 or S2";
    if (c.genus == 0 && c.circles() == 1 && c.punctures <= 1) return where + " bounds a disk or a once-marked disk";
    b1 += c.circles_to_s1;
    b2 += c.circles_to_s2;
    punct += c.punctures;
    genus += c.genus;
  }
  if (b1 != d.s1.circles) return "circles attached to S1 do not balance";
  if (b2 != d.s2.circles) return "circles attached to S2 do not balance";
  if (punct != a.marks) return "marked points do not balance";
  if (!attachment_connected(d)) return "attachment graph is disconnected";
  if (genus + attachment_betti(d) != a.genus) return "genus does not balance";
  int chi = euler(d.s1.type()) + euler(d.s2.type());
  for (const auto& c : d.s0) chi += euler(c.type());
  if (chi != euler(a)) return "Euler characteristic does not balance";
  return std::nullopt;
}

bool verify_xi_identity(const Decomposition& d) {
  int rhs = complexity(d.s1.type()) + complexity(d.s2.type()) + alpha(d);
  for (const auto& c : d.s0) rhs += complexity(c.type());
  return complexity(d.ambient) == rhs;
}

Decomposition swapped(const Decomposition& d) {
  Decomposition out{d.ambient, d.s2, d.s1, {}};
  out.s0.reserve(d.s0.size());
  for (const auto& c : d.s0) out.s0.push_back(c.swapped());
  std::sort(out.s0.begin(), out.s0.end());
  return out;
}

Decomposition canonical(Decomposition d) {
  std::sort(d.s0.begin(), d.s0.end());
  Decomposition other = swapped(d);
  return other < d ? other : d;
}

// ---------------------------------------------------------------------------

std::string CaseKey::to_string() const {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    out += "S" + std::to_string(p.genus) + "," + std::to_string(p.marks) + ":" + std::to_string(p.c1) + "/" +
           std::to_string(p.c2);
  }
  return out;
}

CaseKey make_case_key(std::vector<CaseKeyPart> parts) {
  std::vector<CaseKeyPart> other;
  other.reserve(parts.size());
  for (const auto& p : parts) other.push_back({p.genus, p.marks, p.c2, p.c1});
  std::sort(parts.begin(), parts.end());
  std::sort(other.begin(), other.end());
  return {std::min(parts, other)};
}

CaseKey case_key(const Decomposition& d) {
  std::vector<CaseKeyPart> parts;
  parts.reserve(d.s0.size());
  for (const auto& c : d.s0) parts.push_back({c.genus, c.type().marks, c.circles_to_s1, c.circles_to_s2});
  return make_case_key(std::move(parts));
}

CaseKey parse_case_key(const std::string& text) {
  std::vector<CaseKeyPart> parts;
  std::istringstream in(text);
  std::string token;
  auto fail = [&] { return InputError("bad case key '" + text + "'"); };
  while (in >> token) {
    if (token == "+") continue;
    CaseKeyPart p;
    char s, comma, colon, slash;
    std::istringstream t(token);
    if (!(t >> s >> p.genus >> comma >> p.marks >> colon >> p.c1 >> slash >> p.c2) || s != 'S' || comma != ',' ||
        colon != ':' || slash != '/') {
      throw fail();
    }
    char extra;
    if (t >> extra) throw fail();
    parts.push_back(p);
  }
  if (parts.empty()) throw fail();
  return make_case_key(std::move(parts));
}

// ---------------------------------------------------------------------------

namespace {

struct Bounds {
  int genus;
  int marks;
  int max_components;
  int max_circles;
};

class Enumerator {
 public:
  Enumerator(SurfaceType ambient, Mode mode, const Bounds& bounds, const std::vector<S0Component>& types)
      : ambient_(ambient), mode_(mode), bounds_(bounds), types_(types) {}

  std::vector<Decomposition> run(std::size_t first) {
    out_.clear();
    current_.clear();
    if (admissible(types_[first])) visit(first);
    return std::move(out_);
  }

 private:
  void visit(std::size_t i) {
    const S0Component& c = types_[i];
    current_.push_back(c);
    circles_ += c.circles();
    punctures_ += c.punctures;
    genus_ += c.genus;
    edges_minus_nodes_ += c.circles() - 1;

    complete();
    for (std::size_t j = i; j < types_.size(); ++j) {
      if (admissible(types_[j])) visit(j);
    }

    edges_minus_nodes_ -= c.circles() - 1;
    genus_ -= c.genus;
    punctures_ -= c.punctures;
    circles_ -= c.circles();
    current_.pop_back();
  }

  bool admissible(const S0Component& c) const {
    if (static_cast<int>(current_.size()) + 1 > bounds_.max_components) return false;
    if (circles_ + c.circles() > bounds_.max_circles) return false;
    if (punctures_ + c.punctures > bounds_.marks) return false;
    // Betti number only grows as components are added.
    const int betti_lower = edges_minus_nodes_ + c.circles() - 1 - 1;
    return genus_ + c.genus + betti_lower <= bounds_.genus;
  }

  void complete() {
    int b1 = 0, b2 = 0;
    bool bridge = false;
    for (const auto& c : current_) {
      b1 += c.circles_to_s1;
      b2 += c.circles_to_s2;
      bridge = bridge || (c.circles_to_s1 > 0 && c.circles_to_s2 > 0);
    }
    if (b1 == 0 || b2 == 0 || !bridge) return;
    const int betti = edges_minus_nodes_ - 1;
    if (betti < 0) return;
    const int side_genus = bounds_.genus - genus_ - betti;
    const int side_punct = bounds_.marks - punctures_;
    if (side_genus < 0 || side_punct < 0) return;
    for (int g1 = 0; g1 <= side_genus; ++g1) {
      for (int p1 = 0; p1 <= side_punct; ++p1) {
        SidePiece s1{g1, b1, p1};
        SidePiece s2{side_genus - g1, b2, side_punct - p1};
        if (!admits_two_disjoint_disks(s1.type(), mode_) || !admits_two_disjoint_disks(s2.type(), mode_)) continue;
        Decomposition d{ambient_, s1, s2, current_};
        Decomposition canon = canonical(d);
        if (canon == d) out_.push_back(std::move(canon));
      }
    }
  }

  SurfaceType ambient_;
  Mode mode_;
  Bounds bounds_;
  const std::vector<S0Component>& types_;
  std::vector<S0Component> current_;
  std::vector<Decomposition> out_;
  int circles_ = 0;
  int punctures_ = 0;
  int genus_ = 0;
  // Running E - V over the attachment graph, excluding the two side nodes.
  int edges_minus_nodes_ = 0;
};

}  // namespace

std::vector<Decomposition> enumerate_decompositions(SurfaceType ambient, Mode mode, unsigned workers) {
  const int xi = complexity(ambient);
  if (xi < 3) return {};
  Bounds bounds{ambient.genus, ambient.marks, xi, std::max(xi + 2, 2 * xi - 4)};

  std::vector<S0Component> types;
  for (int g = 0; g <= bounds.genus; ++g) {
    for (int c1 = 0; c1 <= bounds.max_circles; ++c1) {
      for (int c2 = 0; c1 + c2 <= bounds.max_circles; ++c2) {
        for (int p = 0; p <= bounds.marks; ++p) {
          S0Component c{g, c1, c2, p};
          if (c.circles() == 0) continue;
          if (g == 0 && c.circles() == 1 && p <= 1) continue;
          if (g + c.circles() - 2 > bounds.genus) continue;
          types.push_back(c);
        }
      }
    }
  }
  std::sort(types.begin(), types.end());

  auto parts = parallel_map<std::vector<Decomposition>>(types.size(), workers, [&](std::size_t i) {
    Enumerator e(ambient, mode, bounds, types);
    return e.run(i);
  });
  std::vector<Decomposition> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CatalogEntry> case_catalog(int xi, Mode mode, unsigned workers) {
  if (xi < 3) throw PreconditionError("case catalog needs complexity >= 3, got " + std::to_string(xi));
  std::map<CaseKey, CatalogEntry> groups;
  for (const auto& ambient : surfaces_with_complexity(xi, (xi + 3) / 3)) {
    for (auto& d : enumerate_decompositions(ambient, mode, workers)) {
      CaseKey key = case_key(d);
      auto [it, fresh] = groups.try_emplace(key);
      CatalogEntry& entry = it->second;
      if (fresh) {
        entry.key = key;
        entry.label = case_label(key, xi);
        entry.representative = d;
      }
      if (entry.ambients.empty() || entry.ambients.back() != ambient) entry.ambients.push_back(ambient);
      ++entry.decompositions;
    }
  }
  std::vector<CatalogEntry> out;
  out.reserve(groups.size());
  for (auto& [_, e] : groups) out.push_back(std::move(e));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr CaseKeyPart kA11{0, 2, 1, 1};
constexpr CaseKeyPart kA20{0, 2, 2, 0};
constexpr CaseKeyPart kA02{0, 2, 0, 2};
constexpr CaseKeyPart kP11{0, 3, 1, 1};
constexpr CaseKeyPart kP10{0, 3, 1, 0};
constexpr CaseKeyPart kP01{0, 3, 0, 1};

struct LabelRow {
  int xi;
  std::string label;
  CaseKey key;
};

const std::vector<LabelRow>& label_table() {
  static const std::vector<LabelRow> table = [] {
    std::vector<LabelRow> t;
    auto add = [&](int xi, std::string label, std::vector<CaseKeyPart> parts) {
      t.push_back({xi, std::move(label), make_case_key(std::move(parts))});
    };
    add(5, "(1)", {kA11});
    add(5, "(2)", {kP11});
    add(5, "(3)", {kA11, kA11});
    add(5, "(4)", {kA11, kA20});
    add(5, "(5)", {kA11, kP10});
    add(5, "(6)", {{0, 4, 1, 1}});
    add(5, "(7)", {kA11, {0, 4, 1, 0}});
    add(5, "(7)", {kA11, {1, 1, 1, 0}});
    add(5, "(8)", {{0, 3, 2, 1}});
    add(5, "(9)", {kA11, kP11});
    add(5, "(10)", {kA11, {0, 3, 2, 0}});
    add(5, "(11)", {kP11, kA20});
    add(5, "(12)", {kA11, kA11, kA11});
    add(5, "(13)", {kA11, kA11, kA20});
    add(5, "(14)", {kA11, kA20, kA02});
    add(5, "(15)", {kA11, kA11, kP10});
    add(5, "(16)", {kA11, kA20, kP10});
    add(5, "(16)", {kA11, kA20, kP01});
    add(5, "(17)", {kA11, kP10, kP10});
    add(5, "(17)", {kA11, kP10, kP01});
    add(4, "(1)'", {kA11});
    add(4, "(2)'", {kP11});
    add(4, "(3)'", {kA11, kA11});
    add(4, "(4)'", {kA11, kA20});
    add(4, "(5)'", {kA11, kP10});
    return t;
  }();
  return table;
}

}  // namespace

std::optional<std::string> case_label(const CaseKey& key, int xi) {
  for (const auto& row : label_table()) {
    if (row.xi == xi && row.key == key) return row.label;
  }
  return std::nullopt;
}

std::vector<std::string> case_labels(int xi) {
  std::vector<std::string> out;
  for (const auto& row : label_table()) {
    if (row.xi == xi && std::find(out.begin(), out.end(), row.label) == out.end()) out.push_back(row.label);
  }
  return out;
}

std::vector<CaseKey> keys_for_label(const std::string& label, int xi) {
  std::vector<CaseKey> out;
  for (const auto& row : label_table()) {
    if (row.xi == xi && row.label == label) out.push_back(row.key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hraag
