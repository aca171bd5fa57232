#include "hraag/obstruction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hraag/errors.hpp"
#include "hraag/parallel.hpp"

namespace hraag {

void PlacementProblem::set_pair(std::size_t i, std::size_t j, PairRule r) {
  pairs.at(i).at(j) = r;
  pairs.at(j).at(i) = r;
}

std::optional<std::size_t> PlacementProblem::index_of(const std::string& curve) const {
  auto it = std::find(curves.begin(), curves.end(), curve);
  if (it == curves.end()) return std::nullopt;
  return static_cast<std::size_t>(it - curves.begin());
}

std::string to_string(Region r) {
  switch (r) {
    case Region::INSIDE_S0: return "INSIDE_S0";
    case Region::AVOID_S1: return "AVOID_S1";
    case Region::AVOID_S2: return "AVOID_S2";
    case Region::NONE: return "NONE";
  }
  return "?";
}

std::string to_string(PairRule r) {
  switch (r) {
    case PairRule::MUST_BE_DISJOINT: return "MUST_BE_DISJOINT";
    case PairRule::MUST_INTERSECT: return "MUST_INTERSECT";
    case PairRule::UNCONSTRAINED: return "UNCONSTRAINED";
  }
  return "?";
}

std::string to_string(Outcome o) { return o == Outcome::CONTRADICTION ? "CONTRADICTION" : "NO_OBSTRUCTION"; }
std::string to_string(OverallVerdict v) { return v == OverallVerdict::NOT_EMBEDDABLE ? "NOT_EMBEDDABLE" : "INCONCLUSIVE"; }

PlacementProblem derive_constraints(const SimplicialGraph& target, const std::array<std::string, 4>& c4) {
  std::array<std::size_t, 4> idx{};
  for (std::size_t i = 0; i < 4; ++i) {
    auto v = target.index_of(c4[i]);
    if (!v) throw InputError("C4 vertex '" + c4[i] + "' is not in the graph");
    idx[i] = *v;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) throw InputError("C4 repeats vertex '" + c4[i] + "'");
      const bool cyclic = (j == i + 1) || (i == 0 && j == 3);
      if (target.adjacent(idx[i], idx[j]) != cyclic) {
        throw InputError("'" + c4[0] + "," + c4[1] + "," + c4[2] + "," + c4[3] +
                         "' is not an induced 4-cycle in that order");
      }
    }
  }

  PlacementProblem p;
  std::vector<std::size_t> extra;
  for (std::size_t v = 0; v < target.order(); ++v) {
    if (std::find(idx.begin(), idx.end(), v) != idx.end()) continue;
    extra.push_back(v);
    const bool a = target.adjacent(v, idx[0]), b = target.adjacent(v, idx[1]);
    const bool c = target.adjacent(v, idx[2]), d = target.adjacent(v, idx[3]);
    Region r = Region::NONE;
    if (a && b && c && d) {
      r = Region::INSIDE_S0;
    } else if (a && c) {
      r = Region::AVOID_S1;
    } else if (b && d) {
      r = Region::AVOID_S2;
    }
    p.curves.push_back(target.label(v));
    p.regions.push_back(r);
  }
  p.pairs.assign(extra.size(), std::vector<PairRule>(extra.size(), PairRule::UNCONSTRAINED));
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j) {
      p.set_pair(i, j, target.adjacent(extra[i], extra[j]) ? PairRule::MUST_BE_DISJOINT : PairRule::MUST_INTERSECT);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Placement semantics

namespace {

int home_side(Region r) { return r == Region::AVOID_S1 ? 2 : 1; }
bool is_avoid(Region r) { return r == Region::AVOID_S1 || r == Region::AVOID_S2; }

int circles_on(const S0Component& c, int side) { return side == 1 ? c.circles_to_s1 : c.circles_to_s2; }

// Whether a curve living on `side` can run into the component and come back.
bool reaches(const S0Component& c, int side) {
  const int k = circles_on(c, side);
  if (k >= 2) return true;
  if (k == 0) return false;
  return c.genus >= 1 || c.circles() - 1 + c.punctures >= 2;
}

std::vector<std::size_t> reach_set(const Decomposition& d, int side) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.s0.size(); ++i) {
    if (reaches(d.s0[i], side)) out.push_back(i);
  }
  return out;
}

struct Option {
  enum Kind { CORE, PERIPHERAL, INTERIOR } kind;
  std::size_t comp;
  int side = 0;
  int index = 0;
  std::string name;
  std::string rule;
};

std::vector<Option> placement_options(const Decomposition& d) {
  std::vector<Option> out;
  for (std::size_t i = 0; i < d.s0.size(); ++i) {
    const auto& c = d.s0[i];
    const std::string base = "C" + std::to_string(i);
    if (c.is_annulus()) {
      out.push_back({Option::CORE, i, 0, 0, base + ".core", "R3"});
      continue;
    }
    for (int side = 1; side <= 2; ++side) {
      const int k = circles_on(c, side);
      for (int j = 0; j < k; ++j) {
        out.push_back({Option::PERIPHERAL, i, side, j, base + ".s" + std::to_string(side) + "#" + std::to_string(j),
                       k >= 2 ? "R4" : "R3"});
      }
    }
    if (complexity(c.type()) >= 1) out.push_back({Option::INTERIOR, i, 0, 0, base + ".interior", "R5"});
  }
  return out;
}

bool avoid_meets(const Decomposition& d, Region avoid, const Option& o) {
  const int home = home_side(avoid);
  if (o.kind == Option::PERIPHERAL && o.side != home) return false;
  return reaches(d.s0[o.comp], home);
}

bool avoid_pair_meets(const Decomposition& d, Region x, Region y) {
  if (home_side(x) == home_side(y)) return true;
  for (std::size_t i = 0; i < d.s0.size(); ++i) {
    if (reaches(d.s0[i], 1) && reaches(d.s0[i], 2)) return true;
  }
  return false;
}

bool bridges_all_annuli(const Decomposition& d) {
  for (const auto& c : d.s0) {
    if (c.circles_to_s1 > 0 && c.circles_to_s2 > 0 && !c.is_annulus()) return false;
  }
  return true;
}

struct Violation {
  std::size_t x, y;
  std::string rule;  // MUST_INTERSECT, MUST_BE_DISJOINT or DISTINCT
  std::string note;  // optional explanatory trace line
};

// Pairwise-disjoint interior curves of one component cannot outnumber its
// complexity.
std::optional<Violation> clique_violation(const PlacementProblem& p, const Decomposition& d,
                                          const std::vector<std::size_t>& curves,
                                          const std::vector<const Option*>& chosen) {
  for (std::size_t comp = 0; comp < d.s0.size(); ++comp) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (chosen[k]->kind == Option::INTERIOR && chosen[k]->comp == comp) members.push_back(k);
    }
    const auto cap = static_cast<std::size_t>(complexity(d.s0[comp].type()));
    if (members.size() <= cap) continue;
    // Find the largest pairwise MUST_BE_DISJOINT subset by brute force; the
    // member lists are tiny.
    const std::size_t m = members.size();
    std::size_t best_mask = 0, best_size = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::size_t size = 0;
      bool ok = true;
      for (std::size_t a = 0; a < m && ok; ++a) {
        if (!(mask >> a & 1)) continue;
        ++size;
        for (std::size_t b = a + 1; b < m && ok; ++b) {
          if (mask >> b & 1) ok = p.pair(curves[members[a]], curves[members[b]]) == PairRule::MUST_BE_DISJOINT;
        }
      }
      if (ok && size > best_size) {
        best_size = size;
        best_mask = mask;
      }
    }
    if (best_size <= cap) continue;
    std::vector<std::size_t> in;
    for (std::size_t a = 0; a < m; ++a)
      if (best_mask >> a & 1) in.push_back(curves[members[a]]);
    return Violation{in[in.size() - 2], in.back(), "MUST_BE_DISJOINT",
                     "R5: C" + std::to_string(comp) + " holds " + std::to_string(best_size) +
                         " pairwise disjoint curves but has complexity " + std::to_string(cap)};
  }
  return std::nullopt;
}

std::optional<Violation> first_violation(const PlacementProblem& p, const Decomposition& d,
                                         const std::vector<std::size_t>& curves,
                                         const std::vector<const Option*>& chosen) {
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      const Option& oa = *chosen[a];
      const Option& ob = *chosen[b];
      if (oa.kind != Option::INTERIOR && oa.name == ob.name) return Violation{curves[a], curves[b], "DISTINCT", ""};
      if (p.pair(curves[a], curves[b]) == PairRule::MUST_INTERSECT) {
        const bool meet = oa.kind == Option::INTERIOR && ob.kind == Option::INTERIOR && oa.comp == ob.comp;
        if (!meet) return Violation{curves[a], curves[b], "MUST_INTERSECT", ""};
      }
    }
  }
  return clique_violation(p, d, curves, chosen);
}

struct SearchResult {
  std::optional<std::vector<const Option*>> assignment;
  std::optional<Violation> first_failure;
  std::size_t examined = 0;
};

// Lexicographic product over the remaining options of each inside curve.
SearchResult search(const PlacementProblem& p, const Decomposition& d, const std::vector<std::size_t>& curves,
                    const std::vector<std::vector<const Option*>>& options) {
  SearchResult r;
  std::vector<std::size_t> pos(curves.size(), 0);
  std::vector<const Option*> chosen(curves.size());
  for (;;) {
    for (std::size_t k = 0; k < curves.size(); ++k) chosen[k] = options[k][pos[k]];
    ++r.examined;
    auto v = first_violation(p, d, curves, chosen);
    if (!v) {
      r.assignment = chosen;
      return r;
    }
    if (!r.first_failure) r.first_failure = v;
    bool advanced = false;
    for (std::size_t k = curves.size(); k-- > 0 && !advanced;) {
      advanced = ++pos[k] < options[k].size();
      if (!advanced) pos[k] = 0;
    }
    if (!advanced) return r;
  }
}

std::string violated_line(const PlacementProblem& p, std::size_t x, std::size_t y, const std::string& rule) {
  return "violated: " + p.curves[x] + " " + rule + " " + p.curves[y];
}

std::string confined_line(const PlacementProblem& p, std::size_t x) {
  return "R1: " + p.curves[x] + " confined to S" + std::to_string(home_side(p.regions[x]));
}

std::string prune_line(const PlacementProblem& p, std::size_t curve, const Option& o, std::size_t by) {
  return o.rule + ": prune " + p.curves[curve] + " at " + o.name + ": cannot meet " + p.curves[by];
}

std::string join_curves(const PlacementProblem& p, const std::vector<std::size_t>& curves) {
  std::string out;
  for (auto c : curves) out += (out.empty() ? "" : ", ") + p.curves[c];
  return out;
}

const char* kR2Line = "R2: every S0 component joining S1 and S2 is an annulus";

std::string disjoint_regions_line(const PlacementProblem& p, std::size_t x, std::size_t y) {
  return "R1: " + p.curves[x] + " and " + p.curves[y] + " confined to disjoint regions";
}

}  // namespace

Verdict check_case(const PlacementProblem& p, const Decomposition& d) {
  Verdict v;
  const std::size_t n = p.size();

  for (std::size_t x = 0; x < n; ++x) {
    if (is_avoid(p.regions[x]) && reach_set(d, home_side(p.regions[x])).empty()) v.trace.push_back(confined_line(p, x));
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!is_avoid(p.regions[x]) || !is_avoid(p.regions[y])) continue;
      if (p.pair(x, y) != PairRule::MUST_INTERSECT) continue;
      if (avoid_pair_meets(d, p.regions[x], p.regions[y])) continue;
      v.trace.push_back(bridges_all_annuli(d) ? kR2Line : disjoint_regions_line(p, x, y));
      v.trace.push_back(violated_line(p, x, y, "MUST_INTERSECT"));
      v.outcome = Outcome::CONTRADICTION;
      return v;
    }
  }

  const std::vector<Option> all = placement_options(d);
  std::vector<std::size_t> inside;
  std::vector<std::vector<const Option*>> remaining;
  for (std::size_t x = 0; x < n; ++x) {
    if (p.regions[x] != Region::INSIDE_S0) continue;
    std::vector<const Option*> keep;
    std::size_t last_pruner = 0;
    for (const Option& o : all) {
      std::optional<std::size_t> pruner;
      for (std::size_t y = 0; y < n && !pruner; ++y) {
        if (is_avoid(p.regions[y]) && p.pair(x, y) == PairRule::MUST_INTERSECT && !avoid_meets(d, p.regions[y], o)) {
          pruner = y;
        }
      }
      if (pruner) {
        v.trace.push_back(prune_line(p, x, o, *pruner));
        last_pruner = *pruner;
      } else {
        keep.push_back(&o);
      }
    }
    if (keep.empty()) {
      v.trace.push_back(violated_line(p, x, last_pruner, "MUST_INTERSECT"));
      v.outcome = Outcome::CONTRADICTION;
      return v;
    }
    inside.push_back(x);
    remaining.push_back(std::move(keep));
  }

  auto result = search(p, d, inside, remaining);
  if (result.assignment) {
    std::string line = "SURVIVES:";
    if (inside.empty()) line += " no placement conflict";
    for (std::size_t k = 0; k < inside.size(); ++k) {
      line += (k == 0 ? " " : ", ") + p.curves[inside[k]] + " at " + (*result.assignment)[k]->name;
    }
    v.trace.push_back(line);
    v.outcome = Outcome::NO_OBSTRUCTION;
    return v;
  }
  v.trace.push_back("search: no consistent placement of " + join_curves(p, inside) + " over " +
                    std::to_string(result.examined) + " assignments");
  const Violation& bad = *result.first_failure;
  if (!bad.note.empty()) v.trace.push_back(bad.note);
  v.trace.push_back(violated_line(p, bad.x, bad.y, bad.rule));
  v.outcome = Outcome::CONTRADICTION;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct ParsedViolation {
  std::size_t x, y;
  std::string rule;
};

std::optional<ParsedViolation> parse_violation(const PlacementProblem& p, const std::string& line) {
  if (!starts_with(line, "violated: ")) return std::nullopt;
  std::istringstream in(line.substr(10));
  std::string x, rule, y, extra;
  if (!(in >> x >> rule >> y) || (in >> extra)) return std::nullopt;
  auto ix = p.index_of(x), iy = p.index_of(y);
  if (!ix || !iy || *ix == *iy) return std::nullopt;
  return ParsedViolation{*ix, *iy, rule};
}

}  // namespace

bool replay_contradiction(const PlacementProblem& p, const Decomposition& d, const Verdict& v) {
  if (v.outcome != Outcome::CONTRADICTION || v.trace.empty()) return false;
  auto last = parse_violation(p, v.trace.back());
  if (!last) return false;
  const std::size_t n = p.size();
  const std::vector<Option> all = placement_options(d);

  // Every confinement note must hold.
  std::size_t i = 0;
  for (; i + 1 < v.trace.size() && starts_with(v.trace[i], "R1: ") &&
         v.trace[i].find(" confined to S") != std::string::npos && v.trace[i].find(" and ") == std::string::npos;
       ++i) {
    bool matched = false;
    for (std::size_t x = 0; x < n && !matched; ++x) {
      if (is_avoid(p.regions[x]) && v.trace[i] == confined_line(p, x)) {
        if (!reach_set(d, home_side(p.regions[x])).empty()) return false;
        matched = true;
      }
    }
    if (!matched) return false;
  }

  // Static clash between two avoiding curves.
  if (i + 2 == v.trace.size()) {
    const std::string& step = v.trace[i];
    const auto [x, y, rule] = *last;
    if (step == kR2Line || step == disjoint_regions_line(p, std::min(x, y), std::max(x, y))) {
      if (rule != "MUST_INTERSECT") return false;
      if (!is_avoid(p.regions[x]) || !is_avoid(p.regions[y])) return false;
      if (p.pair(x, y) != PairRule::MUST_INTERSECT) return false;
      if (avoid_pair_meets(d, p.regions[x], p.regions[y])) return false;
      return step != kR2Line || bridges_all_annuli(d);
    }
  }

  // Prune steps, each justified on its own.
  std::map<std::size_t, std::vector<std::string>> pruned;
  std::optional<std::size_t> last_pruned_curve, last_pruner;
  for (; i + 1 < v.trace.size(); ++i) {
    const std::string& line = v.trace[i];
    if (line.find(": prune ") == std::string::npos) break;
    bool matched = false;
    for (std::size_t x = 0; x < n && !matched; ++x) {
      if (p.regions[x] != Region::INSIDE_S0) continue;
      for (const Option& o : all) {
        for (std::size_t y = 0; y < n && !matched; ++y) {
          if (line != prune_line(p, x, o, y)) continue;
          if (!is_avoid(p.regions[y]) || p.pair(x, y) != PairRule::MUST_INTERSECT) return false;
          if (avoid_meets(d, p.regions[y], o)) return false;
          pruned[x].push_back(o.name);
          last_pruned_curve = x;
          last_pruner = y;
          matched = true;
        }
      }
    }
    if (!matched) return false;
  }

  auto options_left = [&](std::size_t x) {
    std::vector<const Option*> keep;
    const auto& gone = pruned[x];
    for (const Option& o : all) {
      if (std::find(gone.begin(), gone.end(), o.name) == gone.end()) keep.push_back(&o);
    }
    return keep;
  };

  // A curve with every option pruned.
  if (i + 1 == v.trace.size()) {
    const auto [x, y, rule] = *last;
    return rule == "MUST_INTERSECT" && last_pruned_curve == x && last_pruner == y && options_left(x).empty();
  }

  // Exhausted product search.
  if (!starts_with(v.trace[i], "search: no consistent placement")) return false;
  std::vector<std::size_t> inside;
  std::vector<std::vector<const Option*>> remaining;
  for (std::size_t x = 0; x < n; ++x) {
    if (p.regions[x] != Region::INSIDE_S0) continue;
    inside.push_back(x);
    remaining.push_back(options_left(x));
    if (remaining.back().empty()) return false;
  }
  auto result = search(p, d, inside, remaining);
  if (result.assignment || !result.first_failure) return false;
  const auto& bad = *result.first_failure;
  const auto [x, y, rule] = *last;
  if (bad.x != x || bad.y != y || bad.rule != rule) return false;
  const std::size_t expected_lines = i + 1 + (bad.note.empty() ? 0 : 1) + 1;
  if (v.trace.size() != expected_lines) return false;
  return bad.note.empty() || v.trace[i + 1] == bad.note;
}

// ---------------------------------------------------------------------------

std::vector<std::string> EmbeddingReport::surviving_labels() const {
  std::vector<std::string> out;
  for (const auto& c : cases) {
    if (c.outcome == Outcome::NO_OBSTRUCTION) out.push_back(c.label.value_or(c.key.to_string()));
  }
  return out;
}

std::vector<CaseKey> EmbeddingReport::surviving_keys() const {
  std::vector<CaseKey> out;
  for (const auto& c : cases) {
    if (c.outcome == Outcome::NO_OBSTRUCTION) out.push_back(c.key);
  }
  return out;
}

EmbeddingReport check_all_cases(const SimplicialGraph& target, const std::array<std::string, 4>& c4,
                                HandlebodyType h, unsigned workers, const std::string& graph_name) {
  const int xi = complexity(h);
  if (xi < 3 || xi > 5) {
    throw PreconditionError("case walk supports complexity 3, 4 or 5; H" + std::to_string(h.genus) + "," +
                            std::to_string(h.marks) + " has complexity " + std::to_string(xi));
  }
  const PlacementProblem problem = derive_constraints(target, c4);

  EmbeddingReport report;
  report.graph = graph_name;
  report.handlebody = h;

  const std::size_t clique = max_clique_size(target);
  if (clique > static_cast<std::size_t>(xi)) {
    report.verdict = OverallVerdict::NOT_EMBEDDABLE;
    report.shortcut = "clique of size " + std::to_string(clique) + " exceeds complexity " + std::to_string(xi);
    return report;
  }

  const auto decomps = enumerate_decompositions(h.boundary(), Mode::HANDLEBODY, workers);
  if (decomps.empty()) {
    report.verdict = OverallVerdict::NOT_EMBEDDABLE;
    report.shortcut = "no decomposition realizes C4";
    return report;
  }

  auto verdicts = parallel_map<Verdict>(decomps.size(), workers, [&](std::size_t i) {
    Verdict first = check_case(problem, decomps[i]);
    if (first.outcome == Outcome::NO_OBSTRUCTION) return first;
    Verdict second = check_case(problem, swapped(decomps[i]));
    if (second.outcome == Outcome::NO_OBSTRUCTION) {
      second.trace.insert(second.trace.begin(), "orientation: S1 and S2 exchanged");
      return second;
    }
    return first;
  });

  std::map<CaseKey, CaseReport> grouped;
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    CaseKey key = case_key(decomps[i]);
    auto [it, fresh] = grouped.try_emplace(key);
    CaseReport& c = it->second;
    if (fresh) {
      c.key = key;
      c.label = case_label(key, xi);
      c.outcome = verdicts[i].outcome;
      c.trace = verdicts[i].trace;
    } else if (c.outcome == Outcome::CONTRADICTION && verdicts[i].outcome == Outcome::NO_OBSTRUCTION) {
      c.outcome = Outcome::NO_OBSTRUCTION;
      c.trace = verdicts[i].trace;
    }
    ++c.decompositions;
  }
  bool any_survivor = false;
  for (auto& [_, c] : grouped) {
    any_survivor = any_survivor || c.outcome == Outcome::NO_OBSTRUCTION;
    report.cases.push_back(std::move(c));
  }
  report.verdict = any_survivor ? OverallVerdict::INCONCLUSIVE : OverallVerdict::NOT_EMBEDDABLE;
  return report;
}

std::optional<std::array<std::string, 4>> default_c4(const SimplicialGraph& g) {
  const std::array<std::string, 4> preferred{"a", "b", "c", "d"};
  bool has_all = std::all_of(preferred.begin(), preferred.end(), [&](const std::string& v) { return g.contains(v); });
  if (has_all) {
    try {
      derive_constraints(g, preferred);
      return preferred;
    } catch (const InputError&) {
    }
  }
  auto found = find_induced_embedding(cycle4_graph(), g);
  if (!found) return std::nullopt;
  return std::array<std::string, 4>{found->image[0], found->image[1], found->image[2], found->image[3]};
}

}  // namespace hraag
