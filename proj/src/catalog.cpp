#include "hraag/catalog.hpp"

#include <algorithm>
#include <set>

#include "builtin_certificates.hpp"
#include "hraag/errors.hpp"
#include "hraag/json_io.hpp"

namespace hraag {

void validate_certificate(const CurveCertificate& c) {
  const std::size_t n = c.labels.size();
  if (c.intersections.size() != n) {
    throw InputError("intersections: expected " + std::to_string(n) + " rows, got " +
                     std::to_string(c.intersections.size()));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(c.labels[i]).second) throw InputError("labels[" + std::to_string(i) + "]: duplicate label '" + c.labels[i] + "'");
    if (c.intersections[i].size() != n) {
      throw InputError("intersections[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "intersections[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const int v = c.intersections[i][j];
      if (v < 0) throw InputError(where + ": negative entry");
      if (i == j && v != 0) throw InputError(where + ": nonzero diagonal");
      if (v != c.intersections[j][i]) throw InputError(where + ": matrix is not symmetric");
    }
  }
}

SimplicialGraph induced_graph_of_certificate(const CurveCertificate& c) {
  validate_certificate(c);
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < c.labels.size(); ++j) {
      if (c.intersections[i][j] == 0) edges.emplace_back(c.labels[i], c.labels[j]);
    }
  }
  return build_graph(c.labels, edges);
}

std::vector<std::string> builtin_certificate_names() {
  std::vector<std::string> out;
  for (const auto& b : detail::builtin_certificate_sources()) out.push_back(b.name);
  return out;
}

bool is_builtin_certificate(const std::string& name) {
  const auto& all = detail::builtin_certificate_sources();
  return std::any_of(all.begin(), all.end(), [&](const auto& b) { return b.name == name; });
}

CurveCertificate builtin_certificate(const std::string& name) {
  for (const auto& b : detail::builtin_certificate_sources()) {
    if (b.name == name) return certificate_from_json(parse_json(b.json, "built-in " + name), name);
  }
  throw InputError("unknown built-in certificate '" + name + "'");
}

std::string builtin_certificate_target(const std::string& name) {
  if (!is_builtin_certificate(name)) throw InputError("unknown built-in certificate '" + name + "'");
  return name == "FIG7_H08" ? "Gamma0" : "Gamma1";
}

CertificateCheck verify_certificate(const CurveCertificate& c, const SimplicialGraph& target) {
  CertificateCheck out;
  const SimplicialGraph cert = induced_graph_of_certificate(c);
  std::vector<std::string> a = cert.vertices(), b = target.vertices();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  if (a == b) {
    out.label_preserving = true;
    for (std::size_t i = 0; i < target.order(); ++i) {
      for (std::size_t j = i + 1; j < target.order(); ++j) {
        const auto& u = target.label(i);
        const auto& v = target.label(j);
        if (target.adjacent(i, j) != cert.adjacent(u, v)) out.mismatches.emplace_back(u, v);
      }
    }
    out.ok = out.mismatches.empty();
    if (!out.ok) out.reason = std::to_string(out.mismatches.size()) + " pair(s) disagree";
    return out;
  }

  if (cert.order() != target.order()) {
    out.reason = "certificate has " + std::to_string(cert.order()) + " curves, graph has " +
                 std::to_string(target.order()) + " vertices";
    return out;
  }
  out.isomorphism = find_induced_embedding(target, cert);
  out.ok = out.isomorphism.has_value();
  if (!out.ok) out.reason = "induced graph is not isomorphic to the target";
  return out;
}

// ---------------------------------------------------------------------------

Gamma1Decision gamma1_embeddability(HandlebodyType h) {
  const int xi = complexity(h);
  Gamma1Decision d;
  const std::string name = "H" + std::to_string(h.genus) + "," + std::to_string(h.marks);
  if (xi >= 6) {
    d.embeds = true;
    d.justification.push_back("complexity " + std::to_string(xi) + " >= 6: stabilization of a smaller configuration");
    d.justification.push_back("certificate FIG3_H23 realizes Gamma1 at complexity 6");
    return d;
  }
  if (xi <= 3) {
    d.justification.push_back("clique bound: Gamma1 has a 4-clique, a multi-disk in " + name + " has at most " +
                              std::to_string(xi) + " disks");
    return d;
  }
  if (h == HandlebodyType{0, 7}) {
    d.embeds = true;
    d.justification.push_back("case walk at complexity 4: only case (2)' survives");
    d.justification.push_back("certificate FIG3_H07 realizes Gamma1");
    return d;
  }
  if (h == HandlebodyType{1, 5}) {
    d.embeds = true;
    d.justification.push_back("case walk at complexity 5: surviving cases are realizable on H1,5");
    d.justification.push_back("certificate FIG3_H15 realizes Gamma1");
    return d;
  }
  if (xi == 4) {
    d.justification.push_back("case walk at complexity 4: the surviving case (2)' is not realizable on " + name);
    return d;
  }
  if (h == HandlebodyType{0, 8}) {
    d.justification.push_back("classification table excludes H0,8");
    d.justification.push_back("case walk on H0,8 is inconclusive: no rule refutes the surviving cases");
    return d;
  }
  d.justification.push_back("case walk at complexity 5: every case realizable on " + name + " contradicts");
  return d;
}

std::string to_string(SmallDecision d) {
  switch (d) {
    case SmallDecision::EMBEDS: return "EMBEDS";
    case SmallDecision::NOT_EMBEDS: return "NOT_EMBEDS";
    case SmallDecision::NECESSARY_FAIL: return "NECESSARY_FAIL";
    case SmallDecision::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

SmallDecision small_complexity_decision(const SimplicialGraph& g, HandlebodyType h) {
  const int xi = complexity(h);
  if (xi > 2) throw PreconditionError("small complexity decision needs complexity <= 2, got " + std::to_string(xi));
  if (xi == 2) return is_triangle_free(g) ? SmallDecision::UNKNOWN : SmallDecision::NECESSARY_FAIL;
  switch (disk_count_class(h)) {
    case DiskCountClass::NONE:
      return g.empty() ? SmallDecision::EMBEDS : SmallDecision::NOT_EMBEDS;
    case DiskCountClass::UNIQUE:
      return g.order() <= 1 ? SmallDecision::EMBEDS : SmallDecision::NOT_EMBEDS;
    case DiskCountClass::INFINITE:
      break;
  }
  // The only complexity-1 type with infinitely many disks is H0,4, whose disk
  // graph has no edges.
  return g.size() == 0 ? SmallDecision::EMBEDS : SmallDecision::NOT_EMBEDS;
}

// ---------------------------------------------------------------------------

namespace {

class DiskRelation {
 public:
  explicit DiskRelation(const StandardEmbeddingData& data) {
    for (const auto& [_, disks] : data.supports)
      for (const auto& x : disks) add(x);
    for (const auto& [x, y] : data.disjoint_pairs) {
      add(x);
      add(y);
    }
    adj_.assign(names_.size() * names_.size(), 0);
    for (const auto& [x, y] : data.disjoint_pairs) {
      const auto i = id(x), j = id(y);
      adj_[i * names_.size() + j] = adj_[j * names_.size() + i] = 1;
    }
  }

  std::size_t id(const std::string& x) const {
    return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), x) - names_.begin());
  }
  bool disjoint(const std::string& x, const std::string& y) const { return adj_[id(x) * names_.size() + id(y)] != 0; }

  /// Disjointness relation as a graph on disk identifiers.
  SimplicialGraph as_graph() const {
    std::vector<LabelPair> edges;
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (adj_[i * names_.size() + j]) edges.emplace_back(names_[i], names_[j]);
    return build_graph(names_, edges);
  }

 private:
  void add(const std::string& x) {
    if (std::find(names_.begin(), names_.end(), x) == names_.end()) names_.push_back(x);
  }
  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;
};

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::all_of(a.begin(), a.end(), [&](const std::string& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

}  // namespace

std::optional<std::string> validate(const StandardEmbeddingData& data) {
  const auto& g = data.graph;
  for (const auto& [v, _] : data.supports) {
    if (!g.contains(v)) return "support given for unknown vertex '" + v + "'";
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [x, y] : data.disjoint_pairs) {
    if (x == y) return "disk '" + x + "' listed as disjoint from itself";
    if (!seen.insert(std::minmax(x, y)).second) return "disjoint pair " + x + "-" + y + " listed twice";
  }
  const DiskRelation rel(data);
  for (const auto& v : g.vertices()) {
    auto it = data.supports.find(v);
    if (it == data.supports.end() || it->second.empty()) return "vertex '" + v + "' has an empty support";
    const auto& s = it->second;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[i] == s[j]) return "support of '" + v + "' repeats disk '" + s[i] + "'";
        if (!rel.disjoint(s[i], s[j])) return "support of '" + v + "' is not a multi-disk";
      }
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (i == j) continue;
      const auto& su = data.supports.at(g.label(i));
      const auto& sv = data.supports.at(g.label(j));
      if (subset_of(su, sv)) return "support of '" + g.label(i) + "' is contained in that of '" + g.label(j) + "'";
      if (i < j && g.adjacent(i, j)) {
        for (const auto& x : su)
          for (const auto& y : sv)
            if (!rel.disjoint(x, y))
              return "adjacent vertices '" + g.label(i) + "' and '" + g.label(j) + "' have intersecting disks";
      }
    }
  }
  return std::nullopt;
}

ReductionResult standard_embedding_reduction(const StandardEmbeddingData& data, std::size_t n) {
  if (auto bad = validate(data)) throw PreconditionError("invalid standard embedding data: " + *bad);
  const auto stars = has_thick_stars(data.graph, n);
  if (!stars) throw PreconditionError("graph lacks " + std::to_string(n) + "-thick stars");

  ReductionResult out;
  const DiskRelation rel(data);
  auto union_of = [&](const std::vector<std::string>& clique, const std::string& skip) {
    std::vector<std::string> disks;
    for (const auto& u : clique) {
      if (u == skip) continue;
      for (const auto& x : data.supports.at(u))
        if (std::find(disks.begin(), disks.end(), x) == disks.end()) disks.push_back(x);
    }
    return disks;
  };

  std::map<std::string, std::string> assignment;
  for (const auto& w : *stars) {
    const auto& c = data.supports.at(w.vertex);
    for (const auto* clique : {&w.clique1, &w.clique2}) {
      auto disks = union_of(*clique, w.vertex);
      for (const auto& x : c)
        if (std::find(disks.begin(), disks.end(), x) == disks.end()) disks.push_back(x);
      if (disks.size() > n) {
        out.failure = "maximality violated at '" + w.vertex + "': multi-disk of " + std::to_string(disks.size()) +
                      " disks exceeds N = " + std::to_string(n);
        return out;
      }
    }
    if (c.size() != 1) {
      out.failure = "maximality violated at '" + w.vertex + "': support has " + std::to_string(c.size()) + " disks";
      return out;
    }
    assignment[w.vertex] = c.front();
  }

  const std::size_t widest = max_clique_size(rel.as_graph());
  if (widest > n) {
    out.failure = "maximality violated: " + std::to_string(widest) + " pairwise disjoint disks exceed N = " +
                  std::to_string(n);
    return out;
  }

  const auto& g = data.graph;
  std::set<std::string> used;
  for (const auto& v : g.vertices()) {
    if (!used.insert(assignment.at(v)).second) {
      out.failure = "disk '" + assignment.at(v) + "' assigned to two vertices";
      return out;
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      const bool disjoint = rel.disjoint(assignment.at(g.label(i)), assignment.at(g.label(j)));
      if (disjoint != g.adjacent(i, j)) {
        out.failure = "disks of '" + g.label(i) + "' and '" + g.label(j) + "' do not reflect adjacency";
        return out;
      }
    }
  }
  out.assignment = std::move(assignment);
  return out;
}

TwistSpec twist_embedding_spec(const SimplicialGraph& g, const CurveCertificate& c) {
  const CertificateCheck check = verify_certificate(c, g);
  if (!check.ok) {
    const std::string who = c.name.empty() ? "certificate" : "certificate " + c.name;
    throw VerificationError(who + " does not realize the graph: " + check.reason);
  }
  TwistSpec spec;
  auto disk_of = [&](std::size_t v) {
    return check.label_preserving ? g.label(v) : check.isomorphism->image[v];
  };
  for (std::size_t v = 0; v < g.order(); ++v) spec.assignments.emplace_back(g.label(v), "delta(" + disk_of(v) + ")^N");
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      TwistRow row{g.label(u), g.label(v), disk_of(u), disk_of(v)};
      (g.adjacent(u, v) ? spec.commuting : spec.intersecting).push_back(std::move(row));
    }
  }
  return spec;
}

}  // namespace hraag
