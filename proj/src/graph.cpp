#include "hraag/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hraag/errors.hpp"

namespace hraag {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// Parses "<prefix><digits>" or "<prefix>(<digits>)".
std::optional<std::size_t> parse_family(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  if (rest.empty()) return std::nullopt;
  std::size_t value = 0;
  const auto* end = rest.data() + rest.size();
  auto [ptr, ec] = std::from_chars(rest.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

SimplicialGraph SimplicialGraph::build(std::vector<std::string> vertices,
                                       const std::vector<LabelPair>& edges) {
  SimplicialGraph g;
  const std::size_t n = vertices.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i].empty()) {
      throw InputError("vertices[" + std::to_string(i) + "]: empty label");
    }
    auto [it, inserted] = g.index_.emplace(vertices[i], i);
    if (!inserted) {
      throw InputError("vertices[" + std::to_string(i) + "]: duplicate vertex " +
                       quoted(vertices[i]));
    }
  }
  g.vertices_ = std::move(vertices);
  g.adj_.assign(n * n, 0);
  g.edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [a, b] = edges[k];
    const std::string where = "edges[" + std::to_string(k) + "]";
    auto ia = g.index_of(a);
    auto ib = g.index_of(b);
    if (!ia) throw InputError(where + ": unknown endpoint " + quoted(a));
    if (!ib) throw InputError(where + ": unknown endpoint " + quoted(b));
    if (*ia == *ib) throw InputError(where + ": loop at vertex " + quoted(a));
    if (g.adj_[*ia * n + *ib]) {
      throw InputError(where + ": duplicate edge " + quoted(a) + "-" + quoted(b));
    }
    g.adj_[*ia * n + *ib] = g.adj_[*ib * n + *ia] = 1;
    g.edges_.emplace_back(*ia, *ib);
  }
  return g;
}

std::vector<LabelPair> SimplicialGraph::edge_labels() const {
  std::vector<LabelPair> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(vertices_[u], vertices_[v]);
  return out;
}

std::optional<std::size_t> SimplicialGraph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialGraph::require_index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw InputError("unknown vertex " + quoted(label));
  return *i;
}

bool SimplicialGraph::adjacent(std::string_view u, std::string_view v) const {
  return adjacent(require_index(u), require_index(v));
}

std::size_t SimplicialGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < order(); ++u) d += adjacent(v, u) ? 1 : 0;
  return d;
}

SimplicialGraph SimplicialGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (auto i : keep) labels.push_back(vertices_.at(i));
  std::vector<LabelPair> es;
  for (std::size_t x = 0; x < keep.size(); ++x) {
    for (std::size_t y = x + 1; y < keep.size(); ++y) {
      if (adjacent(keep[x], keep[y])) es.emplace_back(labels[x], labels[y]);
    }
  }
  return build(std::move(labels), es);
}

bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    auto j = b.index_of(a.vertices_[i]);
    if (!j) return false;
    map[i] = *j;
  }
  for (auto [u, v] : a.edges_) {
    if (!b.adjacent(map[u], map[v])) return false;
  }
  return true;
}

SimplicialGraph build_graph(std::vector<std::string> vertices, const std::vector<LabelPair>& edges) {
  return SimplicialGraph::build(std::move(vertices), edges);
}

SimplicialGraph complete_graph(std::size_t n) {
  auto labels = numbered_labels(n);
  std::vector<LabelPair> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(labels[i], labels[j]);
  return build_graph(std::move(labels), es);
}

SimplicialGraph path_graph(std::size_t n) {
  auto labels = numbered_labels(n);
  std::vector<LabelPair> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(labels[i], labels[i + 1]);
  return build_graph(std::move(labels), es);
}

SimplicialGraph empty_graph(std::size_t n) { return build_graph(numbered_labels(n), {}); }

SimplicialGraph cycle4_graph() {
  return build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

// q is adjacent to the whole 4-cycle, g to a and c, h to b and d.
SimplicialGraph gamma0_graph() {
  return build_graph({"a", "b", "c", "d", "g", "h", "q"},
                     {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                      {"q", "a"}, {"q", "b"}, {"q", "c"}, {"q", "d"},
                      {"g", "a"}, {"g", "c"}, {"h", "b"}, {"h", "d"}});
}

// Gamma0 with q split into the adjacent pair e, f; e also sees g and f sees h.
SimplicialGraph gamma1_graph() {
  return build_graph({"a", "b", "c", "d", "e", "f", "g", "h"},
                     {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                      {"e", "a"}, {"e", "b"}, {"e", "c"}, {"e", "d"},
                      {"f", "a"}, {"f", "b"}, {"f", "c"}, {"f", "d"},
                      {"e", "f"}, {"g", "a"}, {"g", "c"}, {"h", "b"}, {"h", "d"},
                      {"e", "g"}, {"f", "h"}});
}

bool is_standard_graph_name(std::string_view name) {
  if (name == "C4" || name == "Gamma0" || name == "Gamma1") return true;
  return parse_family(name, "K_n").has_value() || parse_family(name, "K").has_value() ||
         parse_family(name, "path").has_value() || parse_family(name, "empty").has_value();
}

SimplicialGraph standard_graph(std::string_view name) {
  if (name == "C4") return cycle4_graph();
  if (name == "Gamma0") return gamma0_graph();
  if (name == "Gamma1") return gamma1_graph();
  if (auto n = parse_family(name, "K_n")) return complete_graph(*n);
  if (auto n = parse_family(name, "K")) return complete_graph(*n);
  if (auto n = parse_family(name, "path")) return path_graph(*n);
  if (auto n = parse_family(name, "empty")) return empty_graph(*n);
  throw InputError("unknown graph name " + quoted(name));
}

std::vector<std::string> link(const SimplicialGraph& g, std::string_view v) {
  const std::size_t iv = g.require_index(v);
  std::vector<std::string> out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (g.adjacent(iv, u)) out.push_back(g.label(u));
  }
  return out;
}

std::vector<std::string> star(const SimplicialGraph& g, std::string_view v) {
  const std::size_t iv = g.require_index(v);
  std::vector<std::string> out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (u == iv || g.adjacent(iv, u)) out.push_back(g.label(u));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const SimplicialGraph& p, const SimplicialGraph& h, SearchOptions opt)
      : pattern_(p), host_(h), options_(opt), assigned_(p.order()), used_(h.order(), false) {}

  bool run() { return extend(0); }
  const std::vector<std::size_t>& assignment() const { return assigned_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == pattern_.order()) return true;
    const std::size_t pdeg = pattern_.degree(depth);
    for (std::size_t cand = 0; cand < host_.order(); ++cand) {
      if (used_[cand]) continue;
      if (options_.node_budget != 0 && ++nodes_ > options_.node_budget) {
        throw BudgetExceeded("induced embedding search exceeded node budget", nodes_);
      }
      if (host_.degree(cand) < pdeg) continue;
      bool consistent = true;
      for (std::size_t prev = 0; prev < depth && consistent; ++prev) {
        consistent = pattern_.adjacent(prev, depth) == host_.adjacent(assigned_[prev], cand);
      }
      if (!consistent) continue;
      assigned_[depth] = cand;
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  const SimplicialGraph& pattern_;
  const SimplicialGraph& host_;
  SearchOptions options_;
  std::vector<std::size_t> assigned_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<InducedEmbedding> find_induced_embedding(const SimplicialGraph& pattern,
                                                       const SimplicialGraph& host,
                                                       SearchOptions options) {
  if (pattern.order() > host.order()) return std::nullopt;
  EmbeddingSearch search(pattern, host, options);
  if (!search.run()) return std::nullopt;
  InducedEmbedding out;
  for (auto i : search.assignment()) out.image.push_back(host.label(i));
  return out;
}

bool is_induced_embedding(const SimplicialGraph& pattern, const SimplicialGraph& host,
                          const InducedEmbedding& embedding) {
  if (embedding.image.size() != pattern.order()) return false;
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const auto& label : embedding.image) {
    auto i = host.index_of(label);
    if (!i || !seen.insert(*i).second) return false;
    idx.push_back(*i);
  }
  for (std::size_t u = 0; u < pattern.order(); ++u) {
    for (std::size_t v = u + 1; v < pattern.order(); ++v) {
      if (pattern.adjacent(u, v) != host.adjacent(idx[u], idx[v])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool is_clique(const SimplicialGraph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_triangle_free(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) return false;
    }
  return true;
}

namespace {

// Bron-Kerbosch with pivoting; vertex sets are small so plain vectors suffice.
void bron_kerbosch(const SimplicialGraph& g, std::size_t r_size, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::size_t& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, r_size);
    return;
  }
  if (r_size + p.size() <= best) return;
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t pivot_hits = 0;
  for (const auto* set : {&p, &x}) {
    for (auto u : *set) {
      std::size_t hits = 0;
      for (auto w : p) hits += g.adjacent(u, w) ? 1 : 0;
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
  }
  std::vector<std::size_t> candidates;
  for (auto v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (auto v : candidates) {
    std::vector<std::size_t> np, nx;
    for (auto w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (auto w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    bron_kerbosch(g, r_size + 1, std::move(np), std::move(nx), best);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

// First k-subset (lexicographic) of `pool` forming a clique and avoiding `banned`.
bool first_clique(const SimplicialGraph& g, const std::vector<std::size_t>& pool, std::size_t k,
                  const std::vector<std::size_t>& banned, std::size_t start,
                  std::vector<std::size_t>& chosen) {
  if (chosen.size() == k) return true;
  for (std::size_t i = start; i < pool.size(); ++i) {
    const std::size_t v = pool[i];
    if (std::find(banned.begin(), banned.end(), v) != banned.end()) continue;
    bool ok = true;
    for (auto c : chosen) ok = ok && g.adjacent(c, v);
    if (!ok) continue;
    chosen.push_back(v);
    if (first_clique(g, pool, k, banned, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// Enumerates every k-clique of pool in lexicographic order, stopping when
// visit returns true.
template <typename Visit>
bool each_clique(const SimplicialGraph& g, const std::vector<std::size_t>& pool, std::size_t k,
                 std::size_t start, std::vector<std::size_t>& chosen, Visit&& visit) {
  if (chosen.size() == k) return visit(chosen);
  for (std::size_t i = start; i < pool.size(); ++i) {
    const std::size_t v = pool[i];
    bool ok = true;
    for (auto c : chosen) ok = ok && g.adjacent(c, v);
    if (!ok) continue;
    chosen.push_back(v);
    if (each_clique(g, pool, k, i + 1, chosen, visit)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::size_t max_clique_size(const SimplicialGraph& g) {
  std::size_t best = 0;
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all[i] = i;
  bron_kerbosch(g, 0, all, {}, best);
  return best;
}

std::optional<std::vector<ThickStarWitness>> has_thick_stars(const SimplicialGraph& g, std::size_t n) {
  if (n == 0) throw PreconditionError("thick stars need N >= 1");
  std::vector<ThickStarWitness> out;
  out.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    ThickStarWitness w{g.label(v), {}, {}};
    if (n == 1) {
      w.clique1 = w.clique2 = {g.label(v)};
      out.push_back(std::move(w));
      continue;
    }
    std::vector<std::size_t> nbrs;
    for (std::size_t u = 0; u < g.order(); ++u)
      if (g.adjacent(v, u)) nbrs.push_back(u);

    std::vector<std::size_t> first, second;
    std::vector<std::size_t> scratch;
    const bool found = each_clique(g, nbrs, n - 1, 0, scratch, [&](const std::vector<std::size_t>& k1) {
      std::vector<std::size_t> k2;
      if (!first_clique(g, nbrs, n - 1, k1, 0, k2)) return false;
      first = k1;
      second = std::move(k2);
      return true;
    });
    if (!found) return std::nullopt;

    auto to_labels = [&](std::vector<std::size_t> ids) {
      ids.push_back(v);
      std::sort(ids.begin(), ids.end());
      std::vector<std::string> labels;
      for (auto i : ids) labels.push_back(g.label(i));
      return labels;
    };
    w.clique1 = to_labels(first);
    w.clique2 = to_labels(second);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace hraag
