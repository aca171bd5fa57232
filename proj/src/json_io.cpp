#include "hraag/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hraag/errors.hpp"

namespace hraag {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

HandlebodyType handlebody_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where + ": expected [genus, marks]");
    return {as_int(j[0], where + "[0]"), as_int(j[1], where + "[1]")};
  }
  return {as_int(field(j, "genus", where), where + ".genus"), as_int(field(j, "marks", where), where + ".marks")};
}

Json side_to_json(const SidePiece& s) {
  return Json{{"genus", s.genus}, {"circles", s.circles}, {"punctures", s.punctures}};
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

SimplicialGraph graph_from_json(const Json& j) {
  std::vector<std::string> vertices;
  const Json& vs = as_array(field(j, "vertices", "graph"), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  std::vector<LabelPair> edges;
  const Json& es = as_array(field(j, "edges", "graph"), "edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!es[i].is_array() || es[i].size() != 2) throw InputError(where + ": expected a pair of labels");
    edges.emplace_back(as_string(es[i][0], where), as_string(es[i][1], where));
  }
  return build_graph(std::move(vertices), edges);
}

Json graph_to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edge_labels()) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

CurveCertificate certificate_from_json(const Json& j, const std::string& name) {
  CurveCertificate c;
  c.name = name;
  c.handlebody = handlebody_from_json(field(j, "handlebody", "certificate"), "handlebody");
  const Json& labels = as_array(field(j, "labels", "certificate"), "labels");
  for (std::size_t i = 0; i < labels.size(); ++i) c.labels.push_back(as_string(labels[i], "labels[" + std::to_string(i) + "]"));
  const Json& rows = as_array(field(j, "intersections", "certificate"), "intersections");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "intersections[" + std::to_string(i) + "]";
    std::vector<int> row;
    for (std::size_t k = 0; k < as_array(rows[i], where).size(); ++k) {
      row.push_back(as_int(rows[i][k], where + "[" + std::to_string(k) + "]"));
    }
    c.intersections.push_back(std::move(row));
  }
  if (auto it = j.find("minimal_position"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("minimal_position: expected a boolean");
    c.minimal_position = it->get<bool>();
  }
  validate_certificate(c);
  return c;
}

Json certificate_to_json(const CurveCertificate& c) {
  return Json{{"handlebody", Json::array({c.handlebody.genus, c.handlebody.marks})},
              {"labels", c.labels},
              {"intersections", c.intersections},
              {"minimal_position", c.minimal_position}};
}

HomSpec hom_from_json(const Json& j) {
  RaagPresentation source(graph_from_json(field(j, "source", "homomorphism")));
  RaagPresentation target(graph_from_json(field(j, "target", "homomorphism")));
  const Json& images = field(j, "images", "homomorphism");
  if (!images.is_object()) throw InputError("images: expected an object");
  std::map<std::string, RaagWord> out;
  for (auto it = images.begin(); it != images.end(); ++it) {
    out[it.key()] = parse_word(target, as_string(it.value(), "images." + it.key()));
  }
  return {std::move(source), std::move(target), std::move(out)};
}

Json surface_to_json(SurfaceType t) { return Json::array({t.genus, t.marks}); }

Json decomposition_to_json(const Decomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.s0) {
    comps.push_back(Json{{"genus", c.genus},
                         {"circles_to_s1", c.circles_to_s1},
                         {"circles_to_s2", c.circles_to_s2},
                         {"punctures", c.punctures}});
  }
  return Json{{"ambient", surface_to_json(d.ambient)},
              {"s1", side_to_json(d.s1)},
              {"s2", side_to_json(d.s2)},
              {"s0", comps},
              {"alpha", alpha(d)}};
}

Json catalog_to_json(const std::vector<CatalogEntry>& catalog) {
  Json out = Json::array();
  for (const auto& e : catalog) {
    Json ambients = Json::array();
    for (const auto& a : e.ambients) ambients.push_back(surface_to_json(a));
    out.push_back(Json{{"key", e.key.to_string()},
                       {"label", e.label ? Json(*e.label) : Json(nullptr)},
                       {"ambients", ambients},
                       {"decompositions", e.decompositions},
                       {"representative", decomposition_to_json(e.representative)}});
  }
  return out;
}

Json report_to_json(const EmbeddingReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"label", c.label ? Json(*c.label) : Json(nullptr)},
                         {"key", c.key.to_string()},
                         {"outcome", to_string(c.outcome)},
                         {"decompositions", c.decompositions},
                         {"trace", c.trace}});
  }
  Json out{{"graph", r.graph},
           {"handlebody", Json::array({r.handlebody.genus, r.handlebody.marks})},
           {"verdict", to_string(r.verdict)}};
  if (r.shortcut) out["reason"] = *r.shortcut;
  out["cases"] = cases;
  return out;
}

StandardEmbeddingData standard_embedding_from_json(const Json& j) {
  StandardEmbeddingData d{graph_from_json(field(j, "graph", "standard embedding")), {}, {}};
  const Json& supports = field(j, "supports", "standard embedding");
  if (!supports.is_object()) throw InputError("supports: expected an object");
  for (auto it = supports.begin(); it != supports.end(); ++it) {
    std::vector<std::string> disks;
    const std::string where = "supports." + it.key();
    for (const auto& x : as_array(it.value(), where)) disks.push_back(as_string(x, where));
    d.supports[it.key()] = std::move(disks);
  }
  const Json& pairs = as_array(field(j, "disjoint", "standard embedding"), "disjoint");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "disjoint[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2) throw InputError(where + ": expected a pair of disks");
    d.disjoint_pairs.emplace_back(as_string(pairs[i][0], where), as_string(pairs[i][1], where));
  }
  return d;
}

}  // namespace hraag
