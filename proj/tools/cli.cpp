#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hraag/catalog.hpp"
#include "hraag/decomposition.hpp"
#include "hraag/errors.hpp"
#include "hraag/json_io.hpp"
#include "hraag/obstruction.hpp"
#include "hraag/raag.hpp"

namespace hraag::cli {

namespace {

struct Common {
  std::string format = "text";
  std::string out_path;
  unsigned workers = 0;
};

struct NamedGraph {
  std::string name;
  SimplicialGraph graph;
};

NamedGraph resolve_graph(const std::string& spec) {
  if (is_standard_graph_name(spec)) return {spec, standard_graph(spec)};
  return {std::filesystem::path(spec).stem().string(), graph_from_json(read_json_file(spec))};
}

std::string surface_name(SurfaceType t) { return "S" + std::to_string(t.genus) + "," + std::to_string(t.marks); }
std::string handlebody_name(HandlebodyType h) { return "H" + std::to_string(h.genus) + "," + std::to_string(h.marks); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

// Writes to --out (relative paths resolve against the output directory
// variable) or to the given stream.
void emit(const Common& c, const std::string& body, std::ostream& out) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::filesystem::path path(c.out_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << body;
  out << "wrote " << path.string() << "\n";
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int enumerate_cases(const Common& c, int xi, const std::string& mode_text, std::ostream& out) {
  const Mode mode = parse_mode(mode_text);
  const auto catalog = case_catalog(xi, mode, c.workers);
  if (c.format == "json") {
    emit(c, render(catalog_to_json(catalog)), out);
    return kOk;
  }
  std::ostringstream text;
  text << "complexity " << xi << ", " << to_string(mode) << " mode: " << catalog.size() << " case keys\n";
  for (const auto& e : catalog) {
    std::vector<std::string> ambients;
    for (auto a : e.ambients) ambients.push_back(surface_name(a));
    std::string label = e.label.value_or("unlabeled");
    label.resize(std::max<std::size_t>(label.size(), 10), ' ');
    text << "  " << label << e.key.to_string() << "  [" << join(ambients, " ") << "]\n";
  }
  emit(c, text.str(), out);
  return kOk;
}

int check_embedding(const Common& c, const std::string& graph_spec, const std::string& h_text,
                    const std::string& c4_text, std::ostream& out) {
  const NamedGraph g = resolve_graph(graph_spec);
  const HandlebodyType h = parse_handlebody(h_text);
  const int xi = complexity(h);

  if (xi <= 2) {
    const SmallDecision d = small_complexity_decision(g.graph, h);
    if (c.format == "json") {
      emit(c, render(Json{{"graph", g.name}, {"handlebody", Json::array({h.genus, h.marks})},
                          {"verdict", to_string(d)}}),
           out);
    } else {
      emit(c, "graph " + g.name + " in " + handlebody_name(h) + ": " + to_string(d) + "\n", out);
    }
    return kOk;
  }

  std::array<std::string, 4> c4;
  if (!c4_text.empty()) {
    auto parts = split_commas(c4_text);
    if (parts.size() != 4) throw InputError("--c4 needs four comma-separated labels");
    std::copy(parts.begin(), parts.end(), c4.begin());
  } else if (auto found = default_c4(g.graph)) {
    c4 = *found;
  } else {
    throw InputError("graph " + g.name + " has no induced 4-cycle");
  }

  const EmbeddingReport report = check_all_cases(g.graph, c4, h, c.workers, g.name);
  if (c.format == "json") {
    emit(c, render(report_to_json(report)), out);
    return kOk;
  }
  std::ostringstream text;
  text << "graph " << g.name << " in " << handlebody_name(h) << " (C4 " << join({c4.begin(), c4.end()}, ",")
       << "): " << to_string(report.verdict) << "\n";
  if (report.shortcut) text << "  reason: " << *report.shortcut << "\n";
  for (const auto& cs : report.cases) {
    text << "  " << cs.label.value_or("unlabeled") << " " << cs.key.to_string() << ": " << to_string(cs.outcome)
         << "\n";
    for (const auto& line : cs.trace) text << "      " << line << "\n";
  }
  emit(c, text.str(), out);
  return kOk;
}

int verify_certificate_cmd(const Common& c, const std::string& cert_spec, const std::string& graph_spec,
                           std::ostream& out) {
  CurveCertificate cert = is_builtin_certificate(cert_spec)
                              ? builtin_certificate(cert_spec)
                              : certificate_from_json(read_json_file(cert_spec),
                                                      std::filesystem::path(cert_spec).stem().string());
  std::string target = graph_spec;
  if (target.empty()) {
    if (!is_builtin_certificate(cert_spec)) throw InputError("--graph is required for certificate files");
    target = builtin_certificate_target(cert_spec);
  }
  const NamedGraph g = resolve_graph(target);
  const CertificateCheck check = verify_certificate(cert, g.graph);

  if (c.format == "json") {
    Json mismatches = Json::array();
    for (const auto& [u, v] : check.mismatches) mismatches.push_back(Json::array({u, v}));
    Json j{{"certificate", cert.name},
           {"handlebody", Json::array({cert.handlebody.genus, cert.handlebody.marks})},
           {"graph", g.name},
           {"verified", check.ok},
           {"label_preserving", check.label_preserving},
           {"minimal_position", cert.minimal_position},
           {"mismatches", mismatches}};
    if (check.isomorphism) j["isomorphism"] = check.isomorphism->image;
    if (!check.reason.empty()) j["reason"] = check.reason;
    emit(c, render(j), out);
  } else {
    std::ostringstream text;
    text << "certificate " << cert.name << " (" << handlebody_name(cert.handlebody) << ") against " << g.name << ": "
         << (check.ok ? "VERIFIED" : "MISMATCH") << "\n";
    if (!check.reason.empty()) text << "  " << check.reason << "\n";
    for (const auto& [u, v] : check.mismatches) text << "  pair " << u << "-" << v << "\n";
    emit(c, text.str(), out);
  }
  return check.ok ? kOk : kVerificationFailed;
}

int raag_verify(const Common& c, const std::string& hom_path, std::ostream& out) {
  const HomSpec spec = hom_from_json(read_json_file(hom_path));
  const HomVerification v = verify_hom(spec.source, spec.target, spec.images);
  if (c.format == "json") {
    Json j{{"hom", hom_path}, {"valid", v.valid()}};
    if (v.failed_relator) {
      j["failed_relator"] = Json::array({v.failed_relator->first, v.failed_relator->second});
      j["failed_image"] = v.failed_image;
    }
    emit(c, render(j), out);
  } else if (v.valid()) {
    emit(c, "homomorphism verified: all " + std::to_string(spec.source.graph().size()) +
                " relators map to the identity\n",
         out);
  } else {
    emit(c, "relator [" + v.failed_relator->first + "," + v.failed_relator->second + "] maps to " + v.failed_image +
                ", not the identity\n",
         out);
  }
  return v.valid() ? kOk : kVerificationFailed;
}

int kernel_search(const Common& c, const std::string& hom_path, std::size_t max_len, std::uint64_t budget,
                  std::ostream& out) {
  const HomSpec spec = hom_from_json(read_json_file(hom_path));
  const HomVerification v = verify_hom(spec.source, spec.target, spec.images);
  if (!v.valid()) {
    throw VerificationError("not a homomorphism: relator [" + v.failed_relator->first + "," +
                            v.failed_relator->second + "] fails");
  }
  const KernelSearchResult r = kernel_ball_search(*v.hom, max_len, {budget, c.workers});
  if (c.format == "json") {
    Json j{{"hom", hom_path},
           {"max_len", max_len},
           {"normal_forms_checked", r.normal_forms_checked},
           {"witness", r.witness ? Json(format_word(spec.source, *r.witness)) : Json(nullptr)}};
    emit(c, render(j), out);
  } else if (r.witness) {
    emit(c, "kernel element found: " + format_word(spec.source, *r.witness) + "\n", out);
  } else {
    emit(c, "no kernel element <= " + std::to_string(max_len) + " (" + std::to_string(r.normal_forms_checked) +
                " normal forms checked)\n",
         out);
  }
  return r.witness ? kVerificationFailed : kOk;
}

int graph_props(const Common& c, const std::string& graph_spec, std::size_t thick, std::ostream& out) {
  const NamedGraph g = resolve_graph(graph_spec);
  Json j{{"graph", g.name},
         {"vertices", g.graph.order()},
         {"edges", g.graph.size()},
         {"max_clique", max_clique_size(g.graph)},
         {"triangle_free", is_triangle_free(g.graph)}};
  Json links = Json::object();
  for (const auto& v : g.graph.vertices()) links[v] = link(g.graph, v);
  j["links"] = links;
  if (thick > 0) {
    auto stars = has_thick_stars(g.graph, thick);
    Json t{{"N", thick}, {"holds", stars.has_value()}};
    if (stars) {
      Json ws = Json::array();
      for (const auto& w : *stars) ws.push_back(Json{{"vertex", w.vertex}, {"clique1", w.clique1}, {"clique2", w.clique2}});
      t["witnesses"] = ws;
    }
    j["thick_stars"] = t;
  }
  if (c.format == "json") {
    emit(c, render(j), out);
    return kOk;
  }
  std::ostringstream text;
  text << "graph " << g.name << ": " << g.graph.order() << " vertices, " << g.graph.size() << " edges\n"
       << "  max clique: " << max_clique_size(g.graph) << "\n"
       << "  triangle-free: " << (is_triangle_free(g.graph) ? "yes" : "no") << "\n";
  for (const auto& v : g.graph.vertices()) text << "  link(" << v << ") = {" << join(link(g.graph, v), ",") << "}\n";
  if (thick > 0) {
    const Json& t = j["thick_stars"];
    text << "  " << thick << "-thick stars: " << (t["holds"].get<bool>() ? "yes" : "no") << "\n";
    if (t.contains("witnesses")) {
      for (const auto& w : t["witnesses"]) {
        text << "    " << w["vertex"].get<std::string>() << ": {"
             << join(w["clique1"].get<std::vector<std::string>>(), ",") << "} {"
             << join(w["clique2"].get<std::vector<std::string>>(), ",") << "}\n";
      }
    }
  }
  emit(c, text.str(), out);
  return kOk;
}

int gamma1_table(const Common& c, int max_genus, int max_xi, std::ostream& out) {
  if (max_genus < 0 || max_xi < 0) throw InputError("--max-genus and --max-xi must be nonnegative");
  Json rows = Json::array();
  std::ostringstream text;
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 0; 3 * g - 3 + n <= max_xi; ++n) {
      const HandlebodyType h{g, n};
      const Gamma1Decision d = gamma1_embeddability(h);
      rows.push_back(Json{{"handlebody", Json::array({g, n})},
                          {"complexity", complexity(h)},
                          {"embeds", d.embeds},
                          {"justification", d.justification}});
      text << "  " << handlebody_name(h) << "  xi=" << complexity(h) << "  " << (d.embeds ? "embeds" : "no") << "  ("
           << join(d.justification, "; ") << ")\n";
    }
  }
  emit(c, c.format == "json" ? render(rows) : "Gamma1 embeddability\n" + text.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disk graphs of handlebodies and right-angled Artin groups"};
  app.name("hraag");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", common.out_path, "Write output to this file");
    sub->add_option("--workers", common.workers, "Worker threads (0 = all cores)");
  };

  int xi = 0;
  std::string mode = "handlebody";
  auto* enumerate = app.add_subcommand("enumerate-cases", "Enumerate C4 decompositions grouped by case");
  enumerate->add_option("--xi", xi, "Complexity")->required();
  enumerate->add_option("--mode", mode, "handlebody or surface");
  add_common(enumerate);

  std::string graph_spec, h_text, c4_text;
  auto* check = app.add_subcommand("check-embedding", "Run the obstruction case walk");
  check->add_option("--graph", graph_spec, "Built-in name or graph JSON file")->required();
  check->add_option("--handlebody", h_text, "g,n")->required();
  check->add_option("--c4", c4_text, "Induced 4-cycle a,b,c,d");
  add_common(check);

  std::string cert_spec;
  auto* verify = app.add_subcommand("verify-certificate", "Check a disk system against a graph");
  verify->add_option("--cert", cert_spec, "Built-in certificate name or JSON file")->required();
  verify->add_option("--graph", graph_spec, "Built-in name or graph JSON file");
  add_common(verify);

  std::string hom_path;
  auto* raag = app.add_subcommand("raag-verify", "Check that an assignment defines a homomorphism");
  raag->add_option("--hom", hom_path, "Homomorphism JSON file")->required();
  add_common(raag);

  std::size_t max_len = 0;
  std::uint64_t budget = 0;
  auto* kernel = app.add_subcommand("kernel-search", "Search the kernel ball of a homomorphism");
  kernel->add_option("--hom", hom_path, "Homomorphism JSON file")->required();
  kernel->add_option("--max-len", max_len, "Maximum normal form length")->required()->check(CLI::PositiveNumber);
  kernel->add_option("--budget", budget, "Maximum normal forms to check (0 = unlimited)");
  add_common(kernel);

  std::size_t thick = 0;
  auto* props = app.add_subcommand("graph-props", "Cliques, links and thick stars");
  props->add_option("--graph", graph_spec, "Built-in name or graph JSON file")->required();
  props->add_option("--thick-stars", thick, "Check N-thick stars")->check(CLI::PositiveNumber);
  add_common(props);

  int max_genus = 3, max_xi = 6;
  auto* table = app.add_subcommand("gamma1-table", "Gamma1 embeddability by handlebody type");
  table->add_option("--max-genus", max_genus, "Largest genus")->required();
  table->add_option("--max-xi", max_xi, "Largest complexity");
  add_common(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*enumerate) return enumerate_cases(common, xi, mode, out);
    if (*check) return check_embedding(common, graph_spec, h_text, c4_text, out);
    if (*verify) return verify_certificate_cmd(common, cert_spec, graph_spec, out);
    if (*raag) return raag_verify(common, hom_path, out);
    if (*kernel) return kernel_search(common, hom_path, max_len, budget, out);
    if (*props) return graph_props(common, graph_spec, thick, out);
    if (*table) return gamma1_table(common, max_genus, max_xi, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (" << e.nodes_visited() << " visited)\n";
    return kBudgetExceeded;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hraag::cli
