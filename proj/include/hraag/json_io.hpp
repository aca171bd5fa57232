#pragma once

#include <string>

#include "json.hpp"

#include "hraag/catalog.hpp"
#include "hraag/decomposition.hpp"
#include "hraag/graph.hpp"
#include "hraag/obstruction.hpp"
#include "hraag/raag.hpp"

namespace hraag {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into InputError with the given origin.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

SimplicialGraph graph_from_json(const Json& j);
Json graph_to_json(const SimplicialGraph& g);

CurveCertificate certificate_from_json(const Json& j, const std::string& name = "");
Json certificate_to_json(const CurveCertificate& c);

struct HomSpec {
  RaagPresentation source;
  RaagPresentation target;
  std::map<std::string, RaagWord> images;
};
HomSpec hom_from_json(const Json& j);

Json surface_to_json(SurfaceType t);
Json decomposition_to_json(const Decomposition& d);
Json catalog_to_json(const std::vector<CatalogEntry>& catalog);
Json report_to_json(const EmbeddingReport& r);

StandardEmbeddingData standard_embedding_from_json(const Json& j);

}  // namespace hraag
