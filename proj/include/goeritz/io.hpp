#pragma once

#include "goeritz/diagram.hpp"
#include "goeritz/matrix.hpp"
#include "goeritz/signed_graph.hpp"

#include <json.hpp>

#include <string_view>

namespace goeritz {

using Json = nlohmann::ordered_json;

/// Parses text, throwing BadInput on malformed JSON.
Json parse_json(std::string_view text);

/// {"matrix": [[...], ...]}
SymmetricIntMatrix matrix_from_json(const Json& j);
Json to_json(const SymmetricIntMatrix& g);

/// {"vertices": n, "edges": [[u, v, s], ...], "rotation": [[h, ...], ...]}
SignedMultigraph graph_from_json(const Json& j);
Json to_json(const SignedMultigraph& g);

/// {"pd": [[a, b, c, d], ...]}
Diagram diagram_from_json(const Json& j);
Json to_json(const Diagram& d);

}  // namespace goeritz
