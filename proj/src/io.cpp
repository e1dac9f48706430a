#include "goeritz/io.hpp"

#include "goeritz/error.hpp"

#include <string>

namespace goeritz {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::BadInput, std::string("expected an object with key \"") + key + "\"");
  }
  return j.at(key);
}

template <typename T>
T as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::BadInput, std::string(what) + " must be an integer");
  return j.get<T>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::BadInput, e.what());
  }
}

Diagram parse_pd(std::string_view json_text) { return diagram_from_json(parse_json(json_text)); }

SymmetricIntMatrix matrix_from_json(const Json& j) {
  const Json& rows = member(j, "matrix");
  if (!rows.is_array()) throw Error(ErrorKind::BadInput, "\"matrix\" must be a list of rows");
  std::vector<std::vector<SymmetricIntMatrix::Entry>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::BadInput, "matrix rows must be lists");
    auto& r = out.emplace_back();
    for (const auto& v : row) r.push_back(as_integer<SymmetricIntMatrix::Entry>(v, "matrix entry"));
  }
  return SymmetricIntMatrix(out);
}

Json to_json(const SymmetricIntMatrix& g) {
  Json rows = Json::array();
  for (const auto& row : g.rows()) rows.push_back(row);
  return Json{{"matrix", rows}};
}

SignedMultigraph graph_from_json(const Json& j) {
  const int n = as_integer<int>(member(j, "vertices"), "\"vertices\"");
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) throw Error(ErrorKind::BadInput, "\"edges\" must be a list");
  std::vector<SignedEdge> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::BadInput, "each edge must be [u, v, sign]");
    out.push_back({as_integer<int>(e[0], "edge endpoint"), as_integer<int>(e[1], "edge endpoint"),
                   as_integer<int>(e[2], "edge sign")});
  }
  std::optional<Rotation> rotation;
  if (j.contains("rotation") && !j.at("rotation").is_null()) {
    const Json& rot = j.at("rotation");
    if (!rot.is_array()) throw Error(ErrorKind::BadInput, "\"rotation\" must be a list per vertex");
    Rotation r;
    for (const auto& around : rot) {
      if (!around.is_array()) throw Error(ErrorKind::BadInput, "\"rotation\" entries must be lists");
      auto& v = r.emplace_back();
      for (const auto& h : around) v.push_back(as_integer<int>(h, "half-edge"));
    }
    rotation = std::move(r);
  }
  return SignedMultigraph(n, std::move(out), std::move(rotation));
}

Json to_json(const SignedMultigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign});
  Json out{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (g.rotation()) out["rotation"] = *g.rotation();
  return out;
}

Diagram diagram_from_json(const Json& j) {
  const Json& pd = member(j, "pd");
  if (!pd.is_array()) throw Error(ErrorKind::BadInput, "\"pd\" must be a list of crossings");
  PDCode out;
  for (const auto& x : pd) {
    if (!x.is_array() || x.size() != 4) throw Error(ErrorKind::BadInput, "each crossing must list 4 arcs");
    out.push_back({as_integer<int>(x[0], "arc label"), as_integer<int>(x[1], "arc label"),
                   as_integer<int>(x[2], "arc label"), as_integer<int>(x[3], "arc label")});
  }
  return Diagram::from_pd(std::move(out));
}

Json to_json(const Diagram& d) {
  Json pd = Json::array();
  for (const auto& x : d.pd()) pd.push_back(x);
  return Json{{"pd", pd}};
}

}  // namespace goeritz
