#include "goeritz/medial.hpp"

#include "goeritz/error.hpp"
#include "slot_diagram.hpp"

#include <algorithm>
#include <string>

namespace goeritz {

namespace {

// Crossing e sits on edge e drawn west (end 0) to east (end 1), with slots
// NE, NW, SW, SE counterclockwise. The strand leaving the corner after a
// half-edge starts on its counterclockwise side and ends on the clockwise
// side of the next half-edge.
constexpr int kNE = 0, kNW = 1, kSW = 2, kSE = 3;

Slot leaving(int h) { return {edge_of(h), end_of(h) == 0 ? kNW : kSE}; }
Slot arriving(int h) { return {edge_of(h), end_of(h) == 0 ? kSW : kNE}; }

}  // namespace

MedialDiagram medial(const SignedMultigraph& g) {
  if (!g.rotation()) throw Error(ErrorKind::NoRotation, "medial construction needs a rotation system");
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  if (g.edge_count() == 0) throw Error(ErrorKind::BadInput, "graph has no edges");

  const Rotation& rot = *g.rotation();
  detail::SlotDiagram sd(g.edge_count());
  for (const auto& around : rot) {
    for (std::size_t t = 0; t < around.size(); ++t) {
      const Slot a = leaving(around[t]);
      const Slot b = arriving(around[(t + 1) % around.size()]);
      sd[a.crossing].link[a.index] = b;
      sd[b.crossing].link[b.index] = a;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) sd[e].under = g.edge(e).sign > 0 ? kNE : kNW;

  std::vector<int> origin;
  MedialDiagram out{detail::emit(std::move(sd), &origin), 0, {}};
  const FaceStructure faces = faces_and_genus(out.diagram);
  // The vertex at end 0 of edge e sees the west corner (NW..SW), the one at
  // end 1 the east corner (SE..NE); PD corners are shifted by the origin.
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int h = rot[v].front();
    const int geometric = end_of(h) == 0 ? kNW : kSE;
    out.vertex_face.push_back(faces.face_at({edge_of(h), (geometric - origin[edge_of(h)] + 4) % 4}));
  }
  const Shading s0 = shading(out.diagram, 0);
  out.black_shading = s0.black[out.vertex_face[0]] ? 0 : 1;
  return out;
}

SymmetricIntMatrix medial_goeritz(const MedialDiagram& m, int base_vertex) {
  const int n = static_cast<int>(m.vertex_face.size());
  if (base_vertex < 0 || base_vertex >= n) {
    throw Error(ErrorKind::BadInput, "vertex " + std::to_string(base_vertex) + " does not exist");
  }
  // The vertices are black in black_shading, so white in the other one.
  const Shading s = shading(m.diagram, 1 - m.black_shading);
  const GoeritzMatrix gm = goeritz_from_diagram(m.diagram, s, m.vertex_face[base_vertex]);
  std::vector<std::size_t> perm;
  for (int v = 0; v < n; ++v) {
    if (v == base_vertex) continue;
    const auto it = std::find(gm.region_faces.begin(), gm.region_faces.end(), m.vertex_face[v]);
    perm.push_back(static_cast<std::size_t>(it - gm.region_faces.begin()));
  }
  return gm.matrix.permuted(perm);
}

}  // namespace goeritz
