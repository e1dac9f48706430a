#pragma once

#include "goeritz/diagram.hpp"
#include "goeritz/signed_graph.hpp"

#include <vector>

namespace goeritz {

struct MedialDiagram {
  Diagram diagram;
  /// Index of the shading whose black faces are the vertices of the graph.
  int black_shading = 0;
  /// Face id of each vertex.
  std::vector<int> vertex_face;
};

/// Twists a ribbon neighborhood of the embedded graph: one crossing per edge
/// (crossing e is edge e), strands following the corners of the rotation.
/// The black Tait graph of the result is the input with the same signs.
/// Throws NoRotation, Disconnected, or BadInput for a graph without edges.
MedialDiagram medial(const SignedMultigraph& g);

/// Goeritz matrix of the medial diagram over the faces of the graph's
/// vertices, based at `base_vertex`, rows in vertex order with the base
/// skipped. For graph_from_matrix(G) and base 0 this is G again.
SymmetricIntMatrix medial_goeritz(const MedialDiagram& m, int base_vertex = 0);

}  // namespace goeritz
