#pragma once

#include "goeritz/matrix.hpp"

#include <optional>
#include <vector>

namespace goeritz {

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Half-edges are encoded as 2·edge + end, where end 0 sits at `u` and end 1
/// at `v`. A rotation lists, per vertex, its half-edges in counterclockwise
/// order.
using Rotation = std::vector<std::vector<int>>;

constexpr int half_edge(int edge, int end) noexcept { return 2 * edge + end; }
constexpr int edge_of(int half) noexcept { return half / 2; }
constexpr int end_of(int half) noexcept { return half % 2; }

/// Undirected multigraph with loops, parallel edges and ±1 edge signs.
class SignedMultigraph {
 public:
  SignedMultigraph() = default;
  /// Throws BadEdge for out-of-range endpoints or signs other than ±1, and
  /// BadInput for a malformed rotation.
  SignedMultigraph(int vertex_count, std::vector<SignedEdge> edges,
                   std::optional<Rotation> rotation = std::nullopt);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  const SignedEdge& edge(int e) const;
  const std::optional<Rotation>& rotation() const noexcept { return rotation_; }

  /// Component index per vertex (isolated vertices are components).
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  /// Rotation that lists each vertex's half-edges in edge-id order.
  Rotation default_rotation() const;

  friend bool operator==(const SignedMultigraph&, const SignedMultigraph&) = default;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::optional<Rotation> rotation_;
};

enum class EdgeClass { Loop, Bridge, Ordinary };

/// Throws BadEdge for an invalid id.
EdgeClass classify_edge(const SignedMultigraph& g, int e);
/// Classification of every edge in one pass.
std::vector<EdgeClass> classify_edges(const SignedMultigraph& g);

enum class MinorMode { Delete, Contract };

/// Deletes or contracts edge `e`. Contraction merges the larger endpoint id
/// into the smaller and shifts higher ids down by one. The rotation is
/// dropped. Contracting a loop throws ContractLoop.
SignedMultigraph minor(const SignedMultigraph& g, int e, MinorMode mode);

/// Goeritz matrix of the bond matroid B(Γ) with respect to the vertex-star
/// 2-basis of all vertices other than `base`:
///   g_ij = Σ σ(e) over edges joining v_i and v_j,
///   g_ii = -Σ σ(e) over non-loop edges at v_i.
/// Rows follow vertex id order with `base` skipped. Throws Disconnected.
SymmetricIntMatrix goeritz_from_graph(const SignedMultigraph& g, int base = 0);

/// Signed graph on vertices v0..vm whose bond matroid has Goeritz matrix G
/// for the stars of v1..vm. Never creates loops. Carries the default rotation.
SignedMultigraph graph_from_matrix(const SymmetricIntMatrix& g);

struct ColoopSigns {
  int plus = 0;   // ι₊: loops of Γ with σ = -1
  int minus = 0;  // ι₋: loops of Γ with σ = +1
  friend bool operator==(const ColoopSigns&, const ColoopSigns&) = default;
};

/// Signs of the coloops of B(Γ), i.e. loops of Γ with the dual sign.
ColoopSigns coloop_signs(const SignedMultigraph& g);

/// Disjoint union; vertices of `h` are shifted past those of `g`.
SignedMultigraph disjoint_union(const SignedMultigraph& g, const SignedMultigraph& h);

}  // namespace goeritz
