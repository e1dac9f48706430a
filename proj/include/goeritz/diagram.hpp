#pragma once

#include "goeritz/laurent.hpp"
#include "goeritz/matrix.hpp"
#include "goeritz/mu.hpp"
#include "goeritz/signed_graph.hpp"

#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace goeritz {

/// A position at a crossing: slot `index` in 0..3, counterclockwise. The same
/// pair also names the corner (quadrant) between slots index and index+1.
struct Slot {
  int crossing = 0;
  int index = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};
using Corner = Slot;

using PDCode = std::vector<std::array<int, 4>>;

/// Link diagram on a closed orientable surface, given by a PD code. Each
/// crossing lists its four arc labels counterclockwise starting at the
/// incoming under-strand; that cyclic order is the rotation system of the
/// ambient surface. Labels run 1..2n and increase along each component.
class Diagram {
 public:
  /// Throws BadArcLabels, SplitDiagram or BadNumbering.
  static Diagram from_pd(PDCode pd);

  const PDCode& pd() const noexcept { return pd_; }
  int crossing_count() const noexcept { return static_cast<int>(pd_.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }

  int arc_at(Slot s) const { return pd_[s.crossing][s.index]; }
  /// The other end of the arc leaving `s`.
  Slot partner(Slot s) const;
  /// Where arc `label` starts and ends.
  Slot tail(int label) const { return ends_[label - 1][0]; }
  Slot head(int label) const { return ends_[label - 1][1]; }
  bool incoming(Slot s) const { return head(arc_at(s)) == s; }
  /// Slot (1 or 3) where the over-strand enters crossing c.
  int over_incoming(int c) const;
  /// Writhe sign ε(c).
  int writhe_sign(int c) const { return over_incoming(c) == 3 ? 1 : -1; }
  /// Arc labels of each component in traversal order, starting at its lowest.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }

 private:
  PDCode pd_;
  std::vector<std::array<Slot, 2>> ends_;  // per label: tail, head
  std::vector<std::array<Slot, 2>> occurrences_;
  std::vector<std::vector<int>> components_;
};

/// Reads {"pd": [[a,b,c,d], ...]}; throws BadInput for malformed JSON.
Diagram parse_pd(std::string_view json_text);

struct FaceStructure {
  /// Boundary corners of each face, traversed with the face on the right.
  /// Faces are ordered by smallest incident arc label; a tie on that arc puts
  /// the face on its left first.
  std::vector<std::vector<Corner>> faces;
  std::vector<std::array<int, 4>> face_of_corner;
  int genus = 0;

  int face_count() const noexcept { return static_cast<int>(faces.size()); }
  int face_at(Corner c) const { return face_of_corner[c.crossing][c.index]; }
};

FaceStructure faces_and_genus(const Diagram& d);

/// A checkerboard coloring; the black faces form the surface S.
struct Shading {
  int index = 0;  // 0: the face left of arc 1 is white; 1: its complement
  FaceStructure faces;
  std::vector<bool> black;  // per face id

  bool is_black(Corner c) const { return black[faces.face_at(c)]; }
  std::vector<int> black_faces() const;
  std::vector<int> white_faces() const;
  Shading opposite() const;
};

/// Both colorings, index 0 first; throws NotCheckerboardColorable.
std::pair<Shading, Shading> checkerboard(const Diagram& d);
Shading shading(const Diagram& d, int index);

/// Checkerboard sign σ(c): +1 when the black quadrants are corners 1 and 3,
/// the ones counterclockwise from the over-strand.
int checkerboard_sign(const Shading& s, int c);

struct TaitGraph {
  /// Vertex k is black face vertex_face[k]; edge c is crossing c.
  SignedMultigraph graph;
  std::vector<int> vertex_face;
};

TaitGraph tait_graph(const Diagram& d, const Shading& s);

struct GoeritzMatrix {
  SymmetricIntMatrix matrix;
  std::vector<int> region_faces;  // face id of each row
  int base_face = 0;
};

/// Goeritz matrix over the white regions other than `base_face`; throws
/// BadRegion unless base_face is white.
GoeritzMatrix goeritz_from_diagram(const Diagram& d, const Shading& s, int base_face);
/// Same with the default base: the white face bordering arc 1.
GoeritzMatrix goeritz_from_diagram(const Diagram& d, const Shading& s);
int default_base_face(const Diagram& d, const Shading& s);

struct WritheData {
  int w = 0;
  int w0 = 0;
  std::vector<int> epsilon;
  std::vector<bool> nugatory;  // S-nugatory: both white quadrants lie in one face
};

WritheData writhe_data(const Diagram& d, const Shading& s);

enum class CrossingType { I, II };

struct CrossingTypes {
  std::vector<CrossingType> types;
  EulerNumber euler;
};

/// Type I iff the quadrant between the two outgoing strands is white.
CrossingTypes crossing_types_and_euler(const Diagram& d, const Shading& s);

/// Kauffman bracket by enumerating all 2^n states; throws PositiveGenus.
LaurentPoly bracket_state_sum(const Diagram& d);
/// Jones polynomial from the state sum; throws PositiveGenus.
HalfTLaurent jones(const Diagram& d);
/// (-A)^{-3w} τ[Γ] at t^(1/2) = A^-2 for the Tait graph of `s`.
HalfTLaurent nu(const Diagram& d, const Shading& s);

struct DeterminantSet {
  BigInt det_g;        // |det| of the shading-0 Goeritz matrix
  BigInt det_g_prime;  // |det| of the shading-1 Goeritz matrix
  BigInt nu_abs;       // |ν(-1)| for the shading-0 Tait graph
  BigInt nu_abs_prime;
  /// |ν_Γ(-1)| = |det G'| and |ν_Γ'(-1)| = |det G|.
  bool pairing_holds() const { return nu_abs == det_g_prime && nu_abs_prime == det_g; }
};

DeterminantSet determinant_set(const Diagram& d);

}  // namespace goeritz
