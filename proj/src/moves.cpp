#include "goeritz/moves.hpp"

#include "goeritz/error.hpp"
#include "slot_diagram.hpp"

#include <string>
#include <type_traits>

namespace goeritz {

namespace {

void wire(detail::SlotDiagram& sd, Slot a, Slot b) {
  sd[a.crossing].link[a.index] = b;
  sd[b.crossing].link[b.index] = a;
}

void check_arc(const Diagram& d, int arc) {
  if (arc < 1 || arc > d.arc_count()) {
    throw Error(ErrorKind::BadMoveSite, "arc " + std::to_string(arc) + " does not exist");
  }
}

// Kink crossing slots, counterclockwise.
constexpr int kW = 0, kS = 1, kE = 2, kN = 3;

Diagram apply_r1(const Diagram& d, const R1Move& m) {
  check_arc(d, m.arc);
  if ((m.side != 1 && m.side != -1) || (m.sign != 1 && m.sign != -1)) {
    throw Error(ErrorKind::BadMoveSite, "R1 side and sign must be +1 or -1");
  }
  auto sd = detail::to_slot_diagram(d);
  const int k = d.crossing_count();
  sd.emplace_back();
  const Slot tail = d.tail(m.arc), head = d.head(m.arc);
  wire(sd, tail, {k, kW});
  // Left: in at W, out at E, back in at N, out at S. Right mirrors N and S.
  const int loop_in = m.side > 0 ? kN : kS;
  const int exit = m.side > 0 ? kS : kN;
  wire(sd, {k, kE}, {k, loop_in});
  wire(sd, {k, exit}, head);
  auto& x = sd[k];
  x.dir[kW] = 1;
  x.dir[kE] = -1;
  x.dir[loop_in] = 1;
  x.dir[exit] = -1;
  x.under = detail::crossing_sign(kW, loop_in) == m.sign ? kW : kS;
  return detail::emit(std::move(sd));
}

// Walking the boundary of `face` with the face on the right, the first
// traversal of `arc`: {from, to}.
bool boundary_run(const Diagram& d, const FaceStructure& faces, int face, int arc, Slot& from, Slot& to) {
  for (const auto& c : faces.faces[face]) {
    const Slot s{c.crossing, (c.index + 1) % 4};
    if (d.arc_at(s) == arc) {
      from = s;
      to = d.partner(s);
      return true;
    }
  }
  return false;
}

Diagram apply_r2(const Diagram& d, const R2Move& m) {
  check_arc(d, m.arc_a);
  check_arc(d, m.arc_b);
  if (m.arc_a == m.arc_b) throw Error(ErrorKind::BadMoveSite, "R2 needs two different arcs");
  const FaceStructure faces = faces_and_genus(d);
  if (m.face < 0 || m.face >= faces.face_count()) {
    throw Error(ErrorKind::BadMoveSite, "face " + std::to_string(m.face) + " does not exist");
  }
  Slot from_a, to_a, from_b, to_b;
  if (!boundary_run(d, faces, m.face, m.arc_a, from_a, to_a) ||
      !boundary_run(d, faces, m.face, m.arc_b, from_b, to_b)) {
    throw Error(ErrorKind::BadMoveSite, "both arcs must border face " + std::to_string(m.face));
  }
  // With the face on the right of both runs, arc a dips through P (north to
  // south) and comes back up through Q; arc b runs east to west through Q then P.
  constexpr int kEast = 0, kNorth = 1, kWest = 2, kSouth = 3;
  auto sd = detail::to_slot_diagram(d);
  const int p = d.crossing_count(), q = p + 1;
  sd.resize(q + 1);
  wire(sd, from_a, {p, kNorth});
  wire(sd, {p, kSouth}, {q, kSouth});
  wire(sd, {q, kNorth}, to_a);
  wire(sd, from_b, {q, kEast});
  wire(sd, {q, kWest}, {p, kEast});
  wire(sd, {p, kWest}, to_b);
  const int da = d.tail(m.arc_a) == from_a ? 1 : -1;
  const int db = d.tail(m.arc_b) == from_b ? 1 : -1;
  sd[p].dir = {db, da, -db, -da};
  sd[q].dir = {db, -da, -db, da};
  sd[p].under = kEast;
  sd[q].under = kEast;
  return detail::emit(std::move(sd));
}

}  // namespace

Diagram apply_move(const Diagram& d, const Move& move) {
  return std::visit(
      [&](const auto& m) -> Diagram {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, R1Move>) {
          return apply_r1(d, m);
        } else {
          return apply_r2(d, m);
        }
      },
      move);
}

}  // namespace goeritz
