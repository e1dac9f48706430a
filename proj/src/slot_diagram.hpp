#pragma once

// Crossings wired slot to slot, before arc labels exist. Medial construction
// and Reidemeister moves build one of these and emit a PD code from it.

#include "goeritz/diagram.hpp"

#include <array>
#include <vector>

namespace goeritz::detail {

struct SlotCrossing {
  std::array<Slot, 4> link{};  // slot k is wired to link[k]; slots are counterclockwise
  int under = 0;               // the under-strand uses slots under and under+2
  std::array<int, 4> dir{};    // +1 incoming, -1 outgoing, 0 not yet oriented
};

using SlotDiagram = std::vector<SlotCrossing>;

SlotDiagram to_slot_diagram(const Diagram& d);

/// Orients unoriented components, rotates every crossing so that slot 0 is
/// the incoming under-strand, labels arcs component by component and parses
/// the result. Component orientation survives the round trip except for a
/// one-arc component passing over its only crossing, which parses with its
/// canonical orientation. `pd_origin`, if given, receives per crossing the
/// slot that became PD slot 0.
Diagram emit(SlotDiagram sd, std::vector<int>* pd_origin = nullptr);

/// ε of a crossing whose under-strand enters at slot `under_in` and whose
/// over-strand enters at `over_in`.
inline int crossing_sign(int under_in, int over_in) { return (over_in - under_in + 4) % 4 == 3 ? 1 : -1; }

}  // namespace goeritz::detail
