#pragma once

#include "goeritz/diagram.hpp"

#include <variant>

namespace goeritz {

/// Adds a kink on `arc`, curling to the left (side = +1) or right (side = -1)
/// of its direction, with writhe sign `sign`.
struct R1Move {
  int arc = 1;
  int side = 1;
  int sign = 1;
};

/// Pushes arc_a over arc_b across `face`; both must border the face.
struct R2Move {
  int face = 0;
  int arc_a = 1;
  int arc_b = 2;
};

using Move = std::variant<R1Move, R2Move>;

/// A diagram of the same oriented link on the same surface. Arc labels and
/// face ids refer to `d`; the result is relabeled. Throws BadMoveSite.
Diagram apply_move(const Diagram& d, const Move& move);

}  // namespace goeritz
