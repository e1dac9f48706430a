#include "slot_diagram.hpp"

#include "goeritz/error.hpp"

#include <algorithm>

namespace goeritz::detail {

SlotDiagram to_slot_diagram(const Diagram& d) {
  SlotDiagram sd(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int k = 0; k < 4; ++k) {
      sd[c].link[k] = d.partner({c, k});
      sd[c].dir[k] = d.incoming({c, k}) ? 1 : -1;
    }
  }
  return sd;
}

Diagram emit(SlotDiagram sd, std::vector<int>* pd_origin) {
  const int n = static_cast<int>(sd.size());
  auto dir = [&](Slot s) -> int& { return sd[s.crossing].dir[s.index]; };
  auto across = [](Slot s) { return Slot{s.crossing, (s.index + 2) % 4}; };

  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      if (sd[c].dir[k] != 0) continue;
      const Slot start{c, k};
      Slot out = start;
      do {
        dir(out) = -1;
        const Slot in = sd[out.crossing].link[out.index];
        dir(in) = 1;
        out = across(in);
      } while (out != start);
    }
  }

  // rot[c]: the geometric slot that becomes PD slot 0.
  std::vector<int> rot(n);
  for (int c = 0; c < n; ++c) {
    const int u = sd[c].under;
    rot[c] = sd[c].dir[u] > 0 ? u : (u + 2) % 4;
  }

  std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
  int next = 1;
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const Slot start{c, (rot[c] + p) % 4};
      if (dir(start) > 0 || label[c][start.index] != 0) continue;
      const int lo = next;
      std::vector<Slot> heads;
      Slot out = start;
      do {
        const Slot in = sd[out.crossing].link[out.index];
        label[out.crossing][out.index] = label[in.crossing][in.index] = next++;
        heads.push_back(in);
        out = across(in);
      } while (out != start);
      auto over = [&](Slot s) { return (s.index - rot[s.crossing] + 4) % 2 == 1; };
      if (heads.size() == 2 && over(heads[0]) && over(heads[1])) {
        // Arc lo+i ends at heads[i]; the parser wants the passage at the lower
        // crossing to run lo -> lo+1.
        const int first = heads[0].crossing <= heads[1].crossing ? 0 : 1;
        if (first != 0) {
          for (Slot s : {heads[0], heads[1], sd[heads[0].crossing].link[heads[0].index],
                         sd[heads[1].crossing].link[heads[1].index]}) {
            int& l = label[s.crossing][s.index];
            l = l == lo ? lo + 1 : lo;
          }
        }
      }
    }
  }

  PDCode pd(n);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) pd[c][p] = label[c][(rot[c] + p) % 4];
  }
  if (pd_origin) *pd_origin = rot;
  return Diagram::from_pd(std::move(pd));
}

}  // namespace goeritz::detail
