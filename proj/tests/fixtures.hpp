#pragma once

#include "goeritz/diagram.hpp"
#include "goeritz/io.hpp"
#include "goeritz/moves.hpp"
#include "generators.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef GOERITZ_FIXTURE_DIR
#error "GOERITZ_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace goeritz::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GOERITZ_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Diagram load_diagram(const std::string& name) { return parse_pd(read_fixture(name + ".pd.json")); }

struct DiagramFixture {
  std::string name;
  int genus;
};

/// Every checkerboard-colorable diagram fixture.
inline const std::vector<DiagramFixture>& colorable_fixtures() {
  static const std::vector<DiagramFixture> all{
      {"unknot-kink", 0}, {"trefoil", 0},      {"figure-eight", 0}, {"hopf", 0},
      {"5_2", 0},         {"nugatory-sum", 0}, {"torus-medial", 1},
  };
  return all;
}

inline std::set<HalfTLaurent> nu_set(const Diagram& d) {
  const auto [s0, s1] = checkerboard(d);
  return {nu(d, s0), nu(d, s1)};
}

// A random R1 or R2 site; R2 sites are picked from the boundary of a random
// face and may be rejected.
inline Move random_move(Rng& rng, const Diagram& d) {
  if (uniform(rng, 0, 1) == 0) {
    return R1Move{uniform(rng, 1, d.arc_count()), uniform(rng, 0, 1) ? 1 : -1, uniform(rng, 0, 1) ? 1 : -1};
  }
  const FaceStructure fs = faces_and_genus(d);
  const int face = uniform(rng, 0, fs.face_count() - 1);
  std::vector<int> arcs;
  for (const Corner& c : fs.faces[face]) {
    arcs.push_back(d.arc_at(c));
    arcs.push_back(d.arc_at({c.crossing, (c.index + 1) % 4}));
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  const int a = arcs[uniform(rng, 0, static_cast<int>(arcs.size()) - 1)];
  const int b = arcs[uniform(rng, 0, static_cast<int>(arcs.size()) - 1)];
  return R2Move{face, a, b};
}

}  // namespace goeritz::testing
