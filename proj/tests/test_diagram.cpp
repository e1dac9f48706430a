#include "goeritz/cyclotomic.hpp"
#include "goeritz/diagram.hpp"
#include "goeritz/error.hpp"
#include "goeritz/mu.hpp"
#include "goeritz/tau.hpp"
#include "fixtures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace goeritz;
using goeritz::testing::colorable_fixtures;
using goeritz::testing::load_diagram;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadInput;
}

HalfTLaurent half_t(std::vector<std::pair<int, BigInt>> terms) { return HalfTLaurent::from_terms(std::move(terms)); }

const LaurentPoly kTrefoilBracket = A_pow(7) - A_pow(3) - A_pow(-5);
const HalfTLaurent kTrefoilJones = half_t({{-8, -1}, {-6, 1}, {-2, 1}});

}  // namespace

TEST_CASE("parsing") {
  const Diagram t = load_diagram("trefoil");
  CHECK(t.crossing_count() == 3);
  CHECK(t.components() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}});
  CHECK(t.tail(1) == Slot{1, 3});
  CHECK(t.head(1) == Slot{0, 0});
  const Diagram k = load_diagram("unknot-kink");
  CHECK(k.components().size() == 1);
  CHECK(load_diagram("hopf").components() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

  CHECK(kind_of([] { Diagram::from_pd({{1, 2, 3, 4}}); }) == ErrorKind::BadArcLabels);
  CHECK(kind_of([] { Diagram::from_pd({{1, 1, 1, 2}}); }) == ErrorKind::BadArcLabels);
  CHECK(kind_of([] { Diagram::from_pd({}); }) == ErrorKind::BadArcLabels);
  CHECK(kind_of([] { Diagram::from_pd({{1, 2, 2, 1}, {3, 4, 4, 3}}); }) == ErrorKind::SplitDiagram);
  // Trefoil with labels 2 and 3 swapped.
  CHECK(kind_of([] { Diagram::from_pd({{1, 4, 3, 5}, {2, 6, 4, 1}, {5, 3, 6, 2}}); }) == ErrorKind::BadNumbering);
  CHECK(kind_of([] { parse_pd("{\"pd\": [[1, 2, 2]]}"); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { parse_pd("not json"); }) == ErrorKind::BadInput);
}

TEST_CASE("writhe signs") {
  const Diagram t = load_diagram("trefoil");
  for (int c = 0; c < 3; ++c) CHECK(t.writhe_sign(c) == -1);
  CHECK(load_diagram("unknot-kink").writhe_sign(0) == -1);
  CHECK(Diagram::from_pd({{1, 1, 2, 2}}).writhe_sign(0) == 1);
  const Diagram e = load_diagram("figure-eight");
  int w = 0;
  for (int c = 0; c < 4; ++c) w += e.writhe_sign(c);
  CHECK(w == 0);
}

TEST_CASE("faces and genus") {
  const auto t = faces_and_genus(load_diagram("trefoil"));
  CHECK(t.face_count() == 5);
  CHECK(t.genus == 0);
  const auto k = faces_and_genus(load_diagram("unknot-kink"));
  CHECK(k.face_count() == 3);
  CHECK(k.genus == 0);
  const auto m = faces_and_genus(load_diagram("torus-medial"));
  CHECK(m.face_count() == 2);
  CHECK(m.genus == 1);
  CHECK(faces_and_genus(load_diagram("torus-noncolorable")).genus == 1);
  for (const auto& f : colorable_fixtures()) {
    const Diagram d = load_diagram(f.name);
    const auto fs = faces_and_genus(d);
    CHECK(fs.genus == f.genus);
    int corners = 0;
    for (const auto& face : fs.faces) corners += static_cast<int>(face.size());
    CHECK(corners == 4 * d.crossing_count());
  }
}

TEST_CASE("checkerboard shadings") {
  const Diagram t = load_diagram("trefoil");
  const auto [s0, s1] = checkerboard(t);
  CHECK(s0.black_faces().size() == 3);
  CHECK(s0.white_faces().size() == 2);
  CHECK(s1.black_faces().size() == 2);
  CHECK(s1.white_faces().size() == 3);
  const Slot h = t.head(1);
  CHECK_FALSE(s0.is_black({h.crossing, (h.index + 3) % 4}));
  CHECK(kind_of([] { checkerboard(load_diagram("torus-noncolorable")); }) == ErrorKind::NotCheckerboardColorable);
  for (const auto& f : colorable_fixtures()) {
    const Diagram d = load_diagram(f.name);
    const auto [a, b] = checkerboard(d);
    for (int c = 0; c < d.crossing_count(); ++c) {
      for (int i = 0; i < 4; ++i) CHECK(a.is_black({c, i}) != a.is_black({c, (i + 1) % 4}));
    }
    CHECK(b.black == a.opposite().black);
  }
}

TEST_CASE("Tait graphs") {
  const Diagram t = load_diagram("trefoil");
  const auto theta = tait_graph(t, shading(t, 1)).graph;
  CHECK(theta.vertex_count() == 2);
  CHECK(theta.edge_count() == 3);
  for (const auto& e : theta.edges()) {
    CHECK(e.u != e.v);
    CHECK(e.sign == 1);
  }
  const auto triangle = tait_graph(t, shading(t, 0)).graph;
  CHECK(triangle.vertex_count() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(triangle.edge(e).sign == -1);
    CHECK(classify_edge(triangle, e) == EdgeClass::Ordinary);
  }
  const Diagram k = load_diagram("unknot-kink");
  CHECK(classify_edge(tait_graph(k, shading(k, 0)).graph, 0) == EdgeClass::Loop);
  CHECK(classify_edge(tait_graph(k, shading(k, 1)).graph, 0) == EdgeClass::Bridge);
}

TEST_CASE("Goeritz matrices of diagrams") {
  const Diagram t = load_diagram("trefoil");
  CHECK(goeritz_from_diagram(t, shading(t, 1)).matrix == SymmetricIntMatrix{{2, -1}, {-1, 2}});
  CHECK(goeritz_from_diagram(t, shading(t, 0)).matrix == SymmetricIntMatrix{{-3}});
  const auto s1 = shading(t, 1);
  CHECK(kind_of([&] { goeritz_from_diagram(t, s1, s1.black_faces()[0]); }) == ErrorKind::BadRegion);
  CHECK(kind_of([&] { goeritz_from_diagram(t, s1, 99); }) == ErrorKind::BadRegion);
  const Diagram k = load_diagram("unknot-kink");
  CHECK(goeritz_from_diagram(k, shading(k, 1)).matrix.empty());
  CHECK(goeritz_from_diagram(k, shading(k, 0)).matrix == SymmetricIntMatrix{{-1}});
}

TEST_CASE("diagram and graph Goeritz matrices agree for every base") {
  for (const auto& f : colorable_fixtures()) {
    const Diagram d = load_diagram(f.name);
    for (int index : {0, 1}) {
      const Shading s = shading(d, index);
      const auto dual = tait_graph(d, s.opposite());
      for (std::size_t v = 0; v < dual.vertex_face.size(); ++v) {
        CAPTURE(f.name);
        CHECK(goeritz_from_diagram(d, s, dual.vertex_face[v]).matrix ==
              goeritz_from_graph(dual.graph, static_cast<int>(v)));
      }
    }
  }
}

TEST_CASE("writhe data and nugatory crossings") {
  const Diagram t = load_diagram("trefoil");
  const auto wt = writhe_data(t, shading(t, 0));
  CHECK(wt.w == -3);
  CHECK(wt.w0 == 0);
  const Diagram k = load_diagram("unknot-kink");
  CHECK(writhe_data(k, shading(k, 1)).w0 == -1);
  CHECK(writhe_data(k, shading(k, 0)).w0 == 0);
  const Diagram sum = load_diagram("nugatory-sum");
  int nugatory = 0;
  for (int index : {0, 1}) {
    const auto wd = writhe_data(sum, shading(sum, index));
    for (bool b : wd.nugatory) nugatory += b;
  }
  CHECK(nugatory == 1);
  // On the sphere, S-nugatory crossings are exactly the bridges of Γ(S).
  for (const auto& f : colorable_fixtures()) {
    if (f.genus != 0) continue;
    const Diagram d = load_diagram(f.name);
    for (int index : {0, 1}) {
      const Shading s = shading(d, index);
      const auto wd = writhe_data(d, s);
      const auto cls = classify_edges(tait_graph(d, s).graph);
      for (int c = 0; c < d.crossing_count(); ++c) CHECK(wd.nugatory[c] == (cls[c] == EdgeClass::Bridge));
    }
  }
}

TEST_CASE("crossing types and Euler numbers") {
  const Diagram t = load_diagram("trefoil");
  const auto oriented = crossing_types_and_euler(t, shading(t, 1));
  for (auto type : oriented.types) CHECK(type == CrossingType::I);
  CHECK(oriented.euler.value == 0);
  CHECK(crossing_types_and_euler(t, shading(t, 0)).euler.value == -6);
  for (const auto& f : colorable_fixtures()) {
    const Diagram d = load_diagram(f.name);
    for (int index : {0, 1}) {
      const Shading s = shading(d, index);
      const auto ct = crossing_types_and_euler(d, s);
      CHECK(ct.euler.value % 2 == 0);
      for (int c = 0; c < d.crossing_count(); ++c) {
        if (ct.types[c] == CrossingType::I) CHECK(d.writhe_sign(c) == -checkerboard_sign(s, c));
        if (ct.types[c] == CrossingType::II) CHECK(d.writhe_sign(c) == checkerboard_sign(s, c));
      }
    }
  }
}

TEST_CASE("state-sum bracket and Jones") {
  CHECK(bracket_state_sum(load_diagram("unknot-kink")) == -A_pow(-3));
  CHECK(bracket_state_sum(load_diagram("trefoil")) == kTrefoilBracket);
  CHECK(bracket_state_sum(load_diagram("hopf")) == -A_pow(4) - A_pow(-4));
  CHECK(jones(load_diagram("unknot-kink")) == half_t({{0, 1}}));
  CHECK(jones(load_diagram("trefoil")) == kTrefoilJones);
  CHECK(jones(load_diagram("hopf")) == half_t({{-5, -1}, {-1, -1}}));
  CHECK(jones(load_diagram("figure-eight")) == half_t({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  CHECK(jones(load_diagram("5_2")) == half_t({{-12, -1}, {-10, 1}, {-8, -1}, {-6, 2}, {-4, -1}, {-2, 1}}));
  CHECK(jones(load_diagram("nugatory-sum")) ==
        half_t({{-16, 1}, {-14, -2}, {-12, 1}, {-10, -2}, {-8, 2}, {-4, 1}}));
  CHECK(kind_of([] { bracket_state_sum(load_diagram("torus-medial")); }) == ErrorKind::PositiveGenus);
  CHECK(kind_of([] { jones(load_diagram("torus-medial")); }) == ErrorKind::PositiveGenus);
}

TEST_CASE("bracket, tau and mu agree on genus-0 fixtures") {
  for (const auto& f : colorable_fixtures()) {
    if (f.genus != 0) continue;
    CAPTURE(f.name);
    const Diagram d = load_diagram(f.name);
    const LaurentPoly bracket = bracket_state_sum(d);
    for (int index : {0, 1}) {
      const Shading s = shading(d, index);
      CHECK(tau(tait_graph(d, s).graph) == bracket);
      const int w0 = writhe_data(d, s).w0;
      for (int base : s.white_faces()) {
        CHECK(neg_A_pow(3 * w0) * mu(goeritz_from_diagram(d, s, base).matrix) == bracket);
      }
      CHECK(nu(d, s) == jones(d));
      const auto g = goeritz_from_diagram(d, s).matrix;
      CHECK(jones_with_euler(g, crossing_types_and_euler(d, s).euler) == jones(d));
      // Orientable surface whose boundary orientation is the link's.
      const auto types = crossing_types_and_euler(d, s).types;
      if (is_orientable_diag(g) && std::ranges::all_of(types, [](auto x) { return x == CrossingType::I; })) {
        const auto wd = writhe_data(d, s);
        CHECK(wd.w - wd.w0 == -g.upper_sum());
        CHECK(jones_orientable(g) == jones(d));
      }
    }
  }
}

TEST_CASE("nu on the torus fixture") {
  const Diagram d = load_diagram("torus-medial");
  const auto [s0, s1] = checkerboard(d);
  CHECK(nu(d, s0) != nu(d, s1));
  CHECK(kind_of([] { shading(load_diagram("torus-noncolorable"), 0); }) == ErrorKind::NotCheckerboardColorable);
}

TEST_CASE("determinant sets") {
  const auto t = determinant_set(load_diagram("trefoil"));
  CHECK(t.det_g == 3);
  CHECK(t.det_g_prime == 3);
  const auto k = determinant_set(load_diagram("unknot-kink"));
  CHECK(k.det_g == 1);
  CHECK(k.det_g_prime == 1);
  for (const auto& f : colorable_fixtures()) {
    CAPTURE(f.name);
    CHECK(determinant_set(load_diagram(f.name)).pairing_holds());
  }
}
