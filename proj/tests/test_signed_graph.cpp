#include "goeritz/error.hpp"
#include "goeritz/signed_graph.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace goeritz;
using goeritz::testing::Rng;

namespace {

SignedMultigraph theta(int sign) { return SignedMultigraph(2, {{0, 1, sign}, {0, 1, sign}, {0, 1, sign}}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(kind_of([] { SignedMultigraph(2, {{0, 2, 1}}); }) == ErrorKind::BadEdge);
  CHECK(kind_of([] { SignedMultigraph(2, {{0, 1, 0}}); }) == ErrorKind::BadEdge);
  CHECK(kind_of([] { SignedMultigraph(2, {{0, 1, 1}}, Rotation{{0}, {0}}); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { SignedMultigraph(2, {{0, 1, 1}}, Rotation{{0}, {}}); }) == ErrorKind::BadInput);
  CHECK_NOTHROW(SignedMultigraph(2, {{0, 1, 1}}, Rotation{{0}, {1}}));
}

TEST_CASE("edge classes") {
  CHECK(classify_edge(SignedMultigraph(1, {{0, 0, 1}}), 0) == EdgeClass::Loop);
  CHECK(classify_edge(SignedMultigraph(2, {{0, 1, 1}}), 0) == EdgeClass::Bridge);
  const SignedMultigraph triangle(3, {{0, 1, 1}, {1, 2, -1}, {2, 0, 1}});
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(triangle, e) == EdgeClass::Ordinary);
  CHECK(kind_of([&] { classify_edge(triangle, 3); }) == ErrorKind::BadEdge);
}

TEST_CASE("one-pass classification agrees with the connectivity test") {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = goeritz::testing::random_graph(rng, 1, 7, 10);
    const auto all = classify_edges(g);
    for (int e = 0; e < g.edge_count(); ++e) CHECK(all[e] == classify_edge(g, e));
  }
}

TEST_CASE("minors") {
  const SignedMultigraph triangle(3, {{0, 1, 1}, {1, 2, -1}, {2, 0, 1}});
  const auto c = minor(triangle, 0, MinorMode::Contract);
  CHECK(c == SignedMultigraph(2, {{0, 1, -1}, {1, 0, 1}}));
  const SignedMultigraph pair(2, {{0, 1, 1}, {0, 1, -1}});
  const auto d = minor(pair, 0, MinorMode::Delete);
  CHECK(d == SignedMultigraph(2, {{0, 1, -1}}));
  CHECK(classify_edge(d, 0) == EdgeClass::Bridge);
  const auto t = minor(theta(1), 1, MinorMode::Contract);
  CHECK(t == SignedMultigraph(1, {{0, 0, 1}, {0, 0, 1}}));
  CHECK(kind_of([&] { minor(t, 0, MinorMode::Contract); }) == ErrorKind::ContractLoop);
  // The larger id merges into the smaller; higher ids shift down.
  const SignedMultigraph path(4, {{1, 3, 1}, {3, 2, -1}, {0, 3, 1}});
  CHECK(minor(path, 0, MinorMode::Contract) == SignedMultigraph(3, {{1, 2, -1}, {0, 1, 1}}));
}

TEST_CASE("Goeritz matrices of graphs") {
  CHECK(goeritz_from_graph(theta(-1), 0) == SymmetricIntMatrix{{3}});
  CHECK(goeritz_from_graph(SignedMultigraph(2, {{0, 1, 1}}), 0) == SymmetricIntMatrix{{-1}});
  CHECK(goeritz_from_graph(SignedMultigraph(2, {{0, 1, 1}}), 1) == SymmetricIntMatrix{{-1}});
  CHECK(goeritz_from_graph(SignedMultigraph(2, {{0, 1, 1}, {1, 1, 1}}), 0) == SymmetricIntMatrix{{-1}});
  const SymmetricIntMatrix g{{2, -1}, {-1, 2}};
  CHECK(goeritz_from_graph(graph_from_matrix(g), 0) == g);
  CHECK(kind_of([] { goeritz_from_graph(SignedMultigraph(2, {}), 0); }) == ErrorKind::Disconnected);
}

TEST_CASE("realization") {
  const auto one = graph_from_matrix(SymmetricIntMatrix{{2}});
  CHECK(one == SignedMultigraph(2, {{0, 1, -1}, {0, 1, -1}}, Rotation{{0, 2}, {1, 3}}));
  const auto empty = graph_from_matrix(SymmetricIntMatrix());
  CHECK(empty.vertex_count() == 1);
  CHECK(empty.edge_count() == 0);
  // Zero row sum and zero off-diagonals: connectivity needs a +1/-1 pair.
  const auto zero = graph_from_matrix(SymmetricIntMatrix{{0}});
  CHECK(zero.edges() == std::vector<SignedEdge>{{0, 1, 1}, {0, 1, -1}});
  CHECK(goeritz_from_graph(zero, 0) == SymmetricIntMatrix{{0}});
}

TEST_CASE("realization round-trips") {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = goeritz::testing::random_symmetric(rng, 0, 5, -4, 4);
    const auto r = graph_from_matrix(g);
    CHECK(r.is_connected());
    CHECK(coloop_signs(r) == ColoopSigns{0, 0});
    CHECK(goeritz_from_graph(r, 0) == g);
  }
}

TEST_CASE("coloop signs") {
  CHECK(coloop_signs(theta(1)) == ColoopSigns{0, 0});
  CHECK(coloop_signs(SignedMultigraph(1, {{0, 0, 1}})) == ColoopSigns{0, 1});
  CHECK(coloop_signs(SignedMultigraph(1, {{0, 0, 1}, {0, 0, -1}})) == ColoopSigns{1, 1});
}
