#include "goeritz/cyclotomic.hpp"
#include "goeritz/error.hpp"
#include "goeritz/mu.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace goeritz;
using goeritz::testing::Rng;

TEST_CASE("worked example") {
  const SymmetricIntMatrix g{{2, -1}, {-1, 2}};
  CHECK(mu(g) == A_pow(7) - A_pow(3) - A_pow(-5));
  CHECK(mu(g).to_string() == "-A^-5 - A^3 + A^7");
}

TEST_CASE("small cases") {
  CHECK(mu(SymmetricIntMatrix()) == LaurentPoly(1));
  CHECK(mu(SymmetricIntMatrix{{0}}) == loop_value());
  CHECK(mu(SymmetricIntMatrix{{1}}) == neg_A_pow(3));
  CHECK(mu(SymmetricIntMatrix{{-1}}) == neg_A_pow(-3));
  CHECK(mu(SymmetricIntMatrix{{-3}}) == A_pow(7) - A_pow(3) - A_pow(-5));
  for (int n = -6; n <= 6; ++n) {
    CHECK(mu(SymmetricIntMatrix{{n}}) == A_pow(n) * loop_value() + p_n(n));
  }
  // Relation (iii): diagonal matrices factor.
  CHECK(mu(SymmetricIntMatrix{{2, 0}, {0, -1}}) == mu(SymmetricIntMatrix{{2}}) * mu(SymmetricIntMatrix{{-1}}));
}

TEST_CASE("pivot independence on random matrices") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = goeritz::testing::random_symmetric(rng, 1, 4, -3, 3);
    const LaurentPoly expected = mu(g);
    for (int order = 0; order < 4; ++order) {
      const auto chooser = [&](std::span<const MuStep> steps) {
        return static_cast<std::size_t>(goeritz::testing::uniform(rng, 0, static_cast<int>(steps.size()) - 1));
      };
      CHECK(mu_with_steps(g, chooser) == expected);
    }
  }
}

TEST_CASE("invariance under simultaneous permutation and direct sums") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = goeritz::testing::random_symmetric(rng, 1, 4, -3, 3);
    const auto h = goeritz::testing::random_symmetric(rng, 1, 2, -3, 3);
    std::vector<std::size_t> perm(g.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mu(g.permuted(perm)) == mu(g));
    CHECK(mu(direct_sum(g, h)) == mu(g) * mu(h));
  }
}

TEST_CASE("determinant modulus") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = goeritz::testing::random_symmetric(rng, 1, 5, -3, 3);
    CHECK(det_modulus_check(g).holds());
  }
}

TEST_CASE("Jones from an orientable matrix") {
  const SymmetricIntMatrix g{{2, -1}, {-1, 2}};
  const auto j = jones_orientable(g);
  CHECK(j.to_string() == "-t^-4 + t^-3 + t^-1");
  CHECK(abs_at_minus_one(j) == 3);
  CHECK_THROWS_AS(jones_orientable(SymmetricIntMatrix{{-3}}), Error);
  CHECK(jones_with_euler(g, EulerNumber{0}) == j);
  CHECK(jones_with_euler(SymmetricIntMatrix{{-3}}, EulerNumber{-6}) == j);
  CHECK_THROWS_AS(jones_with_euler(g, EulerNumber{1}), Error);
}
