#pragma once

#include "goeritz/cyclotomic.hpp"
#include "goeritz/laurent.hpp"
#include "goeritz/matrix.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace goeritz {

/// A step of the μ recursion: an off-diagonal pivot (i != j), or an isolated
/// diagonal entry (i == j) whose row is otherwise zero.
struct MuStep {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const MuStep&, const MuStep&) = default;
};

/// Chooses one of the admissible steps by index.
using MuStepChooser = std::function<std::size_t(std::span<const MuStep>)>;

/// Evaluates μ with a memo table keyed on the exact matrix. One instance may
/// be reused across calls; it is not safe to share between threads.
class MuEvaluator {
 public:
  LaurentPoly operator()(const SymmetricIntMatrix& g);
  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<SymmetricIntMatrix::Entry>& key) const noexcept;
  };
  std::unordered_map<std::vector<SymmetricIntMatrix::Entry>, LaurentPoly, KeyHash> memo_;
};

/// μ[G] with the default pivot rule (lexicographically smallest nonzero
/// off-diagonal entry).
LaurentPoly mu(const SymmetricIntMatrix& g);

/// μ[G] where every recursion step is picked by `choose` among all
/// admissible steps. No memoization; meant for cross-checking pivot
/// independence on small matrices.
LaurentPoly mu_with_steps(const SymmetricIntMatrix& g, const MuStepChooser& choose);

/// The factor A^n(-A^-2 - A^2) + P_n(A) of an isolated diagonal entry n.
LaurentPoly isolated_diagonal_factor(std::int64_t n);

struct DetModulusCheck {
  ZSqrt2 mu_modulus_squared;
  BigInt det_squared;
  bool holds() const { return mu_modulus_squared.q == 0 && mu_modulus_squared.p == det_squared; }
};

/// (|μ[G](ζ)|², det(G)²).
DetModulusCheck det_modulus_check(const SymmetricIntMatrix& g);

/// Signed Euler number e(S,L) of a checkerboard surface; always even.
struct EulerNumber {
  std::int64_t value = 0;
};

/// Jones polynomial of the link whose orientable checkerboard surface has
/// Goeritz matrix G; throws NotOrientable if some diagonal entry is odd.
HalfTLaurent jones_orientable(const SymmetricIntMatrix& g);

/// Jones polynomial recovered from G and the surface's Euler number;
/// throws OddEuler for odd e.
HalfTLaurent jones_with_euler(const SymmetricIntMatrix& g, EulerNumber e);

}  // namespace goeritz
