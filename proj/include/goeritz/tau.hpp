#pragma once

#include "goeritz/laurent.hpp"
#include "goeritz/signed_graph.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace goeritz {

/// Picks one edge id out of the current graph's edges.
using EdgeChooser = std::function<std::size_t(std::span<const SignedEdge>)>;

/// Evaluates τ with a memo keyed on a normalized edge list. Loops are
/// stripped and bridges contracted before branching on an ordinary edge.
class TauEvaluator {
 public:
  LaurentPoly operator()(const SignedMultigraph& g);
  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };
  LaurentPoly connected(std::vector<int> key);
  std::unordered_map<std::vector<int>, LaurentPoly, KeyHash> memo_;
};

/// Thistlethwaite's τ with the split rule δ^{k-1}·Πτ[Γ_i], δ = -A^-2 - A^2.
LaurentPoly tau(const SignedMultigraph& g);

/// τ by plain deletion-contraction where `choose` picks each edge from the
/// current connected piece. No memoization; for cross-checks on small graphs.
LaurentPoly tau_with_order(const SignedMultigraph& g, const EdgeChooser& choose);

}  // namespace goeritz
