#include "goeritz/mu.hpp"

#include "goeritz/error.hpp"

#include <string>

namespace goeritz {

namespace {

std::vector<SymmetricIntMatrix::Entry> memo_key(const SymmetricIntMatrix& g) {
  std::vector<SymmetricIntMatrix::Entry> key;
  key.reserve(g.entries().size() + 1);
  key.push_back(static_cast<SymmetricIntMatrix::Entry>(g.dim()));
  key.insert(key.end(), g.entries().begin(), g.entries().end());
  return key;
}

LaurentPoly twist_step(const SymmetricIntMatrix& g, std::size_t i, std::size_t j,
                       const LaurentPoly& mu_prime, const LaurentPoly& mu_double_prime) {
  const auto gij = g(i, j);
  return A_pow(static_cast<int>(-gij)) * mu_prime +
         p_n(static_cast<int>(-gij)) * mu_double_prime;
}

bool row_isolated(const SymmetricIntMatrix& g, std::size_t i) {
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (k != i && g(i, k) != 0) return false;
  }
  return true;
}

}  // namespace

std::size_t MuEvaluator::KeyHash::operator()(
    const std::vector<SymmetricIntMatrix::Entry>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : key) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly isolated_diagonal_factor(std::int64_t n) {
  const int k = static_cast<int>(n);
  return A_pow(k) * loop_value() + p_n(k);
}

LaurentPoly MuEvaluator::operator()(const SymmetricIntMatrix& g) {
  if (g.empty()) return LaurentPoly(1);
  auto key = memo_key(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LaurentPoly result;
  bool pivoted = false;
  for (std::size_t i = 0; i < g.dim() && !pivoted; ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (g(i, j) == 0) continue;
      const LaurentPoly a = (*this)(transform_prime(g, i, j));
      const LaurentPoly b = (*this)(transform_double_prime(g, i, j));
      result = twist_step(g, i, j, a, b);
      pivoted = true;
      break;
    }
  }
  if (!pivoted) {
    result = LaurentPoly(1);
    for (std::size_t i = 0; i < g.dim(); ++i) result *= isolated_diagonal_factor(g(i, i));
  }
  memo_.emplace(std::move(key), result);
  return result;
}

LaurentPoly mu(const SymmetricIntMatrix& g) {
  MuEvaluator eval;
  return eval(g);
}

LaurentPoly mu_with_steps(const SymmetricIntMatrix& g, const MuStepChooser& choose) {
  if (g.empty()) return LaurentPoly(1);
  std::vector<MuStep> steps;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (row_isolated(g, i)) steps.push_back({i, i});
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (g(i, j) != 0) {
        steps.push_back({i, j});
        steps.push_back({j, i});
      }
    }
  }
  const MuStep step = steps.at(choose(steps));
  if (step.i == step.j) {
    return isolated_diagonal_factor(g(step.i, step.i)) *
           mu_with_steps(delete_row_col(g, step.i), choose);
  }
  // (i, j) and (j, i) differ in which index survives in G''.
  return twist_step(g, step.i, step.j, mu_with_steps(transform_prime(g, step.i, step.j), choose),
                    mu_with_steps(transform_double_prime(g, step.i, step.j), choose));
}

DetModulusCheck det_modulus_check(const SymmetricIntMatrix& g) {
  const BigInt d = determinant(g);
  return {modulus_squared(eval_zeta8(mu(g))), d * d};
}

HalfTLaurent jones_orientable(const SymmetricIntMatrix& g) {
  if (!is_orientable_diag(g)) {
    throw Error(ErrorKind::NotOrientable, "a diagonal entry is odd, so the surface is not orientable");
  }
  return substitute_half_t(neg_A_pow(static_cast<int>(3 * g.upper_sum())) * mu(g));
}

HalfTLaurent jones_with_euler(const SymmetricIntMatrix& g, EulerNumber e) {
  if (e.value % 2 != 0) {
    throw Error(ErrorKind::OddEuler, "Euler number " + std::to_string(e.value) + " is odd");
  }
  return substitute_half_t(neg_A_pow(static_cast<int>(-3 * (e.value - g.upper_sum()))) * mu(g));
}

}  // namespace goeritz
