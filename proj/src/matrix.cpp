#include "goeritz/matrix.hpp"

#include "goeritz/error.hpp"

#include <string>
#include <utility>

namespace goeritz {

namespace {

void check_pair(const SymmetricIntMatrix& g, std::size_t i, std::size_t j) {
  if (i >= g.dim() || j >= g.dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside a " + std::to_string(g.dim()) + "x" +
                                                std::to_string(g.dim()) + " matrix");
  }
  if (i == j) throw Error(ErrorKind::DiagonalPivot, "transform requires i != j");
}

}  // namespace

SymmetricIntMatrix::SymmetricIntMatrix(const std::vector<std::vector<Entry>>& rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error(ErrorKind::BadInput, "matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (a_[i * n_ + j] != a_[j * n_ + i]) {
        throw Error(ErrorKind::BadInput, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
      }
    }
  }
}

SymmetricIntMatrix::SymmetricIntMatrix(std::initializer_list<std::initializer_list<Entry>> rows)
    : SymmetricIntMatrix([&] {
        std::vector<std::vector<Entry>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return v;
      }()) {}

void SymmetricIntMatrix::set(std::size_t i, std::size_t j, Entry v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

std::vector<std::vector<SymmetricIntMatrix::Entry>> SymmetricIntMatrix::rows() const {
  std::vector<std::vector<Entry>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return out;
}

SymmetricIntMatrix::Entry SymmetricIntMatrix::upper_sum() const {
  Entry s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) s += a_[i * n_ + j];
  }
  return s;
}

bool SymmetricIntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (a_[i * n_ + j] != 0) return false;
    }
  }
  return true;
}

SymmetricIntMatrix SymmetricIntMatrix::permuted(std::span<const std::size_t> perm) const {
  SymmetricIntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.a_[i * n_ + j] = a_[perm[i] * n_ + perm[j]];
  }
  return out;
}

SymmetricIntMatrix direct_sum(const SymmetricIntMatrix& g, const SymmetricIntMatrix& h) {
  const std::size_t n = g.dim();
  SymmetricIntMatrix out(n + h.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.set(i, j, g(i, j));
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = i; j < h.dim(); ++j) out.set(n + i, n + j, h(i, j));
  }
  return out;
}

SymmetricIntMatrix transform_prime(const SymmetricIntMatrix& g, std::size_t i, std::size_t j) {
  check_pair(g, i, j);
  SymmetricIntMatrix out = g;
  const auto gij = g(i, j);
  out.set(i, i, g(i, i) + gij);
  out.set(j, j, g(j, j) + gij);
  out.set(i, j, 0);
  return out;
}

SymmetricIntMatrix transform_double_prime(const SymmetricIntMatrix& g, std::size_t i, std::size_t j) {
  check_pair(g, i, j);
  SymmetricIntMatrix merged = g;
  merged.set(i, i, g(i, i) + g(j, j) + 2 * g(i, j));
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (k != i && k != j) merged.set(i, k, g(i, k) + g(j, k));
  }
  return delete_row_col(merged, j);
}

SymmetricIntMatrix delete_row_col(const SymmetricIntMatrix& g, std::size_t i) {
  if (i >= g.dim()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "row " + std::to_string(i) + " outside a matrix of dimension " + std::to_string(g.dim()));
  }
  const std::size_t n = g.dim();
  SymmetricIntMatrix out(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = r, cc = rr; c < n; ++c) {
      if (c == i) continue;
      out.set(rr, cc, g(r, c));
      ++cc;
    }
    ++rr;
  }
  return out;
}

BigInt determinant(const SymmetricIntMatrix& g) {
  const std::size_t n = g.dim();
  if (n == 0) return 1;
  std::vector<BigInt> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = g(i, j);
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return m[r * n + c]; };
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

bool is_orientable_diag(const SymmetricIntMatrix& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g(i, i) % 2 != 0) return false;
  }
  return true;
}

}  // namespace goeritz
