#pragma once

#include "goeritz/laurent.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace goeritz {

/// Square symmetric integer matrix; the 0×0 matrix is valid.
class SymmetricIntMatrix {
 public:
  using Entry = std::int64_t;

  SymmetricIntMatrix() = default;
  explicit SymmetricIntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  /// Throws BadInput unless rows form a square symmetric matrix.
  explicit SymmetricIntMatrix(const std::vector<std::vector<Entry>>& rows);
  SymmetricIntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  Entry operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, Entry v);
  std::span<const Entry> entries() const noexcept { return a_; }
  std::vector<std::vector<Entry>> rows() const;

  /// Σ_{i≤j} g_ij.
  Entry upper_sum() const;
  bool is_diagonal() const;
  /// Pᵀ G P where perm[new] = old.
  SymmetricIntMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Entry> a_;
};

SymmetricIntMatrix direct_sum(const SymmetricIntMatrix& g, const SymmetricIntMatrix& h);

/// G'_ij: fold g_ij into both diagonal entries and clear it.
SymmetricIntMatrix transform_prime(const SymmetricIntMatrix& g, std::size_t i, std::size_t j);
/// G''_ij: add row/column j into row/column i, then delete j.
SymmetricIntMatrix transform_double_prime(const SymmetricIntMatrix& g, std::size_t i, std::size_t j);
/// G'_i: delete row and column i.
SymmetricIntMatrix delete_row_col(const SymmetricIntMatrix& g, std::size_t i);

/// Exact determinant by fraction-free (Bareiss) elimination; det of 0×0 is 1.
BigInt determinant(const SymmetricIntMatrix& g);

bool is_orientable_diag(const SymmetricIntMatrix& g);

}  // namespace goeritz
