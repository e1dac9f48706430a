#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace goeritz {

using BigInt = boost::multiprecision::cpp_int;

// Sparse term list: strictly increasing exponents, no zero coefficients.
using TermList = std::vector<std::pair<int, BigInt>>;

namespace detail {
TermList add_terms(const TermList& p, const TermList& q, bool subtract);
TermList multiply_terms(const TermList& p, const TermList& q);
void scale_terms(TermList& p, const BigInt& c);
}  // namespace detail

/// Laurent polynomial in A with arbitrary-precision integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  // Builds from arbitrary (exponent, coefficient) pairs; merges and prunes.
  static LaurentPoly from_terms(std::vector<std::pair<int, BigInt>> terms);

  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const;
  /// A -> A^-1.
  LaurentPoly mirrored() const;
  LaurentPoly pow(unsigned n) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

  /// Canonical rendering, increasing exponents: "-A^-5 - A^3 + A^7".
  std::string to_string() const;

 private:
  explicit LaurentPoly(TermList terms) : terms_(std::move(terms)) {}
  TermList terms_;
};

/// A^k as a polynomial.
LaurentPoly A_pow(int k);
/// (-A)^k.
LaurentPoly neg_A_pow(int k);
/// The loop value -A^-2 - A^2.
const LaurentPoly& loop_value();

/// The twist polynomial P_n of the μ recursion (P_0 = 0).
LaurentPoly p_n(int n);

/// Laurent polynomial in t^(1/2); exponents are stored in units of t^(1/2).
class HalfTLaurent {
 public:
  HalfTLaurent() = default;
  static HalfTLaurent from_terms(std::vector<std::pair<int, BigInt>> half_terms);

  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// t -> t^-1.
  HalfTLaurent mirrored() const;
  /// True when every exponent is an integer power of t.
  bool integral_powers() const;

  friend bool operator==(const HalfTLaurent& p, const HalfTLaurent& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const HalfTLaurent& p, const HalfTLaurent& q) { return !(p == q); }
  friend bool operator<(const HalfTLaurent& p, const HalfTLaurent& q) { return p.terms_ < q.terms_; }

  /// "-t^(-5/2) - t^(-1/2)", "t^-4", "1".
  std::string to_string() const;

 private:
  explicit HalfTLaurent(TermList terms) : terms_(std::move(terms)) {}
  TermList terms_;
};

/// Applies t^(1/2) = A^-2; throws OddExponent if any power of A is odd.
HalfTLaurent substitute_half_t(const LaurentPoly& p);

}  // namespace goeritz
