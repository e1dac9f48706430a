#pragma once

#include "goeritz/laurent.hpp"

#include <array>
#include <string>

namespace goeritz {

/// p + q√2.
struct ZSqrt2 {
  BigInt p;
  BigInt q;

  friend ZSqrt2 operator+(const ZSqrt2& a, const ZSqrt2& b) { return {a.p + b.p, a.q + b.q}; }
  friend ZSqrt2 operator*(const ZSqrt2& a, const ZSqrt2& b) {
    return {a.p * b.p + 2 * a.q * b.q, a.p * b.q + a.q * b.p};
  }
  friend bool operator==(const ZSqrt2&, const ZSqrt2&) = default;
  std::string to_string() const;
};

/// c0 + c1·x + c2·x² + c3·x³ in Z[x]/(x⁴+1), with x = ζ = e^{iπ/4}.
class Zeta8Value {
 public:
  Zeta8Value() = default;
  explicit Zeta8Value(std::array<BigInt, 4> coeffs) : c_(std::move(coeffs)) {}
  static Zeta8Value integer(const BigInt& n) { return Zeta8Value({n, 0, 0, 0}); }
  /// ζ^k for any integer k.
  static Zeta8Value zeta_pow(int k);

  const std::array<BigInt, 4>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  /// Complex conjugate: x -> -x³.
  Zeta8Value conjugate() const;

  Zeta8Value& operator+=(const Zeta8Value& o);
  friend Zeta8Value operator+(Zeta8Value a, const Zeta8Value& b) { return a += b; }
  friend Zeta8Value operator-(const Zeta8Value& a, const Zeta8Value& b);
  friend Zeta8Value operator*(const Zeta8Value& a, const Zeta8Value& b);
  friend bool operator==(const Zeta8Value&, const Zeta8Value&) = default;

  std::string to_string() const;

 private:
  std::array<BigInt, 4> c_{};
};

/// Ring homomorphism Z[A^±1] -> Z[ζ], A -> ζ.
Zeta8Value eval_zeta8(const LaurentPoly& p);

/// z·z̄, which always lies in Z[√2].
ZSqrt2 modulus_squared(const Zeta8Value& z);

/// Gaussian integer re + im·i.
struct GaussianInt {
  BigInt re;
  BigInt im;
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  BigInt norm() const { return re * re + im * im; }
};

/// Value at t = -1 via t^(1/2) = i.
GaussianInt eval_at_minus_one(const HalfTLaurent& p);

/// |p(-1)| as an exact integer; throws NotAnInteger if the modulus is irrational.
BigInt abs_at_minus_one(const HalfTLaurent& p);

}  // namespace goeritz
