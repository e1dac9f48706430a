#include "goeritz/cyclotomic.hpp"

#include "goeritz/error.hpp"

#include <sstream>

namespace goeritz {

namespace {

int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string ZSqrt2::to_string() const {
  std::ostringstream os;
  os << p << (q.sign() < 0 ? " - " : " + ") << (q.sign() < 0 ? BigInt(-q) : q) << "*sqrt2";
  return os.str();
}

Zeta8Value Zeta8Value::zeta_pow(int k) {
  const int r = mod(k, 8);
  std::array<BigInt, 4> c{};
  c[static_cast<std::size_t>(r % 4)] = r < 4 ? 1 : -1;
  return Zeta8Value(std::move(c));
}

bool Zeta8Value::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Zeta8Value Zeta8Value::conjugate() const {
  // x^k -> x^-k = -x^(4-k) for k = 1..3
  return Zeta8Value({c_[0], -c_[3], -c_[2], -c_[1]});
}

Zeta8Value& Zeta8Value::operator+=(const Zeta8Value& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Zeta8Value operator-(const Zeta8Value& a, const Zeta8Value& b) {
  std::array<BigInt, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) c[k] = a.c_[k] - b.c_[k];
  return Zeta8Value(std::move(c));
}

Zeta8Value operator*(const Zeta8Value& a, const Zeta8Value& b) {
  std::array<BigInt, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t k = i + j;
      if (k < 4) {
        c[k] += a.c_[i] * b.c_[j];
      } else {
        c[k - 4] -= a.c_[i] * b.c_[j];
      }
    }
  }
  return Zeta8Value(std::move(c));
}

std::string Zeta8Value::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << "]";
  return os.str();
}

Zeta8Value eval_zeta8(const LaurentPoly& p) {
  std::array<BigInt, 4> c{};
  for (const auto& [e, coeff] : p.terms()) {
    const int r = mod(e, 8);
    if (r < 4) {
      c[static_cast<std::size_t>(r)] += coeff;
    } else {
      c[static_cast<std::size_t>(r - 4)] -= coeff;
    }
  }
  return Zeta8Value(std::move(c));
}

ZSqrt2 modulus_squared(const Zeta8Value& z) {
  // In Z[ζ], √2 = x - x³ and x² is purely imaginary; a real element has the
  // shape p + q(x - x³).
  const Zeta8Value w = z * z.conjugate();
  const auto& c = w.coeffs();
  if (!c[2].is_zero() || c[3] != -c[1]) {
    throw Error(ErrorKind::NotAnInteger, "z * conj(z) is not real: " + w.to_string());
  }
  return {c[0], c[1]};
}

GaussianInt eval_at_minus_one(const HalfTLaurent& p) {
  GaussianInt g{0, 0};
  for (const auto& [h, c] : p.terms()) {
    switch (mod(h, 4)) {
      case 0: g.re += c; break;
      case 1: g.im += c; break;
      case 2: g.re -= c; break;
      default: g.im -= c; break;
    }
  }
  return g;
}

BigInt abs_at_minus_one(const HalfTLaurent& p) {
  const GaussianInt g = eval_at_minus_one(p);
  const BigInt n = g.norm();
  const BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) {
    throw Error(ErrorKind::NotAnInteger, "|p(-1)|^2 = " + n.str() + " is not a perfect square");
  }
  return r;
}

}  // namespace goeritz
