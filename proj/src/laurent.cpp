#include "goeritz/laurent.hpp"

#include "goeritz/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace goeritz {

namespace detail {

TermList add_terms(const TermList& p, const TermList& q, bool subtract) {
  TermList out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() || j != q.end()) {
    if (j == q.end() || (i != p.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == p.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? BigInt(-j->second) : j->second);
      ++j;
    } else {
      BigInt c = subtract ? BigInt(i->second - j->second) : BigInt(i->second + j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

TermList multiply_terms(const TermList& p, const TermList& q) {
  if (p.empty() || q.empty()) return {};
  const int lo = p.front().first + q.front().first;
  const int hi = p.back().first + q.back().first;
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ep, cp] : p) {
    for (const auto& [eq, cq] : q) {
      dense[static_cast<std::size_t>(ep + eq - lo)] += cp * cq;
    }
  }
  TermList out;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) out.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  }
  return out;
}

void scale_terms(TermList& p, const BigInt& c) {
  if (c.is_zero()) {
    p.clear();
    return;
  }
  for (auto& term : p) term.second *= c;
}

TermList normalize(std::vector<std::pair<int, BigInt>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  TermList out;
  for (auto& [e, c] : raw) {
    if (!out.empty() && out.back().first == e) {
      out.back().second += c;
    } else {
      out.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

// Shared renderer; `power` formats the variable part for a stored exponent.
template <class PowerFn>
std::string render(const TermList& terms, PowerFn power) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    const std::string var = power(e);
    if (var.empty()) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude;
      os << var;
    }
  }
  return os.str();
}

}  // namespace detail

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  if (coeff.is_zero()) return {};
  return LaurentPoly(TermList{{exponent, coeff}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<int, BigInt>> terms) {
  return LaurentPoly(detail::normalize(std::move(terms)));
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

LaurentPoly LaurentPoly::shifted(int k) const {
  TermList out = terms_;
  for (auto& t : out) t.first += k;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::mirrored() const {
  TermList out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.first = -t.first;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  TermList out = terms_;
  for (auto& t : out) t.second = -t.second;
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  terms_ = detail::add_terms(terms_, q.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  terms_ = detail::add_terms(terms_, q.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  terms_ = detail::multiply_terms(terms_, q.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return LaurentPoly(detail::multiply_terms(p.terms_, q.terms_));
}

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) {
  TermList out = p.terms_;
  detail::scale_terms(out, c);
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  return detail::render(terms_, [](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "A";
    return "A^" + std::to_string(e);
  });
}

LaurentPoly A_pow(int k) { return LaurentPoly::monomial(1, k); }

LaurentPoly neg_A_pow(int k) { return LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, k); }

const LaurentPoly& loop_value() {
  static const LaurentPoly delta = LaurentPoly::from_terms({{-2, -1}, {2, -1}});
  return delta;
}

LaurentPoly p_n(int n) {
  if (n == 0) return {};
  const int sign = n > 0 ? 1 : -1;
  const int m = std::abs(n);
  std::vector<std::pair<int, BigInt>> terms;
  terms.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    terms.emplace_back(sign * (m - 4 * j + 2), (j % 2 == 1) ? 1 : -1);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

HalfTLaurent HalfTLaurent::from_terms(std::vector<std::pair<int, BigInt>> half_terms) {
  return HalfTLaurent(detail::normalize(std::move(half_terms)));
}

HalfTLaurent HalfTLaurent::mirrored() const {
  TermList out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.first = -t.first;
  return HalfTLaurent(std::move(out));
}

bool HalfTLaurent::integral_powers() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

std::string HalfTLaurent::to_string() const {
  return detail::render(terms_, [](int h) -> std::string {
    if (h == 0) return "";
    if (h % 2 != 0) return "t^(" + std::to_string(h) + "/2)";
    if (h == 2) return "t";
    return "t^" + std::to_string(h / 2);
  });
}

HalfTLaurent substitute_half_t(const LaurentPoly& p) {
  std::vector<std::pair<int, BigInt>> out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) {
      throw Error(ErrorKind::OddExponent,
                  "odd power A^" + std::to_string(e) + " cannot be written in t^(1/2)");
    }
    out.emplace_back(-e / 2, c);
  }
  return HalfTLaurent::from_terms(std::move(out));
}

}  // namespace goeritz
