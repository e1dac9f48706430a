#pragma once

#include "generators.hpp"

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<goeritz::LaurentPoly> {
  static String convert(const goeritz::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<goeritz::HalfTLaurent> {
  static String convert(const goeritz::HalfTLaurent& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
