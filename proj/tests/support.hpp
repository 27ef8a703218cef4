#pragma once

#include <doctest.h>

#include "ftc/field.hpp"
#include "ftc/matrix.hpp"
#include "ftc/poly.hpp"

namespace doctest {
template <>
struct StringMaker<ftc::Scalar> {
  static String convert(const ftc::Scalar& s) { return s.valid() ? s.to_string().c_str() : "<unset>"; }
};
template <>
struct StringMaker<ftc::Poly> {
  static String convert(const ftc::Poly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<ftc::Matrix> {
  static String convert(const ftc::Matrix& m) { return ("\n" + m.to_string()).c_str(); }
};
}  // namespace doctest
