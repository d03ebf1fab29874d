#pragma once

// Closed-form first terms of log(e^X e^Y) for
//   X = a A + b B + c [A,B] + d [A,[A,B]] + e [B,[B,A]]
// and Y of the same form with primed parameters. Hand-derived from the
// degree <= 3 BCH terms X + Y + [X,Y]/2 + ([X,[X,Y]] + [Y,[Y,X]])/12.

#include <array>

#include "splitorder/rational.hpp"

namespace splitorder::testing {

struct LieParams {
  Rational a, b, c, d, e;
};

// {H1 (A), H2 (B), H3 ([A,B]), H4 ([A,[A,B]]), H5 ([B,[B,A]])}
inline std::array<Rational, 5> bch_closed_form(const LieParams& x, const LieParams& y) {
  const Rational cross = x.a * y.b - y.a * x.b;
  return {
      x.a + y.a,
      x.b + y.b,
      x.c + y.c + Rational(1, 2) * cross,
      x.d + y.d + Rational(1, 2) * (x.a * y.c - y.a * x.c) + Rational(1, 12) * cross * (x.a - y.a),
      x.e + y.e - Rational(1, 2) * (x.b * y.c - y.b * x.c) - Rational(1, 12) * cross * (x.b - y.b),
  };
}

}  // namespace splitorder::testing
