#pragma once

// Homogeneous binary cubics over Q: repeated-factor shape, rational linear
// factors when a factor is repeated, and Sturm real-root counting.

#include <cstddef>
#include <string>

#include "realclass/polyring.hpp"

namespace realclass::binform {

// b0 * x + b1 * y, normalized monic in x when b0 != 0, else monic in y.
struct LinearForm {
  Rational b0;
  Rational b1;

  static LinearForm normalized(const Rational& b0, const Rational& b1);
  Poly to_poly(const std::vector<std::string>& vars) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& l, const std::vector<std::string>& vars);

enum class ShapeKind { Zero, Squarefree, SquareTimesLinear, Cube };

const char* to_string(ShapeKind kind);

struct CubicShape {
  ShapeKind kind = ShapeKind::Zero;
  // Cube: h = scale * root^3.
  // SquareTimesLinear: h = scale * simple * double_factor^2.
  Rational scale;
  LinearForm root;
  LinearForm simple;
  LinearForm double_factor;
};

// Throws std::invalid_argument unless h is a homogeneous cubic (or zero) in
// two variables.
CubicShape cubic_shape(const Poly& h);

struct CubeFactor {
  Rational scale;
  LinearForm root;
};

struct SquareLinearFactor {
  Rational scale;
  LinearForm simple;
  LinearForm double_factor;
};

// Throw std::invalid_argument when h has a different shape.
CubeFactor factor_cube(const Poly& h);
SquareLinearFactor factor_square_linear(const Poly& h);

// Number of distinct real roots of a nonzero univariate polynomial.
int sturm_count(const Poly& p);

// Sets variable `which` (0 or 1) of a binary form to 1; the result is
// univariate in the other variable.
Poly dehomogenize(const Poly& h, std::size_t which);

}  // namespace realclass::binform
