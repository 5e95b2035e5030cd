#include "realclass/binform.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace realclass::binform {

namespace {

// Dense univariate polynomial, coeffs[i] is the coefficient of t^i, no
// trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly from_poly(const Poly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& [e, coeff] : p.terms()) c[static_cast<std::size_t>(e[0])] = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    UPoly r = *this;
    if (!r.is_zero()) {
      const Rational l = r.lead();
      for (auto& x : r.c_) x /= l;
    }
    return r;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  // Remainder of *this divided by d.
  UPoly remainder(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> r = c_;
    const int dd = d.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
      if (r[k] == 0) continue;
      const Rational q = r[k] / d.lead();
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= q * d[i];
    }
    r.resize(static_cast<std::size_t>(std::min<int>(dd, static_cast<int>(r.size()))));
    return UPoly(std::move(r));
  }

  UPoly quotient(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (degree() < d.degree()) return {};
    std::vector<Rational> r = c_;
    const int dd = d.degree();
    std::vector<Rational> q(static_cast<std::size_t>(degree() - dd) + 1);
    for (int k = degree(); k >= dd; --k) {
      if (r[k] == 0) continue;
      const Rational coef = r[k] / d.lead();
      q[k - dd] = coef;
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= coef * d[i];
    }
    return UPoly(std::move(q));
  }

  // Sign at +inf (s = 1) or -inf (s = -1).
  int sign_at_infinity(int s) const {
    int sg = sgn(lead());
    if (s < 0 && degree() % 2 == 1) sg = -sg;
    return sg;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.remainder(b);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

int sign_variations(const std::vector<UPoly>& chain, int at) {
  int count = 0;
  int prev = 0;
  for (const UPoly& p : chain) {
    const int s = p.sign_at_infinity(at);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

const std::vector<std::string>& binary_vars(const Poly& h) {
  if (h.nvars() != 2) throw std::invalid_argument("expected a binary form");
  return h.variables();
}

// Coefficient of x^i y^(3-i).
Rational cubic_coeff(const Poly& h, int i) { return h.coefficient({i, 3 - i}); }

}  // namespace

LinearForm LinearForm::normalized(const Rational& b0, const Rational& b1) {
  if (b0 != 0) return {1, b1 / b0};
  if (b1 != 0) return {0, 1};
  throw std::invalid_argument("linear form is zero");
}

Poly LinearForm::to_poly(const std::vector<std::string>& vars) const {
  return Poly::variable(vars, 0) * b0 + Poly::variable(vars, 1) * b1;
}

std::string to_string(const LinearForm& l, const std::vector<std::string>& vars) {
  return to_string(l.to_poly(vars));
}

const char* to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Zero: return "zero";
    case ShapeKind::Squarefree: return "squarefree";
    case ShapeKind::SquareTimesLinear: return "square-times-linear";
    case ShapeKind::Cube: return "cube";
  }
  return "unknown";
}

CubicShape cubic_shape(const Poly& h) {
  const auto& vars = binary_vars(h);
  for (const auto& [e, c] : h.terms())
    if (total_degree(e) != 3) throw std::invalid_argument("expected a homogeneous cubic");

  CubicShape shape;
  if (h.is_zero()) return shape;

  // p(t) = h(t, 1); its degree drop is the multiplicity of the factor y.
  const UPoly p({cubic_coeff(h, 0), cubic_coeff(h, 1), cubic_coeff(h, 2), cubic_coeff(h, 3)});
  const LinearForm y_form{0, 1};
  auto x_minus = [](const Rational& r) { return LinearForm{1, -r}; };

  switch (p.degree()) {
    case 0:
      shape.kind = ShapeKind::Cube;
      shape.root = y_form;
      break;
    case 1:
      shape.kind = ShapeKind::SquareTimesLinear;
      shape.double_factor = y_form;
      shape.simple = LinearForm::normalized(p[1], p[0]);
      break;
    case 2: {
      const UPoly g = gcd(p, p.derivative());
      if (g.degree() == 0) {
        shape.kind = ShapeKind::Squarefree;
        return shape;
      }
      shape.kind = ShapeKind::SquareTimesLinear;
      shape.simple = y_form;
      shape.double_factor = x_minus(-g[0]);
      break;
    }
    case 3: {
      const UPoly g = gcd(p, p.derivative());
      if (g.degree() == 0) {
        shape.kind = ShapeKind::Squarefree;
        return shape;
      }
      if (g.degree() == 2) {
        shape.kind = ShapeKind::Cube;
        shape.root = x_minus(-p[2] / (3 * p[3]));
        break;
      }
      // p = c (t - r)^2 (t - s) with 2r + s = -c2/c3.
      const Rational r = -g[0];
      shape.kind = ShapeKind::SquareTimesLinear;
      shape.double_factor = x_minus(r);
      shape.simple = x_minus(-p[2] / p[3] - 2 * r);
      break;
    }
    default:
      throw std::logic_error("unreachable cubic degree");
  }

  const Poly unit = shape.kind == ShapeKind::Cube
                        ? shape.root.to_poly(vars).pow(3)
                        : shape.simple.to_poly(vars) * shape.double_factor.to_poly(vars).pow(2);
  const auto& [e, c] = *unit.terms().begin();
  shape.scale = h.coefficient(e) / c;
  if (unit * shape.scale != h)
    throw std::logic_error("cubic factor witness does not reproduce the input");
  return shape;
}

CubeFactor factor_cube(const Poly& h) {
  const CubicShape s = cubic_shape(h);
  if (s.kind != ShapeKind::Cube)
    throw std::invalid_argument(std::string("cubic is not a cube but ") + to_string(s.kind));
  return {s.scale, s.root};
}

SquareLinearFactor factor_square_linear(const Poly& h) {
  const CubicShape s = cubic_shape(h);
  if (s.kind != ShapeKind::SquareTimesLinear)
    throw std::invalid_argument(std::string("cubic has no simple-double factorization but is ") +
                                to_string(s.kind));
  return {s.scale, s.simple, s.double_factor};
}

int sturm_count(const Poly& p) {
  const UPoly u = UPoly::from_poly(p);
  if (u.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  // Distinct roots only: work with the squarefree part.
  const UPoly q = u.quotient(gcd(u, u.derivative()));
  if (q.degree() <= 0) return 0;
  std::vector<UPoly> chain{q, q.derivative()};
  for (;;) {
    UPoly r = -chain[chain.size() - 2].remainder(chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return sign_variations(chain, -1) - sign_variations(chain, 1);
}

Poly dehomogenize(const Poly& h, std::size_t which) {
  const auto& vars = binary_vars(h);
  if (which > 1) throw std::out_of_range("variable index");
  const std::size_t keep = 1 - which;
  Poly out(std::vector<std::string>{vars[keep]});
  for (const auto& [e, c] : h.terms()) out.add_term({e[keep]}, c);
  return out;
}

}  // namespace realclass::binform
