#pragma once

// Exact sparse multivariate polynomials over Q.
//
// A Poly is bound to an ordered list of variable names; every exponent
// vector has exactly that many entries and mixing polynomials over different
// variable lists throws std::invalid_argument. Terms are kept in a sorted map
// under graded reverse lexicographic order (largest first), so iteration and
// printing are deterministic.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "realclass/linalg.hpp"
#include "realclass/rational.hpp"

namespace realclass {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded reverse lexicographic comparison: higher total degree is larger; on
// equal degree the exponent with the smaller entry in the last differing
// position is larger.
int grevlex_compare(const Exponent& a, const Exponent& b);

struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

// A non-negative integer or +infinity. Used for ord(0), Milnor numbers and
// staircase counts.
class ExtendedCount {
 public:
  constexpr ExtendedCount() = default;
  constexpr ExtendedCount(long value) : value_(value) {}  // NOLINT
  static constexpr ExtendedCount infinity() {
    ExtendedCount c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  // Precondition: is_finite().
  long value() const;

  friend constexpr bool operator==(const ExtendedCount& a,
                                   const ExtendedCount& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  long value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedCount& c);

class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables);

  static Poly constant(std::vector<std::string> variables, const Rational& c);
  static Poly variable(std::vector<std::string> variables, std::size_t index);
  static Poly monomial(std::vector<std::string> variables, Exponent e,
                       const Rational& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^e; a resulting zero coefficient is erased.
  void add_term(const Exponent& e, const Rational& c);

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  // Maximal total degree; -1 for the zero polynomial.
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  // Product with every term above total degree `trunc` dropped.
  Poly multiply_truncated(const Poly& other, int trunc) const;
  Poly pow(int e, std::optional<int> trunc = std::nullopt) const;

  // Multiplies by the monomial x^e.
  Poly shifted(const Exponent& e) const;

  Poly derivative(std::size_t var) const;

  // Same terms over a different variable list of the same length.
  Poly renamed(std::vector<std::string> variables) const;

 private:
  void check_compatible(const Poly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Canonical text form: graded reverse-lex order, explicit '*' and '^',
// coefficients as p/q. "0" for the zero polynomial.
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

// Minimal total degree of a term; infinite for zero.
ExtendedCount ord(const Poly& f);
Poly jet(const Poly& f, int k);
Poly homogeneous_part(const Poly& f, int j);
Rational coefficient_of(const Poly& f, const Exponent& m);
std::vector<Poly> jacobian_generators(const Poly& f);

Matrix hessian_at_zero(const Poly& f);

// A polynomial substitution x_i -> images[i]. Construction validates that
// every image has zero constant term and that the linear parts form an
// invertible matrix, i.e. the map is an automorphism of the formal power
// series ring.
class CoordChange {
 public:
  CoordChange(std::vector<std::string> variables, std::vector<Poly> images);

  static CoordChange identity(const std::vector<std::string>& variables);
  // x_i -> sum_j m[i][j] x_j
  static CoordChange linear(const std::vector<std::string>& variables,
                            const Matrix& m);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image(std::size_t i) const { return images_[i]; }

  // Matrix of linear parts, row i = linear part of image(i).
  Matrix linear_part() const;

  // The map "apply this, then `next`": substitute(f, then(next)) equals
  // substitute(substitute(f, *this), next) up to `trunc`.
  CoordChange then(const CoordChange& next,
                   std::optional<int> trunc = std::nullopt) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Poly> images_;
};

std::string to_string(const CoordChange& phi);

// f(images). With `trunc`, powers and products are truncated as they are
// formed so no term above degree trunc is ever built.
Poly substitute(const Poly& f, const CoordChange& phi,
                std::optional<int> trunc = std::nullopt);

}  // namespace realclass
