#pragma once

// Standard bases for the local ring Q[x]_<x>, i.e. with respect to a local
// monomial ordering, via Mora's tangent cone normal form. On top of this:
// Milnor number, highest corner and the determinacy bound
//   k = min(mu + 1, min{ l : m^(l+1) is contained in m^2 * J(f) }).

#include <cstddef>
#include <optional>
#include <vector>

#include "realclass/polyring.hpp"

namespace realclass::localstd {

// Negative degree reverse lexicographic order ("ds"): a smaller total degree
// is a larger monomial, ties are broken as in grevlex. 1 is the largest
// monomial.
struct LocalOrder {
  std::size_t nvars = 0;

  // > 0 if a is larger than b.
  int compare(const Exponent& a, const Exponent& b) const;
};

// Leading exponent / coefficient of a nonzero f under the local order.
Exponent leading_exponent(const Poly& f);
Rational leading_coefficient(const Poly& f);
// deg(f) - deg(LM(f)).
int ecart(const Poly& f);

// A monomial ideal given by its minimal generators.
class Staircase {
 public:
  Staircase(std::size_t nvars, const std::vector<Exponent>& generators);

  std::size_t nvars() const { return nvars_; }
  // Minimal generators, sorted by grevlex (largest first).
  const std::vector<Exponent>& generators() const { return gens_; }
  bool contains(const Exponent& m) const;
  // Every variable has a pure power in the ideal.
  bool complement_is_finite() const;
  // Monomials outside the ideal, in ascending grevlex order; empty optional
  // when infinitely many.
  std::optional<std::vector<Exponent>> standard_monomials() const;

 private:
  std::size_t nvars_;
  std::vector<Exponent> gens_;
};

class StdBasis {
 public:
  StdBasis(std::vector<std::string> variables, std::vector<Poly> generators);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Exponent>& lead_exponents() const { return leads_; }
  LocalOrder order() const { return LocalOrder{vars_.size()}; }
  Staircase staircase() const { return Staircase(vars_.size(), leads_); }

 private:
  std::vector<std::string> vars_;
  std::vector<Poly> gens_;
  std::vector<Exponent> leads_;
};

struct NormalFormOptions {
  // Drop terms of degree > this bound during reduction. Only sound when
  // every monomial of that degree + 1 already lies in the ideal.
  std::optional<int> truncate_above;
};

// Mora's weak normal form: zero iff f lies in the ideal generated by G in the
// local ring.
Poly mora_normal_form(const Poly& f, const StdBasis& G,
                      const NormalFormOptions& options = {});

StdBasis std_basis(const std::vector<Poly>& gens);
// Same ideal, for callers that know m^power lies in it; the whole computation
// then runs modulo m^(power+1). Throws std::logic_error if the result
// contradicts the claim.
StdBasis std_basis(const std::vector<Poly>& gens, int power);

// Number of monomials outside the lead ideal.
ExtendedCount count_staircase(const StdBasis& G);

ExtendedCount milnor_number(const Poly& f);

// dim_Q Q[x]_{<=N} / (span{ jet(m * df/dx_i, N) } ), by Gaussian elimination
// on the degree-N Macaulay matrix. Independent of the standard basis code.
long milnor_oracle(const Poly& f, int N);

// Maximal degree of a monomial outside the lead ideal (-1 for the unit
// ideal). Throws ClassificationError(NotIsolated) if the complement is
// infinite.
int highest_corner_degree(const StdBasis& G);

// m^2 * J(f), generated by all (degree-2 monomial) * (partial derivative).
std::vector<Poly> m2_jacobian_generators(const Poly& f);

// Upper bound for the determinacy of f. Throws ClassificationError for
// f not in m^2 (NotInM2) or mu = infinity (NotIsolated).
int determinacy_bound(const Poly& f);

}  // namespace realclass::localstd
