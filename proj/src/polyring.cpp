#include "realclass/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace realclass {

int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

int grevlex_compare(const Exponent& a, const Exponent& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

long ExtendedCount::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite count");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedCount& c) {
  if (c.is_infinite()) return os << "inf";
  return os << c.value();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Poly Poly::constant(std::vector<std::string> variables, const Rational& c) {
  Poly p(std::move(variables));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index) {
  Poly p(std::move(variables));
  if (index >= p.nvars()) throw std::out_of_range("variable index");
  Exponent e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Poly Poly::monomial(std::vector<std::string> variables, Exponent e,
                    const Rational& c) {
  Poly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
  return coefficient(Exponent(vars_.size(), 0));
}

int Poly::degree() const {
  // Largest term comes first under graded order.
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

void Poly::check_compatible(const Poly& other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("polynomials over different variable lists");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

Poly multiply_impl(const Poly& a, const Poly& b, std::optional<int> trunc) {
  Poly r(a.variables());
  const std::size_t n = a.nvars();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    if (trunc && da > *trunc) continue;
    for (const auto& [eb, cb] : b.terms()) {
      // b is sorted by descending degree, so skip its high part.
      if (trunc && da + total_degree(eb) > *trunc) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  return multiply_impl(a, b, std::nullopt);
}

Poly Poly::multiply_truncated(const Poly& other, int trunc) const {
  check_compatible(other);
  return multiply_impl(*this, other, trunc);
}

bool operator==(const Poly& a, const Poly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(int e, std::optional<int> trunc) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = multiply_impl(result, base, trunc);
    e >>= 1;
    if (e > 0) base = multiply_impl(base, base, trunc);
  }
  if (trunc) result = jet(result, *trunc);
  return result;
}

Poly Poly::shifted(const Exponent& e) const {
  if (e.size() != vars_.size())
    throw std::invalid_argument("exponent length does not match variable count");
  Poly r(vars_);
  Exponent t(e.size());
  for (const auto& [ex, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) t[i] = ex[i] + e[i];
    r.terms_.emplace(t, c);
  }
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw std::out_of_range("variable index");
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

Poly Poly::renamed(std::vector<std::string> variables) const {
  if (variables.size() != vars_.size())
    throw std::invalid_argument("renaming must keep the variable count");
  Poly r = *this;
  r.vars_ = std::move(variables);
  return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_monomial(std::ostringstream& os, const std::vector<std::string>& vars,
                     const Exponent& e) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << vars[i];
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (total_degree(e) == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    append_monomial(os, p.variables(), e);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

// ---------------------------------------------------------------------------
// Free operations

ExtendedCount ord(const Poly& f) {
  if (f.is_zero()) return ExtendedCount::infinity();
  // Smallest degree sits at the end of the graded order.
  return total_degree(f.terms().rbegin()->first);
}

Poly jet(const Poly& f, int k) {
  if (k < 0) throw std::invalid_argument("jet order must be non-negative");
  Poly r(f.variables());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) <= k) r.add_term(e, c);
  return r;
}

Poly homogeneous_part(const Poly& f, int j) {
  if (j < 0) throw std::invalid_argument("degree must be non-negative");
  Poly r(f.variables());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == j) r.add_term(e, c);
  return r;
}

Rational coefficient_of(const Poly& f, const Exponent& m) {
  if (m.size() != f.nvars())
    throw std::invalid_argument("exponent length does not match variable count");
  return f.coefficient(m);
}

std::vector<Poly> jacobian_generators(const Poly& f) {
  std::vector<Poly> gens;
  gens.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

Matrix hessian_at_zero(const Poly& f) {
  const std::size_t n = f.nvars();
  Matrix h = zero_matrix(n, n);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      h[idx[0]][idx[0]] = 2 * c;
    } else {
      h[idx[0]][idx[1]] = c;
      h[idx[1]][idx[0]] = c;
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// CoordChange

CoordChange::CoordChange(std::vector<std::string> variables,
                         std::vector<Poly> images)
    : vars_(std::move(variables)), images_(std::move(images)) {
  if (images_.size() != vars_.size())
    throw std::invalid_argument("coordinate change needs one image per variable");
  for (const Poly& img : images_) {
    if (img.variables() != vars_)
      throw std::invalid_argument("coordinate change image over wrong variables");
    if (img.constant_term() != 0)
      throw std::invalid_argument("coordinate change image has a constant term");
  }
  if (determinant(linear_part()) == 0)
    throw std::invalid_argument("coordinate change has a singular linear part");
}

CoordChange CoordChange::identity(const std::vector<std::string>& variables) {
  return linear(variables, identity_matrix(variables.size()));
}

CoordChange CoordChange::linear(const std::vector<std::string>& variables,
                                const Matrix& m) {
  const std::size_t n = variables.size();
  if (m.size() != n) throw std::invalid_argument("matrix size mismatch");
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix size mismatch");
    Poly img(variables);
    for (std::size_t j = 0; j < n; ++j)
      img += Poly::variable(variables, j) * m[i][j];
    images.push_back(std::move(img));
  }
  return CoordChange(variables, std::move(images));
}

Matrix CoordChange::linear_part() const {
  const std::size_t n = vars_.size();
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = 1;
      m[i][j] = images_[i].coefficient(e);
      e[j] = 0;
    }
  }
  return m;
}

CoordChange CoordChange::then(const CoordChange& next,
                              std::optional<int> trunc) const {
  if (next.vars_ != vars_)
    throw std::invalid_argument("composing coordinate changes over different variables");
  std::vector<Poly> composed;
  composed.reserve(images_.size());
  for (const Poly& img : images_) composed.push_back(substitute(img, next, trunc));
  return CoordChange(vars_, std::move(composed));
}

std::string to_string(const CoordChange& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.variables().size(); ++i) {
    if (i) out += ", ";
    out += phi.variables()[i] + " -> " + to_string(phi.image(i));
  }
  return out;
}

Poly substitute(const Poly& f, const CoordChange& phi, std::optional<int> trunc) {
  if (f.variables() != phi.variables())
    throw std::invalid_argument("substitution over different variables");
  if (trunc && *trunc < 0)
    throw std::invalid_argument("truncation degree must be non-negative");
  const std::size_t n = f.nvars();

  // powers[i][e] = image(i)^e, truncated; built lazily.
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(f.variables(), 1));
    while (static_cast<int>(cache.size()) <= e) {
      const Poly& prev = cache.back();
      cache.push_back(trunc ? prev.multiply_truncated(phi.image(i), *trunc)
                            : prev * phi.image(i));
    }
    return cache[e];
  };

  Poly result(f.variables());
  for (const auto& [e, c] : f.terms()) {
    // Images have order >= 1, so a term of degree d maps into m^d.
    if (trunc && total_degree(e) > *trunc) continue;
    Poly term = Poly::constant(f.variables(), c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      term = trunc ? term.multiply_truncated(power(i, e[i]), *trunc)
                   : term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

}  // namespace realclass
