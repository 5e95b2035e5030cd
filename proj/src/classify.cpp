#include "realclass/classify.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "realclass/binform.hpp"
#include "realclass/errors.hpp"
#include "realclass/linalg.hpp"
#include "realclass/localstd.hpp"
#include "realclass/split.hpp"

namespace realclass {

namespace {

[[noreturn]] void internal(const std::string& msg) {
  throw ClassificationError(ErrorKind::Internal, msg);
}

void require_binary(const Poly& g) {
  if (g.nvars() != 2) throw std::invalid_argument("expected a residual in two variables");
}

void record(std::vector<Step>* log, std::string label, const CoordChange& phi) {
  if (log) log->push_back({std::move(label), phi});
}

Poly xy_monomial(const std::vector<std::string>& vars, int i, int j) {
  return Poly::monomial(vars, {i, j});
}

bool valid(const MainType& t) {
  switch (t.family) {
    case Family::A: return t.index >= 1;
    case Family::D: return t.index >= 4;
    case Family::E: return t.index >= 6 && t.index <= 8;
  }
  return false;
}

}  // namespace

int MainType::corank() const {
  if (family == Family::A) return index == 1 ? 0 : 1;
  return 2;
}

bool MainType::has_sign() const {
  switch (family) {
    // A1 is fixed by the inertia index alone.
    case Family::A: return index >= 3 && index % 2 == 1;
    case Family::D: return true;
    case Family::E: return index == 6;
  }
  return false;
}

std::string to_string(const MainType& t) {
  const char letter = t.family == Family::A ? 'A' : (t.family == Family::D ? 'D' : 'E');
  return letter + std::to_string(t.index);
}

std::string to_string(const RealType& t) {
  std::string s = to_string(t.main);
  if (t.sign == Sign::Plus) s += '+';
  if (t.sign == Sign::Minus) s += '-';
  return s;
}

std::optional<RealType> parse_real_type(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  RealType t;
  switch (text[0]) {
    case 'A': t.main.family = Family::A; break;
    case 'D': t.main.family = Family::D; break;
    case 'E': t.main.family = Family::E; break;
    default: return std::nullopt;
  }
  std::size_t i = 1;
  int index = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    index = index * 10 + (text[i] - '0');
    if (index > 100000) return std::nullopt;
    ++i;
  }
  if (i == 1 || text[1] == '0') return std::nullopt;
  t.main.index = index;
  if (i < text.size()) {
    if (i + 1 != text.size()) return std::nullopt;
    if (text[i] == '+') t.sign = Sign::Plus;
    else if (text[i] == '-') t.sign = Sign::Minus;
    else return std::nullopt;
  }
  if (!valid(t.main)) return std::nullopt;
  if (t.main.has_sign() != (t.sign != Sign::None)) return std::nullopt;
  return t;
}

MainType complex_type(const Poly& g, int c, long mu) {
  if (c >= 3)
    throw ClassificationError(ErrorKind::CorankTooLarge,
                              "corank " + std::to_string(c) + " is not handled (at most 2)");
  if (c < 0) throw std::invalid_argument("negative corank");
  if (c == 0) {
    if (mu != 1) internal("corank 0 but mu = " + std::to_string(mu));
    return MainType::A(1);
  }
  if (c == 1) {
    const ExtendedCount o = ord(g);
    if (o.is_infinite()) internal("corank 1 with a vanishing residual");
    const long k = o.value() - 1;
    if (k != mu) internal("A_k residual order disagrees with mu = " + std::to_string(mu));
    return MainType::A(static_cast<int>(k));
  }

  require_binary(g);
  const binform::CubicShape shape = binform::cubic_shape(homogeneous_part(g, 3));
  switch (shape.kind) {
    case binform::ShapeKind::Squarefree:
      if (mu != 4) internal("squarefree cubic 3-jet but mu = " + std::to_string(mu));
      return MainType::D(4);
    case binform::ShapeKind::SquareTimesLinear:
      if (mu < 5) internal("cubic with a double factor but mu = " + std::to_string(mu));
      return MainType::D(static_cast<int>(mu));
    case binform::ShapeKind::Cube:
      if (mu >= 6 && mu <= 8) return MainType::E(static_cast<int>(mu));
      throw ClassificationError(ErrorKind::NotSimple,
                                "cube 3-jet with mu = " + std::to_string(mu) +
                                    " is not a simple singularity");
    case binform::ShapeKind::Zero:
      break;
  }
  throw ClassificationError(ErrorKind::NotSimple,
                            "corank 2 with vanishing 3-jet is not a simple singularity");
}

RealType classify_Ak(const Poly& g, int c) {
  if (c == 0) return {MainType::A(1), Sign::None};
  if (c != 1) throw std::invalid_argument("A_k needs corank 0 or 1");
  const int k = static_cast<int>(ord(g).value()) - 1;
  if (k % 2 == 0) return {MainType::A(k), Sign::None};
  const Rational s = g.coefficient({k + 1});
  return {MainType::A(k), s > 0 ? Sign::Plus : Sign::Minus};
}

RealType classify_D4(const Poly& g, std::vector<Step>* log) {
  require_binary(g);
  const auto& vars = g.variables();
  const Poly x = Poly::variable(vars, 0), y = Poly::variable(vars, 1);
  Poly h = homogeneous_part(g, 3);

  // Make the x^3 coefficient nonzero so y -> 1 keeps all three roots.
  if (h.coefficient({3, 0}) == 0) {
    std::optional<CoordChange> phi;
    std::string label;
    if (h.coefficient({0, 3}) != 0) {
      phi.emplace(vars, std::vector<Poly>{y, x});
      label = "swap variables";
    } else if (h.coefficient({2, 1}) + h.coefficient({1, 2}) != 0) {
      phi.emplace(vars, std::vector<Poly>{x, x + y});
      label = "shear";
    } else {
      phi.emplace(vars, std::vector<Poly>{x, x * 2 + y});
      label = "shear";
    }
    h = substitute(h, *phi);
    record(log, label, *phi);
  }
  if (h.coefficient({3, 0}) == 0) internal("could not make the x^3 coefficient nonzero");

  const int n = binform::sturm_count(binform::dehomogenize(h, 1));
  return {MainType::D(4), n < 3 ? Sign::Plus : Sign::Minus};
}

RealType classify_Dk(const Poly& g, int k, std::vector<Step>* log) {
  require_binary(g);
  if (k < 5) throw std::invalid_argument("classify_Dk needs k >= 5");
  const auto& vars = g.variables();
  const int trunc = k - 1;
  Poly h = jet(g, trunc);

  // a * simple * double^2: send double -> x, simple -> y, then y -> y / a.
  const auto f = binform::factor_square_linear(homogeneous_part(h, 3));
  Matrix m = inverse(Matrix{{f.double_factor.b0, f.double_factor.b1},
                            {f.simple.b0, f.simple.b1}});
  for (auto& row : m) row[1] /= f.scale;
  const CoordChange normalize = CoordChange::linear(vars, m);
  h = substitute(h, normalize, trunc);
  record(log, "normalize 3-jet to x^2*y", normalize);

  const Poly x2y = xy_monomial(vars, 2, 1);
  if (homogeneous_part(h, 3) != x2y) internal("3-jet did not normalize to x^2*y");

  for (int j = 4; j <= trunc; ++j) {
    const Poly excess = jet(h, j) - x2y;
    if (excess.is_zero()) continue;
    if (ord(excess).value() < j) internal("lower-degree terms survived in the D_k reduction");
    std::vector<Rational> a(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) a[i] = h.coefficient({j - i, i});
    const bool pure = std::all_of(a.begin(), a.end() - 1, [](const Rational& v) { return v == 0; });
    if (!pure) {
      Poly p1(vars);
      for (int i = 1; i <= j - 1; ++i) p1.add_term({j - 1 - i, i - 1}, -a[i] / 2);
      const Poly p2 = xy_monomial(vars, j - 2, 0) * -a[0];
      const CoordChange phi(vars, {Poly::variable(vars, 0) + p1, Poly::variable(vars, 1) + p2});
      h = substitute(h, phi, trunc);
      record(log, "clear degree " + std::to_string(j), phi);
    }
    if (j < trunc && h.coefficient({0, j}) != 0)
      internal("y^" + std::to_string(j) + " term contradicts type D" + std::to_string(k));
  }

  const Rational alpha = h.coefficient({0, trunc});
  if (alpha == 0 || h != x2y + xy_monomial(vars, 0, trunc) * alpha)
    internal("D_k reduction did not reach x^2*y + alpha*y^(k-1)");
  return {MainType::D(k), alpha > 0 ? Sign::Plus : Sign::Minus};
}

RealType classify_E6(const Poly& g, std::vector<Step>* log) {
  require_binary(g);
  const auto& vars = g.variables();
  const Poly x = Poly::variable(vars, 0), y = Poly::variable(vars, 1);
  Poly current = jet(g, 4);

  if (current.coefficient({3, 0}) == 0) {
    const CoordChange swap(vars, {y, x});
    current = substitute(current, swap);
    record(log, "swap variables", swap);
  }
  const auto cube = binform::factor_cube(homogeneous_part(current, 3));
  const Rational& b0 = cube.root.b0;
  const Rational& b1 = cube.root.b1;
  if (b0 == 0) internal("E6 cube root has no x component after the swap");
  const CoordChange phi(vars, {(x - y * b1) * (1 / b0), y});
  current = substitute(current, phi, 4);
  record(log, "move the cube root to x", phi);

  const Rational d = current.coefficient({0, 4});
  if (d == 0) internal("vanishing y^4 coefficient contradicts type E6");
  return {MainType::E(6), d > 0 ? Sign::Plus : Sign::Minus};
}

Poly normal_form(const RealType& t, int lambda, const std::vector<std::string>& vars, int c) {
  const int n = static_cast<int>(vars.size());
  if (!valid(t.main)) throw std::invalid_argument("invalid main type");
  if (t.main.has_sign() != (t.sign != Sign::None))
    throw std::invalid_argument("sign does not match type " + to_string(t.main));
  if (c != t.main.corank())
    throw std::invalid_argument("corank " + std::to_string(c) + " does not match " +
                                to_string(t.main));
  if (lambda < 0 || lambda + c > n) throw std::invalid_argument("inertia index out of range");

  Poly out(vars);
  auto mono = [&](std::initializer_list<std::pair<int, int>> powers) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (const auto& [var, p] : powers) e[var] = p;
    return Poly::monomial(vars, e);
  };
  const Rational s = t.sign == Sign::Minus ? -1 : 1;
  const int k = t.main.index;
  switch (t.main.family) {
    case Family::A:
      if (k >= 2) out = mono({{0, k + 1}}) * s;
      break;
    case Family::D:
      out = mono({{0, 2}, {1, 1}}) + mono({{1, k - 1}}) * s;
      break;
    case Family::E:
      if (k == 6) out = mono({{0, 3}}) + mono({{1, 4}}) * s;
      if (k == 7) out = mono({{0, 3}}) + mono({{0, 1}, {1, 3}});
      if (k == 8) out = mono({{0, 3}}) + mono({{1, 5}});
      break;
  }
  for (int i = c; i < n; ++i) out += mono({{i, 2}}) * (i < c + lambda ? -1 : 1);
  return out;
}

Report classify(const Poly& f) {
  if (!f.is_zero() && ord(f).value() < 2)
    throw ClassificationError(ErrorKind::NotInM2, "input has a nonzero constant or linear part");
  const ExtendedCount mu = localstd::milnor_number(f);
  if (mu.is_infinite())
    throw ClassificationError(ErrorKind::NotIsolated,
                              "Milnor number is infinite: the singularity is not isolated");

  const int k = std::max(2, localstd::determinacy_bound(f));
  splitting::SplitResult s = splitting::split(jet(f, k), k);

  Report r{{}, mu.value(), s.corank, s.inertia, k, s.residual, Poly(), {}};
  r.change_log.push_back({"splitting lemma", s.change});

  const MainType main = complex_type(s.residual, s.corank, mu.value());
  switch (main.family) {
    case Family::A:
      r.real_type = classify_Ak(s.residual, s.corank);
      break;
    case Family::D:
      r.real_type = main.index == 4 ? classify_D4(s.residual, &r.change_log)
                                    : classify_Dk(s.residual, main.index, &r.change_log);
      break;
    case Family::E:
      r.real_type = main.index == 6 ? classify_E6(s.residual, &r.change_log)
                                    : RealType{main, Sign::None};
      break;
  }
  if (r.real_type.main != main) internal("subtype step changed the main type");
  r.normal_form = normal_form(r.real_type, r.inertia, f.variables(), r.corank);
  return r;
}

}  // namespace realclass
