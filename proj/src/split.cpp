#include "realclass/split.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "realclass/errors.hpp"

namespace realclass::splitting {

namespace {

void swap_indices(Matrix& a, Matrix& t, std::size_t i, std::size_t j) {
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : t) std::swap(row[i], row[j]);
}

// Column j += factor * column i, and the matching row operation, so that a
// stays congruent to the original matrix via t.
void add_multiple(Matrix& a, Matrix& t, std::size_t target, std::size_t source,
                  const Rational& factor) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r][target] += factor * a[r][source];
  for (std::size_t c = 0; c < n; ++c) a[target][c] += factor * a[source][c];
  for (std::size_t r = 0; r < n; ++r) t[r][target] += factor * t[r][source];
}

int category(const Rational& d) { return d == 0 ? 0 : (d < 0 ? 1 : 2); }

}  // namespace

QuadDiag diagonalize_quadratic(const Matrix& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("matrix is not symmetric");
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix t = identity_matrix(n);

  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      if (std::all_of(a[i].begin(), a[i].end(), [](const Rational& x) { return x == 0; }))
        continue;
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        swap_indices(a, t, i, j);
      } else {
        // Zero diagonal below i: borrow a partner with a[i][j] != 0, which
        // makes the pivot 2 a[i][j].
        j = i + 1;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n) continue;
        add_multiple(a, t, i, j, 1);
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      add_multiple(a, t, j, i, -a[i][j] / a[i][i]);
    }
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return category(a[x][x]) < category(a[y][y]);
  });

  QuadDiag out;
  out.transform = zero_matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = perm[c];
    out.diag.push_back(a[src][src]);
    for (std::size_t r = 0; r < n; ++r) out.transform[r][c] = t[r][src];
    if (a[src][src] == 0) ++out.corank;
    if (a[src][src] < 0) ++out.inertia;
  }
  return out;
}

Poly SplitResult::embedded_residual() const {
  Poly out(change.variables());
  const std::size_t n = out.nvars();
  for (const auto& [e, c] : residual.terms()) {
    Exponent full(n, 0);
    std::copy(e.begin(), e.end(), full.begin());
    out.add_term(full, c);
  }
  return out;
}

Poly SplitResult::quadratic_part() const {
  Poly out(change.variables());
  const std::size_t n = out.nvars();
  for (std::size_t i = 0; i < quad_coeffs.size(); ++i) {
    Exponent e(n, 0);
    e[corank + i] = 2;
    out.add_term(e, quad_coeffs[i]);
  }
  return out;
}

SplitResult split(const Poly& f, int k) {
  if (!f.is_zero() && ord(f).value() < 2)
    throw ClassificationError(ErrorKind::NotInM2,
                              "input has a nonzero constant or linear part");
  if (k < 2) throw std::invalid_argument("split needs k >= 2");
  const auto& vars = f.variables();
  const std::size_t n = vars.size();

  Matrix half_hessian = hessian_at_zero(f);
  for (auto& row : half_hessian)
    for (auto& x : row) x /= 2;
  const QuadDiag qd = diagonalize_quadratic(half_hessian);
  const std::size_t c = static_cast<std::size_t>(qd.corank);

  CoordChange change = CoordChange::linear(vars, qd.transform);
  Poly current = substitute(f, change, k);

  Poly expected_quadratic(vars);
  for (std::size_t i = c; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 2;
    expected_quadratic.add_term(e, qd.diag[i]);
  }
  if (homogeneous_part(current, 2) != expected_quadratic)
    throw ClassificationError(ErrorKind::Internal,
                              "linear change failed to diagonalize the 2-jet");

  auto first_nondegenerate = [&](const Exponent& e) -> std::size_t {
    for (std::size_t i = c; i < n; ++i)
      if (e[i] > 0) return i;
    return n;
  };

  for (int l = 3; l <= k; ++l) {
    // current = g + quadratic + sum_{i>c} x_i h_i with h_i in m^(l-1).
    std::vector<Poly> h(n, Poly(vars));
    bool has_mixed = false;
    for (const auto& [e, coeff] : current.terms()) {
      if (total_degree(e) < 3) continue;
      const std::size_t i = first_nondegenerate(e);
      if (i == n) continue;
      if (total_degree(e) < l)
        throw ClassificationError(ErrorKind::Internal,
                                  "mixed terms did not gain order in the splitting step");
      Exponent q = e;
      --q[i];
      h[i].add_term(q, coeff);
      has_mixed = true;
    }
    if (!has_mixed) continue;

    std::vector<Poly> images;
    for (std::size_t i = 0; i < n; ++i) {
      Poly img = Poly::variable(vars, i);
      if (i >= c) img -= h[i] * (1 / (2 * qd.diag[i]));
      images.push_back(std::move(img));
    }
    const CoordChange step(vars, std::move(images));
    current = substitute(current, step, k);
    change = change.then(step, k);
  }

  SplitResult result{qd.corank, qd.inertia, Poly(), change, {}};
  std::vector<std::string> residual_vars(vars.begin(), vars.begin() + c);
  Poly residual(residual_vars);
  for (const auto& [e, coeff] : current.terms()) {
    if (total_degree(e) == 2) continue;
    if (first_nondegenerate(e) != n)
      throw ClassificationError(ErrorKind::Internal,
                                "mixed terms survived the splitting iteration");
    residual.add_term(Exponent(e.begin(), e.begin() + c), coeff);
  }
  result.residual = std::move(residual);
  result.quad_coeffs.assign(qd.diag.begin() + c, qd.diag.end());
  return result;
}

int corank(const Poly& f) {
  return static_cast<int>(f.nvars() - rank(hessian_at_zero(f)));
}

}  // namespace realclass::splitting
