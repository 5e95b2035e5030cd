#include "realclass/localstd.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "realclass/errors.hpp"

namespace realclass::localstd {

int LocalOrder::compare(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

// The terms map is sorted by grevlex, largest first. The local leading term
// is the grevlex-largest term among those of minimal degree, i.e. the first
// entry of the last degree block.
Poly::TermMap::const_iterator leading_term(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto it = std::prev(f.terms().end());
  const int d = total_degree(it->first);
  while (it != f.terms().begin()) {
    auto prev = std::prev(it);
    if (total_degree(prev->first) != d) break;
    it = prev;
  }
  return it;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent quotient(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct Element {
  Poly poly;
  Exponent lead;
  Rational lc;
  int ecart = 0;

  explicit Element(Poly p) : poly(std::move(p)) { refresh(); }

  void refresh() {
    auto it = leading_term(poly);
    lead = it->first;
    lc = it->second;
    ecart = poly.degree() - total_degree(lead);
  }
};

// h -= c * x^shift * g, dropping terms of degree above `bound`.
void subtract_multiple(Poly& h, const Poly& g, const Rational& c,
                       const Exponent& shift, std::optional<int> bound) {
  const int ds = total_degree(shift);
  Exponent e(shift.size());
  for (const auto& [ge, gc] : g.terms()) {
    if (bound && total_degree(ge) + ds > *bound) continue;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + shift[i];
    h.add_term(e, -c * gc);
  }
}

Poly truncated(const Poly& f, std::optional<int> bound) {
  return bound ? jet(f, *bound) : f;
}

Poly make_monic(Poly p) {
  if (!p.is_zero()) p *= 1 / leading_term(p)->second;
  return p;
}

// Mora's normal form with ecart-minimal reducer choice. `reducers` is the
// current basis; intermediate remainders are appended to a local copy of T.
Poly mora_reduce(Poly h, const std::vector<const Element*>& reducers,
                 std::optional<int> bound) {
  h = truncated(h, bound);
  std::vector<const Element*> T = reducers;
  std::deque<Element> extra;
  while (!h.is_zero()) {
    auto lt = leading_term(h);
    const Exponent lm = lt->first;
    const Rational lc = lt->second;
    const Element* best = nullptr;
    for (const Element* t : T) {
      if (!divides(t->lead, lm)) continue;
      if (!best || t->ecart < best->ecart) best = t;
    }
    if (!best) break;
    const int h_ecart = h.degree() - total_degree(lm);
    if (best->ecart > h_ecart) {
      extra.emplace_back(h);
      T.push_back(&extra.back());
    }
    subtract_multiple(h, best->poly, lc / best->lc, quotient(lm, best->lead),
                      bound);
  }
  return h;
}

std::vector<Exponent> minimize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(), GrevlexGreater{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) minimal.push_back(gens[i]);
  }
  return minimal;
}

}  // namespace

Exponent leading_exponent(const Poly& f) { return leading_term(f)->first; }
Rational leading_coefficient(const Poly& f) { return leading_term(f)->second; }
int ecart(const Poly& f) {
  return f.degree() - total_degree(leading_exponent(f));
}

// ---------------------------------------------------------------------------
// Staircase

Staircase::Staircase(std::size_t nvars, const std::vector<Exponent>& generators)
    : nvars_(nvars), gens_(minimize(generators)) {
  for (const auto& g : gens_)
    if (g.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
}

bool Staircase::contains(const Exponent& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponent& g) { return divides(g, m); });
}

bool Staircase::complement_is_finite() const {
  for (std::size_t v = 0; v < nvars_; ++v) {
    const bool has_pure_power = std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) {
      for (std::size_t i = 0; i < nvars_; ++i)
        if (i != v && g[i] != 0) return false;
      return true;
    });
    if (!has_pure_power) return false;
  }
  return true;
}

std::optional<std::vector<Exponent>> Staircase::standard_monomials() const {
  if (!complement_is_finite()) return std::nullopt;
  std::vector<Exponent> out;
  Exponent start(nvars_, 0);
  if (contains(start)) return out;
  // The complement is closed under division, so every standard monomial is
  // reached by raising variables in non-decreasing index order.
  std::vector<std::pair<Exponent, std::size_t>> stack{{start, 0}};
  while (!stack.empty()) {
    auto [e, first] = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = first; i < nvars_; ++i) {
      Exponent next = e;
      ++next[i];
      if (!contains(next)) stack.emplace_back(std::move(next), i);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
    return grevlex_compare(a, b) < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// StdBasis

StdBasis::StdBasis(std::vector<std::string> variables, std::vector<Poly> generators)
    : vars_(std::move(variables)), gens_(std::move(generators)) {
  leads_.reserve(gens_.size());
  for (const Poly& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("standard basis element is zero");
    if (g.variables() != vars_)
      throw std::invalid_argument("standard basis element over wrong variables");
    leads_.push_back(leading_exponent(g));
  }
}

Poly mora_normal_form(const Poly& f, const StdBasis& G,
                      const NormalFormOptions& options) {
  if (f.variables() != G.variables())
    throw std::invalid_argument("normal form over different variables");
  std::vector<Element> elements;
  elements.reserve(G.generators().size());
  for (const Poly& g : G.generators()) elements.emplace_back(g);
  std::vector<const Element*> reducers;
  for (const Element& e : elements) reducers.push_back(&e);
  return mora_reduce(f, reducers, options.truncate_above);
}

namespace {

class StdBasisBuilder {
 public:
  // With `bound`, all computation happens modulo m^(bound+1).
  StdBasisBuilder(std::vector<std::string> vars, std::optional<int> bound)
      : vars_(std::move(vars)), order_{vars_.size()}, bound_(bound) {}

  void add(Poly h) {
    h = make_monic(truncated(h, bound_));
    if (h.is_zero()) return;
    const std::size_t idx = elements_.size();
    elements_.push_back(std::make_unique<Element>(std::move(h)));
    alive_.push_back(true);
    for (std::size_t j = 0; j < idx; ++j)
      if (alive_[j]) push_pair(j, idx);
    update_bound();
  }

  void run() {
    while (!pairs_.empty()) {
      auto node = pairs_.extract(pairs_.begin());
      const PairKey& key = node.value();
      const std::size_t i = key.i, j = key.j;
      if (!alive_[i] || !alive_[j]) continue;
      if (bound_ && key.degree > *bound_) continue;
      Poly s = spoly(*elements_[i], *elements_[j], key.lcm);
      Poly h = mora_reduce(std::move(s), live_reducers(), bound_);
      if (!h.is_zero()) add(std::move(h));
    }
  }

  // True when the lead ideal leaves only monomials of degree < limit outside,
  // so m^limit lies in the ideal and nothing was lost to a preset bound.
  bool settled_below(int limit) const {
    std::vector<Exponent> leads;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (alive_[i]) leads.push_back(elements_[i]->lead);
    auto standard = Staircase(vars_.size(), leads).standard_monomials();
    if (!standard) return false;
    return std::all_of(standard->begin(), standard->end(),
                       [&](const Exponent& m) { return total_degree(m) < limit; });
  }

  StdBasis result() const {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (alive_[i]) gens.push_back(elements_[i]->poly);
    return StdBasis(vars_, std::move(gens));
  }

 private:
  struct PairKey {
    int degree;
    Exponent lcm;
    std::size_t i, j;
  };
  struct PairLess {
    LocalOrder order;
    bool operator()(const PairKey& a, const PairKey& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (int c = order.compare(a.lcm, b.lcm); c != 0) return c > 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };

  void push_pair(std::size_t i, std::size_t j) {
    Exponent l = lcm(elements_[i]->lead, elements_[j]->lead);
    const int d = total_degree(l);
    if (bound_ && d > *bound_) return;
    pairs_.insert(PairKey{d, std::move(l), i, j});
  }

  Poly spoly(const Element& a, const Element& b, const Exponent& l) const {
    Poly s(vars_);
    subtract_multiple(s, a.poly, Rational(-1) / a.lc, quotient(l, a.lead), bound_);
    subtract_multiple(s, b.poly, Rational(1) / b.lc, quotient(l, b.lead), bound_);
    return s;
  }

  std::vector<const Element*> live_reducers() const {
    std::vector<const Element*> r;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (alive_[i]) r.push_back(elements_[i].get());
    return r;
  }

  // Once the lead ideal has a finite complement with maximal degree D, all of
  // m^(D+1) lies in the ideal (Nakayama), so terms above D+1 can be dropped
  // everywhere.
  void update_bound() {
    std::vector<Exponent> leads;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (alive_[i]) leads.push_back(elements_[i]->lead);
    auto standard = Staircase(vars_.size(), leads).standard_monomials();
    if (!standard) return;
    int max_deg = -1;
    for (const auto& m : *standard) max_deg = std::max(max_deg, total_degree(m));
    const int new_bound = max_deg + 1;
    if (bound_ && *bound_ <= new_bound) return;
    bound_ = new_bound;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!alive_[i]) continue;
      Element& e = *elements_[i];
      if (total_degree(e.lead) > new_bound) {
        alive_[i] = false;
        continue;
      }
      e.poly = jet(e.poly, new_bound);
      e.refresh();
    }
  }

  std::vector<std::string> vars_;
  LocalOrder order_;
  std::vector<std::unique_ptr<Element>> elements_;
  std::vector<bool> alive_;
  std::set<PairKey, PairLess> pairs_{PairLess{order_}};
  std::optional<int> bound_;
};

}  // namespace

namespace {

constexpr int kMaxPresetBound = 64;

// Standard basis computed modulo m^(bound+1). If the resulting staircase sits
// below degree `bound`, then m^bound is in I + m^(bound+1), hence in I by
// Nakayama, and the truncated basis is a standard basis of I itself.
std::optional<StdBasis> bounded_std_basis(const std::vector<std::string>& vars,
                                          const std::vector<Poly>& gens, int bound) {
  StdBasisBuilder builder(vars, bound);
  for (const Poly& g : gens) builder.add(g);
  builder.run();
  if (!builder.settled_below(bound)) return std::nullopt;
  return builder.result();
}

const std::vector<std::string>& common_variables(const std::vector<Poly>& gens) {
  const auto& vars = gens.front().variables();
  for (const Poly& g : gens)
    if (g.variables() != vars)
      throw std::invalid_argument("generators over different variables");
  return vars;
}

}  // namespace

StdBasis std_basis(const std::vector<Poly>& gens) {
  if (gens.empty()) return StdBasis({}, {});
  const auto& vars = common_variables(gens);

  // Untruncated Mora reduction can blow up coefficients on tails of growing
  // degree, so first try increasing truncation degrees; these succeed for
  // every ideal of finite colength whose staircase is low enough.
  int top = 0;
  for (const Poly& g : gens) top = std::max(top, g.degree());
  for (int bound = std::max(4, top + 2); bound <= kMaxPresetBound; bound *= 2)
    if (auto G = bounded_std_basis(vars, gens, bound)) return *G;

  StdBasisBuilder builder(vars, std::nullopt);
  for (const Poly& g : gens) builder.add(g);
  builder.run();
  return builder.result();
}

StdBasis std_basis(const std::vector<Poly>& gens, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  if (gens.empty()) return StdBasis({}, {});
  auto G = bounded_std_basis(common_variables(gens), gens, std::max(power, 1));
  if (!G) throw std::logic_error("ideal does not contain the claimed power of m");
  return *G;
}

ExtendedCount count_staircase(const StdBasis& G) {
  auto standard = G.staircase().standard_monomials();
  if (!standard) return ExtendedCount::infinity();
  return static_cast<long>(standard->size());
}

ExtendedCount milnor_number(const Poly& f) {
  if (f.nvars() == 0) return 0;
  std::vector<Poly> gens;
  for (Poly& d : jacobian_generators(f))
    if (!d.is_zero()) gens.push_back(std::move(d));
  // A vanishing partial means f does not involve that variable.
  if (gens.size() < f.nvars()) return ExtendedCount::infinity();

  // Bezout: an isolated zero of n equations has multiplicity mu at most the
  // product of their degrees, and then m^mu lies in the Jacobian ideal. So a
  // computation modulo m^(B+1) with B >= mu settles, and one that does not
  // settle proves mu is infinite.
  long bezout = 1;
  for (const Poly& d : gens) {
    bezout *= std::max(d.degree(), 1);
    if (bezout > kMaxPresetBound) break;
  }
  if (bezout <= kMaxPresetBound) {
    const int bound = static_cast<int>(std::max(bezout, 2L));
    auto G = bounded_std_basis(f.variables(), gens, bound);
    return G ? count_staircase(*G) : ExtendedCount::infinity();
  }
  return count_staircase(std_basis(gens));
}

long milnor_oracle(const Poly& f, int N) {
  if (N < 1) throw std::invalid_argument("oracle degree must be >= 1");
  const std::size_t n = f.nvars();

  // All monomials of degree <= N, indexed.
  std::vector<Exponent> monomials;
  {
    std::vector<std::pair<Exponent, std::size_t>> stack{{Exponent(n, 0), 0}};
    while (!stack.empty()) {
      auto [e, first] = std::move(stack.back());
      stack.pop_back();
      if (total_degree(e) < N) {
        for (std::size_t i = first; i < n; ++i) {
          Exponent next = e;
          ++next[i];
          stack.emplace_back(std::move(next), i);
        }
      }
      monomials.push_back(std::move(e));
    }
  }
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  // Sparse echelon form keyed by pivot column.
  using Row = std::map<std::size_t, Rational>;
  std::map<std::size_t, Row> pivots;
  auto insert_row = [&](Row row) {
    while (!row.empty()) {
      auto [col, val] = *row.begin();
      auto p = pivots.find(col);
      if (p == pivots.end()) {
        pivots.emplace(col, std::move(row));
        return;
      }
      const Rational factor = val / p->second.begin()->second;
      for (const auto& [c, v] : p->second) {
        auto [it, inserted] = row.try_emplace(c, -factor * v);
        if (!inserted) {
          it->second -= factor * v;
          if (it->second == 0) row.erase(it);
        }
      }
    }
  };

  for (const Poly& d : jacobian_generators(f)) {
    if (d.is_zero()) continue;
    const long od = ord(d).value();
    for (const Exponent& m : monomials) {
      if (total_degree(m) + od > N) continue;
      Row row;
      for (const auto& [e, c] : d.terms()) {
        if (total_degree(e) + total_degree(m) > N) continue;
        Exponent s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + m[i];
        row.emplace(index.at(s), c);
      }
      insert_row(std::move(row));
    }
  }
  return static_cast<long>(monomials.size() - pivots.size());
}

int highest_corner_degree(const StdBasis& G) {
  auto standard = G.staircase().standard_monomials();
  if (!standard)
    throw ClassificationError(ErrorKind::NotIsolated,
                              "lead ideal has an infinite staircase complement");
  int max_deg = -1;
  for (const auto& m : *standard) max_deg = std::max(max_deg, total_degree(m));
  return max_deg;
}

std::vector<Poly> m2_jacobian_generators(const Poly& f) {
  const std::size_t n = f.nvars();
  std::vector<Poly> gens;
  for (const Poly& d : jacobian_generators(f)) {
    if (d.is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Exponent e(n, 0);
        ++e[a];
        ++e[b];
        gens.push_back(d.shifted(e));
      }
  }
  return gens;
}

int determinacy_bound(const Poly& f) {
  if (!f.is_zero() && ord(f).value() < 2)
    throw ClassificationError(ErrorKind::NotInM2,
                              "input has a nonzero constant or linear part");
  const ExtendedCount mu = milnor_number(f);
  if (mu.is_infinite())
    throw ClassificationError(ErrorKind::NotIsolated,
                              "singularity is not isolated (Milnor number is infinite)");
  // m^mu lies in J, so m^(mu+2) lies in m^2 J.
  const int corner = highest_corner_degree(
      std_basis(m2_jacobian_generators(f), static_cast<int>(mu.value() + 2)));
  return static_cast<int>(std::min<long>(mu.value() + 1, corner));
}

}  // namespace realclass::localstd
