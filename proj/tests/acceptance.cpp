// End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero exit
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "realclass/binform.hpp"
#include "realclass/classify.hpp"
#include "realclass/cli.hpp"
#include "realclass/errors.hpp"
#include "realclass/localstd.hpp"
#include "realclass/split.hpp"
#include "test_support.hpp"

using namespace realclass;
using realclass::testing::kX;
using realclass::testing::kXY;
using realclass::testing::numbered_vars;
using realclass::testing::P;
using realclass::testing::Random;
using realclass::testing::simple_types;

namespace {

// Collects the first few mismatches of a criterion for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_) {
      os << ", " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return os.str();
  }

 private:
  long checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

std::string describe(const Report& r) {
  std::ostringstream os;
  os << to_string(r.real_type) << " mu=" << r.mu << " c=" << r.corank << " l=" << r.inertia;
  return os.str();
}

// Normal forms in two variables (one for A_k, k >= 2) with lambda = 0.
std::vector<std::pair<RealType, Poly>> base_suite() {
  std::vector<std::pair<RealType, Poly>> out;
  for (const RealType& t : simple_types(12)) {
    const int c = t.main.corank();
    const auto vars = c == 2 ? kXY : kX;
    out.emplace_back(t, normal_form(t, 0, vars, c));
  }
  return out;
}

ErrorKind error_kind(const Poly& f) {
  try {
    classify(f);
  } catch (const ClassificationError& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

int cli_code(const std::string& vars, const std::string& expr) {
  const char* argv[] = {"realclassify", "--vars", vars.c_str(), expr.c_str()};
  std::ostringstream out, err;
  return cli::run(4, argv, out, err);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome normal_form_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  Checker chk;
  for (const RealType& t : simple_types(12)) {
    const int c = t.main.corank();
    for (int extra = 0; extra <= 4; ++extra) {
      const int n = c + extra;
      if (n == 0 || n > 6) continue;
      const auto vars = numbered_vars(static_cast<std::size_t>(n));
      for (int lambda = 0; lambda <= extra; ++lambda) {
        const Poly f = normal_form(t, lambda, vars, c);
        const Report r = classify(f);
        chk.expect(r.real_type == t && r.mu == t.main.milnor() && r.corank == c &&
                       r.inertia == lambda,
                   to_string(f) + " -> " + describe(r));
      }
    }
  }
  const double secs = seconds_since(t0);
  chk.expect(secs < 60, "suite took longer than 60 s");
  std::ostringstream os;
  os << chk.summary() << ", " << secs << " s";
  return {chk.ok(), os.str()};
}

Outcome sign_law() {
  Checker chk;
  for (int k = 1; k <= 12; ++k) {
    const Report plus = classify(Poly::monomial(kX, {k + 1}));
    const Report minus = classify(Poly::monomial(kX, {k + 1}, -1));
    const bool same = plus.real_type == minus.real_type && plus.inertia == minus.inertia;
    chk.expect(same == (k % 2 == 0), "k=" + std::to_string(k) + ": " + describe(plus) +
                                         " vs " + describe(minus));
  }
  return {chk.ok(), chk.summary()};
}

Outcome coordinate_invariance() {
  const auto t0 = std::chrono::steady_clock::now();
  Checker chk;
  Random rng(1001);
  for (const RealType& t : simple_types(12)) {
    const int c = t.main.corank();
    for (int trial = 0; trial < 100; ++trial) {
      const int lambda = rng.integer(0, 2 - c);
      const Poly f = normal_form(t, lambda, kXY, c);
      const int k = localstd::determinacy_bound(f);
      const Poly g = substitute(f, rng.coord_change(kXY), k);
      const Report r = classify(g);
      chk.expect(r.real_type == t && r.mu == t.main.milnor() && r.corank == c &&
                     r.inertia == lambda,
                 to_string(g) + " -> " + describe(r) + ", expected " + to_string(t));
    }
  }
  const double secs = seconds_since(t0);
  chk.expect(secs < 300, "invariance run took longer than 5 min");
  std::ostringstream os;
  os << chk.summary() << ", " << secs << " s";
  return {chk.ok(), os.str()};
}

// If v = colength of J + m^(N+1) equals mu_hat with N = mu_hat + 2, then mu =
// mu_hat: either some m^k (k <= N) lies in J, and then v = mu, or every
// graded piece up to N survives and v >= N + 1 > mu_hat.
bool oracle_agrees(const Poly& f, Checker& chk) {
  const long mu = localstd::milnor_number(f).value();
  const long oracle = localstd::milnor_oracle(f, static_cast<int>(mu + 2));
  chk.expect(mu == oracle, to_string(f) + ": mu=" + std::to_string(mu) +
                               " oracle=" + std::to_string(oracle));
  return mu == oracle;
}

Outcome milnor_oracle_equivalence() {
  Checker chk;
  for (const auto& [t, f] : base_suite()) oracle_agrees(f, chk);
  for (const char* text : {"x^2*y - y^4 + x^4", "x^3 + x*y^3 + y^5", "(x+y)^3 + y^4",
                           "x^2*y + y^3 + x^5*y", "x^3 - y^5 + x^2*y^3"})
    oracle_agrees(P(text), chk);
  Random rng(1002);
  const auto types = simple_types(8);
  for (int i = 0; i < 50; ++i) {
    const RealType& t = types[static_cast<std::size_t>(rng.integer(0, static_cast<int>(types.size()) - 1))];
    const Poly f = normal_form(t, 0, kXY, t.main.corank());
    const int k = localstd::determinacy_bound(f);
    const Poly perturbed = substitute(f + rng.poly(kXY, 3, k + 1, k + 2), rng.coord_change(kXY), k + 2);
    oracle_agrees(perturbed, chk);
  }
  return {chk.ok(), chk.summary()};
}

Outcome determinacy_behavior() {
  Checker chk;
  chk.expect(localstd::determinacy_bound(P("x^3 + y^4")) == 4, "x^3 + y^4");
  for (int k = 1; k <= 12; ++k)
    chk.expect(localstd::determinacy_bound(Poly::monomial(kX, {k + 1})) == k + 1,
               "x^" + std::to_string(k + 1));
  Random rng(1003);
  for (int k = 4; k <= 12; ++k) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const RealType t{MainType::D(k), s};
      const Poly f = normal_form(t, 0, kXY, 2);
      const Report base = classify(f);
      for (int trial = 0; trial < 10; ++trial) {
        const Poly g = jet(f, k - 1) + rng.poly(kXY, 4, k, k + 3);
        const Report r = classify(g);
        chk.expect(r.real_type == base.real_type && r.mu == base.mu && r.corank == base.corank &&
                       r.inertia == base.inertia,
                   to_string(g) + " -> " + describe(r));
      }
    }
  }
  return {chk.ok(), chk.summary()};
}

Outcome split_reconstruction() {
  Checker chk;
  Random rng(1004);
  std::vector<Poly> suite;
  for (const auto& [t, f] : base_suite()) {
    suite.push_back(f);
    suite.push_back(substitute(f, rng.coord_change(f.variables()),
                               localstd::determinacy_bound(f)));
  }
  for (const RealType& t : simple_types(6))
    suite.push_back(normal_form(t, 1, numbered_vars(4), t.main.corank()));
  for (const Poly& f : suite) {
    const int k = localstd::determinacy_bound(f);
    const splitting::SplitResult s = splitting::split(f, std::max(k, 2));
    const Poly rest = substitute(f, s.change, std::max(k, 2)) - s.embedded_residual() -
                      s.quadratic_part();
    chk.expect(rest.is_zero(), to_string(f) + ": remainder " + to_string(rest));
  }
  const auto v = numbered_vars(2);
  const Report plus = classify(P("x1^2 + x2^2", v));
  const Report minus = classify(P("-x1^2 - x2^2", v));
  chk.expect(plus.real_type == minus.real_type && plus.real_type.main == MainType::A(1),
             "definite pair main types differ");
  chk.expect(plus.inertia == 0 && minus.inertia == 2, "definite pair inertia");
  return {chk.ok(), chk.summary()};
}

Outcome sturm_counting() {
  Checker chk;
  Random rng(1005);
  for (int i = 0; i < 200; ++i) {
    int r, s;
    do {
      r = rng.integer(0, 9);
      s = rng.integer(0, (9 - r) / 2);
    } while (r + s == 0);
    const Poly p = rng.real_root_poly(kX, r, s);
    const int n = binform::sturm_count(p);
    chk.expect(n == r, to_string(p) + ": " + std::to_string(n) + " != " + std::to_string(r));
  }
  return {chk.ok(), chk.summary()};
}

Outcome error_paths() {
  Checker chk;
  const std::vector<std::string> v5{"x", "y", "z", "w", "v"};
  struct Case {
    std::string vars, expr;
    std::vector<std::string> var_list;
    ErrorKind kind;
    int code;
  };
  const std::vector<Case> cases{
      {"x,y", "x^2*y^2", kXY, ErrorKind::NotIsolated, 3},
      {"x,y", "x^4+y^4", kXY, ErrorKind::NotSimple, 4},
      {"x,y", "x^3+y^7", kXY, ErrorKind::NotSimple, 4},
      {"x,y,z,w,v", "x^2+y^2+z^3+w^3+v^3", v5, ErrorKind::CorankTooLarge, 4},
      {"x", "x^3+7", kX, ErrorKind::NotInM2, 5},
  };
  for (const Case& c : cases) {
    chk.expect(error_kind(P(c.expr, c.var_list)) == c.kind, c.expr + " error kind");
    chk.expect(cli_code(c.vars, c.expr) == c.code, c.expr + " exit code");
  }
  chk.expect(localstd::milnor_number(P("x^3+y^7")) == ExtendedCount(12), "x^3+y^7 has mu 12");
  return {chk.ok(), chk.summary()};
}

std::vector<Exponent> lead_ideal(const std::vector<Poly>& gens) {
  return localstd::std_basis(gens).staircase().generators();
}

Outcome std_basis_determinism() {
  Checker chk;
  Random rng(1006);
  for (const auto& [t, f] : base_suite()) {
    for (auto gens : {jacobian_generators(f), localstd::m2_jacobian_generators(f)}) {
      std::erase_if(gens, [](const Poly& g) { return g.is_zero(); });
      auto a = gens, b = gens;
      std::shuffle(a.begin(), a.end(), rng.engine());
      std::shuffle(b.begin(), b.end(), rng.engine());
      chk.expect(lead_ideal(a) == lead_ideal(b), to_string(f));
    }
  }
  return {chk.ok(), chk.summary()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"normal forms classify to their own type, stabilized up to n=6", normal_form_suite},
      {"A_k sign law for k=1..12", sign_law},
      {"invariance under 100 random coordinate changes per normal form", coordinate_invariance},
      {"Milnor number equals the Macaulay-matrix oracle", milnor_oracle_equivalence},
      {"determinacy bounds and D_k jets with higher terms", determinacy_behavior},
      {"splitting reconstruction and the definite pair", split_reconstruction},
      {"Sturm counts on 200 constructed polynomials", sturm_counting},
      {"error paths and exit codes", error_paths},
      {"standard basis lead ideals independent of generator order", std_basis_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first
              << " (" << o.detail << ")" << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
