#include "trisurf/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "trisurf/signature.hpp"

namespace trisurf {

namespace {

int modn(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int inverse_mod(int a, int n) {
  for (int x = 1; x < n; ++x)
    if (modn(static_cast<long long>(a) * x, n) == 1) return x;
  if (n == 1) return 0;
  throw Error(fmt::format("{} is not a unit mod {}", a, n));
}

// A point of the surface with nontrivial stabilizer in <h>.
struct StabPoint {
  int cone;
  Elem coset;  // least element of x<g_i>
  int d;       // |<h> ∩ stabilizer|
  int exponent;
};

struct CyclicFixedData {
  int n = 0;
  std::vector<StabPoint> points;
  std::vector<std::vector<Elem>> coset_of;  // per cone: element -> least coset element
};

CyclicFixedData cyclic_fixed_data(const FiniteGroup& g, const GeneratingTriple& t, Elem h) {
  CyclicFixedData out;
  const int n = g.element_order(h);
  out.n = n;
  std::vector<Elem> hp(n);
  hp[0] = g.identity();
  for (int k = 1; k < n; ++k) hp[k] = g.mul(hp[k - 1], h);
  out.coset_of.assign(3, std::vector<Elem>(g.order(), -1));
  for (int i = 0; i < 3; ++i) {
    const Elem gi = t[i];
    const int m = g.element_order(gi);
    std::vector<int> log(g.order(), -1);
    std::vector<Elem> powers(m);
    Elem y = g.identity();
    for (int k = 0; k < m; ++k) {
      powers[k] = y;
      log[y] = k;
      y = g.mul(y, gi);
    }
    auto& coset = out.coset_of[i];
    for (Elem x = 0; x < g.order(); ++x) {
      if (coset[x] >= 0) continue;
      for (Elem s : powers) coset[g.mul(x, s)] = x;
      const Elem xi = g.inv(x);
      int d = 0;
      for (int k = 0; k < n; ++k)
        if (log[g.mul(g.mul(xi, hp[k]), x)] >= 0) ++d;
      if (d <= 1) continue;
      const int k = log[g.mul(g.mul(xi, hp[n / d]), x)];
      const int rot = modn(k / (m / d), d);
      const int e = (n / d) * inverse_mod(rot, d);
      out.points.push_back(StabPoint{i, x, d, e});
    }
  }
  return out;
}

long long quotient_genus_of(const FiniteGroup& g, const GeneratingTriple& t, const CyclicFixedData& data) {
  const long long genus = riemann_hurwitz_genus(g.order(), t.sig);
  long long s = 0;
  for (const auto& pt : data.points) s += pt.d - 1;
  long long num = 2 * genus - 2 - s;
  if (num % data.n != 0) throw ContradictionError("fixed-point data violate Riemann-Hurwitz");
  long long twice = num / data.n + 2;
  if (twice % 2 != 0 || twice < 0) throw ContradictionError("fixed-point data violate Riemann-Hurwitz");
  return twice / 2;
}

std::vector<std::pair<int, int>> size_exponent_data(const CyclicCoverModel& m) {
  std::vector<std::pair<int, int>> v;
  for (const auto& f : m.factors) v.emplace_back(f.kind == CoverFactor::Kind::Monomial ? 1 : f.degree, f.exponent);
  if (m.infinity_exponent != 0) v.emplace_back(1, m.infinity_exponent);
  return v;
}

}  // namespace

std::vector<int> CyclicCoverModel::branch_exponents() const {
  std::vector<int> v;
  for (const auto& f : factors) {
    int count = f.kind == CoverFactor::Kind::Monomial ? 1 : f.degree;
    for (int i = 0; i < count; ++i) v.push_back(f.exponent);
  }
  if (infinity_exponent != 0) v.push_back(infinity_exponent);
  return v;
}

std::optional<std::string> CyclicCoverModel::violation() const {
  if (n < 2) return "gonality below 2";
  auto ex = branch_exponents();
  for (int e : ex)
    if (e < 1 || e >= n) return fmt::format("exponent {} outside [1, {})", e, n);
  long long sum = std::accumulate(ex.begin(), ex.end(), 0LL);
  if (sum % n != 0) return fmt::format("n = {} does not divide the exponent sum {}", n, sum);
  int gg = n;
  for (int e : ex) gg = std::gcd(gg, e);
  if (gg != 1) return fmt::format("gcd(n, exponents) = {} is not 1", gg);
  return std::nullopt;
}

std::string CyclicCoverModel::render() const {
  std::vector<std::string> parts;
  for (const auto& f : factors) {
    std::string base;
    if (f.kind == CoverFactor::Kind::Monomial) {
      parts.push_back(f.exponent == 1 ? "x" : fmt::format("x^{}", f.exponent));
      continue;
    }
    std::string xs = f.degree == 1 ? "x" : fmt::format("x^{}", f.degree);
    base = fmt::format("({} {} 1)", xs, f.kind == CoverFactor::Kind::MinusOne ? "-" : "+");
    parts.push_back(f.exponent == 1 ? base : fmt::format("{}^{}", base, f.exponent));
  }
  std::string rhs;
  for (std::size_t i = 0; i < parts.size(); ++i) rhs += (i ? " * " : "") + parts[i];
  if (rhs.empty()) rhs = "1";
  return fmt::format("y^{} = {}", n, rhs);
}

long long ngonal_genus(int n, const std::vector<int>& exponents) {
  CyclicCoverModel m;
  m.n = n;
  for (int e : exponents) m.factors.push_back(CoverFactor{CoverFactor::Kind::Monomial, 1, e});
  return ngonal_genus(m);
}

long long ngonal_genus(const CyclicCoverModel& m) {
  if (auto v = m.violation()) throw Error("invalid cyclic cover model: " + *v);
  auto ex = m.branch_exponents();
  long long r = static_cast<long long>(ex.size());
  long long s = 0;
  for (int e : ex) s += std::gcd(e, m.n);
  long long twice = 2 + (r - 2) * m.n - s;
  if (twice < 0 || twice % 2 != 0) throw Error("n-gonal genus formula gives a non-integral value");
  return twice / 2;
}

std::string to_string(ActionCase c) {
  switch (c) {
    case ActionCase::AbelianPair: return "abelian-pair";
    case ActionCase::DihedralMixed: return "dihedral-mixed";
    case ActionCase::DihedralEqual: return "dihedral-equal";
    case ActionCase::CyclicInvolution: return "cyclic-involution";
    case ActionCase::CyclicOrderP: return "cyclic-order-p";
    case ActionCase::CyclicMixed: return "cyclic-mixed";
    case ActionCase::CyclicEqual: return "cyclic-equal";
  }
  return "?";
}

std::optional<ActionCase> parse_action_case(std::string_view s) {
  for (auto c : {ActionCase::AbelianPair, ActionCase::DihedralMixed, ActionCase::DihedralEqual, ActionCase::CyclicInvolution, ActionCase::CyclicOrderP,
                 ActionCase::CyclicMixed, ActionCase::CyclicEqual})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

int epsilon_j(int p, int j) {
  for (int eps = 1;; ++eps) {
    int v = eps * p - 2 * (j + 1);
    if (v >= 1 && v < p) return eps;
    if (v >= p) throw Error(fmt::format("no ε for p = {}, j = {}", p, j));
  }
}

CyclicCoverModel closed_form_model(ActionCase c, int p, int param) {
  using K = CoverFactor::Kind;
  if (p == 2 || !is_prime(p)) throw Error("the prime must be odd");
  const int q = p * p;
  CyclicCoverModel m;
  auto finish = [&] {
    long long sum = 0;
    for (int e : m.branch_exponents()) sum += e;
    m.infinity_exponent = modn(-sum, m.n);
    return m;
  };
  switch (c) {
    case ActionCase::AbelianPair:
      m.n = p;
      m.factors = {{K::MinusOne, 2 * p, 1}};
      return finish();
    case ActionCase::DihedralMixed:
      if (p < 5) throw Error("this case needs p >= 5");
      m.n = p;
      m.factors = {{K::MinusOne, p, 2}};
      return finish();
    case ActionCase::DihedralEqual: {
      if (param < 0 || param > p - 2) throw Error(fmt::format("j = {} outside 0..{}", param, p - 2));
      int eps = epsilon_j(p, param);
      m.n = p;
      m.factors = {{K::MinusOne, p, 2}, {K::PlusOne, p, eps * p - 2 * (param + 1)}};
      m.params = {{"j", param}, {"epsilon", eps}};
      return finish();
    }
    case ActionCase::CyclicInvolution:
      m.n = q;
      m.factors = {{K::PlusOne, 2, 1}};
      return finish();
    case ActionCase::CyclicOrderP:
      if (param < 1 || param > p - 1) throw Error(fmt::format("m = {} outside 1..{}", param, p - 1));
      m.n = p;
      m.factors = {{K::Monomial, 1, 2}, {K::MinusOne, 2 * p, param}};
      m.params = {{"m", param}};
      return finish();
    case ActionCase::CyclicMixed:
      if (param < 1 || param > p - 1) throw Error(fmt::format("k = {} outside 1..{}", param, p - 1));
      m.n = q;
      m.factors = {{K::Monomial, 1, param * p}, {K::MinusOne, 2, 1}};
      m.params = {{"k", param}};
      return finish();
    case ActionCase::CyclicEqual:
      if (param < 1 || param >= q || param % p == 0 || (param + 1) % p == 0)
        throw Error(fmt::format("l = {} needs (l,p²) = (l+1,p²) = 1 and 1 <= l < p²", param));
      m.n = q;
      m.factors = {{K::Monomial, 1, 2}, {K::MinusOne, 2, param}};
      m.params = {{"l", param}};
      return finish();
  }
  throw Error("unknown action case");
}

long long quotient_genus(const FiniteGroup& g, const GeneratingTriple& t, Elem h) {
  return quotient_genus_of(g, t, cyclic_fixed_data(g, t, h));
}

CyclicCoverModel derive_model(const FiniteGroup& g, const GeneratingTriple& t, Elem h) {
  using K = CoverFactor::Kind;
  const auto data = cyclic_fixed_data(g, t, h);
  const int n = data.n;
  if (quotient_genus_of(g, t, data) != 0) throw Error(fmt::format("not {}-gonal via this subgroup", n));

  // Branch values are <h>-orbits of points; group them by cone point and exponent.
  std::vector<Elem> hp(n);
  hp[0] = g.identity();
  for (int k = 1; k < n; ++k) hp[k] = g.mul(hp[k - 1], h);
  std::map<std::pair<int, int>, std::set<Elem>> groups;  // (cone, exponent) -> orbit ids
  for (const auto& pt : data.points) {
    Elem id = pt.coset;
    for (Elem s : hp) id = std::min(id, data.coset_of[pt.cone][g.mul(s, pt.coset)]);
    groups[{pt.cone, pt.exponent}].insert(id);
  }

  CyclicCoverModel m;
  m.n = n;
  std::vector<int> singles;
  std::map<int, int> used_degree;
  for (const auto& [key, ids] : groups) {
    const int size = static_cast<int>(ids.size());
    if (size == 1) {
      singles.push_back(key.second);
      continue;
    }
    int& used = used_degree[size];
    if (used >= 2) throw Error("branch data do not fit the x^d ± 1 vocabulary");
    m.factors.push_back(CoverFactor{used == 0 ? K::MinusOne : K::PlusOne, size, key.second});
    ++used;
  }
  if (singles.size() > 2) throw Error("more than two isolated branch values");
  if (singles.size() == 2) m.factors.insert(m.factors.begin(), CoverFactor{K::Monomial, 1, singles[0]});
  if (!singles.empty()) m.infinity_exponent = singles.back();
  if (auto v = m.violation()) throw ContradictionError("derived model is invalid: " + *v);
  return m;
}

bool models_equivalent(const CyclicCoverModel& a, const CyclicCoverModel& b) {
  if (a.n != b.n) return false;
  auto da = size_exponent_data(a);
  auto db = size_exponent_data(b);
  if (da.size() != db.size()) return false;
  std::sort(db.begin(), db.end());
  for (int u = 1; u < a.n; ++u) {
    if (std::gcd(u, a.n) != 1) continue;
    auto m = da;
    for (auto& [s, e] : m) e = modn(static_cast<long long>(e) * u, a.n);
    std::sort(m.begin(), m.end());
    if (m == db) return true;
  }
  return false;
}

std::vector<Elem> gonal_subgroups(const FiniteGroup& g, const GeneratingTriple& t, int n, bool normal_only) {
  std::vector<Elem> out;
  std::set<Elem> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != n) continue;
    auto sub = generated_subgroup(g, std::vector<Elem>{x});
    Elem least = *std::find_if(sub.begin(), sub.end(), [&](Elem y) { return g.element_order(y) == n; });
    if (!seen.insert(least).second) continue;
    if (normal_only) {
      bool normal = std::all_of(g.generators().begin(), g.generators().end(), [&](const auto& s) {
        return std::binary_search(sub.begin(), sub.end(), g.conj(s.second, x));
      });
      if (!normal) continue;
    }
    if (quotient_genus(g, t, least) == 0) out.push_back(least);
  }
  return out;
}

std::optional<Elem> model_subgroup(const FiniteGroup& g, const GeneratingTriple& t, int p) {
  for (int n : {p, p * p}) {
    auto subs = gonal_subgroups(g, t, n, true);
    if (!subs.empty()) return subs.front();
  }
  return std::nullopt;
}

bool is_hyperelliptic(const FiniteGroup& g, const GeneratingTriple& t) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2 && quotient_genus(g, t, x) == 0) return true;
  return false;
}

}  // namespace trisurf
