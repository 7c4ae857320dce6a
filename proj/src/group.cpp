#include "trisurf/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace trisurf {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Square integer matrix acting on Z_{m_1} x ... x Z_{m_k} (row i reduced mod m_i).
struct Matrix {
  int dim = 0;
  std::vector<long long> a;

  static Matrix identity(int dim) {
    Matrix m{dim, std::vector<long long>(static_cast<std::size_t>(dim) * dim, 0)};
    for (int i = 0; i < dim; ++i) m.a[i * dim + i] = 1;
    return m;
  }
  static Matrix rows(std::initializer_list<std::initializer_list<long long>> r) {
    Matrix m;
    m.dim = static_cast<int>(r.size());
    for (const auto& row : r) m.a.insert(m.a.end(), row.begin(), row.end());
    return m;
  }
  long long at(int i, int j) const { return a[i * dim + j]; }

  Matrix times(const Matrix& o, const std::vector<int>& moduli) const {
    Matrix r{dim, std::vector<long long>(a.size(), 0)};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        long long s = 0;
        for (int k = 0; k < dim; ++k) s += at(i, k) * o.at(k, j);
        r.a[i * dim + j] = mod(s, moduli[i]);
      }
    return r;
  }
  Matrix reduced(const std::vector<int>& moduli) const {
    Matrix r = *this;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) r.a[i * dim + j] = mod(at(i, j), moduli[i]);
    return r;
  }
  bool operator==(const Matrix&) const = default;
};

struct NamedElement {
  std::string name;
  std::vector<int> vec;        // coordinates in the abelian normal part
  std::string complement_word;  // word in the complement's generators
};

// N ⋊ H with N = Z_{m_1} x ... x Z_{m_k} abelian and H acting through matrices.
struct SemidirectSpec {
  std::vector<int> moduli;
  GroupPtr complement;
  std::vector<Matrix> action;  // one per complement generator, same order
  std::vector<NamedElement> named;
  std::vector<std::string> relations;  // "lhs=rhs" words in the named generators
};

void check_relations(const FiniteGroup& g, const std::vector<std::string>& relations) {
  for (const auto& rel : relations) {
    auto eq = rel.find('=');
    Elem lhs = g.eval(std::string_view(rel).substr(0, eq));
    Elem rhs = eq == std::string::npos ? g.identity() : g.eval(std::string_view(rel).substr(eq + 1));
    if (lhs != rhs)
      throw Error(fmt::format("presentation relation {} fails in {}", rel, g.family().tag()));
  }
}

GroupPtr trivial_group(Family fam) {
  return std::make_shared<FiniteGroup>(std::move(fam), 1, std::vector<Elem>{0},
                                       std::vector<std::pair<std::string, Elem>>{});
}

GroupPtr build_semidirect(Family fam, const SemidirectSpec& spec) {
  const FiniteGroup& h = *spec.complement;
  const int hn = h.order();
  const int k = static_cast<int>(spec.moduli.size());
  int nsize = 1;
  for (int m : spec.moduli) nsize *= m;

  // Matrix of every complement element, with a consistency check that the
  // generator images define a homomorphism.
  std::vector<std::optional<Matrix>> mats(hn);
  mats[0] = Matrix::identity(k);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < h.generators().size(); ++j) {
      Elem y = h.mul(x, h.generators()[j].second);
      Matrix my = mats[x]->times(spec.action[j].reduced(spec.moduli), spec.moduli);
      if (!mats[y]) {
        mats[y] = my;
        queue.push_back(y);
      } else if (!(*mats[y] == my)) {
        throw Error(fmt::format("action of complement is not a homomorphism in {}", fam.tag()));
      }
    }
  }

  auto decode = [&](Elem e, std::vector<int>& v) {
    int hpart = e % hn;
    int rest = e / hn;
    for (int i = k - 1; i >= 0; --i) {
      v[i] = rest % spec.moduli[i];
      rest /= spec.moduli[i];
    }
    return hpart;
  };
  auto encode = [&](const std::vector<int>& v, int hpart) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * spec.moduli[i] + v[i];
    return idx * hn + hpart;
  };

  const int n = nsize * hn;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<int> v(k), w(k), r(k);
  for (Elem x = 0; x < n; ++x) {
    int hx = decode(x, v);
    const Matrix& m = *mats[hx];
    for (Elem y = 0; y < n; ++y) {
      int hy = decode(y, w);
      for (int i = 0; i < k; ++i) {
        long long s = v[i];
        for (int j = 0; j < k; ++j) s += m.at(i, j) * w[j];
        r[i] = mod(s, spec.moduli[i]);
      }
      table[static_cast<std::size_t>(x) * n + y] = encode(r, h.mul(hx, hy));
    }
  }

  std::vector<std::pair<std::string, Elem>> gens;
  for (const auto& ne : spec.named) {
    std::vector<int> vv(k);
    for (int i = 0; i < k; ++i) vv[i] = mod(ne.vec[i], spec.moduli[i]);
    gens.emplace_back(ne.name, encode(vv, ne.complement_word.empty() ? 0 : h.eval(ne.complement_word)));
  }
  auto g = std::make_shared<FiniteGroup>(std::move(fam), n, std::move(table), std::move(gens));
  check_relations(*g, spec.relations);
  return g;
}

GroupPtr build_direct(Family fam, const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::pair<std::string, Elem>> gens;
  for (const auto& [name, e] : a.generators()) gens.emplace_back(name, e * nb);
  for (const auto& [name, e] : b.generators()) {
    std::string nm = name;
    while (std::any_of(gens.begin(), gens.end(), [&](const auto& ge) { return ge.first == nm; }))
      nm += "2";
    gens.emplace_back(nm, e);
  }
  return std::make_shared<FiniteGroup>(std::move(fam), n, std::move(table), std::move(gens));
}

void require_odd_prime(int p) {
  if (p == 2) throw Error("p = 2 is not supported: the prime must be odd");
  if (!is_prime(p)) throw Error(fmt::format("{} is not a prime", p));
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Family

Family Family::cyclic(int n) { return Family{FamilyKind::Cyclic, 0, n, {}}; }
Family Family::dihedral(int n) { return Family{FamilyKind::Dihedral, 0, n, {}}; }
Family Family::direct(Family lhs, Family rhs) {
  return Family{FamilyKind::DirectProduct, 0, 0, {std::move(lhs), std::move(rhs)}};
}
Family Family::catalog(FamilyKind kind, int p) { return Family{kind, p, 0, {}}; }

int Family::declared_order() const {
  switch (kind) {
    case FamilyKind::Cyclic: return n;
    case FamilyKind::Dihedral: return 2 * n;
    case FamilyKind::DirectProduct: return factors.at(0).declared_order() * factors.at(1).declared_order();
    case FamilyKind::Z2pxZp:
    case FamilyKind::DpxZp:
    case FamilyKind::Zp2SemiZ2:
    case FamilyKind::Z2p2: return 2 * p * p;
    case FamilyKind::Zp2SemiD3: return 6 * p * p;
    case FamilyKind::DpxDp:
    case FamilyKind::DpxZ2p: return 4 * p * p;
    case FamilyKind::Dp2SemiZ2:
    case FamilyKind::Zp2SemiD4: return 8 * p * p;
  }
  return 0;
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::Cyclic: return fmt::format("Cyclic({})", n);
    case FamilyKind::Dihedral: return fmt::format("Dihedral({})", n);
    case FamilyKind::DirectProduct: return factors.at(0).name() + "x" + factors.at(1).name();
    case FamilyKind::Z2pxZp: return "Z2pxZp";
    case FamilyKind::DpxZp: return "DpxZp";
    case FamilyKind::Zp2SemiZ2: return "Zp2SemiZ2";
    case FamilyKind::Z2p2: return "Z2p2";
    case FamilyKind::Zp2SemiD3: return "Zp2SemiD3";
    case FamilyKind::DpxDp: return "DpxDp";
    case FamilyKind::DpxZ2p: return "DpxZ2p";
    case FamilyKind::Dp2SemiZ2: return "Dp2SemiZ2";
    case FamilyKind::Zp2SemiD4: return "Zp2SemiD4";
  }
  return "?";
}

std::string Family::tag() const {
  if (kind == FamilyKind::DirectProduct) return factors.at(0).tag() + "x" + factors.at(1).tag();
  if (p == 0) return name();
  return fmt::format("{}(p={})", name(), p);
}

namespace {

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char ch : std::to_string(n)) out += digits[ch - '0'];
  return out;
}

}  // namespace

std::string Family::pretty() const {
  switch (kind) {
    case FamilyKind::Cyclic: return "ℤ" + subscript(n);
    case FamilyKind::Dihedral: return "𝔻" + subscript(n);
    case FamilyKind::DirectProduct: return factors.at(0).pretty() + "×" + factors.at(1).pretty();
    case FamilyKind::Z2pxZp: return "ℤ₂ₚ×ℤₚ";
    case FamilyKind::DpxZp: return "𝔻ₚ×ℤₚ";
    case FamilyKind::Zp2SemiZ2: return "ℤₚ²⋊ℤ₂";
    case FamilyKind::Z2p2: return "ℤ₂ₚ²";
    case FamilyKind::Zp2SemiD3: return "ℤₚ²⋊𝔻₃";
    case FamilyKind::DpxDp: return "𝔻ₚ×𝔻ₚ";
    case FamilyKind::DpxZ2p: return "𝔻ₚ×ℤ₂ₚ";
    case FamilyKind::Dp2SemiZ2: return "𝔻ₚ²⋊ℤ₂";
    case FamilyKind::Zp2SemiD4: return "ℤ_{p²}⋊𝔻₄";
  }
  return "?";
}

Family parse_family(std::string_view name, int p) {
  static const std::map<std::string, FamilyKind, std::less<>> kinds = {
      {"Z2pxZp", FamilyKind::Z2pxZp},       {"DpxZp", FamilyKind::DpxZp},
      {"Zp2SemiZ2", FamilyKind::Zp2SemiZ2}, {"Z2p2", FamilyKind::Z2p2},
      {"Zp2SemiD3", FamilyKind::Zp2SemiD3}, {"DpxDp", FamilyKind::DpxDp},
      {"DpxZ2p", FamilyKind::DpxZ2p},       {"Dp2SemiZ2", FamilyKind::Dp2SemiZ2},
      {"Zp2SemiD4", FamilyKind::Zp2SemiD4},
  };
  if (name == "Dp2") return Family::dihedral(p * p);
  if (name == "Z2p2xZ2") return Family::direct(Family::catalog(FamilyKind::Z2p2, p), Family::cyclic(2));
  if (auto it = kinds.find(name); it != kinds.end()) return Family::catalog(it->second, p);
  throw Error(fmt::format("unknown group family '{}'", name));
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(Family family, int order, std::vector<Elem> table,
                         std::vector<std::pair<std::string, Elem>> generators)
    : family_(std::move(family)),
      order_(order),
      table_(std::move(table)),
      inverse_(order, -1),
      orders_(order, 0),
      class_sizes_(order, 0),
      generators_(std::move(generators)) {
  if (order_ <= 0 || table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error("multiplication table has the wrong shape");
  for (Elem x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw Error("element 0 is not a two-sided identity");
    for (Elem y = 0; y < order_; ++y)
      if (mul(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    if (inverse_[x] < 0 || mul(inverse_[x], x) != 0) throw Error("element without a two-sided inverse");
  }
  for (Elem x = 0; x < order_; ++x) {
    int k = 1;
    for (Elem y = x; y != 0; y = mul(y, x)) ++k;
    orders_[x] = k;
  }
  std::vector<int> cls(order_, -1);
  for (Elem x = 0; x < order_; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<Elem> members;
    for (Elem g = 0; g < order_; ++g) {
      Elem y = conj(g, x);
      if (cls[y] < 0) {
        cls[y] = x;
        members.push_back(y);
      }
    }
    for (Elem y : members) class_sizes_[y] = static_cast<int>(members.size());
  }

  // Shortest words, breadth first over generators then their inverses.
  labels_.assign(order_, std::string());
  std::vector<std::vector<std::pair<int, int>>> words(order_);
  std::vector<char> seen(order_, 0);
  seen[0] = 1;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (int sign : {1, -1})
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        Elem s = sign > 0 ? generators_[j].second : inverse_[generators_[j].second];
        Elem y = mul(x, s);
        if (seen[y]) continue;
        seen[y] = 1;
        words[y] = words[x];
        if (!words[y].empty() && words[y].back().first == static_cast<int>(j))
          words[y].back().second += sign;
        else
          words[y].emplace_back(static_cast<int>(j), sign);
        queue.push_back(y);
      }
  }
  for (Elem x = 0; x < order_; ++x) {
    if (x == 0) {
      labels_[x] = "1";
      continue;
    }
    if (!seen[x]) {
      labels_[x] = fmt::format("#{}", x);
      continue;
    }
    std::string s;
    for (auto [j, e] : words[x]) {
      s += generators_[j].first;
      if (e != 1) s += fmt::format("^{}", e);
    }
    labels_[x] = s;
  }
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  int m = orders_[x];
  long long e = ((k % m) + m) % m;
  Elem r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Elem FiniteGroup::generator(std::string_view name) const {
  for (const auto& [nm, e] : generators_)
    if (nm == name) return e;
  throw Error(fmt::format("group {} has no generator named '{}'", family_.tag(), name));
}

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroup& g, std::string_view s) : g_(g), s_(s) {}

  Elem parse() {
    Elem r = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '*' || s_[pos_] == '.')) ++pos_;
  }
  [[noreturn]] void fail(std::string_view what) const {
    throw Error(fmt::format("cannot parse word '{}' at {}: {}", s_, pos_, what));
  }
  Elem word() {
    Elem r = g_.identity();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return r;
      r = g_.mul(r, factor());
    }
  }
  Elem factor() {
    Elem base;
    if (s_[pos_] == '(') {
      ++pos_;
      base = word();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else if (s_[pos_] == '1') {
      ++pos_;
      base = g_.identity();
    } else if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      base = name();
    } else {
      fail("expected a generator");
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      bool braced = pos_ < s_.size() && s_[pos_] == '{';
      if (braced) ++pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      long long e = 0;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        e = e * 10 + (s_[pos_++] - '0');
      if (pos_ == start) fail("expected an exponent");
      if (braced) {
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("missing '}'");
        ++pos_;
      }
      base = g_.pow(base, neg ? -e : e);
    }
    return base;
  }
  Elem name() {
    // longest generator name matching at this position (letter followed by digits)
    std::size_t end = pos_ + 1;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    for (std::size_t len = end - pos_; len >= 1; --len) {
      std::string_view cand = s_.substr(pos_, len);
      for (const auto& [nm, e] : g_.generators())
        if (nm == cand) {
          pos_ += len;
          return e;
        }
    }
    fail("unknown generator");
  }

  const FiniteGroup& g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem FiniteGroup::eval(std::string_view word) const { return WordParser(*this, word).parse(); }

std::string FiniteGroup::label(Elem x) const { return labels_.at(x); }

bool FiniteGroup::verify_axioms() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y) {
      Elem xy = mul(x, y);
      if (xy < 0 || xy >= order_) return false;
      for (Elem z = 0; z < order_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  for (Elem x = 0; x < order_; ++x)
    if (mul(x, 0) != x || mul(0, x) != x || mul(x, inverse_[x]) != 0 || mul(inverse_[x], x) != 0)
      return false;
  return true;
}

std::vector<int> FiniteGroup::order_spectrum() const {
  std::vector<int> s(orders_);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// Constructors

GroupPtr build_group(FamilyKind kind, int p) { return build_group(Family::catalog(kind, p)); }

GroupPtr build_group(const Family& fam) {
  switch (fam.kind) {
    case FamilyKind::Cyclic: {
      if (fam.n < 1) throw Error("Cyclic(n) requires n >= 1");
      if (fam.n == 1) return trivial_group(fam);
      SemidirectSpec s{{fam.n}, trivial_group(Family::cyclic(1)), {}, {{"a", {1}, ""}}, {}};
      return build_semidirect(fam, s);
    }
    case FamilyKind::Dihedral: {
      if (fam.n < 2) throw Error("Dihedral(n) requires n >= 2");
      SemidirectSpec s{{fam.n},
                       build_group(Family::cyclic(2)),
                       {Matrix::rows({{-1}})},
                       {{"a", {1}, ""}, {"c", {0}, "a"}},
                       {fmt::format("a^{}=1", fam.n), "c^2=1", "cac=a^-1"}};
      return build_semidirect(fam, s);
    }
    case FamilyKind::DirectProduct: {
      if (fam.factors.size() != 2) throw Error("DirectProduct needs exactly two factors");
      auto a = build_group(fam.factors[0]);
      auto b = build_group(fam.factors[1]);
      return build_direct(fam, *a, *b);
    }
    default: break;
  }

  const int p = fam.p;
  require_odd_prime(p);
  const auto z2 = build_group(Family::cyclic(2));
  const auto klein = build_group(Family::direct(Family::cyclic(2), Family::cyclic(2)));
  const auto one = trivial_group(Family::cyclic(1));

  switch (fam.kind) {
    case FamilyKind::Z2pxZp:
      return build_semidirect(fam, {{p, p},
                                    z2,
                                    {Matrix::identity(2)},
                                    {{"a", {1, 0}, ""}, {"b", {0, 1}, ""}, {"c", {0, 0}, "a"}},
                                    {fmt::format("a^{}=1", p), fmt::format("b^{}=1", p), "c^2=1",
                                     "ab=ba", "ac=ca", "bc=cb"}});
    case FamilyKind::DpxZp:
      return build_semidirect(fam, {{p, p},
                                    z2,
                                    {Matrix::rows({{-1, 0}, {0, 1}})},
                                    {{"a", {1, 0}, ""}, {"b", {0, 1}, ""}, {"c", {0, 0}, "a"}},
                                    {fmt::format("a^{}=1", p), fmt::format("b^{}=1", p), "c^2=1",
                                     "cac=a^-1", "ab=ba", "bc=cb"}});
    case FamilyKind::Zp2SemiZ2:
      return build_semidirect(fam, {{p, p},
                                    z2,
                                    {Matrix::rows({{-1, 0}, {0, -1}})},
                                    {{"a", {1, 0}, ""}, {"b", {0, 1}, ""}, {"c", {0, 0}, "a"}},
                                    {fmt::format("a^{}=1", p), fmt::format("b^{}=1", p), "c^2=1",
                                     "cac=a^-1", "cbc=b^-1", "ab=ba"}});
    case FamilyKind::Z2p2:
      return build_semidirect(fam, {{p * p, 2},
                                    one,
                                    {},
                                    {{"a", {1, 0}, ""}, {"b", {0, 1}, ""}},
                                    {fmt::format("a^{}=1", p * p), "b^2=1", "ab=ba"}});
    case FamilyKind::Zp2SemiD3: {
      auto d3 = build_group(Family::dihedral(3));  // generators a (order 3), c (order 2)
      return build_semidirect(
          fam, {{p, p},
                d3,
                {Matrix::rows({{-1, 1}, {-1, 0}}), Matrix::rows({{0, 1}, {1, 0}})},
                {{"A", {1, 0}, ""}, {"B", {0, 1}, ""}, {"C", {0, 0}, "c"}, {"W", {0, 0}, "a"}},
                {fmt::format("A^{}=1", p), fmt::format("B^{}=1", p), "C^2=1", "W^3=1", "AB=BA",
                 "WBW^-1=A", "WAW^-1=(BA)^-1", "CBC=A", "CAC=B", "CWC=W^-1"}});
    }
    case FamilyKind::DpxDp:
      return build_semidirect(
          fam, {{p, p},
                klein,
                {Matrix::rows({{-1, 0}, {0, 1}}), Matrix::rows({{1, 0}, {0, -1}})},
                {{"A", {1, 0}, ""}, {"B", {0, 1}, ""}, {"C", {0, 0}, "a"}, {"W", {0, 0}, "a2"}},
                {fmt::format("A^{}=1", p), fmt::format("B^{}=1", p), "C^2=1", "W^2=1", "AB=BA",
                 "AW=WA", "BC=CB", "CW=WC", "CAC=A^-1", "WBW=B^-1"}});
    case FamilyKind::DpxZ2p:
      return build_semidirect(
          fam, {{p, p},
                klein,
                {Matrix::rows({{-1, 0}, {0, 1}}), Matrix::identity(2)},
                {{"A", {1, 0}, ""}, {"B", {0, 1}, ""}, {"C", {0, 0}, "a"}, {"W", {0, 0}, "a2"}},
                {fmt::format("A^{}=1", p), fmt::format("B^{}=1", p), "C^2=1", "W^2=1", "CAC=A^-1",
                 "AB=BA", "AW=WA", "BW=WB", "BC=CB", "CW=WC"}});
    case FamilyKind::Dp2SemiZ2: {
      auto d4 = build_group(Family::dihedral(4));  // a = quarter turn, c = reflection
      return build_semidirect(
          fam, {{p, p},
                d4,
                {Matrix::rows({{0, -1}, {1, 0}}), Matrix::rows({{-1, 0}, {0, 1}})},
                {{"A", {1, 0}, ""},
                 {"B", {0, 1}, ""},
                 {"C", {0, 0}, "c"},
                 {"W", {0, 0}, "a^2 c"},
                 {"U", {-1, -1}, "a c"}},
                {fmt::format("A^{}=1", p), fmt::format("B^{}=1", p), "C^2=1", "W^2=1", "U^2=1",
                 "AB=BA", "AW=WA", "BC=CB", "CW=WC", "CAC=A^-1", "WBW=B^-1", "UAU=B^-1", "UBU=A^-1",
                 "UCU=WB^2", "UWU=CA^2"}});
    }
    case FamilyKind::Zp2SemiD4: {
      auto d4 = build_group(Family::dihedral(4));
      return build_semidirect(fam, {{p * p},
                                    d4,
                                    {Matrix::rows({{-1}}), Matrix::rows({{-1}})},
                                    {{"A", {1}, ""}, {"R", {0}, "a"}, {"T", {0}, "c"}},
                                    {fmt::format("A^{}=1", p * p), "R^4=1", "T^2=1", "(TR)^2=1",
                                     "RAR^-1=A^-1", "TAT=A^-1"}});
    }
    default: break;
  }
  throw Error("unhandled family");
}

// ---------------------------------------------------------------------------
// Subgroups, automorphisms, isomorphisms

int element_order(const FiniteGroup& g, Elem x) { return g.element_order(x); }

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int generated_order(const FiniteGroup& g, Elem x, Elem y) {
  thread_local std::vector<unsigned> stamp;
  thread_local std::vector<Elem> queue;
  thread_local unsigned epoch = 0;
  const int n = g.order();
  if (stamp.size() < static_cast<std::size_t>(n)) stamp.assign(n, 0);
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  queue.clear();
  queue.push_back(0);
  stamp[0] = epoch;
  for (std::size_t i = 0; i < queue.size() && static_cast<int>(queue.size()) < n; ++i) {
    for (Elem s : {x, y}) {
      Elem z = g.mul(queue[i], s);
      if (stamp[z] != epoch) {
        stamp[z] = epoch;
        queue.push_back(z);
      }
    }
  }
  return static_cast<int>(queue.size());
}

std::vector<Elem> small_generating_set(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return {};
  std::vector<Elem> byorder(n);
  std::iota(byorder.begin(), byorder.end(), 0);
  std::stable_sort(byorder.begin(), byorder.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });

  std::vector<Elem> gens;
  std::vector<Elem> sub{0};
  for (Elem x : byorder) {
    if (static_cast<int>(sub.size()) == n) break;
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = generated_subgroup(g, gens);
  }
  if (gens.size() <= 2) return gens;

  for (std::size_t i = 0; i < byorder.size(); ++i)
    for (std::size_t j = i + 1; j < byorder.size(); ++j)
      if (generated_order(g, byorder[i], byorder[j]) == n) return {byorder[i], byorder[j]};
  return gens;
}

bool extend_monomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::span<const Elem> gens,
                         std::span<const Elem> imgs, std::vector<Elem>& out) {
  out.assign(src.order(), -1);
  std::vector<char> used(dst.order(), 0);
  std::vector<Elem> queue{src.identity()};
  out[src.identity()] = dst.identity();
  used[dst.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = src.mul(x, gens[j]);
      Elem fy = dst.mul(out[x], imgs[j]);
      if (out[y] < 0) {
        if (used[fy]) return false;
        used[fy] = 1;
        out[y] = fy;
        queue.push_back(y);
      } else if (out[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Backtracking over generator images with (order, class size) pruning.
// Calls visit(map) for each isomorphism src → dst; stops when visit returns false.
template <typename Visit>
void search_isomorphisms(const FiniteGroup& src, const FiniteGroup& dst, Visit&& visit) {
  const auto gens = small_generating_set(src);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < dst.order(); ++y)
      if (dst.element_order(y) == src.element_order(gens[i]) && dst.class_size(y) == src.class_size(gens[i]))
        cands[i].push_back(y);

  std::vector<Elem> imgs(gens.size());
  std::vector<Elem> map;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (extend_monomorphism(src, dst, gens, imgs, map) &&
          std::find(map.begin(), map.end(), -1) == map.end())
        stop = !visit(map);
      return;
    }
    std::span<const Elem> gsp(gens.data(), depth + 1);
    for (Elem c : cands[depth]) {
      imgs[depth] = c;
      std::span<const Elem> isp(imgs.data(), depth + 1);
      if (depth + 1 < gens.size() && !extend_monomorphism(src, dst, gsp, isp, map)) continue;
      self(self, depth + 1);
      if (stop) return;
    }
  };
  if (gens.empty()) {
    visit(std::vector<Elem>{0});
    return;
  }
  rec(rec, 0);
}

std::vector<std::pair<int, int>> order_class_profile(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> v;
  v.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) v.emplace_back(g.element_order(x), g.class_size(x));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Automorphism> automorphism_group(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw TooLargeError(fmt::format("group {} of order {} exceeds the search bound {}", g.family().tag(),
                                    g.order(), bound));
  std::vector<Automorphism> out;
  search_isomorphisms(g, g, [&](const std::vector<Elem>& m) {
    out.push_back(Automorphism{m});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Automorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h, int bound) {
  if (g.order() > bound || h.order() > bound)
    throw TooLargeError(fmt::format("isomorphism search between groups of order {} and {} exceeds bound {}",
                                    g.order(), h.order(), bound));
  if (g.order() != h.order() || order_class_profile(g) != order_class_profile(h)) return std::nullopt;
  std::optional<Automorphism> found;
  search_isomorphisms(g, h, [&](const std::vector<Elem>& m) {
    found = Automorphism{m};
    return false;
  });
  return found;
}

GroupPtr subgroup_as_group(const FiniteGroup& g, std::span<const Elem> elems) {
  const int k = static_cast<int>(elems.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  if (k == 0 || pos[g.identity()] != 0) throw Error("subgroup must be sorted and contain the identity");
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int r = pos[g.mul(elems[i], elems[j])];
      if (r < 0) throw Error("element set is not closed under multiplication");
      table[static_cast<std::size_t>(i) * k + j] = r;
    }
  auto sub = std::make_shared<FiniteGroup>(g.family(), k, std::move(table),
                                           std::vector<std::pair<std::string, Elem>>{});
  auto gens = small_generating_set(*sub);
  std::vector<std::pair<std::string, Elem>> named;
  for (std::size_t i = 0; i < gens.size(); ++i) named.emplace_back(fmt::format("s{}", i + 1), gens[i]);
  return std::make_shared<FiniteGroup>(g.family(), k, std::vector<Elem>(sub->table().begin(), sub->table().end()),
                                       std::move(named));
}

}  // namespace trisurf
