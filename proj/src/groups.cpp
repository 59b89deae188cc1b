#include "ty/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ty {

namespace {

std::vector<int> radix_digits(int x, const std::vector<int>& orders) {
  std::vector<int> d(orders.size());
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
    d[i] = x % orders[i];
    x /= orders[i];
  }
  return d;
}

int radix_index(const std::vector<int>& d, const std::vector<int>& orders) {
  int x = 0;
  for (size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + d[i];
  return x;
}

int product(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 1, std::multiplies<>());
}

}  // namespace

void Group::finish() {
  e_ = -1;
  for (int x = 0; x < n_ && e_ < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n_ && ok; ++y) ok = mul(x, y) == y && mul(y, x) == y;
    if (ok) e_ = x;
  }
  if (e_ < 0) throw GroupError("table has no identity");
  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == e_) inv_[x] = y;
  for (int x = 0; x < n_; ++x)
    if (inv_[x] < 0) throw GroupError("table has an element without inverse");
  if (deg_.empty()) deg_.assign(n_, 0);
}

Group Group::abelian(const std::vector<int>& orders) {
  for (int o : orders)
    if (o < 1) throw GroupError("cyclic orders must be positive");
  Group G;
  G.orders_ = orders;
  G.n_ = product(orders);
  G.mul_.resize(static_cast<size_t>(G.n_) * G.n_);
  for (int a = 0; a < G.n_; ++a) {
    auto da = radix_digits(a, orders);
    for (int b = 0; b < G.n_; ++b) {
      auto db = radix_digits(b, orders);
      for (size_t i = 0; i < orders.size(); ++i) db[i] = (da[i] + db[i]) % orders[i];
      G.mul_[a * G.n_ + b] = radix_index(db, orders);
    }
  }
  G.deg_.assign(G.n_, 0);
  G.finish();
  return G;
}

Group Group::dihedral(const std::vector<int>& orders) {
  Group A = abelian(orders);
  const int nA = A.size();
  Group G;
  G.orders_ = orders;
  G.dihedral_ = true;
  G.n_ = 2 * nA;
  G.mul_.resize(static_cast<size_t>(G.n_) * G.n_);
  G.deg_.resize(G.n_);
  for (int x = 0; x < G.n_; ++x) {
    int a = x % nA, e = x / nA;
    G.deg_[x] = e;
    for (int y = 0; y < G.n_; ++y) {
      int b = y % nA, d = y / nA;
      int bb = e == 0 ? b : A.inv(b);
      G.mul_[x * G.n_ + y] = A.mul(a, bb) + ((e + d) % 2) * nA;
    }
  }
  G.finish();
  return G;
}

Group Group::from_table(std::vector<std::vector<int>> mul, std::vector<int> deg) {
  Group G;
  G.raw_ = true;
  G.orders_.clear();
  G.n_ = static_cast<int>(mul.size());
  G.mul_.clear();
  for (auto& row : mul) {
    if (static_cast<int>(row.size()) != G.n_) throw GroupError("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= G.n_) throw GroupError("multiplication table entry out of range");
      G.mul_.push_back(v);
    }
  }
  for (int a = 0; a < G.n_; ++a)
    for (int b = 0; b < G.n_; ++b)
      for (int c = 0; c < G.n_; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) throw GroupError("table is not associative");
  G.deg_ = std::move(deg);
  if (!G.deg_.empty() && static_cast<int>(G.deg_.size()) != G.n_) throw GroupError("degree map has wrong length");
  G.finish();
  for (int a = 0; a < G.n_; ++a)
    for (int b = 0; b < G.n_; ++b)
      if (G.deg(G.mul(a, b)) != (G.deg(a) + G.deg(b)) % 2) throw GroupError("degree map is not a homomorphism");
  return G;
}

int Group::order(int a) const {
  int k = 1;
  for (int x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

int Group::exponent() const {
  int L = 1;
  for (int a = 0; a < n_; ++a) L = std::lcm(L, order(a));
  return L;
}

bool Group::graded() const {
  return std::any_of(deg_.begin(), deg_.end(), [](int d) { return d != 0; });
}

int Group::base_size() const {
  return static_cast<int>(std::count(deg_.begin(), deg_.end(), 0));
}

std::vector<int> Group::generators() const {
  std::vector<int> gens;
  if (!raw_) {
    const int nA = product(orders_);
    for (size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] == 1) continue;
      std::vector<int> d(orders_.size(), 0);
      d[i] = 1;
      gens.push_back(radix_index(d, orders_));
    }
    if (dihedral_) gens.push_back(nA);
    return gens;
  }
  // greedy: degree-zero part first (largest orders first), then one odd element
  std::vector<char> in(n_, 0);
  in[e_] = 1;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < n_; ++x)
        if (in[x])
          for (int g : gens)
            if (!in[mul(x, g)]) in[mul(x, g)] = 1, grew = true;
    }
  };
  std::vector<int> cand;
  for (int x = 0; x < n_; ++x)
    if (deg_[x] == 0) cand.push_back(x);
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return order(a) > order(b); });
  for (int x : cand)
    if (!in[x]) gens.push_back(x), close();
  for (int x = 0; x < n_; ++x)
    if (!in[x]) gens.push_back(x), close();
  return gens;
}

std::string Group::label(int a) const {
  if (raw_) return "g" + std::to_string(a);
  std::ostringstream os;
  const int nA = product(orders_);
  auto d = radix_digits(a % nA, orders_);
  os << "(";
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  if (dihedral_) os << (d.empty() ? "" : ";") << (a / nA);
  os << ")";
  return os.str();
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::RealSymmetric: return "real-symmetric";
    case Flavor::ComplexSymmetric: return "complex-symmetric";
    case Flavor::SkewSymmetric: return "skew-symmetric";
    case Flavor::Hermitian: return "hermitian";
  }
  return "?";
}

bool is_nondegenerate(const Group& A, const Fn2& chi) {
  for (int a = 0; a < A.size(); ++a) {
    if (a == A.identity() || A.deg(a) != 0) continue;
    bool nontrivial = false;
    for (int b = 0; b < A.size() && !nontrivial; ++b)
      if (A.deg(b) == 0 && !chi(a, b).is_one()) nontrivial = true;
    if (!nontrivial) return false;
  }
  return true;
}

namespace {

std::string at(const Group& G, std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) s += (first ? "" : ",") + G.label(x), first = false;
  return s + ")";
}

}  // namespace

CheckReport check_flavor(const Bicharacter& b) {
  CheckReport r;
  const Group& G = b.group;
  const int n = G.size();
  if (b.chi.size() != n) {
    r.failures.push_back("table size does not match the group");
    return r;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Cyclo& v = b.chi(x, y);
      if (!is_root_of_unity(v)) r.failures.push_back("value at " + at(G, {x, y}) + " is not a root of unity");
      for (int z = 0; z < n; ++z) {
        if (b.chi(x, G.mul(y, z)) != b.chi(x, y) * b.chi(x, z))
          r.failures.push_back("not multiplicative in the second slot at " + at(G, {x, y, z}));
        if (b.chi(G.mul(x, y), z) != b.chi(x, z) * b.chi(y, z))
          r.failures.push_back("not multiplicative in the first slot at " + at(G, {x, y, z}));
      }
      const Cyclo& w = b.chi(y, x);
      switch (b.flavor) {
        case Flavor::RealSymmetric:
          if (!v.is_real()) r.failures.push_back("value at " + at(G, {x, y}) + " is not real");
          [[fallthrough]];
        case Flavor::ComplexSymmetric:
          if (v != w) r.failures.push_back("not symmetric at " + at(G, {x, y}));
          break;
        case Flavor::SkewSymmetric:
          if (!(v * w).is_one()) r.failures.push_back("not skew-symmetric at " + at(G, {x, y}));
          break;
        case Flavor::Hermitian:
          if (v != w.conj()) r.failures.push_back("not hermitian at " + at(G, {x, y}));
          break;
      }
    }
  return r;
}

CheckReport check_bicocycle(const Bicocycle& b) {
  CheckReport r;
  const Group& G = b.group;
  const int n = G.size(), g = b.g_conj ? 1 : 0;
  if (b.chi.size() != n) {
    r.failures.push_back("table size does not match the group");
    return r;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (b.chi(x, y) != cj(b.chi(y, x), g + G.deg(x) + G.deg(y)))
        r.failures.push_back("g-symmetry fails at " + at(G, {x, y}));
      for (int z = 0; z < n; ++z) {
        if (b.chi(x, G.mul(y, z)) != b.chi(x, y) * cj(b.chi(x, z), G.deg(y)))
          r.failures.push_back("chi(a,bc) = chi(a,b) chi(a,c)^b fails at " + at(G, {x, y, z}));
        if (b.chi(G.mul(x, y), z) != cj(b.chi(x, z), G.deg(y)) * b.chi(y, z))
          r.failures.push_back("chi(ab,c) = chi(a,c)^b chi(b,c) fails at " + at(G, {x, y, z}));
      }
    }
  return r;
}

namespace {

using Bits = std::vector<std::vector<int>>;

bool f2_invertible(Bits m) {
  const int n = static_cast<int>(m.size());
  for (int c = 0, r = 0; c < n; ++c, ++r) {
    int p = r;
    while (p < n && !m[p][c]) ++p;
    if (p == n) return false;
    std::swap(m[p], m[r]);
    for (int i = 0; i < n; ++i)
      if (i != r && m[i][c])
        for (int j = 0; j < n; ++j) m[i][j] ^= m[r][j];
  }
  return true;
}

long encode(const Bits& m) {
  long k = 0;
  for (auto& row : m)
    for (int v : row) k = 2 * k + v;
  return k;
}

Bicharacter real_bichar_from(const Bits& B) {
  const int n = static_cast<int>(B.size());
  Group A = Group::abelian(std::vector<int>(n, 2));
  Bicharacter b{A, Fn2(A.size()), Flavor::RealSymmetric};
  for (int x = 0; x < A.size(); ++x) {
    auto dx = radix_digits(x, A.cyclic_orders());
    for (int y = 0; y < A.size(); ++y) {
      auto dy = radix_digits(y, A.cyclic_orders());
      int s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s ^= dx[i] & B[i][j] & dy[j];
      b.chi(x, y) = s ? Cyclo(-1) : Cyclo(1);
    }
  }
  return b;
}

}  // namespace

RealBichars enumerate_real_bichars(int n) {
  if (n < 0 || n > 5) throw GroupError("enumerate_real_bichars: n must be in 0..5");
  std::vector<Bits> forms;
  const int free_bits = n * (n + 1) / 2;
  for (long mask = 0; mask < (1L << free_bits); ++mask) {
    Bits B(n, std::vector<int>(n, 0));
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) B[i][j] = B[j][i] = (mask >> k++) & 1;
    if (f2_invertible(B)) forms.push_back(B);
  }
  std::unordered_map<long, int> index;
  for (size_t i = 0; i < forms.size(); ++i) index[encode(forms[i])] = static_cast<int>(i);
  std::vector<int> parent(forms.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  // GL_n(F_2) is generated by the transvections I + E_ij
  for (size_t f = 0; f < forms.size(); ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        // P = I + E_ij; P^T B P adds row/column j into row/column i
        Bits C = forms[f];
        for (int c = 0; c < n; ++c) C[i][c] ^= C[j][c];
        for (int r = 0; r < n; ++r) C[r][i] ^= C[r][j];
        int g = index.at(encode(C));
        parent[find(static_cast<int>(f))] = find(g);
      }
  RealBichars out;
  for (size_t f = 0; f < forms.size(); ++f) {
    out.all.push_back(real_bichar_from(forms[f]));
    if (find(static_cast<int>(f)) == static_cast<int>(f)) out.representatives.push_back(out.all.back());
  }
  return out;
}

std::vector<Bicharacter> enumerate_bichars(const Group& A, Flavor flavor) {
  if (A.is_dihedral() || A.from_raw_table()) throw GroupError("enumerate_bichars needs an abelian group");
  const auto& ord = A.cyclic_orders();
  const int k = static_cast<int>(ord.size());
  const int L = std::max(1, A.exponent());
  if (A.size() > 64) throw GroupError("enumerate_bichars: group too large");
  std::vector<std::vector<int>> digits(A.size());
  for (int x = 0; x < A.size(); ++x) digits[x] = radix_digits(x, ord);
  std::vector<int> gbound(k * k);
  long combos = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      gbound[i * k + j] = std::gcd(ord[i], ord[j]);
      combos *= gbound[i * k + j];
    }
  if (combos > 2000000) throw GroupError("enumerate_bichars: search too large");
  std::vector<Bicharacter> out;
  std::vector<int> e(k * k, 0);
  for (long c = 0; c < combos; ++c) {
    long t = c;
    for (int q = 0; q < k * k; ++q) {
      e[q] = static_cast<int>(t % gbound[q]);
      t /= gbound[q];
    }
    // exponent table mod L: chi(x, y) = zeta_L^{E(x,y)}
    auto E = [&](int x, int y) {
      long s = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s += static_cast<long>(digits[x][i]) * digits[y][j] * e[i * k + j] * (L / gbound[i * k + j]);
      return static_cast<int>(((s % L) + L) % L);
    };
    bool ok = true;
    for (int x = 0; x < A.size() && ok; ++x)
      for (int y = 0; y < A.size() && ok; ++y) {
        int u = E(x, y), v = E(y, x);
        switch (flavor) {
          case Flavor::RealSymmetric: ok = (2 * u) % L == 0 && u == v; break;
          case Flavor::ComplexSymmetric: ok = u == v; break;
          case Flavor::SkewSymmetric: ok = (u + v) % L == 0; break;
          case Flavor::Hermitian: ok = (u + v) % L == 0; break;
        }
      }
    if (!ok) continue;
    for (int x = 0; x < A.size() && ok; ++x) {
      if (x == A.identity()) continue;
      bool nontrivial = false;
      for (int y = 0; y < A.size() && !nontrivial; ++y) nontrivial = E(x, y) != 0;
      ok = nontrivial;
    }
    if (!ok) continue;
    Bicharacter b{A, Fn2(A.size()), flavor};
    for (int x = 0; x < A.size(); ++x)
      for (int y = 0; y < A.size(); ++y) b.chi(x, y) = Cyclo::zeta(L, E(x, y));
    out.push_back(std::move(b));
  }
  // hermitian and skew conditions coincide on exponents; they differ only as
  // equations between values, which are identical for roots of unity.
  return out;
}

std::vector<std::vector<int>> enumerate_isomorphisms(const Group& G, const Group& H) {
  std::vector<std::vector<int>> out;
  if (G.size() != H.size()) return out;
  const int n = G.size();
  auto gens = G.generators();
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < n; ++y)
      if (H.order(y) == G.order(gens[i]) && H.deg(y) == G.deg(gens[i])) cands[i].push_back(y);
  std::vector<int> img(gens.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == gens.size()) {
      // extend along the Cayley graph, then check
      std::vector<int> f(n, -1);
      f[G.identity()] = H.identity();
      std::vector<int> frontier{G.identity()};
      while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (size_t t = 0; t < gens.size(); ++t) {
          int z = G.mul(x, gens[t]);
          int v = H.mul(f[x], img[t]);
          if (f[z] < 0) f[z] = v, frontier.push_back(z);
          else if (f[z] != v) return;
        }
      }
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n; ++x) {
        if (f[x] < 0 || hit[f[x]]) return;
        hit[f[x]] = 1;
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return;
      out.push_back(f);
      return;
    }
    for (int y : cands[i]) {
      img[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> automorphisms(const Group& G) { return enumerate_isomorphisms(G, G); }

namespace {

// Bicocycle values are roots of unity of order dividing m; work with their
// exponents.  x^a for a of odd degree negates the exponent.
using ExpTable = std::vector<std::vector<int>>;

int twist(int k, int deg, int m) { return deg ? (m - k) % m : k; }

// Fill chi from its values on generator pairs using the bicocycle rules; none
// if the rules are inconsistent.
std::optional<ExpTable> extend_from_generators(const Group& G, const std::vector<int>& gens,
                                               const std::map<std::pair<int, int>, int>& V, int m) {
  const int n = G.size(), e = G.identity();
  std::map<int, std::vector<int>> row;
  for (int s : gens) {
    std::vector<int> r(n, -1);
    r[e] = 0;
    std::vector<int> frontier{e};
    while (!frontier.empty()) {
      int y = frontier.back();
      frontier.pop_back();
      for (int t : gens) {
        int z = G.mul(y, t);
        int v = (r[y] + twist(V.at({s, t}), G.deg(y), m)) % m;
        if (r[z] < 0) r[z] = v, frontier.push_back(z);
        else if (r[z] != v) return std::nullopt;
      }
    }
    row[s] = std::move(r);
  }
  ExpTable chi(n);
  chi[e].assign(n, 0);
  std::vector<int> frontier{e};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int t : gens) {
      int z = G.mul(x, t);
      std::vector<int> nw(n);
      for (int c = 0; c < n; ++c) nw[c] = (twist(chi[x][c], G.deg(t), m) + row[t][c]) % m;
      if (chi[z].empty()) chi[z] = std::move(nw), frontier.push_back(z);
      else if (chi[z] != nw) return std::nullopt;
    }
  }
  return chi;
}

bool is_bicocycle(const Group& G, const ExpTable& chi, int g, int m) {
  const int n = G.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (chi[x][y] != twist(chi[y][x], (g + G.deg(x) + G.deg(y)) % 2, m)) return false;
      for (int z = 0; z < n; ++z) {
        if (chi[x][G.mul(y, z)] != (chi[x][y] + twist(chi[x][z], G.deg(y), m)) % m) return false;
        if (chi[G.mul(x, y)][z] != (twist(chi[x][z], G.deg(y), m) + chi[y][z]) % m) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<Bicocycle> extend_to_bicocycle(const Group& G, const Fn2& chi_A, bool g_conj, int order_bound) {
  std::vector<int> base;
  for (int x = 0; x < G.size(); ++x)
    if (G.deg(x) == 0) base.push_back(x);
  if (chi_A.size() != static_cast<int>(base.size())) throw GroupError("restriction table does not match the degree-zero subgroup");
  std::vector<int> pos(G.size(), -1);
  for (size_t i = 0; i < base.size(); ++i) pos[base[i]] = static_cast<int>(i);

  int expA = 1;
  for (int x : base) expA = std::lcm(expA, G.order(x));
  const int bound = order_bound > 0 ? order_bound : std::lcm(expA, 4);
  std::vector<Cyclo> roots(bound);
  for (int k = 0; k < bound; ++k) roots[k] = Cyclo::zeta(bound, k);
  auto exponent = [&](const Cyclo& v) {
    for (int k = 0; k < bound; ++k)
      if (v == roots[k]) return k;
    return -1;
  };
  const int nA = static_cast<int>(base.size());
  ExpTable eA(nA, std::vector<int>(nA));
  for (int i = 0; i < nA; ++i)
    for (int j = 0; j < nA; ++j)
      if ((eA[i][j] = exponent(chi_A(i, j))) < 0) return {};

  auto gens = G.generators();
  std::vector<std::pair<int, int>> unknown;
  std::map<std::pair<int, int>, int> V;
  for (int s : gens)
    for (int t : gens) {
      if (G.deg(s) == 0 && G.deg(t) == 0) V[{s, t}] = eA[pos[s]][pos[t]];
      else unknown.push_back({s, t});
    }
  long combos = 1;
  for (size_t i = 0; i < unknown.size(); ++i) {
    combos *= bound;
    if (combos > 1000000) throw GroupError("extend_to_bicocycle: search too large");
  }

  std::vector<Bicocycle> out;
  for (long c = 0; c < combos; ++c) {
    long t = c;
    for (auto& u : unknown) {
      V[u] = static_cast<int>(t % bound);
      t /= bound;
    }
    auto chi = extend_from_generators(G, gens, V, bound);
    if (!chi) continue;
    bool restricts = true;
    for (int i = 0; i < nA && restricts; ++i)
      for (int j = 0; j < nA && restricts; ++j) restricts = (*chi)[base[i]][base[j]] == eA[i][j];
    if (!restricts || !is_bicocycle(G, *chi, g_conj ? 1 : 0, bound)) continue;
    Fn2 f(G.size());
    for (int a = 0; a < G.size(); ++a)
      for (int b = 0; b < G.size(); ++b) f(a, b) = roots[(*chi)[a][b]];
    out.push_back(Bicocycle{G, g_conj, std::move(f)});
  }
  return out;
}

}  // namespace ty
