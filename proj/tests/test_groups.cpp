#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "ty/groups.hpp"

using namespace ty;
using C = std::complex<double>;

namespace {

bool close(C a, C b) { return std::abs(a - b) < 1e-9; }

// Every bicharacter of Z/n1 x ... x Z/nr, counted by brute force over the
// exponents k_ij of chi(e_i, e_j) = exp(2 pi i k_ij / gcd(n_i, n_j)), then
// filtered numerically for the flavor and nondegeneracy.
int brute_count(const std::vector<int>& orders, Flavor flavor) {
  const int r = static_cast<int>(orders.size());
  const Group A = Group::abelian(orders);
  const int n = A.size();
  std::vector<std::vector<int>> digits(n, std::vector<int>(r));
  for (int a = 0; a < n; ++a) {
    int x = a;
    for (int t = r - 1; t >= 0; --t) digits[a][t] = x % orders[t], x /= orders[t];
  }
  std::vector<int> g(r * r);
  long total = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) total *= (g[i * r + j] = std::gcd(orders[i], orders[j]));
  int count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> k(r * r);
    long c = code;
    for (int t = 0; t < r * r; ++t) k[t] = static_cast<int>(c % g[t]), c /= g[t];
    auto chi = [&](int a, int b) {
      double ph = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ph += static_cast<double>(digits[a][i] * digits[b][j] * k[i * r + j]) / g[i * r + j];
      return std::polar(1.0, 2 * M_PI * ph);
    };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const C v = chi(a, b), w = chi(b, a);
        switch (flavor) {
          case Flavor::RealSymmetric: ok = std::abs(v.imag()) < 1e-9 && close(v, w); break;
          case Flavor::ComplexSymmetric: ok = close(v, w); break;
          case Flavor::SkewSymmetric: ok = close(v * w, 1.0); break;
          case Flavor::Hermitian: ok = close(v, std::conj(w)); break;
        }
      }
    for (int a = 1; a < n && ok; ++a) {
      bool trivial = true;
      for (int b = 0; b < n && trivial; ++b) trivial = close(chi(a, b), 1.0);
      ok = !trivial;
    }
    count += ok;
  }
  return count;
}

bool group_axioms(const Group& G) {
  const int n = G.size(), e = G.identity();
  for (int a = 0; a < n; ++a) {
    if (G.mul(a, e) != a || G.mul(e, a) != a || G.mul(a, G.inv(a)) != e) return false;
    for (int b = 0; b < n; ++b) {
      if (G.deg(G.mul(a, b)) != (G.deg(a) + G.deg(b)) % 2) return false;
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
    }
  }
  return true;
}

Fn2 symmetric_chi_A(int q) {  // chi(a^j, a^k) = zeta_q^{jk} on Z/q
  Fn2 chi(q);
  for (int j = 0; j < q; ++j)
    for (int k = 0; k < q; ++k) chi(j, k) = Cyclo::zeta(q, static_cast<long>(j) * k);
  return chi;
}

}  // namespace

TEST_CASE("groups satisfy the axioms and grading") {
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {4}, {2, 2}, {4, 4}, {2, 3}}) {
    CHECK(group_axioms(Group::abelian(o)));
    CHECK(group_axioms(Group::dihedral(o)));
  }
  const Group D8 = Group::dihedral({4});
  CHECK(D8.size() == 8);
  CHECK(D8.base_size() == 4);
  const int w = 4, a = 1;
  CHECK(D8.mul(D8.mul(w, a), w) == D8.inv(a));  // w a w^{-1} = a^{-1}
}

TEST_CASE("bicharacter enumeration matches brute force") {
  for (const auto& o : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 4}, {4, 4}})
    for (Flavor f : {Flavor::RealSymmetric, Flavor::ComplexSymmetric, Flavor::SkewSymmetric, Flavor::Hermitian}) {
      CAPTURE(o.size());
      CAPTURE(flavor_name(f));
      const auto got = enumerate_bichars(Group::abelian(o), f);
      CHECK(static_cast<int>(got.size()) == brute_count(o, f));
      for (const auto& b : got) {
        CHECK(check_flavor(b).ok());
        CHECK(is_nondegenerate(b.group, b.chi));
      }
    }
}

TEST_CASE("real bicharacters on (Z/2)^n are the symmetric invertible F2 matrices") {
  // Counts 1, 4, 28; orbits: one for odd n, alternating and not for n = 2.
  const int all[] = {1, 4, 28}, reps[] = {1, 2, 1};
  for (int n = 1; n <= 3; ++n) {
    const auto r = enumerate_real_bichars(n);
    CHECK(static_cast<int>(r.all.size()) == all[n - 1]);
    CHECK(static_cast<int>(r.representatives.size()) == reps[n - 1]);
  }
}

TEST_CASE("degenerate and malformed tables are rejected") {
  const Group A = Group::abelian({2, 2});
  Fn2 chi(4);
  CHECK(!is_nondegenerate(A, chi));
  Fn2 bad = chi;
  bad(1, 1) = Cyclo::i();
  CHECK(!check_flavor({A, bad, Flavor::ComplexSymmetric}).ok());
  CHECK(!check_flavor({A, symmetric_chi_A(4), Flavor::ComplexSymmetric}).ok());  // wrong size
}

TEST_CASE("bicocycle extensions satisfy the inversion identities") {
  for (int q : {1, 2, 3, 4})
    for (bool g : {false, true}) {
      const Group G = Group::dihedral(q == 1 ? std::vector<int>{} : std::vector<int>{q});
      const auto ext = extend_to_bicocycle(G, symmetric_chi_A(q), g);
      CAPTURE(q);
      CAPTURE(g);
      // Over A = Z/q the restriction must be hermitian when g = conj, which
      // forces real values and so q <= 2.
      CHECK(ext.empty() == (g && q > 2));
      for (const auto& b : ext) {
        REQUIRE(check_bicocycle(b).ok());
        for (int a = 0; a < G.size(); ++a)
          for (int c = 0; c < G.size(); ++c) {
            // chi(a, c^-1) = 1/chi(a,c)^c and chi(a^-1, c) = 1/chi(a,c)^a.
            CHECK(b.chi(a, G.inv(c)) == cj(b.chi(a, c), G.deg(c)).inverse());
            CHECK(b.chi(G.inv(a), c) == cj(b.chi(a, c), G.deg(a)).inverse());
          }
      }
    }
}

TEST_CASE("Z/4 graded over Z/2 carries no admissible bicocycle") {
  // Z/4 with deg = parity: a non-split extension of Z/2 by A = {0, 2}.
  const Group Z4 = Group::from_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {0, 1, 0, 1});
  REQUIRE(group_axioms(Z4));
  CHECK(Z4.base_size() == 2);
  Fn2 chi_A(2);
  chi_A(1, 1) = Cyclo(-1);  // the only nondegenerate bicharacter on Z/2
  for (bool g : {false, true}) {
    CHECK(extend_to_bicocycle(Z4, chi_A, g).empty());
    CHECK(extend_to_bicocycle(Z4, chi_A, g, 16).empty());
  }
  // The split extension of the same A does carry some.
  CHECK(!extend_to_bicocycle(Group::dihedral({2}), chi_A, false).empty());
}

TEST_CASE("isomorphisms preserve products and degrees") {
  const Group G = Group::dihedral({4});
  const auto autos = automorphisms(G);
  CHECK(autos.size() == 8);  // Aut(D8) has order 8
  for (const auto& f : autos)
    for (int a = 0; a < G.size(); ++a) {
      CHECK(G.deg(f[a]) == G.deg(a));
      for (int b = 0; b < G.size(); ++b) CHECK(f[G.mul(a, b)] == G.mul(f[a], f[b]));
    }
  CHECK(automorphisms(Group::abelian({2, 2})).size() == 6);
}
