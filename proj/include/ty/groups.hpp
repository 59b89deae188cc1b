// Finite groups given by multiplication tables, with an optional Z/2 degree
// map, plus bicharacters and bicocycles over them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ty/scalars.hpp"

namespace ty {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Group {
 public:
  Group() : mul_{0}, inv_{0}, deg_{0} {}  // trivial group

  // Product of cyclic groups; element index is the mixed-radix number of its
  // coordinate tuple, first coordinate most significant.
  static Group abelian(const std::vector<int>& orders);
  // A x| Z/2 with Z/2 acting by inversion, A = abelian(orders).  Element
  // (a, e) has index a + e|A| and degree e.
  static Group dihedral(const std::vector<int>& orders);
  // Arbitrary table; deg defaults to all zero.
  static Group from_table(std::vector<std::vector<int>> mul, std::vector<int> deg = {});

  int size() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int deg(int a) const { return deg_[a]; }
  int order(int a) const;
  int exponent() const;
  bool graded() const;  // some element has degree 1

  // How the group was presented; empty orders and !dihedral for raw tables.
  const std::vector<int>& cyclic_orders() const { return orders_; }
  bool is_dihedral() const { return dihedral_; }
  bool from_raw_table() const { return raw_; }
  // Number of degree-zero elements; for dihedral groups these are indices 0..|A|-1.
  int base_size() const;
  // Small generating set: cyclic generators, then w for dihedral groups.
  std::vector<int> generators() const;
  std::string label(int a) const;

  bool operator==(const Group& o) const { return mul_ == o.mul_ && deg_ == o.deg_; }

 private:
  int n_ = 1, e_ = 0;
  std::vector<int> mul_, inv_, deg_;
  std::vector<int> orders_;
  bool dihedral_ = false, raw_ = false;
  void finish();
};

// Dense |G| x |G| table of scalars.
class Fn2 {
 public:
  Fn2() = default;
  Fn2(int n, const Cyclo& fill = Cyclo(1)) : n_(n), v_(static_cast<size_t>(n) * n, fill) {}
  int size() const { return n_; }
  Cyclo& operator()(int a, int b) { return v_[static_cast<size_t>(a) * n_ + b]; }
  const Cyclo& operator()(int a, int b) const { return v_[static_cast<size_t>(a) * n_ + b]; }
  bool operator==(const Fn2& o) const { return n_ == o.n_ && v_ == o.v_; }
  bool operator!=(const Fn2& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<Cyclo> v_;
};

// Dense |G|^3 table.
class Fn3 {
 public:
  Fn3() = default;
  Fn3(int n, const Cyclo& fill = Cyclo(1)) : n_(n), v_(static_cast<size_t>(n) * n * n, fill) {}
  int size() const { return n_; }
  Cyclo& operator()(int a, int b, int c) { return v_[(static_cast<size_t>(a) * n_ + b) * n_ + c]; }
  const Cyclo& operator()(int a, int b, int c) const { return v_[(static_cast<size_t>(a) * n_ + b) * n_ + c]; }
  bool operator==(const Fn3& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  int n_ = 0;
  std::vector<Cyclo> v_;
};

using Fn1 = std::vector<Cyclo>;

// lambda^k: conj applied k times.
inline Cyclo cj(const Cyclo& x, int k) { return x.conj_pow(k); }

enum class Flavor { RealSymmetric, ComplexSymmetric, SkewSymmetric, Hermitian };
std::string flavor_name(Flavor f);

struct Bicharacter {
  Group group;
  Fn2 chi;
  Flavor flavor = Flavor::ComplexSymmetric;
};

struct Bicocycle {
  Group group;
  bool g_conj = false;
  Fn2 chi;
};

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// chi(a, -) nontrivial on degree-zero elements for every degree-zero a != 1.
bool is_nondegenerate(const Group& A, const Fn2& chi);
CheckReport check_flavor(const Bicharacter& b);
// Def. of a bicocycle: chi(a, bc) = chi(a, b) chi(a, c)^b,
// chi(ab, c) = chi(a, c)^b chi(b, c), chi(a, b) = chi(b, a)^{gab}.
CheckReport check_bicocycle(const Bicocycle& b);

// Symmetric invertible n x n matrices over F_2, as +-1 valued bicharacters on
// (Z/2)^n, together with representatives of the GL_n(F_2) orbits.
struct RealBichars {
  std::vector<Bicharacter> all;
  std::vector<Bicharacter> representatives;
};
RealBichars enumerate_real_bichars(int n);

// All nondegenerate bicharacters on an abelian group with the given flavor
// (root-of-unity values on generator pairs, extended multiplicatively).
std::vector<Bicharacter> enumerate_bichars(const Group& A, Flavor flavor);

// Isomorphisms G -> H as index maps; graded groups must match degrees.
std::vector<std::vector<int>> enumerate_isomorphisms(const Group& G, const Group& H);
std::vector<std::vector<int>> automorphisms(const Group& G);

// Every bicocycle on the graded group G whose restriction to the degree-zero
// subgroup is chi_A (indexed by the degree-zero elements in increasing order),
// with values that are roots of unity of order dividing order_bound
// (0 means lcm(exponent(A), 4)).  Search over values on generator pairs.
std::vector<Bicocycle> extend_to_bicocycle(const Group& G, const Fn2& chi_A, bool g_conj, int order_bound = 0);

}  // namespace ty
