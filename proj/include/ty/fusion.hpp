// Tambara-Yamagami fusion rings: invertibles G plus one object m with
// m.m = k * sum of invertibles.
#pragma once

#include <string>
#include <vector>

#include "ty/groups.hpp"

namespace ty {

enum class Case { Split, Quaternionic, RealComplex, ComplexGalois };
std::string case_name(Case c);
Case parse_case(const std::string& s);

// Multiplicity of each invertible in m.m: dim of End(m) over End(1).
int mm_multiplicity(Case c);

// Basis 0..n-1 are the group elements, n is m.  N[x][y][z] stored explicitly
// so corrupted rings can be represented.
struct TYRing {
  Case kase = Case::Split;
  Group group;
  int k = 1;
  std::vector<int> N;  // (n+1)^3

  int rank() const { return group.size() + 1; }
  int m() const { return group.size(); }
  int& at(int x, int y, int z) { return N[(x * rank() + y) * rank() + z]; }
  int at(int x, int y, int z) const { return N[(x * rank() + y) * rank() + z]; }
  int dual(int x) const { return x == m() ? x : group.inv(x); }
};

TYRing make_ring(Case c, const Group& G);
// Multiplicities of x.y as a vector indexed by basis element.
std::vector<int> fuse(const TYRing& r, int x, int y);
// Frobenius-Perron dimension: 1 on invertibles, sqrt(k|G|) on m.
Cyclo fpdim(const TYRing& r, int x);

struct RingReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// Associativity on all triples and the duality pairing N_{x,y*}^1 = delta_{xy} k_x.
RingReport verify_ring(const TYRing& r);

}  // namespace ty
