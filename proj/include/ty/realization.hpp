// Explicit skeletal realization of a coefficient table: hom spaces between
// direct sums of simples as block matrices over the real subfield (the
// table's own field for split data), End algebras by their left-regular
// representations, and tetrahedral transformations as matrices.  Used as an oracle independent of the
// coefficient-level pentagon suites.
#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ty/category_data.hpp"
#include "ty/pentagon.hpp"

namespace Eigen {
template <>
struct NumTraits<ty::Cyclo> : GenericNumTraits<ty::Cyclo> {
  using Real = ty::Cyclo;
  using NonInteger = ty::Cyclo;
  using Nested = ty::Cyclo;
  using Literal = ty::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 50
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace ty {

using Mat = Eigen::Matrix<Cyclo, Eigen::Dynamic, Eigen::Dynamic>;

struct RealizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Direct sum of simples: 0..n-1 are the invertibles, n is m.
using Obj = std::vector<int>;

// Block (i, j) maps summand j of src to summand i of tgt.  Zero blocks are
// never stored.
struct Morphism {
  Obj src, tgt;
  std::map<std::pair<int, int>, Mat> blocks;
};

bool operator==(const Morphism& f, const Morphism& g);
Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator*(const Cyclo& c, const Morphism& f);

class RealizedCategory {
 public:
  explicit RealizedCategory(const CoeffTable& t);

  const CoeffTable& table() const { return t_; }
  Case kase() const { return t_.kase; }
  const Group& group() const { return t_.group; }
  int m() const { return n_; }
  int unit() const { return t_.group.identity(); }
  int end_dim(int x) const;
  // S = {1} / {1, i} / {1, i, j, k}.
  const std::vector<Quat>& S() const { return S_; }
  int deg(int x) const;  // degree map of G for real-complex data, else 0

  // Left-regular matrix of e in End(x); complex e is w + xi.
  Mat end_matrix(int x, const Quat& e) const;
  // Inverse of end_matrix on a block.
  Quat end_element(int x, const Mat& block) const;
  Morphism end_morphism(int x, const Quat& e) const;

  Obj decompose(int x, int y) const;
  Obj tensor(const Obj& X, const Obj& Y) const;
  Morphism identity(const Obj& X) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;  // f after g
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  // e (x) id_y and id_x (x) e on x (x) y.
  Morphism left_action(int x, int y, const Quat& e) const;
  Morphism right_action(int x, int y, const Quat& e) const;

  // alpha_{x,y,z} : (x y) z -> x (y z) on simple summands.
  const Morphism& tetrahedral(int x, int y, int z) const;
  Morphism associator(const Obj& X, const Obj& Y, const Obj& Z) const;

  // [a] : m m -> a and the inclusion of the summand (a, s).
  Morphism projection(int a) const;
  Morphism inclusion(int a, int s = 0) const;

  Mat dense(const Morphism& f) const;

 private:
  struct Simple {
    Morphism mor;
    std::vector<std::pair<int, int>> src_lab, tgt_lab;  // (q, r) per summand
  };
  CoeffTable t_;
  int n_;
  std::vector<Quat> S_;
  std::vector<Simple> simple_;  // (n+1)^3

  Quat coeff(const Cyclo& v) const;
  Morphism mm_action(const Quat& e, bool left) const;
  Simple build_simple(int x, int y, int z) const;
  std::vector<std::array<int, 3>> tensor_labels(const Obj& X, const Obj& Y) const;
};

RealizedCategory realize(const TYData& d);

// Both re-association paths for every quadruple of simples.  Violations
// carry eq "pentagon" and the quadruple.
PentagonReport pentagon_matrix_check(const RealizedCategory& rc);

// [a]^dagger from the splitting [a]' = sum of the inclusions of (a, s), via
// the trace map T; for Galois nontrivial m it is [a]' = inclusion (a, 1).
Morphism adjoint(const RealizedCategory& rc, int a);
// [a](id (x) h)[a]^dagger = Re(h) id_a and the resolution of the identity.
CheckReport adjoint_check(const RealizedCategory& rc);

// Closed-form inverse of alpha_{m,m,m} built from the data (alpha itself for
// Galois data).  In the real-complex case the closed form puts its scalar on
// the rightmost factor, which in this realization is the conjugate block;
// the same conversion applied to the closed-form alpha must give tetrahedral(m,m,m).
Morphism closed_form_alpha_inverse(const RealizedCategory& rc, const TYData& d);
// alpha_{m,m,m} times the closed-form inverse both ways, Galois alpha^2 = id,
// and both snake identities for every simple (ev_m = [1], coev_m = tau^{-1}[1]^dagger).
CheckReport rigidity_check(const RealizedCategory& rc, const TYData& d);

// Degree of each simple read off the realization (left and right End(1)
// actions equal or conjugate), additivity over fusion, and faithfulness.
CheckReport galois_grading_check(const RealizedCategory& rc);

}  // namespace ty
