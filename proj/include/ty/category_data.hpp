// Classification data and the associator coefficient tables built from it.
#pragma once

#include <optional>
#include <string>

#include "ty/fusion.hpp"
#include "ty/groups.hpp"

namespace ty {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TYData {
  Case kase = Case::Split;
  Group group;          // A, or the generalized dihedral G for RealComplex
  bool g_conj = false;  // RealComplex only
  Fn2 chi;
  std::optional<Cyclo> tau;  // ComplexGalois defaults to +1/sqrt|A|
};

// alpha(a,b,c), alpha_i(a,b), beta_j(a,b), gamma(a,b).  For RealComplex,
// gamma(a,b) = 1 (x) gamma + i (x) gamma_i; gamma_i is unused otherwise.
struct CoeffTable {
  Case kase = Case::Split;
  Group group;
  bool g_conj = false;
  Fn3 alpha;
  Fn2 alpha1, alpha2, alpha3, beta1, beta2, beta3, gamma, gamma_i;

  int n() const { return group.size(); }
  int g() const { return g_conj ? 1 : 0; }
  TensorCC gamma_cc(int a, int b) const { return {gamma(a, b), gamma_i(a, b)}; }
  void set_gamma_cc(int a, int b, const TensorCC& t) { gamma(a, b) = t.p, gamma_i(a, b) = t.q; }
  Fn2& table(const std::string& name);
  const Fn2& table(const std::string& name) const;
  bool operator==(const CoeffTable& o) const;
};

// The eight table names in a fixed order.
const std::vector<std::string>& table_names();

// Throws DataError naming the violated precondition.
void validate(const TYData& d);
// Galois tau, filled in when absent.
Cyclo effective_tau(const TYData& d);
// Modulus M of the single field holding every coefficient: lcm of the orders
// of the chi values and 4s for the squarefree part s of tau^{-2}.
int field_modulus(const TYData& d);

CoeffTable build_split(const Group& A, const Fn2& chi, const Cyclo& tau);
CoeffTable build_quaternionic(const Group& A, const Fn2& chi, const Cyclo& tau);
CoeffTable build_realcomplex(const Group& G, bool g_conj, const Fn2& chi, const Cyclo& tau);
CoeffTable build_galois(const Group& A, const Fn2& chi, std::optional<Cyclo> tau = std::nullopt);
// Validates, then dispatches on the case.
CoeffTable build(const TYData& d);

// Identity-valued table of the right shape.
CoeffTable trivial_table(Case c, const Group& G, bool g_conj);

// Multiply one entry by factor.  idx has two entries, three for "alpha".
// For RealComplex gamma the whole tensor entry is scaled by 1 (x) factor.
CoeffTable perturb(const CoeffTable& t, const std::string& which, const std::vector<int>& idx, const Cyclo& factor);

}  // namespace ty
