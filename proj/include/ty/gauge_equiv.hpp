// Changes of basis on coefficient tables, normal forms, and the monoidal
// equivalence tests of the classification theorems.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ty/category_data.hpp"
#include "ty/pentagon.hpp"

namespace ty {

// theta(a,b), phi(a), psi(a), omega(a).  The tensorator of a monoidal
// functor has coefficients theta^{-1}, phi^{-1}, psi^{-1}, omega^{-1}.
struct GaugeTuple {
  Case kase = Case::Split;
  Fn2 theta;
  Fn1 phi, psi, omega;
};

GaugeTuple identity_gauge(Case c, int n);
// Pointwise product; applying the result equals applying both in turn.
GaugeTuple compose(const GaugeTuple& x, const GaugeTuple& y);
// Values are small signed rationals, times powers of i where the case allows
// complex values (phi, psi, omega in the real-complex case; everything in the
// Galois case).
GaugeTuple random_gauge(Case c, int n, std::mt19937_64& rng);

struct GaugeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoeffTable apply_gauge(const CoeffTable& t, const GaugeTuple& gt);

struct Normalized {
  CoeffTable table;
  GaugeTuple gauge;  // apply_gauge(input, gauge) == table
};

// Normal forms.  Each throws GaugeError when the input fails its pentagon
// suite.  Results have alpha = alpha1 = alpha3 = beta1 = 1 and beta2(-,1) = 1.
Normalized normalize_split_quaternionic(const CoeffTable& t);
Normalized normalize_realcomplex(const CoeffTable& t);
Normalized normalize_galois(const CoeffTable& t);
Normalized normalize(const CoeffTable& t);

// Classification data read off a normalized table: chi = alpha2 and
// tau = gamma(1,1) (its 1-component in the real-complex case).
TYData extract_data(const CoeffTable& normalized);

struct EquivWitness {
  std::vector<int> f;  // group isomorphism as an index map
  bool h_conj = false;
  Cyclo lambda = Cyclo(1);
  GaugeTuple tensorator;  // coordinate functions (theta, phi, psi, omega)
};

std::optional<EquivWitness> decide_equiv_split(const TYData& d, const TYData& d2);
std::optional<EquivWitness> decide_equiv_quaternionic(const TYData& d, const TYData& d2);
std::optional<EquivWitness> decide_equiv_realcomplex(const TYData& d, const TYData& d2);
std::optional<EquivWitness> decide_equiv_galois(const TYData& d, const TYData& d2);
// Different cases are never equivalent.
std::optional<EquivWitness> decide_equiv(const TYData& d, const TYData& d2);

// Hexagon equations of the monoidal functor given by the witness, for the
// case of d: E26..E33 (split, quaternionic), E86..E93 (real-complex),
// E136..E141 (Galois).
CheckReport check_hexagons(const TYData& d, const TYData& d2, const EquivWitness& w);

struct ClassEntry {
  TYData representative;
  int members = 0;
};
struct Classification {
  std::vector<TYData> admissible;
  std::vector<ClassEntry> classes;
};

// Enumerate every admissible datum for the group and bucket by equivalence.
// Split and quaternionic use real bicharacters; quaternionic needs orders all 2.
// For the real-complex case orders describe A in G = A x| Z/2 and g_filter
// restricts g (both values when absent).
Classification classify(Case c, const std::vector<int>& orders, std::optional<bool> g_filter = std::nullopt);

}  // namespace ty
