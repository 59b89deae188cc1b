// Coefficient-level pentagon equations for the four cases, evaluated exactly
// over all argument tuples.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "ty/category_data.hpp"

namespace ty {

struct Violation {
  std::string eq;  // "E19", "E55", ...
  std::vector<int> args;
  std::string lhs, rhs;
};

struct PentagonReport {
  Case kase = Case::Split;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
  std::set<std::string> failed_equations() const;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Split case: the quaternionic list with the last equation's factor 4 set to 1.
PentagonReport check_split(const CoeffTable& t);
// Eqs. E4..E19; eq19_factor is 4 for the quaternionic case.
PentagonReport check_quaternionic(const CoeffTable& t, int eq19_factor = 4);
// E40..E55, the last five in C (x)_R C.
PentagonReport check_realcomplex(const CoeffTable& t);
// E112..E127.
PentagonReport check_galois(const CoeffTable& t);
PentagonReport check_pentagon(const CoeffTable& t);

// Reduced forms E69..E72 of E51..E54; valid for tables whose gamma has the
// s-bar^{ga} structure of the built tables.
PentagonReport check_realcomplex_reduced(const CoeffTable& t);

// (delta f)(a,b,c,d) = f(b,c,d) f(a,bc,d) f(a,b,c) / (f(ab,c,d) f(a,b,cd)).
Cyclo delta3(const Group& G, const Fn3& f, int a, int b, int c, int d);
// (delta f)(a,b,c) = f(b,c) f(a,bc) / (f(ab,c) f(a,b)).
Cyclo delta2(const Group& G, const Fn2& f, int a, int b, int c);
// (delta f)(a,b) = f(a) f(b) / f(ab) with the Galois twists of the degree map:
// deltaL(psi)(a,b) = psi(a) psi(b)^a / psi(ab), deltaR(phi)(a,b) = phi(b) phi(a)^b / phi(ab).
Fn2 deltaL(const Group& G, const Fn1& psi);
Fn2 deltaR(const Group& G, const Fn1& phi);

}  // namespace ty
