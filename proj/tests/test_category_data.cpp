#include <doctest.h>

#include <cmath>

#include "ty/gauge_equiv.hpp"

using namespace ty;

namespace {

TYData galois_z2() {
  TYData d;
  d.kase = Case::ComplexGalois;
  d.group = Group::abelian({2});
  d.chi = Fn2(2);
  d.chi(1, 1) = Cyclo(-1);
  return d;
}

std::string error_of(const TYData& d) {
  try {
    validate(d);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("quaternionic data over the trivial group gives gamma(1,1) = tau") {
  TYData d{Case::Quaternionic, Group(), false, Fn2(1), Cyclo(Rational(1, 2))};
  const CoeffTable t = build(d);
  CHECK(t.gamma(0, 0) == Cyclo(Rational(1, 2)));
  CHECK(t.alpha(0, 0, 0).is_one());
}

TEST_CASE("preconditions are named") {
  TYData d{Case::Quaternionic, Group(), false, Fn2(1), Cyclo(Rational(1, 3))};
  CHECK(error_of(d).find("τ²·4|A| ≠ 1") != std::string::npos);
  d.tau = Cyclo(Rational(1, 2));
  CHECK(error_of(d).empty());

  TYData s{Case::Split, Group::abelian({2}), false, Fn2(2), sqrt_rational(Rational(1, 2))};
  CHECK(error_of(s).find("degenerate") != std::string::npos);
  s.chi(1, 1) = Cyclo(-1);
  CHECK(error_of(s).empty());

  TYData q{Case::Quaternionic, Group::abelian({4}), false, Fn2(4), Cyclo(Rational(1, 4))};
  CHECK(!error_of(q).empty());

  TYData r{Case::RealComplex, Group::abelian({2}), false, Fn2(2), Cyclo(Rational(1, 2))};
  CHECK(error_of(r).find("generalized dihedral") != std::string::npos);

  TYData g = galois_z2();
  g.chi(1, 1) = Cyclo(1);
  CHECK(!error_of(g).empty());
  CHECK_THROWS_AS(build(g), DataError);
}

TEST_CASE("Galois tables: beta3 = 1 and gamma = chi gamma(1,1)") {
  for (const auto& cl : {classify(Case::ComplexGalois, {2}), classify(Case::ComplexGalois, {2, 2})})
    for (const auto& d : cl.admissible) {
      const CoeffTable t = build(d);
      const int n = t.n(), e = t.group.identity();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CHECK(t.beta3(a, b).is_one());
          CHECK(t.gamma(a, b) == t.alpha2(a, b) * t.gamma(e, e));
        }
    }
  // tau defaults to +1/sqrt|A|.
  const TYData d = galois_z2();
  const Cyclo tau = effective_tau(d);
  CHECK(tau * tau == Cyclo(Rational(1, 2)));
  CHECK(tau.embed().real() > 0);
}

TEST_CASE("real-complex tables satisfy the inversion and beta2 identities") {
  for (const auto& orders : std::vector<std::vector<int>>{{}, {2}, {3}, {4}}) {
    const auto cl = classify(Case::RealComplex, orders);
    for (const auto& d : cl.admissible) {
      const CoeffTable t = build(d);
      const Group& G = t.group;
      const int n = t.n(), e = G.identity(), g = t.g();
      for (int a = 0; a < n; ++a) {
        // gamma(a,1)_s = s-bar^{ga} gamma(1,1)_1
        CHECK(t.gamma(a, e) == t.gamma(e, e));
        CHECK(t.gamma_i(a, e) == cj(-Cyclo::i(), g + G.deg(a)) * t.gamma(e, e));
        for (int b = 0; b < n; ++b) {
          const Cyclo& x = t.alpha2(a, b);
          CHECK(t.alpha2(a, G.inv(b)) == cj(x, G.deg(b)).inverse());
          CHECK(t.alpha2(G.inv(a), b) == cj(x, G.deg(a)).inverse());
          CHECK(t.beta2(a, b) == cj(x, G.deg(b)));
        }
      }
    }
  }
}

TEST_CASE("all coefficients share one field") {
  const auto cl = classify(Case::RealComplex, {3}, false);
  const CoeffTable t = build(cl.admissible.front());
  const int M = t.gamma(0, 0).modulus();
  for (int a = 0; a < t.n(); ++a)
    for (int b = 0; b < t.n(); ++b) {
      CHECK(t.alpha2(a, b).modulus() == M);
      CHECK(t.gamma(a, b).modulus() == M);
    }
  CHECK(field_modulus(cl.admissible.front()) == M);
}

TEST_CASE("perturb scales one entry") {
  const CoeffTable t = build(galois_z2());
  const CoeffTable p = perturb(t, "gamma", {1, 1}, Cyclo(2));
  CHECK(p.gamma(1, 1) == Cyclo(2) * t.gamma(1, 1));
  CHECK(p.gamma(0, 1) == t.gamma(0, 1));
  CHECK_THROWS_AS(perturb(t, "alpha", {0, 0}, Cyclo(2)), DataError);
  CHECK_THROWS_AS(perturb(t, "gamma", {0, 0}, Cyclo(0)), DataError);
}
