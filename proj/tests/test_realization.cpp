#include <doctest.h>

#include <random>

#include "ty/gauge_equiv.hpp"
#include "ty/realization.hpp"

using namespace ty;

namespace {

std::vector<TYData> instances() {
  std::vector<TYData> out;
  for (const auto& [c, o] : std::vector<std::pair<Case, std::vector<int>>>{{Case::Split, {2}},
                                                                           {Case::Split, {3}},
                                                                           {Case::Quaternionic, {}},
                                                                           {Case::Quaternionic, {2}},
                                                                           {Case::RealComplex, {}},
                                                                           {Case::RealComplex, {2}},
                                                                           {Case::RealComplex, {3}},
                                                                           {Case::ComplexGalois, {}},
                                                                           {Case::ComplexGalois, {2}}}) {
    const auto cl = classify(c, o);
    for (const auto& e : cl.classes) out.push_back(e.representative);
  }
  return out;
}

}  // namespace

TEST_CASE("matrix pentagon agrees with the coefficient suites") {
  std::mt19937_64 rng(77);
  for (const auto& d : instances()) {
    CAPTURE(case_name(d.kase));
    const CoeffTable t = build(d);
    CHECK(pentagon_matrix_check(RealizedCategory(t)).pass());
    const GaugeTuple g = random_gauge(d.kase, t.n(), rng);
    const CoeffTable tg = apply_gauge(t, g);
    CHECK(pentagon_matrix_check(RealizedCategory(tg)).pass() == check_pentagon(tg).pass());
    // Quaternionic tables must stay real to be realized, so use -1 there.
    const Cyclo root = d.kase == Case::Quaternionic ? Cyclo(-1) : Cyclo::i();
    for (const auto& bad : {perturb(t, "gamma", {0, 0}, Cyclo(2)), perturb(t, "alpha2", {t.n() - 1, t.n() - 1}, root)}) {
      CHECK(!check_pentagon(bad).pass());
      CHECK(!pentagon_matrix_check(RealizedCategory(bad)).pass());
    }
  }
}

TEST_CASE("matrix pentagon rejects the wrong quaternionic normalization") {
  // Halving tau breaks the relation tau^2 4|A| = 1 that the coefficient
  // suite pins down through its factor-4 equation.
  const TYData d = classify(Case::Quaternionic, {}).admissible.front();
  const CoeffTable t = perturb(build(d), "gamma", {0, 0}, Cyclo(Rational(1, 2)));
  CHECK(!check_pentagon(t).pass());
  CHECK(!pentagon_matrix_check(RealizedCategory(t)).pass());
  CHECK_THROWS_AS(RealizedCategory(perturb(build(d), "gamma", {0, 0}, Cyclo::i())), RealizationError);
}

TEST_CASE("split data with complex bicharacters are realized over their field") {
  const Group A = Group::abelian({4});
  const Fn2 chi = enumerate_bichars(A, Flavor::ComplexSymmetric).front().chi;
  const TYData d{Case::Split, A, false, chi, Cyclo(Rational(1, 2))};
  const RealizedCategory rc = realize(d);
  CHECK(pentagon_matrix_check(rc).pass());
  CHECK(rigidity_check(rc, d).ok());
}

TEST_CASE("adjoints, rigidity and inverse associators") {
  for (const auto& d : instances()) {
    CAPTURE(case_name(d.kase));
    const RealizedCategory rc = realize(d);
    CHECK(adjoint_check(rc).ok());
    CHECK(rigidity_check(rc, d).ok());
    const int m = rc.m();
    const Morphism& a = rc.tetrahedral(m, m, m);
    const Morphism inv = closed_form_alpha_inverse(rc, d);
    CHECK(rc.compose(a, inv) == rc.identity(a.tgt));
    CHECK(rc.compose(inv, a) == rc.identity(a.src));
  }
}

TEST_CASE("Galois realizations are graded and alpha_mmm squares to the identity") {
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {2, 2}})
    for (const auto& d : classify(Case::ComplexGalois, o).classes) {
      const RealizedCategory rc = realize(d.representative);
      CHECK(galois_grading_check(rc).ok());
      const int m = rc.m();
      const Morphism& a = rc.tetrahedral(m, m, m);
      CHECK(rc.compose(a, a) == rc.identity(a.src));
    }
}

TEST_CASE("End algebras are faithfully represented") {
  const RealizedCategory rc = realize(classify(Case::Quaternionic, {}).admissible.front());
  const int m = rc.m();
  REQUIRE(rc.S().size() == 4);
  for (const Quat& p : rc.S())
    for (const Quat& q : rc.S()) {
      CHECK((rc.end_matrix(m, p) * rc.end_matrix(m, q) == rc.end_matrix(m, p * q)));
      CHECK(rc.end_element(m, rc.end_matrix(m, p)) == p);
    }
}

TEST_CASE("tensor of morphisms is functorial") {
  const RealizedCategory rc = realize(classify(Case::RealComplex, {2}, true).admissible.front());
  const int m = rc.m();
  const auto& S = rc.S();
  for (const Quat& p : S)
    for (const Quat& q : S) {
      const Morphism f = rc.end_morphism(m, p), g = rc.end_morphism(m, q);
      const Morphism lhs = rc.compose(rc.tensor(f, rc.identity({m})), rc.tensor(rc.identity({m}), g));
      CHECK(lhs == rc.tensor(f, g));
    }
}
