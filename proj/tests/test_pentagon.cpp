#include <doctest.h>

#include <random>

#include "ty/gauge_equiv.hpp"
#include "ty/pentagon.hpp"
#include "support.hpp"

using namespace ty;
using ty::testing::unchecked_table;

namespace {

std::vector<TYData> small_instances() {
  std::vector<TYData> out;
  auto take = [&](const Classification& c) {
    out.push_back(c.admissible.front());
    if (c.admissible.size() > 1) out.push_back(c.admissible.back());
  };
  take(classify(Case::Split, {2}));
  take(classify(Case::Split, {2, 2}));
  take(classify(Case::Quaternionic, {}));
  take(classify(Case::Quaternionic, {2}));
  take(classify(Case::RealComplex, {}));
  take(classify(Case::RealComplex, {2}, true));
  take(classify(Case::ComplexGalois, {2}));
  take(classify(Case::ComplexGalois, {}));
  return out;
}

}  // namespace

TEST_CASE("built tables pass their pentagon suites") {
  for (const auto& d : small_instances()) {
    CAPTURE(case_name(d.kase));
    const PentagonReport r = check_pentagon(build(d));
    CHECK(r.pass());
    CHECK(r.kase == d.kase);
  }
}

TEST_CASE("perturbation catalog is detected") {
  for (const auto& d : small_instances()) {
    CAPTURE(case_name(d.kase));
    const CoeffTable t = build(d);
    const int n = t.n(), last = n - 1;
    CHECK(!check_pentagon(perturb(t, "gamma", {0, 0}, Cyclo(2))).pass());
    CHECK(!check_pentagon(perturb(t, "alpha2", {last, last}, Cyclo::i())).pass());
    CHECK(!check_pentagon(perturb(t, "alpha2", {last, last}, Cyclo(-1))).pass());
    if (d.group.base_size() > 1) CHECK(!check_pentagon(unchecked_table(d, ty::testing::degenerate_on_base(d))).pass());
  }
}

TEST_CASE("the factor 4 in the last quaternionic equation is load-bearing") {
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}}) {
    const CoeffTable t = build(classify(Case::Quaternionic, o).admissible.front());
    CHECK(check_quaternionic(t).pass());
    const PentagonReport r = check_quaternionic(t, 1);
    CHECK(!r.pass());
    CHECK(r.failed_equations() == std::set<std::string>{"E19"});
  }
  // Split tables use factor 1 and pass.
  CHECK(check_split(build(classify(Case::Split, {2}).admissible.front())).pass());
}

TEST_CASE("violations name equations and arguments") {
  const CoeffTable t = build(classify(Case::ComplexGalois, {2}).admissible.front());
  const PentagonReport r = check_pentagon(perturb(t, "gamma", {1, 0}, Cyclo(3)));
  REQUIRE(!r.pass());
  for (const auto& v : r.violations) {
    CHECK(v.eq.size() >= 2);
    CHECK(v.eq[0] == 'E');
    CHECK(v.lhs != v.rhs);
  }
}

TEST_CASE("pentagon verdicts are gauge invariant") {
  std::mt19937_64 rng(2024);
  for (const auto& d : small_instances()) {
    const CoeffTable t = build(d);
    const CoeffTable bad = perturb(t, "gamma", {0, 0}, Cyclo(2));
    for (int k = 0; k < 5; ++k) {
      const GaugeTuple g = random_gauge(d.kase, t.n(), rng);
      CHECK(check_pentagon(apply_gauge(t, g)).pass());
      CHECK(!check_pentagon(apply_gauge(bad, g)).pass());
    }
  }
}

TEST_CASE("reduced real-complex forms agree on built tables") {
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {3}})
    for (const auto& d : classify(Case::RealComplex, o).admissible) CHECK(check_realcomplex_reduced(build(d)).pass());
}

TEST_CASE("shape errors") {
  CoeffTable t = build(classify(Case::Split, {2}).admissible.front());
  t.gamma = Fn2(3);
  CHECK_THROWS_AS(check_pentagon(t), ShapeError);
}

TEST_CASE("coboundaries of coboundaries vanish") {
  const Group G = Group::abelian({2, 3});
  std::mt19937_64 rng(1);
  Fn2 f(G.size());
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) f(a, b) = Cyclo::zeta(6, static_cast<long>(rng() % 6));
  Fn3 df(G.size());
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      for (int c = 0; c < G.size(); ++c) df(a, b, c) = delta2(G, f, a, b, c);
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      for (int c = 0; c < G.size(); ++c)
        for (int e = 0; e < G.size(); ++e) CHECK(delta3(G, df, a, b, c, e).is_one());
}
