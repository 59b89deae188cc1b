#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ty/gauge_equiv.hpp"

using namespace ty;
using C = std::complex<double>;

namespace {

// Conditions relating two real-complex data through (f, h, lambda), tested
// numerically for lambda on 1024 points of the circle.
bool circle_conditions(const TYData& d, const TYData& d2) {
  if (d.g_conj != d2.g_conj) return false;
  const Group& G = d.group;
  const int n = G.size(), g = d.g_conj ? 1 : 0;
  const double tr = effective_tau(d2).embed().real() / effective_tau(d).embed().real();
  auto cjn = [](C z, int k) { return (k & 1) ? std::conj(z) : z; };
  for (const auto& f : enumerate_isomorphisms(G, d2.group))
    for (int h = 0; h < 2; ++h)
      for (int s = 0; s < 1024; ++s) {
        const C lam = std::polar(1.0, 2 * M_PI * s / 1024);
        if (std::abs(tr - lam / cjn(lam, g)) > 1e-9) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
          for (int b = 0; b < n && ok; ++b) {
            const C want = lam * cjn(lam, G.deg(a) + G.deg(b)) / (cjn(lam, G.deg(a)) * cjn(lam, G.deg(b))) *
                           cjn(d.chi(a, b).embed(), h);
            ok = std::abs(d2.chi(f[a], f[b]).embed() - want) < 1e-9;
          }
        if (ok) return true;
      }
  return false;
}

TYData with_tau(TYData d, const Cyclo& t) {
  d.tau = t;
  return d;
}

}  // namespace

TEST_CASE("gauge actions compose") {
  std::mt19937_64 rng(9);
  for (const auto& d : {classify(Case::Quaternionic, {2}).admissible[0], classify(Case::RealComplex, {2}).admissible[0],
                        classify(Case::ComplexGalois, {2}).admissible[0]}) {
    const CoeffTable t = build(d);
    const GaugeTuple x = random_gauge(d.kase, t.n(), rng), y = random_gauge(d.kase, t.n(), rng);
    CHECK(apply_gauge(apply_gauge(t, x), y) == apply_gauge(t, compose(x, y)));
    CHECK(apply_gauge(t, identity_gauge(d.kase, t.n())) == t);
  }
}

TEST_CASE("normal forms recover equivalent data from gauged tables") {
  std::mt19937_64 rng(4);
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}})
    for (Case c : {Case::Split, Case::Quaternionic, Case::RealComplex, Case::ComplexGalois}) {
      if (c == Case::Split && o.empty()) continue;
      for (const auto& d : classify(c, o).admissible) {
        const CoeffTable t = apply_gauge(build(d), random_gauge(c, d.group.size(), rng));
        const Normalized nf = normalize(t);
        CHECK(apply_gauge(t, nf.gauge) == nf.table);
        CHECK(normalize(nf.table).table == nf.table);
        const TYData back = extract_data(nf.table);
        CHECK(decide_equiv(d, back).has_value());
      }
    }
}

TEST_CASE("normalization refuses tables failing the pentagon") {
  const CoeffTable t = build(classify(Case::Split, {2}).admissible[0]);
  CHECK_THROWS_AS(normalize(perturb(t, "gamma", {0, 0}, Cyclo(2))), GaugeError);
}

TEST_CASE("classification counts") {
  CHECK(classify(Case::Quaternionic, {}).classes.size() == 2);
  const auto rc = classify(Case::RealComplex, {});
  CHECK(rc.classes.size() == 4);
  CHECK(classify(Case::RealComplex, {}, false).classes.size() + classify(Case::RealComplex, {}, true).classes.size() == 4);
  CHECK(classify(Case::ComplexGalois, {2}).classes.size() == 1);
  CHECK(classify(Case::ComplexGalois, {}).classes.size() == 1);
  CHECK(classify(Case::Split, {2}).classes.size() == 2);
}

TEST_CASE("Galois tau sign is not an invariant; quaternionic tau is") {
  for (const auto& d : classify(Case::ComplexGalois, {2}).admissible) {
    const Cyclo t = effective_tau(d);
    const auto w = decide_equiv_galois(with_tau(d, t), with_tau(d, -t));
    REQUIRE(w);
    CHECK(w->lambda == Cyclo::i());
    CHECK(check_hexagons(with_tau(d, t), with_tau(d, -t), *w).ok());
  }
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {2, 2}}) {
    const auto cl = classify(Case::Quaternionic, o);
    for (const auto& a : cl.admissible)
      for (const auto& b : cl.admissible)
        if (effective_tau(a) != effective_tau(b)) CHECK(!decide_equiv_quaternionic(a, b));
  }
}

TEST_CASE("different cases are never equivalent") {
  const TYData q = classify(Case::Quaternionic, {}).admissible[0];
  const TYData g = classify(Case::ComplexGalois, {}).admissible[0];
  CHECK(!decide_equiv(q, g));
}

TEST_CASE("every witness satisfies the hexagon equations") {
  for (Case c : {Case::Split, Case::Quaternionic, Case::RealComplex, Case::ComplexGalois})
    for (const auto& o : std::vector<std::vector<int>>{{}, {2}}) {
      if (c == Case::Split && o.empty()) continue;
      const auto cl = classify(c, o);
      for (const auto& a : cl.admissible)
        for (const auto& b : cl.admissible)
          if (const auto w = decide_equiv(a, b)) CHECK(check_hexagons(a, b, *w).ok());
    }
}

TEST_CASE("real-complex decisions contain the circle-sampled conditions") {
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {4}}) {
    const auto cl = classify(Case::RealComplex, o);
    int sampled = 0, decided = 0;
    for (size_t i = 0; i < cl.admissible.size() && i < 24; ++i)
      for (size_t j = 0; j < cl.admissible.size() && j < 24; ++j) {
        const TYData &a = cl.admissible[i], &b = cl.admissible[j];
        const bool s = circle_conditions(a, b);
        const bool e = decide_equiv_realcomplex(a, b).has_value();
        if (s) CHECK(e);
        sampled += s;
        decided += e;
      }
    CHECK(sampled > 0);
    CHECK(decided >= sampled);
  }
}

TEST_CASE("gauged data stay in their class") {
  std::mt19937_64 rng(12);
  const auto cl = classify(Case::RealComplex, {2});
  for (const auto& d : cl.admissible) {
    const TYData back = extract_data(normalize(apply_gauge(build(d), random_gauge(d.kase, d.group.size(), rng))).table);
    CHECK(decide_equiv(d, back).has_value());
  }
}
