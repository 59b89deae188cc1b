// Acceptance criteria 1-8: one PASS/FAIL line each; exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "ty/fusion.hpp"
#include "ty/realization.hpp"

using namespace ty;
using ty::testing::Instance;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CoeffTable perturb_gamma(const CoeffTable& t) {
  const int e = t.group.identity();
  return perturb(t, "gamma", {e, e}, Cyclo(2));
}

Verdict existence(const std::vector<Instance>& inst) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, d] : inst) {
    const PentagonReport r = check_pentagon(build(d));
    if (!r.pass()) v.fail(name + ": " + std::to_string(r.violations.size()) + " violations");
  }
  const double s = seconds_since(t0);
  if (s >= 60) v.fail("took " + std::to_string(s) + " s");
  v.detail << inst.size() << " instances, 0 violations required, " << s << " s";
  return v;
}

Verdict oracle_agreement(const std::vector<Instance>& inst) {
  Verdict v;
  std::mt19937_64 rng(20240601);
  long compared = 0;
  auto compare = [&](const std::string& name, const CoeffTable& t) {
    const bool coeff = check_pentagon(t).pass();
    const bool matrix = pentagon_matrix_check(RealizedCategory(t)).pass();
    ++compared;
    if (coeff != matrix) v.fail(name + ": coefficient " + std::to_string(coeff) + " vs matrix " + std::to_string(matrix));
  };
  for (const auto& [name, d] : inst) {
    const CoeffTable t = build(d);
    compare(name, t);
    compare(name + " perturbed", perturb_gamma(t));
    for (int k = 0; k < 50; ++k) compare(name + " gauged", apply_gauge(t, random_gauge(d.kase, t.n(), rng)));
  }
  v.detail << compared << " tables compared";
  return v;
}

Verdict negative_controls(const std::vector<Instance>& inst) {
  Verdict v;
  int degenerate = 0;
  for (const auto& [name, d] : inst) {
    const CoeffTable t = build(d);
    const int last = t.n() - 1;
    if (check_pentagon(perturb_gamma(t)).pass()) v.fail(name + ": gamma(1,1) x 2 passes");
    if (check_pentagon(perturb(t, "alpha2", {last, last}, Cyclo::i())).pass()) v.fail(name + ": alpha2 x i passes");
    if (d.group.base_size() > 1) {
      ++degenerate;
      TYData bad = d;
      bad.chi = ty::testing::degenerate_on_base(d);
      bool rejected = false;
      try {
        validate(bad);
      } catch (const DataError&) {
        rejected = true;
      }
      if (!rejected) v.fail(name + ": degenerate chi validates");
      if (check_pentagon(ty::testing::unchecked_table(d, bad.chi)).pass()) v.fail(name + ": degenerate chi passes");
    }
    if (d.kase == Case::Quaternionic) {
      const PentagonReport r = check_quaternionic(t, 1);
      if (!r.failed_equations().count("E19")) v.fail(name + ": factor 1 does not fail E19");
      if (!check_quaternionic(t, 4).pass()) v.fail(name + ": factor 4 fails");
    }
  }
  v.detail << inst.size() << " instances; degenerate chi on the " << degenerate
           << " with nontrivial degree-zero part (a trivial one has no degenerate chi)";
  return v;
}

Verdict classification_counts() {
  Verdict v;
  const size_t q = classify(Case::Quaternionic, {}).classes.size();
  const size_t rc = classify(Case::RealComplex, {}).classes.size();
  const auto gal = classify(Case::ComplexGalois, {2});
  if (q != 2) v.fail("quaternionic trivial: " + std::to_string(q));
  if (rc != 4) v.fail("real-complex Z/2: " + std::to_string(rc));
  if (gal.classes.size() != 1) v.fail("Galois Z/2: " + std::to_string(gal.classes.size()));
  for (const auto& d : gal.admissible) {
    TYData flipped = d;
    flipped.tau = -effective_tau(d);
    const auto w = decide_equiv_galois(d, flipped);
    if (!w || !check_hexagons(d, flipped, *w).ok()) v.fail("Galois tau sign matters");
  }
  int pairs = 0;
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {2, 2}}) {
    const auto cl = classify(Case::Quaternionic, o);
    for (const auto& a : cl.admissible)
      for (const auto& b : cl.admissible)
        if (effective_tau(a) != effective_tau(b)) {
          ++pairs;
          if (decide_equiv(a, b)) v.fail("quaternionic tau != tau' equivalent");
        }
  }
  v.detail << "quaternionic 1: " << q << ", real-complex Z/2: " << rc << ", Galois Z/2: " << gal.classes.size()
           << ", " << pairs << " quaternionic pairs with tau != tau' inequivalent";
  return v;
}

Verdict fp_dimension() {
  Verdict v;
  const TYRing r = make_ring(Case::Quaternionic, Group::abelian({2}));
  const Cyclo d = fpdim(r, r.m());
  if (d != Cyclo(2) * sqrt_int(2, 8)) v.fail("fpdim(m) = " + d.str());
  v.detail << "fpdim(m) = " << d.str();
  return v;
}

Verdict rigidity(const std::vector<Instance>& inst) {
  Verdict v;
  for (const auto& [name, d] : inst) {
    const RealizedCategory rc = realize(d);
    const CheckReport r = rigidity_check(rc, d);
    if (!r.ok()) v.fail(name + ": " + r.failures.front());
    const int m = rc.m();
    const Morphism& a = rc.tetrahedral(m, m, m);
    const Morphism inv = closed_form_alpha_inverse(rc, d);
    if (!(rc.compose(a, inv) == rc.identity(a.tgt)) || !(rc.compose(inv, a) == rc.identity(a.src)))
      v.fail(name + ": alpha alpha^-1 != id");
    if (d.kase == Case::ComplexGalois && !(rc.compose(a, a) == rc.identity(a.src))) v.fail(name + ": alpha_mmm^2 != id");
  }
  v.detail << inst.size() << " instances: snakes, alpha alpha^-1, Galois alpha_mmm^2";
  return v;
}

Verdict structure(const std::vector<Instance>& inst) {
  Verdict v;
  const Group Z4 = Group::from_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}, {0, 1, 0, 1});
  Fn2 chi_A(2);
  chi_A(1, 1) = Cyclo(-1);
  for (bool g : {false, true})
    if (!extend_to_bicocycle(Z4, chi_A, g, 16).empty()) v.fail("graded Z/4 admits data");
  int galois = 0, rc_tables = 0;
  for (const auto& [name, d] : inst) {
    if (d.kase == Case::ComplexGalois) {
      ++galois;
      const CheckReport r = galois_grading_check(realize(d));
      if (!r.ok()) v.fail(name + ": " + r.failures.front());
    }
    if (d.kase != Case::RealComplex) continue;
    ++rc_tables;
    const CoeffTable t = build(d);
    const Group& G = t.group;
    for (int a = 0; a < G.size(); ++a)
      for (int b = 0; b < G.size(); ++b) {
        const Cyclo& x = t.alpha2(a, b);
        if (t.alpha2(a, G.inv(b)) != cj(x, G.deg(b)).inverse() || t.alpha2(G.inv(a), b) != cj(x, G.deg(a)).inverse())
          v.fail(name + ": Eq77");
        if (t.beta2(a, b) != cj(x, G.deg(b))) v.fail(name + ": Eq78");
      }
  }
  v.detail << "graded Z/4 empty for both g; grading on " << galois << " Galois; Eq77/78 on " << rc_tables
           << " real-complex tables";
  return v;
}

Verdict gauge_invariance(const std::vector<Instance>& inst) {
  Verdict v;
  std::mt19937_64 rng(777);
  for (const auto& [name, d] : inst) {
    const CoeffTable t = build(d), bad = perturb_gamma(t);
    for (int k = 0; k < 20; ++k) {
      const GaugeTuple g = random_gauge(d.kase, t.n(), rng);
      const CoeffTable tg = apply_gauge(t, g);
      if (!check_pentagon(tg).pass()) v.fail(name + ": gauged table fails");
      if (check_pentagon(apply_gauge(bad, g)).pass()) v.fail(name + ": gauged perturbation passes");
      if (!decide_equiv(d, extract_data(normalize(tg).table))) v.fail(name + ": class changed");
    }
  }
  v.detail << inst.size() << " instances x 20 gauges";
  return v;
}

}  // namespace

int main() {
  std::cout << std::unitbuf;
  const auto inst = ty::testing::existence_instances();
  bool all = true;
  auto report = [&](int k, Verdict v) {
    all = all && v.pass;
    std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail.str() << "\n";
  };
  report(1, existence(inst));
  report(2, oracle_agreement(inst));
  report(3, negative_controls(inst));
  report(4, classification_counts());
  report(5, fp_dimension());
  report(6, rigidity(inst));
  report(7, structure(inst));
  report(8, gauge_invariance(inst));
  return all ? 0 : 1;
}
