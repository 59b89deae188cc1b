// Helpers shared by the unit tests and the acceptance binary.
#pragma once

#include <string>
#include <vector>

#include "ty/gauge_equiv.hpp"

namespace ty::testing {

// The table of the builder formulas for an arbitrary chi, skipping validation.
inline CoeffTable unchecked_table(const TYData& d, const Fn2& chi) {
  CoeffTable t = trivial_table(d.kase, d.group, d.g_conj);
  const Cyclo tau = effective_tau(d);
  const Group& G = d.group;
  t.alpha2 = chi;
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) switch (d.kase) {
        case Case::Split:
        case Case::Quaternionic:
          t.beta2(a, b) = chi(a, b);
          t.gamma(a, b) = tau / chi(a, b);
          break;
        case Case::ComplexGalois:
          t.beta2(a, b) = chi(a, b);
          t.gamma(a, b) = tau * chi(a, b);
          break;
        case Case::RealComplex: {
          const int g = d.g_conj ? 1 : 0;
          t.beta2(a, b) = cj(chi(a, b), G.deg(b));
          t.gamma(a, b) = tau / cj(chi(a, b), g + G.deg(b));
          t.gamma_i(a, b) = cj(-Cyclo::i(), g + G.deg(a)) * t.gamma(a, b);
          break;
        }
      }
  return t;
}

// chi = 1 on the degree-zero part (degenerate whenever that part is nontrivial),
// keeping the given values elsewhere.
inline Fn2 degenerate_on_base(const TYData& d) {
  Fn2 chi = d.chi;
  for (int a = 0; a < d.group.size(); ++a)
    for (int b = 0; b < d.group.size(); ++b)
      if (d.group.deg(a) == 0 && d.group.deg(b) == 0) chi(a, b) = Cyclo(1);
  return chi;
}

struct Instance {
  std::string name;
  TYData data;
};

// The existence suite.
inline std::vector<Instance> existence_instances() {
  std::vector<Instance> out;
  auto add = [&](const std::string& name, const TYData& d) { out.push_back({name, d}); };

  for (const auto& o : std::vector<std::vector<int>>{{2}, {4}, {2, 2}}) {
    const Group A = Group::abelian(o);
    const auto chis = enumerate_bichars(A, Flavor::ComplexSymmetric);
    add("split " + std::to_string(A.size()), {Case::Split, A, false, chis.front().chi, sqrt_rational(Rational(1, A.size()))});
  }
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}, {2, 2}})
    for (const auto& d : classify(Case::Quaternionic, o).admissible)
      add("quaternionic |A|=" + std::to_string(d.group.size()), d);
  for (const auto& d : classify(Case::RealComplex, {}).admissible) add("real-complex Z/2", d);
  {
    int taken = 0;
    for (const auto& d : classify(Case::RealComplex, {4}, false).admissible)
      if (d.chi(1, 1) == Cyclo::i() && taken < 2) {
        add("real-complex D8", d);
        ++taken;
      }
  }
  for (const auto& d : classify(Case::RealComplex, {2}, true).admissible) add("real-complex (Z/2)^2 conj", d);
  for (const auto& o : std::vector<std::vector<int>>{{}, {2}})
    for (const auto& d : classify(Case::ComplexGalois, o).admissible) add("galois |A|=" + std::to_string(d.group.size()), d);
  {
    // chi(x,x) = 1, chi(x,y) = i, chi(y,y) = -1 on <x> x <y> = (Z/4)^2.
    const Group A = Group::abelian({4, 4});
    const int x = 4, y = 1;
    for (const auto& b : enumerate_bichars(A, Flavor::SkewSymmetric))
      if (b.chi(x, x).is_one() && b.chi(x, y) == Cyclo::i() && b.chi(y, y) == Cyclo(-1))
        add("galois (Z/4)^2", {Case::ComplexGalois, A, false, b.chi, std::nullopt});
  }
  return out;
}

}  // namespace ty::testing
