#include "ty/fusion.hpp"

namespace ty {

std::string case_name(Case c) {
  switch (c) {
    case Case::Split: return "split";
    case Case::Quaternionic: return "quaternionic";
    case Case::RealComplex: return "realcomplex";
    case Case::ComplexGalois: return "galois";
  }
  return "?";
}

Case parse_case(const std::string& s) {
  if (s == "split") return Case::Split;
  if (s == "quaternionic") return Case::Quaternionic;
  if (s == "realcomplex") return Case::RealComplex;
  if (s == "galois") return Case::ComplexGalois;
  throw std::invalid_argument("unknown case '" + s + "' (split, quaternionic, realcomplex, galois)");
}

int mm_multiplicity(Case c) {
  switch (c) {
    case Case::Split: return 1;
    case Case::Quaternionic: return 4;
    case Case::RealComplex: return 2;
    case Case::ComplexGalois: return 1;  // End(1) = End(m) = C
  }
  return 1;
}

TYRing make_ring(Case c, const Group& G) {
  TYRing r;
  r.kase = c;
  r.group = G;
  r.k = mm_multiplicity(c);
  const int R = r.rank(), m = r.m();
  r.N.assign(static_cast<size_t>(R) * R * R, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) r.at(a, b, G.mul(a, b)) = 1;
    r.at(a, m, m) = 1;
    r.at(m, a, m) = 1;
    r.at(m, m, a) = r.k;
  }
  return r;
}

std::vector<int> fuse(const TYRing& r, int x, int y) {
  std::vector<int> out(r.rank());
  for (int z = 0; z < r.rank(); ++z) out[z] = r.at(x, y, z);
  return out;
}

Cyclo fpdim(const TYRing& r, int x) {
  if (x != r.m()) return Cyclo(1);
  return sqrt_rational(Rational(r.k * r.group.size()));
}

RingReport verify_ring(const TYRing& r) {
  RingReport rep;
  const int R = r.rank();
  auto name = [&](int x) { return x == r.m() ? std::string("m") : r.group.label(x); };
  for (int x = 0; x < R; ++x)
    for (int y = 0; y < R; ++y)
      for (int z = 0; z < R; ++z)
        for (int w = 0; w < R; ++w) {
          long left = 0, right = 0;
          for (int u = 0; u < R; ++u) {
            left += static_cast<long>(r.at(x, y, u)) * r.at(u, z, w);
            right += static_cast<long>(r.at(y, z, u)) * r.at(x, u, w);
          }
          if (left != right) {
            rep.failures.push_back("associativity fails at (" + name(x) + "," + name(y) + "," + name(z) +
                                   ") in the coefficient of " + name(w));
          }
        }
  const int one = r.group.identity();
  for (int x = 0; x < R; ++x)
    for (int y = 0; y < R; ++y) {
      int want = x == y ? (x == r.m() ? r.k : 1) : 0;
      if (r.at(x, r.dual(y), one) != want)
        rep.failures.push_back("duality pairing fails at (" + name(x) + "," + name(y) + ")");
    }
  return rep;
}

}  // namespace ty
