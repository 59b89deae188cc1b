#include "ty/pentagon.hpp"

#include <numeric>

namespace ty {

std::set<std::string> PentagonReport::failed_equations() const {
  std::set<std::string> s;
  for (const auto& v : violations) s.insert(v.eq);
  return s;
}

namespace {

constexpr size_t kMaxViolations = 20000;

struct Checker {
  PentagonReport rep;

  void eq(const char* id, std::vector<int> args, const Cyclo& l, const Cyclo& r) {
    if (l != r) add(id, std::move(args), l.str(), r.str());
  }
  void eq(const char* id, std::vector<int> args, const TensorCC& l, const TensorCC& r) {
    if (l != r) add(id, std::move(args), l.str(), r.str());
  }
  void add(const char* id, std::vector<int> args, std::string l, std::string r) {
    if (rep.violations.size() < kMaxViolations) rep.violations.push_back({id, std::move(args), std::move(l), std::move(r)});
  }
};

void check_shape(const CoeffTable& t, Case want) {
  if (t.kase != want) throw ShapeError("table is " + case_name(t.kase) + ", checker expects " + case_name(want));
  const int n = t.n();
  bool ok = t.alpha.size() == n && t.alpha1.size() == n && t.alpha2.size() == n && t.alpha3.size() == n &&
            t.beta1.size() == n && t.beta2.size() == n && t.beta3.size() == n && t.gamma.size() == n;
  if (want == Case::RealComplex) ok = ok && t.gamma_i.size() == n && t.group.is_dihedral();
  else ok = ok && !t.group.graded();
  if (!ok) throw ShapeError("table shape does not match its group");
}

// Split and quaternionic share E4..E19 up to the factor in E19.
PentagonReport run_tambara_yamagami(const CoeffTable& t, int factor) {
  const Group& G = t.group;
  const int n = G.size();
  Checker ck;
  const auto &al = t.alpha;
  const auto &a1 = t.alpha1, &a2 = t.alpha2, &a3 = t.alpha3;
  const auto &b1 = t.beta1, &b2 = t.beta2, &b3 = t.beta3, &ga = t.gamma;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = M(a, b), bc = M(b, c);
        for (int d = 0; d < n; ++d)
          ck.eq("E4", {a, b, c, d}, al(b, c, d) * al(a, bc, d) * al(a, b, c), al(ab, c, d) * al(a, b, M(c, d)));
        ck.eq("E5", {a, b, c}, a3(b, c) * a3(a, bc) * al(a, b, c), a3(ab, c) * a3(a, b));
        ck.eq("E6", {a, b, c}, a1(b, c) * a1(a, bc), al(a, b, c) * a1(ab, c) * a1(a, b));
        ck.eq("E7", {a, b, c}, a2(a, bc), a2(a, c) * a2(a, b));
        ck.eq("E8", {a, b, c}, a2(ab, c), a2(b, c) * a2(a, c));
        ck.eq("E9", {a, b, c}, al(a, b, M(I(ab), c)) * b1(ab, c), b1(b, M(I(a), c)) * b1(a, c) * a3(a, b));
        ck.eq("E10", {a, b, c}, b3(ab, c) * al(M(c, I(ab)), a, b), a1(a, b) * b3(b, c) * b3(a, M(c, I(b))));
        ck.eq("E11", {a, b, c}, b2(b, c), b2(b, M(I(a), c)) * a2(a, b));
        ck.eq("E12", {a, b, c}, b2(a, c), a2(a, b) * b2(a, M(c, I(b))));
        ck.eq("E13", {a, b, c}, b1(a, c) * b3(b, c),
              b3(b, M(I(a), c)) * al(a, M(M(I(a), c), I(b)), b) * b1(a, M(c, I(b))));
        ck.eq("E14", {a, b, c}, b2(a, c) * b2(b, c), a3(a, b) * b2(ab, c) * a1(a, b));
        ck.eq("E15", {a, b, c}, a2(a, c) * ga(c, b), b1(a, b) * a3(a, M(I(a), b)) * ga(c, M(I(a), b)));
        const int ca = M(c, I(a));
        ck.eq("E16", {a, b, c}, a2(b, a) * ga(c, b), b3(a, c) * a1(ca, a) * ga(ca, b));
        ck.eq("E17", {a, b, c}, a1(a, c) * ga(c, b), b2(a, b) * b1(a, M(a, c)) * ga(M(c, a), b));
        ck.eq("E18", {a, b, c}, a3(b, a) * ga(c, b), b2(a, c) * b3(a, M(b, a)) * ga(c, M(b, a)));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const int bai = M(b, I(a));
        Cyclo l = d == bai ? b3(a, b) * b1(bai, b) : Cyclo(0);
        Cyclo r(0);
        for (int c = 0; c < n; ++c) r += b2(c, b) * ga(c, d) * ga(a, c);
        ck.eq("E19", {a, b, d}, l, r * Cyclo(factor));
      }
  return ck.rep;
}

}  // namespace

PentagonReport check_split(const CoeffTable& t) {
  check_shape(t, Case::Split);
  auto r = run_tambara_yamagami(t, 1);
  r.kase = Case::Split;
  return r;
}

PentagonReport check_quaternionic(const CoeffTable& t, int eq19_factor) {
  check_shape(t, Case::Quaternionic);
  auto r = run_tambara_yamagami(t, eq19_factor);
  r.kase = Case::Quaternionic;
  return r;
}

PentagonReport check_realcomplex(const CoeffTable& t) {
  check_shape(t, Case::RealComplex);
  const Group& G = t.group;
  const int n = G.size(), g = t.g();
  Checker ck;
  ck.rep.kase = Case::RealComplex;
  const auto& al = t.alpha;
  const auto &a1 = t.alpha1, &a2 = t.alpha2, &a3 = t.alpha3;
  const auto &b1 = t.beta1, &b2 = t.beta2, &b3 = t.beta3;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  auto D = [&](int x) { return G.deg(x); };
  const int Mod = std::lcm(4, t.gamma(0, 0).modulus());
  const Cyclo S[2] = {Cyclo(Rational(1), Mod), Cyclo::i().promote(Mod)};
  auto gam = [&](int x, int y, int s) -> const Cyclo& { return s == 0 ? t.gamma(x, y) : t.gamma_i(x, y); };
  auto tens = [](const Cyclo& u, const Cyclo& v) { return TensorCC::tensor(u, v); };
  // acc += S[s] (x) v without splitting S[s] into real and imaginary parts
  auto basis_add = [](TensorCC& acc, int s, const Cyclo& v) { (s == 0 ? acc.p : acc.q) += v; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = M(a, b), bc = M(b, c);
        const int da = D(a), db = D(b), dc = D(c);
        for (int d = 0; d < n; ++d)
          ck.eq("E40", {a, b, c, d}, al(b, c, d) * al(a, bc, d) * al(a, b, c), al(ab, c, d) * al(a, b, M(c, d)));
        ck.eq("E41", {a, b, c}, a3(b, c) * a3(a, bc) * al(a, b, c), a3(ab, c) * cj(a3(a, b), dc));
        ck.eq("E42", {a, b, c}, cj(a1(b, c), da) * a1(a, bc), al(a, b, c) * a1(ab, c) * a1(a, b));
        ck.eq("E43", {a, b, c}, a2(a, bc) * cj(a1(b, c), da), a1(b, c) * cj(a2(a, c), db) * a2(a, b));
        ck.eq("E44", {a, b, c}, cj(a3(a, b), dc) * a2(ab, c), a2(b, c) * cj(a2(a, c), db) * a3(a, b));
        const int gabc = g + da + db + dc;
        ck.eq("E45", {a, b, c}, al(a, b, M(I(ab), c)) * b1(ab, c), b1(b, M(I(a), c)) * b1(a, c) * cj(a3(a, b), gabc));
        ck.eq("E46", {a, b, c}, b3(ab, c) * al(M(c, I(ab)), a, b), a1(a, b) * cj(b3(b, c), da) * b3(a, M(c, I(b))));
        ck.eq("E47", {a, b, c}, cj(b2(a, c), db) * b3(b, c), a2(a, b) * cj(b3(b, c), da) * b2(a, M(c, I(b))));
        ck.eq("E48", {a, b, c}, cj(b1(a, c), db) * b2(b, c), b2(b, M(I(a), c)) * b1(a, c) * cj(a2(a, b), gabc));
        ck.eq("E49", {a, b, c}, cj(b1(a, c), db) * b3(b, c),
              b3(b, M(I(a), c)) * al(a, M(M(I(a), c), I(b)), b) * b1(a, M(c, I(b))));
        ck.eq("E50", {a, b, c}, cj(b2(a, c), db) * b2(b, c), a3(a, b) * b2(ab, c) * cj(a1(a, b), gabc));

        const int aib = M(I(a), b), cai = M(c, I(a)), ac = M(a, c), ba = M(b, a);
        TensorCC l, r;
        l = r = TensorCC(0, 0);
        for (int s = 0; s < 2; ++s) {
          l += tens(S[s] * cj(a2(a, c), g + da + db), gam(c, b, s));
          r += tens(S[s] * b1(a, b), a3(a, aib) * gam(c, aib, s));
        }
        ck.eq("E51", {a, b, c}, l, r);
        l = r = TensorCC(0, 0);
        for (int s = 0; s < 2; ++s) {
          basis_add(l, s, a2(b, a) * cj(gam(c, b, s), da));
          r += tens(S[s] * cj(a1(cai, a), g + db), b3(a, c) * gam(cai, b, s));
        }
        ck.eq("E52", {a, b, c}, l, r);
        l = r = TensorCC(0, 0);
        for (int s = 0; s < 2; ++s) {
          l += tens(S[s] * cj(a1(a, c), g + da + db), gam(c, b, s));
          r += tens(cj(S[s], da) * b2(a, b), b1(a, ac) * gam(ac, b, s));
        }
        ck.eq("E53", {a, b, c}, l, r);
        l = r = TensorCC(0, 0);
        for (int s = 0; s < 2; ++s) {
          basis_add(l, s, a3(b, a) * cj(gam(c, b, s), da));
          r += tens(cj(S[s], da) * b3(a, ba), gam(c, ba, s) * b2(a, c));
        }
        ck.eq("E54", {a, b, c}, l, r);
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const int bai = M(b, I(a));
        TensorCC l = d == bai ? tens(b3(a, b), b1(bai, b)) : TensorCC(0, 0);
        const int x = g + D(b) + D(d);
        TensorCC r(0, 0);
        for (int c = 0; c < n; ++c)
          for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 2; ++u)
              basis_add(r, u, cj(S[s], x) * b2(c, b) * cj(gam(c, d, u), x) * gam(a, c, s));
        ck.eq("E55", {a, b, d}, l, r);
      }
  return ck.rep;
}

PentagonReport check_galois(const CoeffTable& t) {
  check_shape(t, Case::ComplexGalois);
  const Group& G = t.group;
  const int n = G.size();
  Checker ck;
  ck.rep.kase = Case::ComplexGalois;
  const auto& al = t.alpha;
  const auto &a1 = t.alpha1, &a2 = t.alpha2, &a3 = t.alpha3;
  const auto &b1 = t.beta1, &b2 = t.beta2, &b3 = t.beta3, &ga = t.gamma;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = M(a, b), bc = M(b, c);
        for (int d = 0; d < n; ++d)
          ck.eq("E112", {a, b, c, d}, al(b, c, d) * al(a, bc, d) * al(a, b, c), al(ab, c, d) * al(a, b, M(c, d)));
        ck.eq("E113", {a, b, c}, a3(b, c) * a3(a, bc) * al(a, b, c), a3(ab, c) * a3(a, b));
        ck.eq("E114", {a, b, c}, a1(b, c) * a1(a, bc), al(a, b, c).conj() * a1(ab, c) * a1(a, b));
        ck.eq("E115", {a, b, c}, a2(a, bc), a2(a, c) * a2(a, b));
        ck.eq("E116", {a, b, c}, a2(ab, c), a2(b, c) * a2(a, c));
        ck.eq("E117", {a, b, c}, al(a, b, M(I(ab), c)).conj() * b1(ab, c),
              b1(b, M(I(a), c)) * b1(a, c) * a3(a, b).conj());
        ck.eq("E118", {a, b, c}, b3(ab, c) * al(M(c, I(ab)), a, b).conj(), a1(a, b) * b3(b, c) * b3(a, M(c, I(b))));
        ck.eq("E119", {a, b, c}, b2(b, c), b2(b, M(I(a), c)) * a2(a, b).conj());
        ck.eq("E120", {a, b, c}, b2(a, c), a2(a, b) * b2(a, M(c, I(b))));
        ck.eq("E121", {a, b, c}, b1(a, c) * b3(b, c),
              b3(b, M(I(a), c)) * al(a, M(M(I(a), c), I(b)), b).conj() * b1(a, M(c, I(b))));
        ck.eq("E122", {a, b, c}, b2(a, c) * b2(b, c), a3(a, b) * b2(ab, c) * a1(a, b).conj());
        ck.eq("E123", {a, b, c}, a2(a, c) * ga(c, b), b1(a, b).conj() * a3(a, M(I(a), b)) * ga(c, M(I(a), b)));
        const int ca = M(c, I(a));
        ck.eq("E124", {a, b, c}, a2(b, a) * ga(c, b), b3(a, c) * a1(ca, a) * ga(ca, b));
        ck.eq("E125", {a, b, c}, a1(a, c) * ga(c, b), b2(a, b).conj() * b1(a, M(a, c)) * ga(M(a, c), b));
        ck.eq("E126", {a, b, c}, a3(b, a) * ga(c, b), b2(a, c) * b3(a, M(b, a)).conj() * ga(c, M(b, a)));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const int bai = M(b, I(a));
        Cyclo l = d == bai ? b3(a, b) * b1(bai, b) : Cyclo(0);
        Cyclo r(0);
        for (int c = 0; c < n; ++c) r += b2(c, b) * ga(c, d).conj() * ga(a, c);
        ck.eq("E127", {a, b, d}, l, r);
      }
  return ck.rep;
}

PentagonReport check_pentagon(const CoeffTable& t) {
  switch (t.kase) {
    case Case::Split: return check_split(t);
    case Case::Quaternionic: return check_quaternionic(t);
    case Case::RealComplex: return check_realcomplex(t);
    case Case::ComplexGalois: return check_galois(t);
  }
  throw ShapeError("unknown case");
}

PentagonReport check_realcomplex_reduced(const CoeffTable& t) {
  check_shape(t, Case::RealComplex);
  const Group& G = t.group;
  const int n = G.size(), g = t.g();
  Checker ck;
  ck.rep.kase = Case::RealComplex;
  const auto &a2 = t.alpha2, &b2 = t.beta2, &ga = t.gamma;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  auto D = [&](int x) { return G.deg(x); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ck.eq("E69", {a, b, c}, cj(a2(a, c), D(a) + D(b) + D(c)) * ga(c, b), ga(c, M(I(a), b)));
        ck.eq("E70", {a, b, c}, a2(b, a) * cj(ga(c, b), D(a)), ga(M(c, I(a)), b));
        ck.eq("E71", {a, b, c}, ga(c, b), cj(b2(a, b), g + D(c)) * ga(M(a, c), b));
        ck.eq("E72", {a, b, c}, cj(ga(c, b), D(a)), ga(c, M(b, a)) * b2(a, c));
      }
  return ck.rep;
}

Cyclo delta3(const Group& G, const Fn3& f, int a, int b, int c, int d) {
  return f(b, c, d) * f(a, G.mul(b, c), d) * f(a, b, c) / (f(G.mul(a, b), c, d) * f(a, b, G.mul(c, d)));
}

Cyclo delta2(const Group& G, const Fn2& f, int a, int b, int c) {
  return f(b, c) * f(a, G.mul(b, c)) / (f(G.mul(a, b), c) * f(a, b));
}

Fn2 deltaL(const Group& G, const Fn1& psi) {
  Fn2 out(G.size());
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) out(a, b) = psi[a] * cj(psi[b], G.deg(a)) / psi[G.mul(a, b)];
  return out;
}

Fn2 deltaR(const Group& G, const Fn1& phi) {
  Fn2 out(G.size());
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) out(a, b) = phi[b] * cj(phi[a], G.deg(b)) / phi[G.mul(a, b)];
  return out;
}

}  // namespace ty
