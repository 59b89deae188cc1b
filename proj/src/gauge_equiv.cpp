#include "ty/gauge_equiv.hpp"

#include <map>

namespace ty {

namespace {

bool is_galois(Case c) { return c == Case::ComplexGalois; }

void require_nonzero(const GaugeTuple& gt) {
  const int n = static_cast<int>(gt.phi.size());
  for (int a = 0; a < n; ++a) {
    if (gt.phi[a].is_zero() || gt.psi[a].is_zero() || gt.omega[a].is_zero())
      throw GaugeError("gauge values must be nonzero");
    for (int b = 0; b < n; ++b)
      if (gt.theta(a, b).is_zero()) throw GaugeError("gauge values must be nonzero");
  }
}

Cyclo random_value(std::mt19937_64& rng, bool complex) {
  std::uniform_int_distribution<int> pq(1, 3), sign(0, 1), quarter(0, 3);
  Cyclo v(Rational(pq(rng), pq(rng)));
  if (sign(rng)) v = -v;
  if (complex) v *= pow(Cyclo::i(), quarter(rng));
  return v;
}

Fn1 ones(int n) { return Fn1(n, Cyclo(1)); }

}  // namespace

GaugeTuple identity_gauge(Case c, int n) {
  GaugeTuple gt;
  gt.kase = c;
  gt.theta = Fn2(n);
  gt.phi = gt.psi = gt.omega = ones(n);
  return gt;
}

GaugeTuple compose(const GaugeTuple& x, const GaugeTuple& y) {
  const int n = static_cast<int>(x.phi.size());
  if (x.kase != y.kase || static_cast<int>(y.phi.size()) != n) throw GaugeError("gauge tuples do not match");
  GaugeTuple out = x;
  for (int a = 0; a < n; ++a) {
    out.phi[a] *= y.phi[a];
    out.psi[a] *= y.psi[a];
    out.omega[a] *= y.omega[a];
    for (int b = 0; b < n; ++b) out.theta(a, b) *= y.theta(a, b);
  }
  return out;
}

GaugeTuple random_gauge(Case c, int n, std::mt19937_64& rng) {
  GaugeTuple gt = identity_gauge(c, n);
  const bool complex_theta = is_galois(c);
  const bool complex_rest = c == Case::RealComplex || is_galois(c);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gt.theta(a, b) = random_value(rng, complex_theta);
  for (int a = 0; a < n; ++a) {
    gt.phi[a] = random_value(rng, complex_rest);
    gt.psi[a] = random_value(rng, complex_rest);
    gt.omega[a] = random_value(rng, complex_rest);
  }
  return gt;
}

CoeffTable apply_gauge(const CoeffTable& t, const GaugeTuple& gt) {
  const Group& G = t.group;
  const int n = t.n();
  if (gt.kase != t.kase || static_cast<int>(gt.phi.size()) != n || gt.theta.size() != n)
    throw GaugeError("gauge tuple does not match the table");
  require_nonzero(gt);
  const auto& th = gt.theta;
  const auto &ph = gt.phi, &ps = gt.psi, &om = gt.omega;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  CoeffTable u = t;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) u.alpha(a, b, c) *= delta2(G, th, a, b, c);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = M(a, b), aib = M(I(a), b), bai = M(b, I(a));
      switch (t.kase) {
        case Case::Split:
        case Case::Quaternionic:
          u.alpha1(a, b) *= ps[ab] * th(a, b) / (ps[a] * ps[b]);
          u.alpha3(a, b) *= ph[a] * ph[b] / (ph[ab] * th(a, b));
          u.beta1(a, b) *= om[aib] * th(a, aib) / (ph[a] * om[b]);
          u.beta2(a, b) *= ph[a] / ps[a];
          u.beta3(a, b) *= ps[a] * om[b] / (th(bai, a) * om[bai]);
          u.gamma(a, b) *= ps[a] * om[a] / (om[b] * ph[b]);
          break;
        case Case::ComplexGalois:
          u.alpha1(a, b) *= ps[ab] * th(a, b).conj() / (ps[a] * ps[b]);
          u.alpha3(a, b) *= ph[a] * ph[b] / (ph[ab] * th(a, b));
          u.beta1(a, b) *= om[aib] * th(a, aib).conj() / (ph[a].conj() * om[b]);
          u.beta2(a, b) *= ph[a] / ps[a].conj();
          u.beta3(a, b) *= ps[a] * om[b] / (th(bai, a).conj() * om[bai]);
          u.gamma(a, b) *= ps[a] * om[a] / (ph[b] * om[b].conj());
          break;
        case Case::RealComplex: {
          const int da = G.deg(a), db = G.deg(b), gab = t.g() + da + db;
          u.alpha1(a, b) *= ps[ab] * th(a, b) / (ps[a] * cj(ps[b], da));
          u.alpha2(a, b) *= ps[b] * cj(ph[a], db) / (cj(ps[b], da) * ph[a]);
          u.alpha3(a, b) *= ph[b] * cj(ph[a], db) / (ph[ab] * th(a, b));
          u.beta1(a, b) *= om[aib] * th(a, aib) / (cj(ph[a], gab) * om[b]);
          u.beta2(a, b) *= cj(om[b], da) * ph[a] / (om[b] * cj(ps[a], gab));
          u.beta3(a, b) *= ps[a] * cj(om[b], da) / (th(bai, a) * om[bai]);
          TensorCC f = TensorCC::tensor(cj(ps[a], t.g() + db) / om[b], om[a] / ph[b]);
          u.set_gamma_cc(a, b, f * t.gamma_cc(a, b));
          break;
        }
      }
    }
  return u;
}

namespace {

void require_pentagon(const CoeffTable& t) {
  auto rep = check_pentagon(t);
  if (!rep.pass())
    throw GaugeError("input fails the pentagon equations (" + std::to_string(rep.violations.size()) +
                     " violations, first " + rep.violations.front().eq + ")");
}

struct Stepper {
  CoeffTable table;
  GaugeTuple total;

  explicit Stepper(const CoeffTable& t) : table(t), total(identity_gauge(t.kase, t.n())) {}
  GaugeTuple fresh() const { return identity_gauge(table.kase, table.n()); }
  void apply(const GaugeTuple& gt) {
    table = apply_gauge(table, gt);
    total = compose(total, gt);
  }
};

bool all_one(const Fn2& f) {
  for (int a = 0; a < f.size(); ++a)
    for (int b = 0; b < f.size(); ++b)
      if (!f(a, b).is_one()) return false;
  return true;
}

void require_normal_form(const CoeffTable& t) {
  const int n = t.n(), e = t.group.identity();
  bool ok = all_one(t.alpha1) && all_one(t.alpha3) && all_one(t.beta1) && all_one(t.beta3);
  for (int a = 0; a < n && ok; ++a) {
    ok = t.beta2(a, e).is_one() && t.beta2(e, a).is_one();
    for (int b = 0; b < n && ok; ++b)
      for (int c = 0; c < n && ok; ++c) ok = t.alpha(a, b, c).is_one();
  }
  if (!ok) throw GaugeError("table did not reduce to normal form");
}

Cyclo unit_root(const Cyclo& s, int k, const char* what) {
  if (!is_root_of_unity(s)) throw GaugeError(std::string(what) + " is not a root of unity; exact normalization needs one");
  return root_of_root_of_unity(s, k);
}

}  // namespace

Normalized normalize_split_quaternionic(const CoeffTable& t) {
  if (t.kase != Case::Split && t.kase != Case::Quaternionic) throw GaugeError("expected a split or quaternionic table");
  require_pentagon(t);
  const int n = t.n(), e = t.group.identity();
  Stepper st(t);
  GaugeTuple s1 = st.fresh();
  s1.theta = st.table.alpha3;
  st.apply(s1);
  GaugeTuple s2 = st.fresh();
  for (int a = 0; a < n; ++a) s2.psi[a] = st.table.beta2(a, e);
  st.apply(s2);
  GaugeTuple s3 = st.fresh();
  for (int a = 0; a < n; ++a) s3.omega[t.group.inv(a)] = st.table.beta1(a, e).inverse();
  st.apply(s3);
  require_normal_form(st.table);
  return {st.table, st.total};
}

Normalized normalize_galois(const CoeffTable& t) {
  if (t.kase != Case::ComplexGalois) throw GaugeError("expected a Galois table");
  require_pentagon(t);
  const int n = t.n(), e = t.group.identity();
  Stepper st(t);
  GaugeTuple s1 = st.fresh();
  s1.theta = st.table.alpha3;
  st.apply(s1);
  GaugeTuple s2 = st.fresh();
  for (int a = 0; a < n; ++a) s2.psi[a] = st.table.beta2(a, e).conj();
  st.apply(s2);
  GaugeTuple s3 = st.fresh();
  for (int a = 0; a < n; ++a) s3.omega[t.group.inv(a)] = st.table.beta1(a, e).inverse();
  st.apply(s3);
  // A constant omega = lambda multiplies gamma by conj(lambda)/lambda and fixes
  // everything else; use it to make gamma(1,1) real.
  const Cyclo g11 = st.table.gamma(e, e);
  if (!g11.is_real()) {
    const Cyclo u = g11 / exact_abs(g11);
    GaugeTuple s4 = st.fresh();
    s4.omega = Fn1(n, unit_root(u, 2, "phase of gamma(1,1)"));
    st.apply(s4);
  }
  require_normal_form(st.table);
  return {st.table, st.total};
}

Normalized normalize_realcomplex(const CoeffTable& t) {
  if (t.kase != Case::RealComplex) throw GaugeError("expected a real-complex table");
  require_pentagon(t);
  const Group& G = t.group;
  const int n = t.n(), e = G.identity(), g = t.g();
  Stepper st(t);

  // |alpha1| = 1 via a positive real theta.
  GaugeTuple s1 = st.fresh();
  try {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s1.theta(a, b) = exact_abs(st.table.alpha1(a, b)).inverse();
  } catch (const ScalarError&) {
    throw GaugeError("|alpha1| is not rational; exact normalization needs it");
  }
  st.apply(s1);

  // alpha1 = 1 via psi^2 = f with f = alpha2(a0, -)^{-1}, theta = delta^L psi / alpha1.
  if (!all_one(st.table.alpha1)) {
    int a0 = -1;
    for (int x = 0; x < n && a0 < 0; ++x)
      if (G.deg(x) == 1) a0 = x;
    GaugeTuple s2 = st.fresh();
    for (int x = 0; x < n; ++x) s2.psi[x] = unit_root(st.table.alpha2(a0, x).inverse(), 2, "alpha2");
    Fn2 dl = deltaL(G, s2.psi);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        s2.theta(x, y) = dl(x, y) / st.table.alpha1(x, y);
        if (!s2.theta(x, y).is_real()) throw GaugeError("theta from the square root step is not real");
      }
    st.apply(s2);
  }

  // beta2(-, 1) = 1 via phi.
  GaugeTuple s3 = st.fresh();
  for (int a = 0; a < n; ++a) s3.phi[a] = st.table.beta2(a, e).inverse();
  st.apply(s3);

  // beta1(-, 1) = 1 via omega.
  GaugeTuple s4 = st.fresh();
  for (int a = 0; a < n; ++a) s4.omega[G.inv(a)] = st.table.beta1(a, e).inverse();
  st.apply(s4);

  // Residual gauge (theta, psi, omega(1)) = (1, 1, c): beta3 of a conjugating
  // element scales by c^{-4} when g conjugates.
  if (g == 1) {
    int a1 = -1;
    for (int x = 0; x < n && a1 < 0; ++x)
      if (G.deg(x) == 1) a1 = x;
    const Cyclo b3 = st.table.beta3(a1, e);
    if (!b3.is_one()) {
      const Cyclo c = unit_root(b3, 4, "beta3");
      GaugeTuple s5 = st.fresh();
      for (int a = 0; a < n; ++a) {
        s5.phi[a] = c / cj(c, G.deg(a));
        s5.omega[G.inv(a)] = cj(c, g + G.deg(a)) * c / cj(c, g);
      }
      st.apply(s5);
    }
  }
  require_normal_form(st.table);
  return {st.table, st.total};
}

Normalized normalize(const CoeffTable& t) {
  switch (t.kase) {
    case Case::Split:
    case Case::Quaternionic: return normalize_split_quaternionic(t);
    case Case::RealComplex: return normalize_realcomplex(t);
    case Case::ComplexGalois: return normalize_galois(t);
  }
  throw GaugeError("unknown case");
}

TYData extract_data(const CoeffTable& t) {
  TYData d;
  d.kase = t.kase;
  d.group = t.group;
  d.g_conj = t.g_conj;
  d.chi = t.alpha2;
  d.tau = t.gamma(t.group.identity(), t.group.identity());
  validate(d);
  return d;
}

// ---------------------------------------------------------------------------
// Equivalence.

namespace {

bool same_tau(const TYData& d, const TYData& d2) { return effective_tau(d) == effective_tau(d2); }

bool chi_matches(const TYData& d, const TYData& d2, const std::vector<int>& f, bool h) {
  const int n = d.group.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d2.chi(f[a], f[b]) != cj(d.chi(a, b), h)) return false;
  return true;
}

std::optional<EquivWitness> trivial_tensorator_search(const TYData& d, const TYData& d2) {
  if (!same_tau(d, d2)) return std::nullopt;
  for (const auto& f : enumerate_isomorphisms(d.group, d2.group))
    if (chi_matches(d, d2, f, false)) {
      EquivWitness w;
      w.f = f;
      w.tensorator = identity_gauge(d.kase, d.group.size());
      return w;
    }
  return std::nullopt;
}

void require_case(const TYData& d, const TYData& d2, Case c) {
  if (d.kase != c || d2.kase != c) throw DataError("both data must be " + case_name(c));
}

}  // namespace

std::optional<EquivWitness> decide_equiv_split(const TYData& d, const TYData& d2) {
  require_case(d, d2, Case::Split);
  return trivial_tensorator_search(d, d2);
}

std::optional<EquivWitness> decide_equiv_quaternionic(const TYData& d, const TYData& d2) {
  require_case(d, d2, Case::Quaternionic);
  return trivial_tensorator_search(d, d2);
}

std::optional<EquivWitness> decide_equiv_realcomplex(const TYData& d, const TYData& d2) {
  require_case(d, d2, Case::RealComplex);
  if (d.g_conj != d2.g_conj) return std::nullopt;
  const Group& G = d.group;
  const int n = G.size(), g = d.g_conj ? 1 : 0;
  const Cyclo tau = effective_tau(d), tau2 = effective_tau(d2);
  int w0 = -1;
  for (int x = 0; x < n && w0 < 0; ++x)
    if (G.deg(x) == 1) w0 = x;
  auto even_part = [&](int x) { return G.deg(x) == 0 ? x : G.mul(x, G.inv(w0)); };
  for (const auto& f : enumerate_isomorphisms(G, d2.group))
    for (bool h : {false, true}) {
      // r = chi'(f a, f b) / chi(a, b)^h.  A tensorator with unit-modulus psi
      // and psi^2 restricting to a character kappa of A forces r = 1 on A x A,
      // r(a, x) = kappa(a)^{-+1} and r(x, a) = kappa(a) for a in A and x odd,
      // and on odd pairs r(u w0, v w0) = kappa(u) kappa(v) rho (g = id) or
      // kappa(v) / kappa(u) (g = conj).  kappa = 1 gives the conditions
      // chi' = (lambda lambda^{ab} / (lambda^a lambda^b)) chi^h, rho = lambda^4.
      auto r = [&](int a, int b) { return d2.chi(f[a], f[b]) / cj(d.chi(a, b), h); };
      Fn1 kappa(n, Cyclo(1));
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        if (G.deg(a) == 0) {
          kappa[a] = r(w0, a);
          ok = is_root_of_unity(kappa[a]).has_value();
        }
      const Cyclo rho = r(w0, w0);
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          const int da = G.deg(a), db = G.deg(b);
          Cyclo want(1);
          if (da == 0 && db == 0) want = 1;
          else if (da == 0) want = g ? kappa[a] : kappa[a].inverse();
          else if (db == 0) want = kappa[b];
          else {
            const Cyclo &ku = kappa[even_part(a)], &kv = kappa[even_part(b)];
            want = g ? kv / ku : ku * kv * rho;
          }
          ok = r(a, b) == want;
          if (ok && da == 0 && db == 0) ok = kappa[G.mul(a, b)] == kappa[a] * kappa[b];
        }
      if (!ok) continue;
      Cyclo lambda(1);
      if (!g) {
        if (tau2 != tau || !is_root_of_unity(rho)) continue;
        lambda = root_of_root_of_unity(rho, 4);
      } else {
        const Cyclo sigma = tau2 / tau;
        if (sigma == Cyclo(-1)) lambda = Cyclo::i();
        else if (!sigma.is_one()) continue;
      }
      EquivWitness w;
      w.f = f;
      w.h_conj = h;
      w.lambda = lambda;
      GaugeTuple& T = w.tensorator;
      T = identity_gauge(Case::RealComplex, n);
      for (int x = 0; x < n; ++x) {
        const int dx = G.deg(x);
        T.psi[x] = sqrt_root_of_unity(kappa[even_part(x)]) * lambda / cj(lambda, dx);
      }
      T.theta = deltaL(G, T.psi);
      for (int x = 0; x < n; ++x) {
        const int dx = G.deg(x);
        T.phi[x] = cj(T.psi[x], g + dx) * lambda / cj(lambda, dx);
        T.omega[x] = lambda / cj(T.phi[x], g);
      }
      return w;
    }
  return std::nullopt;
}

std::optional<EquivWitness> decide_equiv_galois(const TYData& d, const TYData& d2) {
  require_case(d, d2, Case::ComplexGalois);
  const Cyclo tau = effective_tau(d), tau2 = effective_tau(d2);
  Cyclo lambda(1);
  if (tau2 == -tau) lambda = Cyclo::i();
  else if (tau2 != tau) return std::nullopt;  // not reachable for validated data
  for (const auto& f : enumerate_isomorphisms(d.group, d2.group))
    for (bool h : {false, true})
      if (chi_matches(d, d2, f, h)) {
        EquivWitness w;
        w.f = f;
        w.h_conj = h;
        w.lambda = lambda;
        w.tensorator = identity_gauge(Case::ComplexGalois, d.group.size());
        w.tensorator.omega = Fn1(d.group.size(), lambda);
        return w;
      }
  return std::nullopt;
}

std::optional<EquivWitness> decide_equiv(const TYData& d, const TYData& d2) {
  if (d.kase != d2.kase) return std::nullopt;
  switch (d.kase) {
    case Case::Split: return decide_equiv_split(d, d2);
    case Case::Quaternionic: return decide_equiv_quaternionic(d, d2);
    case Case::RealComplex: return decide_equiv_realcomplex(d, d2);
    case Case::ComplexGalois: return decide_equiv_galois(d, d2);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hexagons.

namespace {

struct HexChecker {
  CheckReport rep;
  template <class T>
  void eq(const char* id, std::initializer_list<int> args, const T& l, const T& r) {
    if (l == r) return;
    std::string s = std::string(id) + " at (";
    bool first = true;
    for (int x : args) s += (first ? "" : ",") + std::to_string(x), first = false;
    rep.failures.push_back(s + "): " + l.str() + " != " + r.str());
  }
};

Cyclo dpsi(const Group& G, const Fn1& f, int a, int b) { return f[a] * f[b] / f[G.mul(a, b)]; }

}  // namespace

CheckReport check_hexagons(const TYData& d, const TYData& d2, const EquivWitness& w) {
  if (d.kase != d2.kase) return {{"data have different cases"}};
  const Group& G = d.group;
  const int n = G.size();
  const auto& T = w.tensorator;
  const auto& th = T.theta;
  const auto &ph = T.phi, &ps = T.psi, &om = T.omega;
  const auto& f = w.f;
  const int h = w.h_conj ? 1 : 0;
  auto M = [&](int x, int y) { return G.mul(x, y); };
  auto I = [&](int x) { return G.inv(x); };
  HexChecker ck;
  const Cyclo tau = effective_tau(d), tau2 = effective_tau(d2);

  switch (d.kase) {
    case Case::Split:
    case Case::Quaternionic:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) ck.eq("E26", {a, b, c}, delta2(G, th, a, b, c), Cyclo(1));
          const Cyclo chi2 = d2.chi(f[a], f[b]);
          ck.eq("E27", {a, b}, th(a, b), dpsi(G, ps, a, b));
          ck.eq("E28", {a, b}, chi2, d.chi(a, b));
          ck.eq("E29", {a, b}, th(a, b), dpsi(G, ph, a, b));
          const int aib = M(I(a), b), bai = M(b, I(a));
          ck.eq("E30", {a, b}, ph[a] * om[b], om[aib] * th(a, aib));
          ck.eq("E31", {a, b}, chi2 * ps[a], ph[a] * d.chi(a, b));
          ck.eq("E32", {a, b}, th(bai, a) * om[bai], ps[a] * om[b]);
          ck.eq("E33", {a, b}, tau * chi2 * ps[a] * om[a], tau2 * d.chi(a, b) * ph[b] * om[b]);
        }
      break;
    case Case::ComplexGalois:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const int aib = M(I(a), b), bai = M(b, I(a));
          ck.eq("E136", {a, b}, d2.chi(f[a], f[b]), cj(d.chi(a, b), h));
          ck.eq("E137", {a, b}, th(a, b), dpsi(G, ph, a, b));
          ck.eq("E138", {a, b}, ph[a] * om[b], om[aib] * th(a, aib));
          ck.eq("E139", {a, b}, ps[a], ph[a].conj());
          ck.eq("E140", {a, b}, th(bai, a) * om[bai], ps[a].conj() * om[b]);
          ck.eq("E141", {a, b}, tau2 * ph[b] * om[b], tau * ps[a] * om[a].conj());
        }
      break;
    case Case::RealComplex: {
      const int g = d.g_conj ? 1 : 0;
      const CoeffTable t = build(d), t2 = build(d2);
      const Fn2 dl = deltaL(G, ps), dr = deltaR(G, ph);
      const Cyclo S[2] = {Cyclo(1), Cyclo::i()};
      auto gam = [](const CoeffTable& x, int a, int b, int s) { return s == 0 ? x.gamma(a, b) : x.gamma_i(a, b); };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const int da = G.deg(a), db = G.deg(b), gab = g + da + db;
          const int aib = M(I(a), b), bai = M(b, I(a));
          for (int c = 0; c < n; ++c) ck.eq("E86", {a, b, c}, delta2(G, th, a, b, c), Cyclo(1));
          const Cyclo chi2 = d2.chi(f[a], f[b]);
          ck.eq("E87", {a, b}, th(a, b), dl(a, b));
          ck.eq("E88", {a, b}, chi2 * cj(ps[b], da) * ph[a], ps[b] * cj(ph[a], db) * cj(d.chi(a, b), h));
          ck.eq("E89", {a, b}, th(a, b), dr(a, b));
          ck.eq("E90", {a, b}, cj(ph[a], gab) * om[b], om[aib] * th(a, aib));
          ck.eq("E91", {a, b}, cj(chi2, db) * om[b] * cj(ps[a], gab),
                cj(om[b], da) * ph[a] * cj(d.chi(a, b), h + db));
          ck.eq("E92", {a, b}, th(bai, a) * om[bai], ps[a] * cj(om[b], da));
          TensorCC l(0, 0), r(0, 0);
          for (int s = 0; s < 2; ++s) {
            l += TensorCC::tensor(S[s] / cj(ps[a], g + db), gam(t2, f[a], f[b], s) / om[a]);
            r += TensorCC::tensor(cj(S[s], h) / om[b], cj(gam(t, a, b, s), h) / ph[b]);
          }
          ck.eq("E93", {a, b}, l, r);
        }
      break;
    }
  }
  return ck.rep;
}

// ---------------------------------------------------------------------------
// Classification.

namespace {

std::vector<TYData> with_signs(Case c, const Group& G, bool g_conj, const Fn2& chi, const Cyclo& tau) {
  return {TYData{c, G, g_conj, chi, tau}, TYData{c, G, g_conj, chi, -tau}};
}

}  // namespace

Classification classify(Case c, const std::vector<int>& orders, std::optional<bool> g_filter) {
  long size = 1;
  for (int o : orders) size *= o;
  if (size > 16) throw DataError("classification is limited to groups of order at most 16");
  Classification out;
  switch (c) {
    case Case::Split:
    case Case::Quaternionic: {
      const Group A = Group::abelian(orders);
      if (c == Case::Quaternionic && A.exponent() > 2)
        throw DataError("A must be an elementary abelian 2-group");
      const long scale = (c == Case::Quaternionic ? 4 : 1) * A.size();
      const Cyclo tau = sqrt_rational(Rational(1, scale));
      for (const auto& b : enumerate_bichars(A, Flavor::RealSymmetric))
        for (auto& d : with_signs(c, A, false, b.chi, tau)) out.admissible.push_back(d);
      break;
    }
    case Case::RealComplex: {
      const Group A = Group::abelian(orders);
      const Group G = Group::dihedral(orders);
      const Cyclo tau = sqrt_rational(Rational(1, 2 * G.size()));
      for (bool g : {false, true}) {
        if (g_filter && *g_filter != g) continue;
        for (const auto& b : enumerate_bichars(A, g ? Flavor::Hermitian : Flavor::ComplexSymmetric))
          for (const auto& bc : extend_to_bicocycle(G, b.chi, g))
            for (auto& d : with_signs(c, G, g, bc.chi, tau)) out.admissible.push_back(d);
      }
      break;
    }
    case Case::ComplexGalois: {
      const Group A = Group::abelian(orders);
      const Cyclo tau = sqrt_rational(Rational(1, A.size()));
      for (const auto& b : enumerate_bichars(A, Flavor::SkewSymmetric))
        for (auto& d : with_signs(c, A, false, b.chi, tau)) out.admissible.push_back(d);
      break;
    }
  }
  for (const auto& d : out.admissible) {
    bool placed = false;
    for (auto& cls : out.classes)
      if (decide_equiv(cls.representative, d)) {
        ++cls.members;
        placed = true;
        break;
      }
    if (!placed) out.classes.push_back({d, 1});
  }
  return out;
}

}  // namespace ty
