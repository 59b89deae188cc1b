#include "ty/category_data.hpp"

#include <numeric>

namespace ty {

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"alpha", "alpha1", "alpha2", "alpha3",
                                              "beta1", "beta2",  "beta3",  "gamma"};
  return names;
}

Fn2& CoeffTable::table(const std::string& name) {
  if (name == "alpha1") return alpha1;
  if (name == "alpha2") return alpha2;
  if (name == "alpha3") return alpha3;
  if (name == "beta1") return beta1;
  if (name == "beta2") return beta2;
  if (name == "beta3") return beta3;
  if (name == "gamma") return gamma;
  if (name == "gamma_i") return gamma_i;
  throw DataError("unknown two-argument table '" + name + "'");
}

const Fn2& CoeffTable::table(const std::string& name) const {
  return const_cast<CoeffTable*>(this)->table(name);
}

bool CoeffTable::operator==(const CoeffTable& o) const {
  return kase == o.kase && group == o.group && g_conj == o.g_conj && alpha == o.alpha && alpha1 == o.alpha1 &&
         alpha2 == o.alpha2 && alpha3 == o.alpha3 && beta1 == o.beta1 && beta2 == o.beta2 && beta3 == o.beta3 &&
         gamma == o.gamma && gamma_i == o.gamma_i;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DataError(msg);
}

void check_tau(const Cyclo& tau, long scale, const std::string& msg) {
  require(!tau.is_zero() && (tau * tau * Cyclo(scale)).is_one(), msg);
  require(tau.is_real(), "tau must be real");
}

void check_abelian(const Group& A) {
  require(!A.graded() && !A.from_raw_table(), "group must be an abelian group given by cyclic orders");
}

void check_bichar(const Group& A, const Fn2& chi, Flavor f) {
  require(chi.size() == A.size(), "chi table size does not match the group");
  auto rep = check_flavor(Bicharacter{A, chi, f});
  require(rep.ok(), "chi is not a " + flavor_name(f) + " bicharacter: " + (rep.ok() ? "" : rep.failures.front()));
  require(is_nondegenerate(A, chi), "chi is degenerate");
}

Fn2 promoted(Fn2 t, int M) {
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) t(a, b) = t(a, b).promote(std::lcm(M, t(a, b).modulus()));
  return t;
}

void promote_all(CoeffTable& t, int M) {
  const int n = t.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.alpha(a, b, c) = t.alpha(a, b, c).promote(std::lcm(M, t.alpha(a, b, c).modulus()));
  for (const auto& name : table_names())
    if (name != "alpha") t.table(name) = promoted(t.table(name), M);
  t.gamma_i = promoted(t.gamma_i, M);
}

int chi_modulus(const Fn2& chi) {
  int M = 1;
  for (int a = 0; a < chi.size(); ++a)
    for (int b = 0; b < chi.size(); ++b) {
      auto r = is_root_of_unity(chi(a, b));
      M = std::lcm(M, r ? r->order : chi(a, b).modulus());
    }
  return M;
}

}  // namespace

void validate(const TYData& d) {
  const Group& G = d.group;
  const long n = G.size();
  switch (d.kase) {
    case Case::Split:
      check_abelian(G);
      check_bichar(G, d.chi, Flavor::ComplexSymmetric);
      require(d.tau.has_value(), "split data needs tau");
      check_tau(*d.tau, n, "τ²·|A| ≠ 1");
      break;
    case Case::Quaternionic:
      check_abelian(G);
      require(G.exponent() <= 2, "A must be an elementary abelian 2-group");
      check_bichar(G, d.chi, Flavor::RealSymmetric);
      require(d.tau.has_value(), "quaternionic data needs tau");
      check_tau(*d.tau, 4 * n, "τ²·4|A| ≠ 1");
      break;
    case Case::RealComplex: {
      require(G.is_dihedral(), "G must be a generalized dihedral group");
      require(d.chi.size() == G.size(), "chi table size does not match the group");
      auto rep = check_bicocycle(Bicocycle{G, d.g_conj, d.chi});
      require(rep.ok(), "chi is not a g-symmetric bicocycle: " + (rep.ok() ? "" : rep.failures.front()));
      require(is_nondegenerate(G, d.chi), "restriction of chi to A is degenerate");
      require(d.tau.has_value(), "real-complex data needs tau");
      check_tau(*d.tau, 2 * n, "τ²·2|G| ≠ 1");
      break;
    }
    case Case::ComplexGalois:
      check_abelian(G);
      check_bichar(G, d.chi, Flavor::SkewSymmetric);
      if (d.tau) check_tau(*d.tau, n, "τ²·|A| ≠ 1");
      break;
  }
}

Cyclo effective_tau(const TYData& d) {
  if (d.tau) return *d.tau;
  if (d.kase != Case::ComplexGalois) throw DataError("tau missing");
  return sqrt_rational(Rational(1, d.group.size()));
}

int field_modulus(const TYData& d) {
  int M = chi_modulus(d.chi);
  M = std::lcm(M, effective_tau(d).modulus());
  if (d.kase == Case::RealComplex) M = std::lcm(M, 4);
  return M;
}

CoeffTable trivial_table(Case c, const Group& G, bool g_conj) {
  CoeffTable t;
  t.kase = c;
  t.group = G;
  t.g_conj = c == Case::RealComplex && g_conj;
  const int n = G.size();
  t.alpha = Fn3(n);
  t.alpha1 = t.alpha2 = t.alpha3 = t.beta1 = t.beta2 = t.beta3 = t.gamma = Fn2(n);
  t.gamma_i = Fn2(n, Cyclo(0));
  return t;
}

CoeffTable build_split(const Group& A, const Fn2& chi, const Cyclo& tau) {
  TYData d{Case::Split, A, false, chi, tau};
  validate(d);
  CoeffTable t = trivial_table(Case::Split, A, false);
  t.alpha2 = t.beta2 = chi;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) t.gamma(a, b) = tau / chi(a, b);
  promote_all(t, field_modulus(d));
  return t;
}

CoeffTable build_quaternionic(const Group& A, const Fn2& chi, const Cyclo& tau) {
  TYData d{Case::Quaternionic, A, false, chi, tau};
  validate(d);
  CoeffTable t = trivial_table(Case::Quaternionic, A, false);
  t.alpha2 = t.beta2 = chi;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) t.gamma(a, b) = tau / chi(a, b);
  promote_all(t, field_modulus(d));
  return t;
}

CoeffTable build_realcomplex(const Group& G, bool g_conj, const Fn2& chi, const Cyclo& tau) {
  TYData d{Case::RealComplex, G, g_conj, chi, tau};
  validate(d);
  CoeffTable t = trivial_table(Case::RealComplex, G, g_conj);
  const int g = g_conj ? 1 : 0;
  const Cyclo minus_i = -Cyclo::i();  // conj of the basis element i
  t.alpha2 = chi;
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) {
      t.beta2(a, b) = cj(chi(a, b), G.deg(b));
      Cyclo base = tau / cj(chi(a, b), g + G.deg(b));
      t.gamma(a, b) = base;
      t.gamma_i(a, b) = cj(minus_i, g + G.deg(a)) * base;
    }
  promote_all(t, field_modulus(d));
  return t;
}

CoeffTable build_galois(const Group& A, const Fn2& chi, std::optional<Cyclo> tau) {
  TYData d{Case::ComplexGalois, A, false, chi, tau};
  validate(d);
  const Cyclo tv = effective_tau(d);
  CoeffTable t = trivial_table(Case::ComplexGalois, A, false);
  t.alpha2 = t.beta2 = chi;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) t.gamma(a, b) = chi(a, b) * tv;
  promote_all(t, field_modulus(d));
  return t;
}

CoeffTable build(const TYData& d) {
  switch (d.kase) {
    case Case::Split: return build_split(d.group, d.chi, d.tau.value_or(Cyclo(0)));
    case Case::Quaternionic: return build_quaternionic(d.group, d.chi, d.tau.value_or(Cyclo(0)));
    case Case::RealComplex: return build_realcomplex(d.group, d.g_conj, d.chi, d.tau.value_or(Cyclo(0)));
    case Case::ComplexGalois: return build_galois(d.group, d.chi, d.tau);
  }
  throw DataError("unknown case");
}

CoeffTable perturb(const CoeffTable& t, const std::string& which, const std::vector<int>& idx, const Cyclo& factor) {
  if (factor.is_zero()) throw DataError("perturbation factor must be nonzero");
  const int n = t.n();
  const size_t want = which == "alpha" ? 3 : 2;
  if (idx.size() != want) throw DataError("table '" + which + "' takes " + std::to_string(want) + " indices");
  for (int i : idx)
    if (i < 0 || i >= n) throw DataError("index out of range");
  CoeffTable out = t;
  if (which == "alpha") {
    out.alpha(idx[0], idx[1], idx[2]) *= factor;
    return out;
  }
  out.table(which)(idx[0], idx[1]) *= factor;
  if (which == "gamma" && t.kase == Case::RealComplex) out.gamma_i(idx[0], idx[1]) *= factor;
  return out;
}

}  // namespace ty
