#include "ty/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ty {
namespace detail {

struct Field {
  int M = 1;
  int phi = 1;
  std::vector<long long> poly;             // Phi_M, monic, degree phi
  std::vector<std::vector<Rational>> xpow;  // x^k mod Phi_M for 0 <= k < M
  std::vector<int> units;                   // (Z/M)^x
};

namespace {

using Poly = std::vector<long long>;

Poly poly_div_exact(Poly num, const Poly& den) {
  // den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  Poly q(nn - dn + 1, 0);
  for (int k = nn - dn; k >= 0; --k) {
    long long c = num[k + dn];
    q[k] = c;
    if (c == 0) continue;
    for (int t = 0; t <= dn; ++t) num[k + t] -= c * den[t];
  }
  return q;
}

Poly cyclotomic_poly(int M, std::map<int, Poly>& memo) {
  if (auto it = memo.find(M); it != memo.end()) return it->second;
  Poly p(M + 1, 0);
  p[0] = -1;
  p[M] = 1;
  for (int d = 1; d < M; ++d)
    if (M % d == 0) p = poly_div_exact(p, cyclotomic_poly(d, memo));
  memo[M] = p;
  return p;
}

std::unique_ptr<Field> make_field(int M) {
  auto f = std::make_unique<Field>();
  std::map<int, Poly> memo;
  f->M = M;
  f->poly = cyclotomic_poly(M, memo);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  const int phi = f->phi;
  f->xpow.assign(M, std::vector<Rational>(phi));
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (int k = 0; k < M; ++k) {
    f->xpow[k] = cur;
    // multiply by x and reduce with the monic Phi_M
    Rational top = cur[phi - 1];
    for (int t = phi - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (int t = 0; t < phi; ++t) cur[t] -= top * static_cast<long>(f->poly[t]);
  }
  for (int t = 1; t <= M; ++t)
    if (std::gcd(t, M) == 1) f->units.push_back(t % M);
  return f;
}

}  // namespace

const Field& field(int M) {
  if (M <= 0) throw ScalarError("cyclotomic modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[M];
  if (!slot) slot = make_field(M);
  return *slot;
}

}  // namespace detail

namespace {

int lcm_int(int a, int b) { return std::lcm(a, b); }

void add_scaled(std::vector<Rational>& acc, const std::vector<Rational>& v, const Rational& s) {
  for (size_t t = 0; t < v.size(); ++t)
    if (sgn(v[t]) != 0) acc[t] += s * v[t];
}

}  // namespace

namespace {
const detail::Field* rationals() {
  static const detail::Field* q = &detail::field(1);
  return q;
}
}  // namespace

Cyclo::Cyclo() : f_(rationals()), c_(1) {}
Cyclo::Cyclo(long n) : f_(rationals()), c_(1) { c_[0] = n; }
Cyclo::Cyclo(const Rational& q, int M) : f_(&detail::field(M)), c_(f_->phi) {
  c_[0] = q;
  c_[0].canonicalize();
}
Cyclo::Cyclo(const detail::Field* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}

int Cyclo::modulus() const { return f_->M; }

Cyclo Cyclo::zeta(int M, long k) {
  const auto& f = detail::field(M);
  long e = ((k % M) + M) % M;
  return Cyclo(&f, f.xpow[e]);
}

Cyclo Cyclo::i() { return zeta(4, 1); }

Cyclo Cyclo::promote(int L) const {
  if (L == f_->M) return *this;
  if (L % f_->M != 0) throw ScalarError("promote: target modulus is not a multiple");
  const auto& g = detail::field(L);
  const int s = L / f_->M;
  std::vector<Rational> out(g.phi);
  for (int k = 0; k < f_->phi; ++k)
    if (sgn(c_[k]) != 0) add_scaled(out, g.xpow[(k * s) % L], c_[k]);
  return Cyclo(&g, std::move(out));
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Cyclo::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

Rational Cyclo::rational() const {
  if (!is_rational()) throw ScalarError("value is not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::galois(long t) const {
  const int M = f_->M;
  long tt = ((t % M) + M) % M;
  if (std::gcd(tt, static_cast<long>(M)) != 1 && M > 1) throw ScalarError("galois: exponent not a unit");
  std::vector<Rational> out(f_->phi);
  for (int k = 0; k < f_->phi; ++k)
    if (sgn(c_[k]) != 0) add_scaled(out, f_->xpow[(k * tt) % M], c_[k]);
  return Cyclo(f_, std::move(out));
}

// Smallest d | M with the value in Q(zeta_d): fixed by every zeta -> zeta^t
// with t = 1 mod d, then coordinates by elimination against the promoted basis.
Cyclo Cyclo::minimal() const {
  const int M = f_->M;
  if (is_rational()) return Cyclo(c_[0]);
  for (int d = 2; d < M; ++d) {
    if (M % d != 0 || d % 4 == 2) continue;
    const auto& g = detail::field(d);
    if (g.phi >= f_->phi) continue;
    bool fixed = true;
    for (int t : f_->units)
      if (t % d == 1 % d && !(galois(t) == *this)) {
        fixed = false;
        break;
      }
    if (!fixed) continue;
    // Columns: promoted zeta_d^k, k < phi(d); augmented with this value.
    const int rows = f_->phi, cols = g.phi;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (int k = 0; k < cols; ++k) {
      const Cyclo b = zeta(d, k).promote(M);
      for (int r = 0; r < rows; ++r) a[r][k] = b.c_[r];
    }
    for (int r = 0; r < rows; ++r) a[r][cols] = c_[r];
    int piv = 0;
    std::vector<int> where(cols, -1);
    for (int k = 0; k < cols && piv < rows; ++k) {
      int sel = -1;
      for (int r = piv; r < rows && sel < 0; ++r)
        if (sgn(a[r][k]) != 0) sel = r;
      if (sel < 0) continue;
      std::swap(a[sel], a[piv]);
      for (int r = 0; r < rows; ++r) {
        if (r == piv || sgn(a[r][k]) == 0) continue;
        const Rational f = a[r][k] / a[piv][k];
        for (int c = k; c <= cols; ++c) a[r][c] -= f * a[piv][c];
      }
      where[k] = piv++;
    }
    std::vector<Rational> out(cols);
    for (int k = 0; k < cols; ++k)
      if (where[k] >= 0) out[k] = a[where[k]][cols] / a[where[k]][k];
    return Cyclo(&g, std::move(out));
  }
  return *this;
}

Cyclo Cyclo::conj() const { return f_->M <= 2 ? *this : galois(f_->M - 1); }

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (is_rational()) return Cyclo(&*f_, [&] {
      std::vector<Rational> v(f_->phi);
      v[0] = 1 / c_[0];
      return v;
    }());
  int nz = 0, k0 = 0;
  for (int k = 0; k < f_->phi; ++k)
    if (sgn(c_[k]) != 0) ++nz, k0 = k;
  if (nz == 1) {  // c x^k has inverse c^{-1} x^{M-k}
    Cyclo r(f_, f_->xpow[(f_->M - k0) % f_->M]);
    Rational s = 1 / c_[k0];
    for (auto& q : r.c_) q *= s;
    return r;
  }
  // product of the other Galois conjugates, divided by the norm
  Cyclo prod(Rational(1), f_->M);
  for (int t : f_->units)
    if (t != 1) prod *= galois(t);
  Cyclo n = *this * prod;
  Rational norm = n.rational();
  for (auto& q : prod.c_) q /= norm;
  return prod;
}

Cyclo Cyclo::real_part() const {
  Cyclo r = *this + conj();
  for (auto& q : r.c_) q /= 2;
  return r;
}

Cyclo Cyclo::imag_part() const {
  // (s - conj s) / (2i) = (s - conj s) * (-i) / 2
  Cyclo d = (*this - conj()) * Cyclo::zeta(4, 3);
  for (auto& q : d.c_) q /= 2;
  return d;
}

std::complex<double> Cyclo::embed() const {
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> s = 0;
  for (int k = 0; k < f_->phi; ++k)
    if (sgn(c_[k]) != 0) s += c_[k].get_d() * std::polar(1.0, two_pi * k / f_->M);
  return s;
}

std::string Cyclo::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < f_->phi; ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational q = c_[k];
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    q = abs(q);
    first = false;
    if (k == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << "z(" << f_->M << ")";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.f_ != f_) {
    int L = lcm_int(f_->M, o.f_->M);
    *this = promote(L);
    Cyclo b = o.promote(L);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    return *this;
  }
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.f_ != f_) return *this += -o;
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  // Rationals live in every field; scale without promoting.
  if (b.is_rational()) {
    if (b.c_[0] == 1) return a;
    Cyclo r = a;
    if (sgn(b.c_[0]) == 0) return Cyclo(Rational(0), a.f_->M);
    for (auto& q : r.c_) q *= b.c_[0];
    return r;
  }
  if (a.is_rational()) return b * a;
  if (a.f_ != b.f_) {
    int L = lcm_int(a.f_->M, b.f_->M);
    return a.promote(L) * b.promote(L);
  }
  const auto* f = a.f_;
  if (b.is_rational()) {
    Cyclo r = a;
    for (auto& q : r.c_) q *= b.c_[0];
    return r;
  }
  if (a.is_rational()) return b * a;
  const int M = f->M, phi = f->phi;
  std::vector<Rational> acc(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (sgn(b.c_[j]) != 0) acc[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> out(acc.begin(), acc.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k)
    if (sgn(acc[k]) != 0) add_scaled(out, f->xpow[k % M], acc[k]);
  return Cyclo(f, std::move(out));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  int L = lcm_int(a.f_->M, b.f_->M);
  return a.promote(L).c_ == b.promote(L).c_;
}

Cyclo conj(const Cyclo& s) { return s.conj(); }

Cyclo pow(const Cyclo& s, long e) {
  if (e < 0) return pow(s.inverse(), -e);
  Cyclo r(Rational(1), s.modulus()), b = s;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Cyclo sqrt_int(long d, int M) {
  if (d <= 0) throw ScalarError("sqrt_int: radicand must be positive");
  if (M % (4 * d) != 0) throw ScalarError("sqrt_int: modulus mismatch, need 4d | M");
  const long N = 4 * d;
  Cyclo g(Rational(0), static_cast<int>(N));
  for (long k = 0; k < N; ++k) g += Cyclo::zeta(static_cast<int>(N), (k * k) % N);
  // g = (1 + i) * 2 * sqrt(d)
  Cyclo r = g / (Cyclo(2) * (Cyclo(1) + Cyclo::i()));
  r = r.promote(M);
  double v = r.embed().real();
  if (std::abs(v) <= 1e-6) throw ScalarError("sqrt_int: numeric sign selection failed");
  return v > 0 ? r : -r;
}

Cyclo sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) throw ScalarError("sqrt_rational: negative radicand");
  if (sgn(q) == 0) return Cyclo(0);
  // sqrt(p/r) = sqrt(p r) / r ; split p r = k^2 s with s squarefree
  mpz_class n = q.get_num() * q.get_den();
  mpz_class k = 1, s = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int t = 0; t < e / 2; ++t) k *= p;
    if (e % 2) s *= p;
  }
  s *= n;
  Rational scale(k, q.get_den());
  scale.canonicalize();
  if (s == 1) return Cyclo(scale);
  long sd = s.get_si();
  return sqrt_int(sd, static_cast<int>(4 * sd)) * Cyclo(scale);
}

std::optional<RootOfUnity> is_root_of_unity(const Cyclo& s) {
  const int L = std::lcm(2, s.modulus());
  if (s.is_zero()) return std::nullopt;
  for (int j = 0; j < L; ++j) {
    if (Cyclo::zeta(L, j) == s) {
      int g = std::gcd(j, L);
      return RootOfUnity{L / g, j / g};
    }
  }
  return std::nullopt;
}

Cyclo root_of_root_of_unity(const Cyclo& s, int n) {
  auto r = is_root_of_unity(s);
  if (!r) throw ScalarError("not a root of unity: " + s.str());
  // zeta_o^e = zeta_{n o}^{n e}; take zeta_{n o}^e
  return Cyclo::zeta(n * r->order, r->exponent);
}

Cyclo sqrt_root_of_unity(const Cyclo& s) { return root_of_root_of_unity(s, 2); }

Cyclo exact_abs(const Cyclo& s) {
  Cyclo n = s * s.conj();
  if (!n.is_rational()) throw ScalarError("exact_abs: norm is not rational");
  Cyclo r = sqrt_rational(n.rational());
  if (!r.is_rational()) throw ScalarError("exact_abs: |" + s.str() + "| is not rational");
  return r;
}

Quat Quat::unit(int k) {
  switch (k) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, 0, 0};
    case 2: return {0, 0, 1, 0};
    case 3: return {0, 0, 0, 1};
  }
  throw ScalarError("quaternion unit index out of range");
}

bool Quat::components_real() const { return w.is_real() && x.is_real() && y.is_real() && z.is_real(); }

Quat Quat::inverse() const {
  Cyclo n = norm();
  if (n.is_zero()) throw ScalarError("quaternion inverse of zero");
  Cyclo ni = n.inverse();
  return {w * ni, -x * ni, -y * ni, -z * ni};
}

std::string Quat::str() const {
  return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

namespace {

// Products of components skip zeros; most quaternions here have one or two
// nonzero entries.
void mac(Cyclo& acc, const Cyclo& a, const Cyclo& b, bool neg) {
  if (a.is_zero() || b.is_zero()) return;
  if (neg) acc -= a * b;
  else acc += a * b;
}

}  // namespace

Quat operator*(const Quat& a, const Quat& b) {
  Quat r{0, 0, 0, 0};
  mac(r.w, a.w, b.w, false), mac(r.w, a.x, b.x, true), mac(r.w, a.y, b.y, true), mac(r.w, a.z, b.z, true);
  mac(r.x, a.w, b.x, false), mac(r.x, a.x, b.w, false), mac(r.x, a.y, b.z, false), mac(r.x, a.z, b.y, true);
  mac(r.y, a.w, b.y, false), mac(r.y, a.x, b.z, true), mac(r.y, a.y, b.w, false), mac(r.y, a.z, b.x, false);
  mac(r.z, a.w, b.z, false), mac(r.z, a.x, b.y, false), mac(r.z, a.y, b.x, true), mac(r.z, a.z, b.w, false);
  return r;
}

Quat quat_mul(const Quat& a, const Quat& b) { return a * b; }
Quat quat_conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }
Cyclo quat_re(const Quat& a) { return a.w; }

TensorCC TensorCC::tensor(const Cyclo& u, const Cyclo& v) { return {u.real_part() * v, u.imag_part() * v}; }

TensorCC operator*(const TensorCC& a, const TensorCC& b) {
  return {a.p * b.p - a.q * b.q, a.p * b.q + a.q * b.p};
}

TensorCC tensor_mul(const TensorCC& a, const TensorCC& b) { return a * b; }

TensorCC TensorCC::inverse() const {
  // u (x) v -> u v and u (x) v -> conj(u) v are the two ring maps to C
  Cyclo i = Cyclo::i();
  Cyclo A = p + i * q, B = p - i * q;
  if (A.is_zero() || B.is_zero()) throw ScalarError("TensorCC inverse of a zero divisor");
  Cyclo a = A.inverse(), b = B.inverse();
  Cyclo half(Rational(1, 2));
  return {(a + b) * half, (a - b) * half * Cyclo::zeta(4, 3)};
}

std::string TensorCC::str() const { return "1(x)[" + p.str() + "] + i(x)[" + q.str() + "]"; }

namespace {

struct Parser {
  std::string s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ScalarError("cannot parse scalar '" + s + "': " + why);
  }
  long integer() {
    ws();
    size_t st = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos) fail("expected integer");
    return std::stol(s.substr(st, pos - st));
  }
  Cyclo factor() {
    ws();
    if (s.compare(pos, 2, "z(") == 0) {
      pos += 2;
      long n = integer();
      if (!eat(')')) fail("expected ')'");
      long k = 1;
      if (eat('^')) {
        bool neg = eat('-');
        k = integer();
        if (neg) k = -k;
      }
      return Cyclo::zeta(static_cast<int>(n), k);
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      long n = integer();
      if (!eat(')')) fail("expected ')'");
      return sqrt_rational(Rational(n));
    }
    if (s.compare(pos, 1, "i") == 0) {
      ++pos;
      return Cyclo::i();
    }
    long n = integer();
    return Cyclo(n);
  }
  Cyclo term() {
    Cyclo v = factor();
    while (true) {
      if (eat('*')) v *= factor();
      else if (eat('/')) v /= factor();
      else return v;
    }
  }
  Cyclo expr() {
    ws();
    bool neg = eat('-');
    Cyclo v = term();
    if (neg) v = -v;
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else break;
    }
    ws();
    if (pos != s.size()) fail("trailing characters");
    return v;
  }
};

}  // namespace

Cyclo parse_cyclo(const std::string& text) {
  Parser p{text};
  return p.expr();
}

}  // namespace ty
