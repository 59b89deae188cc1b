// Exact scalars: the cyclotomic field Q(zeta_M), quaternions over its real
// subfield, and the tensor algebra C (x)_R C.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ty {

using Rational = mpq_class;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
struct Field;
const Field& field(int M);
}  // namespace detail

// Element of Q(zeta_M) in the power basis of Q[x]/Phi_M(x).  Operands with
// different moduli are promoted to the lcm before combining.
class Cyclo {
 public:
  Cyclo();
  Cyclo(long n);  // NOLINT: implicit from integers is intended
  explicit Cyclo(const Rational& q, int M = 1);

  static Cyclo zeta(int M, long k = 1);
  static Cyclo i();

  int modulus() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclo promote(int L) const;
  // The same value in the smallest Q(zeta_d) containing it (d = 1 for rationals).
  Cyclo minimal() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_real() const { return *this == conj(); }
  Rational rational() const;  // throws unless is_rational()

  Cyclo conj() const;
  Cyclo conj_pow(int n) const { return (n & 1) ? conj() : *this; }
  Cyclo galois(long t) const;  // zeta -> zeta^t, gcd(t, M) = 1
  Cyclo inverse() const;
  Cyclo real_part() const;
  Cyclo imag_part() const;

  std::complex<double> embed() const;
  std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  Cyclo operator-() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

 private:
  Cyclo(const detail::Field* f, std::vector<Rational> c);
  const detail::Field* f_;
  std::vector<Rational> c_;
  friend struct CycloAccess;
};

Cyclo conj(const Cyclo& s);
Cyclo pow(const Cyclo& s, long e);

// sqrt(d) inside Q(zeta_M); requires 4d | M.  Built from the quadratic Gauss
// sum over Z/4d, sign chosen so the value is positive under zeta -> e^{2 pi i/M}.
Cyclo sqrt_int(long d, int M);
// sqrt of a nonnegative rational in the smallest field Q(zeta_{4s}), s the
// squarefree part of the radicand.
Cyclo sqrt_rational(const Rational& q);

struct RootOfUnity {
  int order;
  int exponent;
  bool operator==(const RootOfUnity&) const = default;
};
std::optional<RootOfUnity> is_root_of_unity(const Cyclo& s);

// Square root of a root of unity, exact (halves the exponent in a doubled modulus).
Cyclo sqrt_root_of_unity(const Cyclo& s);
// n-th root of a root of unity.
Cyclo root_of_root_of_unity(const Cyclo& s, int n);
// |s| when s times its conjugate is the square of a rational.
Cyclo exact_abs(const Cyclo& s);

// Quaternion w + xi + yj + zk with real components.
struct Quat {
  Cyclo w, x, y, z;

  Quat() = default;
  Quat(Cyclo w_, Cyclo x_ = 0, Cyclo y_ = 0, Cyclo z_ = 0)  // NOLINT
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static Quat from_complex(const Cyclo& c) { return {c.real_part(), c.imag_part()}; }
  static Quat unit(int k);  // 1, i, j, k for k = 0..3

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool components_real() const;
  Cyclo norm() const { return w * w + x * x + y * y + z * z; }
  Quat inverse() const;
  std::string str() const;

  friend Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Quat operator*(const Quat& a, const Quat& b);
  Quat& operator+=(const Quat& o) { return *this = *this + o; }
  friend bool operator==(const Quat& a, const Quat& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }
};

Quat quat_mul(const Quat& a, const Quat& b);
Quat quat_conj(const Quat& a);
Cyclo quat_re(const Quat& a);

// 1 (x) p + i (x) q in C (x)_R C.
struct TensorCC {
  Cyclo p, q;

  TensorCC() = default;
  TensorCC(Cyclo p_, Cyclo q_) : p(std::move(p_)), q(std::move(q_)) {}
  static TensorCC one() { return {1, 0}; }
  // u (x) v for complex u, v.
  static TensorCC tensor(const Cyclo& u, const Cyclo& v);

  TensorCC conj_left(int n = 1) const { return (n & 1) ? TensorCC{p, -q} : *this; }
  TensorCC conj_right(int n = 1) const { return (n & 1) ? TensorCC{p.conj(), q.conj()} : *this; }
  TensorCC scale(const Cyclo& v) const { return {p * v, q * v}; }  // times 1 (x) v
  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  TensorCC inverse() const;
  std::string str() const;

  friend TensorCC operator+(const TensorCC& a, const TensorCC& b) { return {a.p + b.p, a.q + b.q}; }
  friend TensorCC operator-(const TensorCC& a, const TensorCC& b) { return {a.p - b.p, a.q - b.q}; }
  friend TensorCC operator*(const TensorCC& a, const TensorCC& b);
  TensorCC& operator+=(const TensorCC& o) { return *this = *this + o; }
  friend bool operator==(const TensorCC& a, const TensorCC& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const TensorCC& a, const TensorCC& b) { return !(a == b); }
};

TensorCC tensor_mul(const TensorCC& a, const TensorCC& b);

// Text form used by the CLI: "-1/2", "z(8)^3", "1/4*sqrt(2)", "1 + z(4)".
Cyclo parse_cyclo(const std::string& text);

}  // namespace ty
