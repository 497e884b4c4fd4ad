#pragma once

// Exact elements of Q(zeta_n).
//
// A value of order n is stored as its phi(n) rational coordinates in the
// power basis 1, zeta_n, ..., zeta_n^(phi(n)-1), reduced modulo the n-th
// cyclotomic polynomial.  Mixed-order arithmetic embeds both operands into
// the lcm order.  Arithmetic never shrinks the order; minimized() finds the
// smallest m with the value in Q(zeta_m) and is used for printing and
// serialisation.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lietab {

using Rational = mpq_class;

class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& v) : order_(1), coeffs_{v} {}
  // Takes ownership of coefficients already reduced for order n.
  Cyclotomic(int n, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(int n, long long k);
  // Sum of m_k zeta_n^k over an unreduced exponent vector of length n.
  static Cyclotomic from_exponents(int n, const std::vector<long long>& mult);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(const Rational& r) const;
  // Exact division by a nonzero rational.
  Cyclotomic operator/(const Rational& r) const;

  // zeta -> zeta^a, gcd(a, order) = 1.
  Cyclotomic galois(long long a) const;
  Cyclotomic conjugate() const { return galois(-1); }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  bool is_real() const { return *this == conjugate(); }

  // Same value written over Q(zeta_m) for a multiple m of the order.
  Cyclotomic embed(int m) const;
  // Same value in the smallest cyclotomic field containing it.
  Cyclotomic minimized() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // Total order: compares coordinates after embedding both into the lcm order.
  int compare(const Cyclotomic& o) const;
  bool operator<(const Cyclotomic& o) const { return compare(o) < 0; }

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

enum class CycOp { add, sub, mul };
Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op);

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

}  // namespace lietab
