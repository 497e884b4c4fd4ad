#pragma once

// Exact arithmetic in small finite fields F_{p^k}.
//
// Elements are stored as a dense base-p integer: the coefficient of x^i of
// the polynomial representative is the i-th base-p digit.  Fields of order
// at most 2^12 use log/antilog tables for multiplication; larger fields fall
// back to polynomial multiplication modulo the defining polynomial.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lietab {

using Code = std::uint32_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrimePowerField;
using FieldPtr = std::shared_ptr<const PrimePowerField>;

class PrimePowerField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 12;

  // Builds F_{p^k} with the smallest irreducible monic modulus, ordering
  // candidates by the base-p integer formed from their lower coefficients.
  static FieldPtr make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  // Monic modulus, coefficients from x^0 up to x^k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code minus_one() const { return p_ - 1; }
  Code from_int(long long v) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, long long e) const;
  // x -> x^(p^m)
  Code frobenius(Code a, long long m) const;
  // Trace down to the prime field; the result is a code in [0, p).
  Code trace(Code a) const;
  // Multiplicative order of a nonzero element.
  std::uint64_t mult_order(Code a) const;

  std::vector<std::uint32_t> digits(Code a) const;
  Code from_digits(const std::vector<std::uint32_t>& d) const;
  std::string to_string(Code a) const;

  bool contains(Code a) const { return a < q_; }

 private:
  PrimePowerField(std::uint32_t p, std::uint32_t k);
  Code poly_mul(Code a, Code b) const;
  void find_generator();
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Code generator_ = 0;
  // log_[a] for a != 0; exp_ has length 2(q-1) so log sums need no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
  // Digit-wise addition table, present only for q <= 256.
  std::vector<Code> add_table_;
  std::vector<std::uint32_t> pow_p_;
};

// A field element bound to its field.  Checked arithmetic for callers outside
// the hot loops; the enumeration code works on raw codes instead.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(long long e) const;
  FieldElement frobenius(long long m) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Code code_;
};

enum class FieldOp { add, sub, mul, div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

// F_q sitting inside F_{q^2}, with the inclusion map realised by a root of
// the base modulus in the extension.
struct FieldTower {
  FieldPtr base;
  FieldPtr ext;
  std::vector<Code> embed;  // base code -> ext code

  static FieldTower make(std::uint32_t p, std::uint32_t k);
  Code lift(Code base_code) const { return embed.at(base_code); }
  // Inverse of lift on the image; throws if a is outside F_q.
  Code descend(Code ext_code) const;
};

bool is_prime(std::uint64_t n);
// Returns (p, k) with q = p^k, or throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_parts(std::uint64_t q);

// gamma in F_q with gamma^2 = -1; requires q = 1 mod 4.
FieldElement sqrt_minus_one(std::uint32_t q);
// Smallest-code t in F_{q^2} with t^(q+1) = -1.
FieldElement solve_norm_minus_one(std::uint32_t q);

}  // namespace lietab
