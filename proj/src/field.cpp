#include "lietab/field.hpp"

#include <algorithm>
#include <sstream>

namespace lietab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_parts(std::uint64_t q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero polynomial m over F_p.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

PrimePowerField::PrimePowerField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      Poly f(k + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[k] = 1;
      if (f[0] == 0) continue;
      if (is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }
  if (modulus_.empty()) throw FieldError("no irreducible modulus found");
  find_generator();
  build_tables();
}

FieldPtr PrimePowerField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw FieldError("characteristic is not prime: " + std::to_string(p));
  if (k == 0) throw FieldError("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds 2^20");
  }
  return FieldPtr(new PrimePowerField(p, k));
}

Code PrimePowerField::poly_mul(Code a, Code b) const {
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  const auto da = digits(a);
  const auto db = digits(b);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  }
  for (auto& c : prod) c %= p_;
  // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
  }
  Code r = 0;
  for (std::uint32_t i = k_; i-- > 0;) r = r * p_ + static_cast<Code>(prod[i]);
  return r;
}

void PrimePowerField::find_generator() {
  if (q_ == 2) {
    generator_ = 1;
    return;
  }
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = q_ - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  auto slow_pow = [&](Code a, std::uint64_t e) {
    Code r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Code g = 2; g < q_; ++g) {
    bool ok = true;
    for (auto r : prime_factors) {
      if (slow_pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      return;
    }
  }
  throw FieldError("no multiplicative generator found");
}

void PrimePowerField::build_tables() {
  if (q_ <= kTableOrder) {
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    Code x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = poly_mul(x, generator_);
    }
    if (x != 1) throw FieldError("generator check failed");
  }
  if (q_ <= 256) {
    add_table_.assign(std::size_t{q_} * q_, 0);
    for (Code a = 0; a < q_; ++a) {
      for (Code b = 0; b < q_; ++b) {
        Code r = 0;
        for (std::uint32_t i = 0; i < k_; ++i) {
          const std::uint32_t da = (a / pow_p_[i]) % p_;
          const std::uint32_t db = (b / pow_p_[i]) % p_;
          r += ((da + db) % p_) * pow_p_[i];
        }
        add_table_[std::size_t{a} * q_ + b] = r;
      }
    }
  }
}

Code PrimePowerField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code PrimePowerField::add(Code a, Code b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  if (k_ == 1) return (a + b) % p_;
  Code r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = (a / pow_p_[i]) % p_;
    const std::uint32_t db = (b / pow_p_[i]) % p_;
    r += ((da + db) % p_) * pow_p_[i];
  }
  return r;
}

Code PrimePowerField::neg(Code a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Code r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = (a / pow_p_[i]) % p_;
    r += ((p_ - da) % p_) * pow_p_[i];
  }
  return r;
}

Code PrimePowerField::sub(Code a, Code b) const { return add(a, neg(b)); }

Code PrimePowerField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Code PrimePowerField::inv(Code a) const {
  if (a == 0) throw FieldError("division by zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Code PrimePowerField::pow(Code a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (a == 0) return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    const std::uint64_t l = (std::uint64_t{log_[a]} * (static_cast<std::uint64_t>(e) % (q_ - 1))) % (q_ - 1);
    return exp_[l];
  }
  Code r = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

Code PrimePowerField::frobenius(Code a, long long m) const {
  m %= static_cast<long long>(k_);
  if (m < 0) m += k_;
  Code r = a;
  for (long long i = 0; i < m; ++i) r = pow(r, p_);
  return r;
}

Code PrimePowerField::trace(Code a) const {
  Code t = 0;
  Code x = a;
  for (std::uint32_t i = 0; i < k_; ++i) {
    t = add(t, x);
    x = pow(x, p_);
  }
  if (t >= p_) throw FieldError("trace left the prime field");
  return t;
}

std::uint64_t PrimePowerField::mult_order(Code a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t n = q_ - 1;
  std::uint64_t ord = n;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    while (ord % d == 0 && pow(a, static_cast<long long>(ord / d)) == 1) ord /= d;
    while (n % d == 0) n /= d;
  }
  return ord;
}

std::vector<std::uint32_t> PrimePowerField::digits(Code a) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Code PrimePowerField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > k_) throw FieldError("too many digits");
  Code r = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw FieldError("digit out of range");
    r = r * p_ + d[i];
  }
  return r;
}

std::string PrimePowerField::to_string(Code a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream os;
  os << "g^" << log_.at(a);
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw FieldError("null field");
  if (!field_->contains(code_)) throw FieldError("code outside field");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_.get() != o.field_.get() &&
      (field_->characteristic() != o.field_->characteristic() || field_->degree() != o.field_->degree()))
    throw FieldError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(code_, e)}; }
FieldElement FieldElement::frobenius(long long m) const { return {field_, field_->frobenius(code_, m)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(o);
  return code_ == o.code_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw FieldError("unknown field op");
}

FieldTower FieldTower::make(std::uint32_t p, std::uint32_t k) {
  FieldTower t;
  t.base = PrimePowerField::make(p, k);
  t.ext = PrimePowerField::make(p, 2 * k);
  const auto& m = t.base->modulus();
  const auto& E = *t.ext;
  // A root r of the base modulus in the extension; x -> r defines the embedding.
  Code root = 0;
  bool found = false;
  for (Code r = 0; r < E.order() && !found; ++r) {
    Code acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = E.add(E.mul(acc, r), E.from_int(m[i]));
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw FieldError("base modulus has no root in the extension");
  t.embed.resize(t.base->order());
  for (Code a = 0; a < t.base->order(); ++a) {
    const auto d = t.base->digits(a);
    Code acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = E.add(E.mul(acc, root), E.from_int(d[i]));
    t.embed[a] = acc;
  }
  return t;
}

Code FieldTower::descend(Code ext_code) const {
  auto it = std::find(embed.begin(), embed.end(), ext_code);
  if (it == embed.end()) throw FieldError("element is not in the base field");
  return static_cast<Code>(it - embed.begin());
}

FieldElement sqrt_minus_one(std::uint32_t q) {
  if (q % 4 != 1) throw FieldError("-1 is not a square in F_" + std::to_string(q));
  const auto [p, k] = prime_power_parts(q);
  auto F = PrimePowerField::make(p, k);
  for (Code g = 1; g < F->order(); ++g)
    if (F->mul(g, g) == F->minus_one()) return {F, g};
  throw FieldError("no square root of -1 found");
}

FieldElement solve_norm_minus_one(std::uint32_t q) {
  const auto [p, k] = prime_power_parts(q);
  auto E = PrimePowerField::make(p, 2 * k);
  for (Code t = 1; t < E->order(); ++t)
    if (E->pow(t, static_cast<long long>(q) + 1) == E->minus_one()) return {E, t};
  throw FieldError("no solution of t^(q+1) = -1");
}

}  // namespace lietab
