#include "lietab/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lietab {

namespace {

struct OrderData {
  int phi = 1;
  std::vector<long> poly;
  // basis[j] = coordinates of zeta^j, 0 <= j < n
  std::vector<std::vector<long>> basis;
};

const OrderData& order_data(int n) {
  static std::recursive_mutex mu;
  static std::map<int, OrderData> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  OrderData d;
  // Phi_n = (x^n - 1) / prod_{m | n, m < n} Phi_m, by exact long division.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int m = 1; m < n; ++m) {
    if (n % m) continue;
    const std::vector<long> div = order_data(m).poly;
    std::vector<long> q(num.size() - div.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + div.size() - 1];
      for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= q[i] * div[j];
    }
    num = q;
  }
  d.poly = num;
  d.phi = static_cast<int>(num.size()) - 1;
  d.basis.assign(n, std::vector<long>(d.phi, 0));
  std::vector<long> cur(d.phi, 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    d.basis[j] = cur;
    // multiply by x, reduce x^phi = -sum poly[i] x^i
    const long top = cur[d.phi - 1];
    for (int i = d.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < d.phi; ++i) cur[i] -= top * d.poly[i];
  }
  return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

int euler_phi(int n) { return order_data(n).phi; }

const std::vector<long>& cyclotomic_polynomial(int n) { return order_data(n).poly; }

Cyclotomic::Cyclotomic(int n, std::vector<Rational> coeffs) : order_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (static_cast<int>(coeffs_.size()) != order_data(n).phi)
    throw std::invalid_argument("coefficient vector length differs from phi(n)");
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  const auto& d = order_data(n);
  long long j = k % n;
  if (j < 0) j += n;
  std::vector<Rational> c(d.phi);
  for (int i = 0; i < d.phi; ++i) c[i] = d.basis[j][i];
  return {n, std::move(c)};
}

Cyclotomic Cyclotomic::from_exponents(int n, const std::vector<long long>& mult) {
  const auto& d = order_data(n);
  std::vector<long long> acc(d.phi, 0);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    if (!mult[k]) continue;
    const auto& b = d.basis[k % n];
    for (int i = 0; i < d.phi; ++i) acc[i] += mult[k] * b[i];
  }
  std::vector<Rational> c(d.phi);
  for (int i = 0; i < d.phi; ++i) c[i] = Rational(static_cast<long>(acc[i]));
  return {n, std::move(c)};
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m == order_) return *this;
  if (m % order_) throw std::invalid_argument("embedding order must be a multiple");
  const auto& d = order_data(m);
  const int step = m / order_;
  std::vector<Rational> c(d.phi);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& b = d.basis[(j * step) % m];
    for (int i = 0; i < d.phi; ++i)
      if (b[i]) c[i] += coeffs_[j] * b[i];
  }
  return {m, std::move(c)};
}

namespace {

int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r -= o;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  const int m = lcm_order(order_, o.order_);
  if (m != order_) *this = embed(m);
  if (m == o.order_) return *this += o;
  return *this += o.embed(m);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  const int m = lcm_order(order_, o.order_);
  if (m != order_) *this = embed(m);
  if (m == o.order_) return *this -= o;
  return *this -= o.embed(m);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

Cyclotomic Cyclotomic::operator/(const Rational& r) const {
  if (r == 0) throw std::domain_error("division by zero");
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c /= r;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ == 1) return o.scaled(coeffs_[0]);
  if (o.order_ == 1) return scaled(o.coeffs_[0]);
  if (order_ != o.order_) {
    const int m = lcm_order(order_, o.order_);
    return embed(m) * o.embed(m);
  }
  const auto& d = order_data(order_);
  const int phi = d.phi;
  std::vector<Rational> conv(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rational> c(phi);
  for (int i = 0; i < phi; ++i) c[i] = conv[i];
  for (int j = phi; j < 2 * phi - 1; ++j) {
    if (conv[j] == 0) continue;
    const auto& b = d.basis[j % order_];
    for (int i = 0; i < phi; ++i)
      if (b[i]) c[i] += conv[j] * b[i];
  }
  return {order_, std::move(c)};
}

Cyclotomic Cyclotomic::galois(long long a) const {
  if (std::gcd(static_cast<long long>(order_), a < 0 ? -a : a) != 1)
    throw std::invalid_argument("galois exponent not coprime to the order");
  if (order_ <= 2) return *this;
  const auto& d = order_data(order_);
  long long am = a % order_;
  if (am < 0) am += order_;
  std::vector<Rational> c(d.phi);
  for (int j = 0; j < d.phi; ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& b = d.basis[(j * am) % order_];
    for (int i = 0; i < d.phi; ++i)
      if (b[i]) c[i] += coeffs_[j] * b[i];
  }
  return {order_, std::move(c)};
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ == o.order_) return coeffs_ == o.coeffs_;
  const int m = lcm_order(order_, o.order_);
  return embed(m).coeffs_ == o.embed(m).coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& o) const {
  const int m = lcm_order(order_, o.order_);
  const Cyclotomic a = embed(m);
  const Cyclotomic b = o.embed(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace {

// Solves A x = v over Q, A given column-wise; returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                  const std::vector<Rational>& v) {
  const std::size_t rows = v.size();
  const std::size_t ncol = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncol + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncol; ++c) m[r][c] = cols[c][r];
    m[r][ncol] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncol && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k <= ncol; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][ncol] != 0) return std::nullopt;
  std::vector<Rational> x(ncol);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][ncol];
  return x;
}

}  // namespace

Cyclotomic Cyclotomic::minimized() const {
  if (order_ == 1) return *this;
  if (auto r = as_rational()) return Cyclotomic(*r);
  for (int m = 1; m < order_; ++m) {
    if (order_ % m) continue;
    bool fixed = true;
    for (long long a = 1; a < order_ && fixed; ++a) {
      if (std::gcd(a, static_cast<long long>(order_)) != 1 || a % m != 1 % m) continue;
      if (galois(a) != *this) fixed = false;
    }
    if (!fixed) continue;
    const auto& dm = order_data(m);
    const auto& dn = order_data(order_);
    std::vector<std::vector<Rational>> cols(dm.phi, std::vector<Rational>(dn.phi));
    const int step = order_ / m;
    for (int i = 0; i < dm.phi; ++i)
      for (int r = 0; r < dn.phi; ++r) cols[i][r] = dn.basis[(i * step) % order_][r];
    auto sol = solve_columns(cols, coeffs_);
    if (!sol) continue;
    return {m, std::move(*sol)};
  }
  return *this;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  const double two_pi = 2 * std::acos(-1.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    z += coeffs_[j].get_d() * std::polar(1.0, two_pi * static_cast<double>(j) / order_);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic m = minimized();
  if (m.order_ == 1) return m.coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < m.coeffs_.size(); ++j) {
    const Rational& c = m.coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational a = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z" << m.order_;
    if (j > 1) os << "^" << j;
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown cyclotomic op");
}

}  // namespace lietab
