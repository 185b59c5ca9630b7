#include "hypstokes/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hypstokes/error.hpp"

namespace hypstokes {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(Rational(0));
}

bool is_zero_poly(const RatPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

int degree(const RatPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  int db = degree(b);
  int da = degree(a);
  if (da < db) {
    trim(a);
    return {RatPoly{Rational(0)}, a};
  }
  RatPoly q(da - db + 1, Rational(0));
  for (int k = da; k >= db; --k) {
    if (a[k] == 0) continue;
    Rational f = a[k] / b[db];
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  a.resize(std::max(db, 1));
  trim(a);
  trim(q);
  return {q, a};
}

void reduce_mod(RatPoly& p, const std::vector<BigInt>& m) {
  const int d = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    if (p[k] == 0) continue;
    Rational f = p[k];
    for (int j = 0; j <= d; ++j) p[k - d + j] -= f * m[j];
  }
  p.resize(std::max(d, 1), Rational(0));
}

std::vector<BigInt> int_poly_div(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  // b monic; exact division expected.
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  std::vector<BigInt> q(da - db + 1, 0);
  for (int k = da; k >= db; --k) {
    BigInt f = a[k];
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
  }
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  std::vector<BigInt> p(n + 1, 0);  // X^n - 1
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = int_poly_div(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
  powers_.reserve(order);
  for (int k = 0; k < order; ++k) {
    Complex z = unit_from_turns(Rational(k, order));
    powers_.emplace_back(z.real(), z.imag());
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const CyclotomicField>(order);
  return slot;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (field_) {
    reduce_mod(coeffs_, field_->modulus());
    coeffs_.resize(field_->degree(), Rational(0));
    if (field_->order() <= 2) field_.reset();  // Q(zeta_1) = Q(zeta_2) = Q
  }
  if (!field_) trim(coeffs_);
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turns, int min_order) {
  const BigInt num = boost::multiprecision::numerator(turns);
  const BigInt den = boost::multiprecision::denominator(turns);
  const long long d = to_ll(den);
  if (d > 1'000'000) fail(ErrorCode::InvalidArgument, "root of unity order too large");
  const int order = std::lcm(static_cast<int>(d), std::max(min_order, 1));
  long long k = to_ll(((num * (order / d)) % order + order) % order);
  if (order <= 2) return Cyclotomic(Rational(k == 0 ? 1 : -1));
  std::vector<Rational> c(order, Rational(0));
  c[k] = 1;
  return Cyclotomic(CyclotomicField::get(order), std::move(c));
}

Cyclotomic Cyclotomic::lifted(int order) const {
  if (order == this->order() || order <= 2) return *this;
  if (order % this->order() != 0)
    fail(ErrorCode::InvalidArgument, "cannot lift cyclotomic element into a non-multiple order");
  const int step = order / this->order();
  std::vector<Rational> c(order, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) c[(i * step) % order] += coeffs_[i];
  return Cyclotomic(CyclotomicField::get(order), std::move(c));
}

bool Cyclotomic::is_zero() const { return is_zero_poly(coeffs_); }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "cyclotomic element is not rational");
  return coeffs_[0];
}

Complex Cyclotomic::approx() const {
  if (is_rational()) return {coeffs_[0].convert_to<double>(), 0.0};
  std::complex<long double> acc = 0;
  const auto& pw = field_->powers();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) acc += coeffs_[i].convert_to<long double>() * pw[i];
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::size_t Cyclotomic::bit_size() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    const BigInt num = abs(boost::multiprecision::numerator(c));
    const BigInt den = boost::multiprecision::denominator(c);
    bits += boost::multiprecision::msb(num) + boost::multiprecision::msb(den) + 2;
  }
  return bits;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return Exponent(coeffs_[0]).to_string();
  std::ostringstream os;
  bool first = true;
  const std::string z = "z" + std::to_string(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0) {
      os << Exponent(mag).to_string();
    } else {
      if (mag != 1) os << Exponent(mag).to_string() << "*";
      os << z;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
int common_order(int a, int b) {
  int l = std::lcm(a, b);
  return l <= 2 ? 1 : l;
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int ord = common_order(order(), o.order());
  Cyclotomic a = lifted(ord), b = o.lifted(ord);
  RatPoly c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  *this = Cyclotomic(a.field_ ? a.field_ : b.field_, std::move(c));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.is_rational()) {
    const Rational s = o.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  const int ord = common_order(order(), o.order());
  Cyclotomic a = lifted(ord), b = o.lifted(ord);
  *this = Cyclotomic(b.field_, mul(a.coeffs_, b.coeffs_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorCode::SingularMatrix, "division by zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
  // Extended Euclid: s*a + t*m = g, g a nonzero constant since Phi_N is irreducible.
  RatPoly m(field_->modulus().begin(), field_->modulus().end());
  RatPoly r0 = m, r1 = coeffs_;
  trim(r1);
  RatPoly s0{Rational(0)}, s1{Rational(1)};
  while (degree(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return Cyclotomic(field_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const int ord = common_order(a.order(), b.order());
  Cyclotomic x = a.lifted(ord), y = b.lifted(ord);
  RatPoly d = sub(x.coeffs_, y.coeffs_);
  return is_zero_poly(d);
}

}  // namespace hypstokes
