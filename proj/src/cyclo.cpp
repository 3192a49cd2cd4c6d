#include "su3kit/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace su3kit {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Integer polynomials, ascending degree, used only to build Phi_n.
using ZPoly = std::vector<mpz_class>;

int zdeg(const ZPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of integer polynomials (divisor monic).
ZPoly zdiv(ZPoly num, const ZPoly& den) {
  int dn = zdeg(num), dd = zdeg(den);
  ZPoly q(dn - dd + 1, 0);
  for (int d = dn; d >= dd; --d) {
    if (num[d] == 0) continue;
    mpz_class c = num[d];
    q[d - dd] = c;
    for (int j = 0; j <= dd; ++j) num[d - dd + j] -= c * den[j];
  }
  return q;
}

ZPoly phi_uncached(int n, const std::map<int, ZPoly>& lower) {
  ZPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;  // x^n - 1
  for (const auto& [d, pd] : lower)
    if (d < n && n % d == 0) num = zdiv(num, pd);
  return num;
}

// Per-conductor context: Phi_n as rationals, phi(n), complex roots of unity.
struct Ctx {
  int n = 0;
  int deg = 0;
  std::vector<mpq_class> phi;                 // size deg+1, monic
  std::vector<std::complex<double>> roots;    // zeta^k, k in [0, n)
};

const Ctx& ctx(int n) {
  static std::mutex mu;
  static std::map<int, Ctx> cache;
  static std::map<int, ZPoly> zphi;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  // Phi_d for all divisors d of n, smallest first.
  for (int d = 1; d <= n; ++d)
    if (n % d == 0 && !zphi.count(d)) zphi[d] = phi_uncached(d, zphi);
  Ctx c;
  c.n = n;
  const ZPoly& p = zphi[n];
  c.deg = zdeg(p);
  c.phi.resize(c.deg + 1);
  for (int i = 0; i <= c.deg; ++i) c.phi[i] = mpq_class(p[i]);
  c.roots.resize(n);
  for (int k = 0; k < n; ++k) {
    double t = 2.0 * std::numbers::pi * k / n;
    c.roots[k] = {std::cos(t), std::sin(t)};
  }
  if (c.deg != euler_phi(n)) throw std::logic_error("cyclotomic degree mismatch");
  return cache.emplace(n, std::move(c)).first->second;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(int n) {
  const Ctx& c = ctx(n);
  std::vector<mpz_class> out(c.deg + 1);
  for (int i = 0; i <= c.deg; ++i) out[i] = mpz_class(c.phi[i].get_num());
  return out;
}

CycloNum reduce_poly(int n, std::vector<mpq_class> p) {
  const Ctx& c = ctx(n);
  for (int d = static_cast<int>(p.size()) - 1; d >= c.deg; --d) {
    if (p[d] == 0) continue;
    mpq_class co = p[d];
    p[d] = 0;
    // subtract co * x^{d-deg} * Phi_n  (Phi monic, so slot d cancels)
    for (int j = 0; j < c.deg; ++j) p[d - c.deg + j] -= co * c.phi[j];
  }
  CycloNum out(n);
  for (int i = 0; i < c.deg && i < static_cast<int>(p.size()); ++i)
    out.c_[i] = p[i];
  return out;
}

CycloNum::CycloNum(int conductor) : n_(conductor), c_(ctx(conductor).deg, mpq_class(0)) {}

CycloNum CycloNum::from_rational(const mpq_class& q, int conductor) {
  CycloNum out(conductor);
  out.c_[0] = q;
  return out;
}

CycloNum CycloNum::from_int(long v, int conductor) {
  return from_rational(mpq_class(v), conductor);
}

CycloNum CycloNum::from_coeffs(std::vector<mpq_class> coeffs, int conductor) {
  CycloNum out(conductor);
  if (coeffs.size() != out.c_.size())
    throw usage_error("expected " + std::to_string(out.c_.size()) +
                      " coordinates for conductor " + std::to_string(conductor));
  out.c_ = std::move(coeffs);
  return out;
}

CycloNum CycloNum::zeta_pow(long k, int conductor) {
  long n = conductor;
  long r = ((k % n) + n) % n;
  std::vector<mpq_class> p(r + 1, mpq_class(0));
  p[r] = 1;
  return reduce_poly(conductor, std::move(p));
}

bool CycloNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycloNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("not a rational value");
  return c_[0];
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
  CycloNum out(n_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
  CycloNum out(n_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

CycloNum CycloNum::operator-() const {
  CycloNum out(n_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
  const int deg = static_cast<int>(c_.size());
  // gather nonzero terms first: entries of group matrices are very sparse
  thread_local std::vector<int> ia, ib;
  ia.clear();
  ib.clear();
  for (int i = 0; i < deg; ++i)
    if (c_[i] != 0) ia.push_back(i);
  for (int i = 0; i < deg; ++i)
    if (o.c_[i] != 0) ib.push_back(i);
  if (ia.empty() || ib.empty()) return CycloNum(n_);
  std::vector<mpq_class> p(2 * deg - 1, mpq_class(0));
  for (int i : ia)
    for (int j : ib) p[i + j] += c_[i] * o.c_[j];
  return reduce_poly(n_, std::move(p));
}

namespace {

// Polynomial xgcd over Q[x] for the inverse: returns (g, u) with
// u*a = g mod m, g = gcd(a, m) normalized monic.
using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qmod(QPoly a, const QPoly& b) {
  int db = qdeg(b);
  for (int d = qdeg(a); d >= db; d = qdeg(a)) {
    mpq_class c = a[d] / b[db];
    for (int j = 0; j <= db; ++j) a[d - db + j] -= c * b[j];
  }
  return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
  int db = qdeg(b);
  int da = qdeg(a);
  if (da < db) return {mpq_class(0)};
  QPoly q(da - db + 1, mpq_class(0));
  for (int d = da; d >= db; d = qdeg(a)) {
    mpq_class c = a[d] / b[db];
    q[d - db] = c;
    for (int j = 0; j <= db; ++j) a[d - db + j] -= c * b[j];
  }
  return q;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  int da = qdeg(a), db = qdeg(b);
  if (da < 0 || db < 0) return {mpq_class(0)};
  QPoly out(da + db + 1, mpq_class(0));
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic");
  const Ctx& cx = ctx(n_);
  // extended Euclid: r0 = Phi, r1 = this; track u with u*this = r mod Phi
  QPoly r0(cx.phi.begin(), cx.phi.end());
  QPoly r1(c_.begin(), c_.end());
  QPoly u0{mpq_class(0)}, u1{mpq_class(1)};
  while (qdeg(r1) > 0) {
    QPoly q = qquot(r0, r1);
    QPoly r2 = qsub(r0, qmul(q, r1));
    QPoly u2 = qsub(u0, qmul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (qdeg(r1) != 0) throw std::logic_error("cyclotomic gcd not a unit");
  mpq_class scale = mpq_class(1) / r1[0];
  QPoly u = qmod(std::move(u1), QPoly(cx.phi.begin(), cx.phi.end()));
  std::vector<mpq_class> p(u.begin(), u.end());
  for (auto& q : p) q *= scale;
  return reduce_poly(n_, std::move(p));
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

bool CycloNum::operator==(const CycloNum& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

CycloNum CycloNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNum r = from_int(1, n_);
  CycloNum b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

CycloNum CycloNum::conj() const {
  CycloNum out(n_);
  for (int i = 0; i < degree(); ++i) {
    if (c_[i] == 0) continue;
    CycloNum term = zeta_pow(-i, n_);
    for (int j = 0; j < degree(); ++j) out.c_[j] += c_[i] * term.c_[j];
  }
  return out;
}

std::complex<double> CycloNum::approx() const {
  const Ctx& cx = ctx(n_);
  std::complex<double> sum{0.0, 0.0};
  for (int i = 0; i < degree(); ++i) {
    if (c_[i] == 0) continue;
    sum += c_[i].get_d() * cx.roots[i];
  }
  return sum;
}

int CycloNum::cmp(const CycloNum& o) const {
  if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int s = ::cmp(c_[i], o.c_[i]);
    if (s != 0) return s;
  }
  return 0;
}

std::string CycloNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class q = c_[i];
    if (first) {
      if (q < 0) {
        out << "-";
        q = -q;
      }
    } else {
      out << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (i == 0) {
      out << q.get_str();
    } else {
      if (q != 1) out << q.get_str() << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

CycloNum promote_conductor(const CycloNum& x, int n) {
  if (x.conductor() == n) return x;
  if (n % x.conductor() != 0)
    throw usage_error("cannot promote conductor " +
                      std::to_string(x.conductor()) + " to " +
                      std::to_string(n));
  const int f = n / x.conductor();
  std::vector<mpq_class> p(static_cast<size_t>(x.degree() - 1) * f + 1, 0);
  for (int i = 0; i < x.degree(); ++i) p[static_cast<size_t>(i) * f] = x.coeff(i);
  return reduce_poly(n, std::move(p));
}

CycloNum cyclo_sqrt2(int conductor) {
  if (conductor % 8 != 0) throw std::invalid_argument("sqrt2 needs 8 | conductor");
  long k = conductor / 8;
  return CycloNum::zeta_pow(k, conductor) + CycloNum::zeta_pow(-k, conductor);
}

CycloNum cyclo_sqrt3(int conductor) {
  if (conductor % 12 != 0) throw std::invalid_argument("sqrt3 needs 12 | conductor");
  long k = conductor / 12;
  return CycloNum::zeta_pow(k, conductor) + CycloNum::zeta_pow(-k, conductor);
}

CycloNum cyclo_i(int conductor) {
  if (conductor % 4 != 0) throw std::invalid_argument("i needs 4 | conductor");
  return CycloNum::zeta_pow(conductor / 4, conductor);
}

}  // namespace su3kit
