#include "su3kit/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su3kit::fusion {

namespace {

constexpr int kConductor = 72;

void check_component(const CycloNum& c) {
  if (c.conductor() != kConductor)
    throw usage_error("SurdNum components live in Q(zeta_72)");
}

long fld(long a, long b) {  // floored quotient, b > 0
  long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long pmod(long a, long b) {
  long r = a % b;
  return r < 0 ? r + b : r;
}

mpq_class pow_si(unsigned long base, long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
}

// sign * 2^e2 * (sqrt3)^ey, or zero: the value group generated by the
// nonzero quantum integers {1, sqrt3, 2}, closed under * and /.
struct QMono {
  bool zero = false;
  int sign = 1;
  long e2 = 0;
  long ey = 0;
};

QMono qm_mul(const QMono& a, const QMono& b) {
  if (a.zero || b.zero) return QMono{true, 1, 0, 0};
  return QMono{false, a.sign * b.sign, a.e2 + b.e2, a.ey + b.ey};
}

QMono qm_div(const QMono& a, const QMono& b) {
  if (b.zero) throw std::domain_error("division by zero quantum monomial");
  if (a.zero) return QMono{true, 1, 0, 0};
  return QMono{false, a.sign * b.sign, a.e2 - b.e2, a.ey - b.ey};
}

// [n] = sin(n*pi/6)/sin(pi/6): period-12 table 0,1,sqrt3,2,sqrt3,1,0,
// then the negatives.
QMono qint_mono(long n) {
  switch (pmod(n, 12)) {
    case 0:
    case 6:
      return QMono{true, 1, 0, 0};
    case 1:
    case 5:
      return QMono{false, 1, 0, 0};
    case 2:
    case 4:
      return QMono{false, 1, 0, 1};
    case 3:
      return QMono{false, 1, 1, 0};
    case 7:
    case 11:
      return QMono{false, -1, 0, 0};
    case 8:
    case 10:
      return QMono{false, -1, 0, 1};
    default:  // 9
      return QMono{false, -1, 1, 0};
  }
}

QMono qfact_mono(long n) {
  QMono r{false, 1, 0, 0};
  for (long j = 1; j <= n; ++j) r = qm_mul(r, qint_mono(j));
  return r;
}

CycloNum mono_cyclo(const QMono& q) {
  if (q.zero) return CycloNum(kConductor);
  mpq_class v = pow_si(2, q.e2) * pow_si(3, fld(q.ey, 2));
  if (q.sign < 0) v = -v;
  CycloNum c = CycloNum::from_rational(v, kConductor);
  if (pmod(q.ey, 2)) c = c * cyclo_sqrt3(kConductor);
  return c;
}

// sqrt of a positive monomial: 2^(e2/2) * 3^(ey/4) splits into an in-field
// multiple of rho^(ey mod 2).
SurdNum mono_sqrt(const QMono& q) {
  if (q.zero) return SurdNum();
  if (q.sign < 0)
    throw std::domain_error("square root of a negative quantum monomial");
  CycloNum c = mono_cyclo(QMono{false, 1, fld(q.e2, 2), fld(q.ey, 2)});
  if (pmod(q.e2, 2)) c = c * cyclo_sqrt2(kConductor);
  if (pmod(q.ey, 2)) return SurdNum(CycloNum(kConductor), c);
  return SurdNum(c);
}

// Accumulate q into r0 + r1*sqrt3.
void mono_add_into(const QMono& q, mpq_class& r0, mpq_class& r1) {
  if (q.zero) return;
  mpq_class v = pow_si(2, q.e2) * pow_si(3, fld(q.ey, 2));
  if (q.sign < 0) v = -v;
  (pmod(q.ey, 2) ? r1 : r0) += v;
}

void check_label(int a) {
  if (a < 0 || a > 4)
    throw usage_error("label out of range 0..4: " + std::to_string(a));
}

void check_triple(int a, int b, int c) {
  check_label(a);
  check_label(b);
  check_label(c);
  if (!is_admissible(a, b, c))
    throw usage_error("inadmissible triple (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
}

// theta closed form in quantum factorials; triple already validated.
QMono theta_mono(int a, int b, int c) {
  const long m = (a + b - c) / 2;
  const long n = (b + c - a) / 2;
  const long p = (c + a - b) / 2;
  QMono num = qm_mul(qm_mul(qfact_mono(m + n + p + 1), qfact_mono(m)),
                     qm_mul(qfact_mono(n), qfact_mono(p)));
  QMono den = qm_mul(qm_mul(qfact_mono(m + n), qfact_mono(n + p)),
                     qfact_mono(p + m));
  return qm_div(num, den);
}

}  // namespace

SurdNum::SurdNum() : a_(kConductor), b_(kConductor) {}

SurdNum::SurdNum(const CycloNum& plain) : a_(plain), b_(kConductor) {
  check_component(plain);
}

SurdNum::SurdNum(const CycloNum& plain, const CycloNum& rho_coeff)
    : a_(plain), b_(rho_coeff) {
  check_component(plain);
  check_component(rho_coeff);
}

SurdNum SurdNum::from_int(long v) {
  return SurdNum(CycloNum::from_int(v, kConductor));
}

SurdNum SurdNum::from_rational(const mpq_class& q) {
  return SurdNum(CycloNum::from_rational(q, kConductor));
}

SurdNum SurdNum::rho() {
  return SurdNum(CycloNum(kConductor), CycloNum::from_int(1, kConductor));
}

bool SurdNum::is_zero() const { return a_.is_zero() && b_.is_zero(); }

bool SurdNum::is_plain() const { return b_.is_zero(); }

bool SurdNum::is_rational() const { return is_plain() && a_.is_rational(); }

mpq_class SurdNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("SurdNum is not rational");
  return a_.rational_value();
}

SurdNum SurdNum::operator+(const SurdNum& o) const {
  return SurdNum(a_ + o.a_, b_ + o.b_);
}

SurdNum SurdNum::operator-(const SurdNum& o) const {
  return SurdNum(a_ - o.a_, b_ - o.b_);
}

SurdNum SurdNum::operator-() const { return SurdNum(-a_, -b_); }

SurdNum SurdNum::operator*(const SurdNum& o) const {
  // (a1 + b1 rho)(a2 + b2 rho) with rho^2 = sqrt3.
  return SurdNum(a_ * o.a_ + b_ * o.b_ * cyclo_sqrt3(kConductor),
                 a_ * o.b_ + b_ * o.a_);
}

SurdNum SurdNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero SurdNum");
  // (a + b rho)(a - b rho) = a^2 - b^2 sqrt3, rho-free and nonzero because
  // rho generates a proper quadratic extension.
  CycloNum d = a_ * a_ - b_ * b_ * cyclo_sqrt3(kConductor);
  if (d.is_zero()) throw std::domain_error("inverse of zero SurdNum norm");
  CycloNum di = d.inverse();
  return SurdNum(a_ * di, -(b_ * di));
}

SurdNum SurdNum::operator/(const SurdNum& o) const { return *this * o.inverse(); }

bool SurdNum::operator==(const SurdNum& o) const {
  return a_ == o.a_ && b_ == o.b_;
}

std::complex<double> SurdNum::approx() const {
  return a_.approx() + b_.approx() * std::pow(3.0, 0.25);
}

std::string SurdNum::str() const {
  if (b_.is_zero()) return a_.str();
  std::ostringstream out;
  if (!a_.is_zero()) out << a_.str() << " + ";
  out << "(" << b_.str() << ")*3^(1/4)";
  return out.str();
}

bool is_admissible(int a, int b, int c) {
  if (a < 0 || a > 4 || b < 0 || b > 4 || c < 0 || c > 4) return false;
  return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b &&
         a + b + c <= 8;
}

SurdNum qdim(int a) {
  check_label(a);
  return SurdNum(mono_cyclo(qint_mono(a + 1)));
}

SurdNum theta(int a, int b, int c) {
  check_triple(a, b, c);
  return SurdNum(mono_cyclo(theta_mono(a, b, c)));
}

SurdNum theta_u(int a, int b, int c) {
  check_triple(a, b, c);
  return mono_sqrt(qm_mul(qm_mul(qint_mono(a + 1), qint_mono(b + 1)),
                          qint_mono(c + 1)));
}

SurdNum tet(int A, int B, int E, int C, int D, int F) {
  check_triple(A, D, E);
  check_triple(B, C, E);
  check_triple(A, B, F);
  check_triple(C, D, F);
  const long a[4] = {(A + D + E) / 2, (B + C + E) / 2, (A + B + F) / 2,
                     (C + D + F) / 2};
  const long b[3] = {(B + D + E + F) / 2, (A + C + E + F) / 2,
                     (A + B + C + D) / 2};
  // Prefactor: every b_j - a_i equals a triangle slack (x+y-z)/2 of one of
  // the four vertex triples, so all factorial arguments here are in 0..4
  // and the divisions are exact and nonzero.
  QMono pref{false, 1, 0, 0};
  for (long bj : b)
    for (long ai : a) pref = qm_mul(pref, qfact_mono(bj - ai));
  for (int x : {A, B, E, C, D, F}) pref = qm_div(pref, qfact_mono(x));
  // Alternating interior sum, accumulated exactly in Q(sqrt3). Terms with
  // s >= 5 vanish through [6] = 0 inside qfact(s+1).
  mpq_class r0 = 0, r1 = 0;
  const long smin = *std::max_element(a, a + 4);
  const long smax = *std::min_element(b, b + 3);
  for (long s = smin; s <= smax; ++s) {
    QMono t = qfact_mono(s + 1);
    if (t.zero) continue;
    if (s % 2 != 0) t.sign = -t.sign;
    for (long ai : a) t = qm_div(t, qfact_mono(s - ai));
    for (long bj : b) t = qm_div(t, qfact_mono(bj - s));
    mono_add_into(t, r0, r1);
  }
  CycloNum sum = CycloNum::from_rational(r0, kConductor) +
                 CycloNum::from_rational(r1, kConductor) * cyclo_sqrt3(kConductor);
  return SurdNum(mono_cyclo(pref) * sum);
}

SurdNum six_j_unitary(int A, int B, int E, int C, int D, int F) {
  check_triple(A, D, E);
  check_triple(C, D, F);
  check_triple(C, B, E);
  check_triple(A, B, F);
  SurdNum num = tet(A, B, E, C, D, F) *
                mono_sqrt(qm_mul(qint_mono(E + 1), qint_mono(F + 1)));
  QMono den = qm_mul(qm_mul(theta_mono(A, D, E), theta_mono(C, D, F)),
                     qm_mul(theta_mono(C, B, E), theta_mono(A, B, F)));
  return num * mono_sqrt(den).inverse();
}

Mat3 derive_fusion_matrix() {
  Mat3 m(kConductor);
  for (int k : {0, 2, 4}) {
    for (int i : {0, 2, 4}) {
      // First bracket {k 4 0; 4 k i}, second bracket {2 2 2; 4 k i}, loop
      // removal theta_u(k,4,i)/qdim(i). The couplings they require reduce
      // to admissibility of (k,4,i), which forces i = 4-k.
      if (!is_admissible(k, k, 0) || !is_admissible(4, 4, 0) ||
          !is_admissible(k, 4, i) || !is_admissible(2, k, 2) ||
          !is_admissible(4, 2, 2) || !is_admissible(2, 2, i))
        continue;
      SurdNum b1 = six_j_unitary(k, 4, 0, 4, k, i);
      SurdNum b2 = six_j_unitary(2, 2, 2, 4, k, i);
      SurdNum loop = theta_u(k, 4, i) / qdim(i);
      SurdNum c = b1 * b2 * b2 * loop * loop;
      if (!c.is_plain())
        throw std::domain_error("fusion coefficient is not cyclotomic");
      m.at(i / 2, k / 2) = c.plain_part();
    }
  }
  return m;
}

Mat3 su3_normalize(const Mat3& m) {
  const int n = m.conductor();
  if (n % 6 != 0)
    throw usage_error("su3_normalize needs a conductor divisible by 6");
  // -e^(2 pi i/3) = e^(2 pi i * 5/6).
  Mat3 scaled = Mat3::scalar(CycloNum::zeta_pow(5L * n / 6, n)) * m;
  if (scaled.det() != CycloNum::from_int(1, n))
    throw std::domain_error("scaled matrix does not have determinant 1");
  return scaled;
}

}  // namespace su3kit::fusion
