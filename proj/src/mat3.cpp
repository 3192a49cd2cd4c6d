#include "su3kit/mat3.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace su3kit {

Mat3::Mat3(int conductor)
    : n_(conductor),
      e_{CycloNum(conductor), CycloNum(conductor), CycloNum(conductor),
         CycloNum(conductor), CycloNum(conductor), CycloNum(conductor),
         CycloNum(conductor), CycloNum(conductor), CycloNum(conductor)} {}

Mat3 Mat3::identity(int conductor) {
  Mat3 m(conductor);
  CycloNum one = CycloNum::from_int(1, conductor);
  m.at(0, 0) = one;
  m.at(1, 1) = one;
  m.at(2, 2) = one;
  return m;
}

Mat3 Mat3::scalar(const CycloNum& c) {
  Mat3 m(c.conductor());
  m.at(0, 0) = c;
  m.at(1, 1) = c;
  m.at(2, 2) = c;
  return m;
}

Mat3 Mat3::diag(const CycloNum& a, const CycloNum& b, const CycloNum& c) {
  Mat3 m(a.conductor());
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

Mat3 Mat3::antidiag(const CycloNum& a, const CycloNum& b, const CycloNum& c) {
  Mat3 m(a.conductor());
  m.at(0, 2) = a;
  m.at(1, 1) = b;
  m.at(2, 0) = c;
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  if (n_ != o.n_) throw std::invalid_argument("conductor mismatch");
  Mat3 out(n_);
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) {
      const CycloNum& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < 3; ++c) {
        const CycloNum& b = o.at(k, c);
        if (b.is_zero()) continue;
        out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

bool Mat3::operator==(const Mat3& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < 9; ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Mat3 Mat3::transpose() const {
  Mat3 out(n_);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(c, r) = at(r, c);
  return out;
}

Mat3 Mat3::dagger() const {
  Mat3 out(n_);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

CycloNum Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

CycloNum Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Mat3 Mat3::inverse() const {
  CycloNum d = det();
  if (d.is_zero()) throw std::domain_error("singular matrix");
  CycloNum di = d.inverse();
  Mat3 out(n_);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3;  // adjugate: cofactor transpose
      int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      out.at(r, c) = (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) * di;
    }
  }
  return out;
}

Mat3 Mat3::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Mat3 r = identity(n_);
  Mat3 b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Mat3::is_identity() const { return *this == identity(n_); }

bool Mat3::is_unitary() const { return (*this * dagger()).is_identity(); }

bool Mat3::is_special_unitary() const {
  return is_unitary() && det() == CycloNum::from_int(1, n_);
}

bool Mat3::is_diagonal() const {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return true;
}

bool Mat3::is_cross() const {
  return at(0, 1).is_zero() && at(1, 0).is_zero() && at(1, 2).is_zero() &&
         at(2, 1).is_zero();
}

int Mat3::element_order(int cap) const {
  Mat3 m = *this;
  for (int k = 1; k <= cap; ++k) {
    if (m.is_identity()) return k;
    m = m * *this;
  }
  throw cap_exceeded("element order exceeds cap");
}

int Mat3::cmp(const Mat3& o) const {
  if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
  for (int i = 0; i < 9; ++i) {
    int s = e_[i].cmp(o.e_[i]);
    if (s != 0) return s;
  }
  return 0;
}

std::string Mat3::fingerprint() const {
  std::string out;
  out.reserve(9 * 32);
  char buf[64];
  for (int i = 0; i < 9; ++i) {
    std::complex<double> z = e_[i].approx();
    // +0.0 normalizes -0.000000 so the sign of a rounded zero is stable
    double re = std::round(z.real() * 1e6) / 1e6 + 0.0;
    double im = std::round(z.imag() * 1e6) / 1e6 + 0.0;
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f;", re, im);
    out += buf;
  }
  return out;
}

Mat3 promote_conductor(const Mat3& m, int n) {
  if (m.conductor() == n) return m;
  Mat3 out(n);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(r, c) = promote_conductor(m.at(r, c), n);
  return out;
}

std::string Mat3::str() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 3; ++r) {
    if (r) out << "; ";
    for (int c = 0; c < 3; ++c) {
      if (c) out << ", ";
      out << at(r, c).str();
    }
  }
  out << "]";
  return out.str();
}

}  // namespace su3kit
