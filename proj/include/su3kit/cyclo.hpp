#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is a rational polynomial in zeta = exp(2*pi*i/n) of degree
// < phi(n), i.e. coordinates in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
// Representation in that basis is unique, so equality is coefficient-wise.
// The working conductor defaults to 72 (phi(72) = 24); any conductor works.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace su3kit {

// Thrown when a closure/enumeration resource cap is exceeded.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on invalid user-facing input (unknown name, bad selector, bad file).
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when well-formed imported data violates a group invariant
// (non-unitary element, inconsistent word log, set not closed).
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& what)
      : std::runtime_error(what) {}
};

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
// Computed by the standard recursion Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
std::vector<mpz_class> cyclotomic_poly(int n);

class CycloNum {
 public:
  explicit CycloNum(int conductor = 72);  // zero
  static CycloNum from_rational(const mpq_class& q, int conductor = 72);
  static CycloNum from_int(long v, int conductor = 72);
  // From power-basis coordinates (exactly phi(conductor) of them).
  static CycloNum from_coeffs(std::vector<mpq_class> coeffs, int conductor);
  // zeta^k for any integer k (reduced mod n, then mod Phi_n).
  static CycloNum zeta_pow(long k, int conductor = 72);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()); }  // phi(n)
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  CycloNum inverse() const;  // throws std::domain_error on zero
  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  CycloNum pow(long k) const;
  CycloNum conj() const;  // complex conjugation: zeta -> zeta^{-1}

  std::complex<double> approx() const;

  // Total order for canonical sorting: numeric comparison of the coefficient
  // vector, ascending power. Returns <0, 0, >0.
  int cmp(const CycloNum& o) const;

  // Human-readable polynomial in z = zeta_n, e.g. "1/2 - 1/2*z^12".
  std::string str() const;

  mpq_class& coeff(int i) { return c_[i]; }
  const mpq_class& coeff(int i) const { return c_[i]; }

 private:
  int n_;
  std::vector<mpq_class> c_;  // size phi(n)
  friend CycloNum reduce_poly(int n, std::vector<mpq_class> p);
};

// Reduce an arbitrary-degree polynomial in zeta_n modulo Phi_n.
CycloNum reduce_poly(int n, std::vector<mpq_class> p);

// Re-express x in the larger field Q(zeta_n); requires conductor(x) | n.
CycloNum promote_conductor(const CycloNum& x, int n);

// In-field surd constants (require 8 | n for sqrt2, 12 | n for sqrt3).
CycloNum cyclo_sqrt2(int conductor = 72);
CycloNum cyclo_sqrt3(int conductor = 72);
CycloNum cyclo_i(int conductor = 72);  // requires 4 | n

}  // namespace su3kit
