#pragma once
// Level-4 Kauffman-Lins recoupling data: quantum dimensions, theta and
// tetrahedron symbols, unitary 6j symbols, and the pipeline that derives
// the antidiagonal fusion matrix together with its SU(3) normalization.
//
// Scalars live in Q(zeta_72)[rho] with rho = 3^(1/4) (so rho^2 = sqrt(3),
// which is already in the base field). Every square root taken by the
// unitary normalization is of a positive value of the form 2^a * (sqrt3)^b,
// whose root is an in-field multiple of rho^(b mod 2), so this quadratic
// extension is closed under the whole pipeline.

#include <complex>
#include <string>

#include "su3kit/cyclo.hpp"
#include "su3kit/mat3.hpp"

namespace su3kit::fusion {

// a + b*rho with a, b in Q(zeta_72) and rho = 3^(1/4). The representation
// is unique (rho generates a non-normal quartic over Q, so it cannot lie in
// the abelian field Q(zeta_72)); equality is component-wise.
class SurdNum {
 public:
  SurdNum();  // zero
  explicit SurdNum(const CycloNum& plain);
  SurdNum(const CycloNum& plain, const CycloNum& rho_coeff);
  static SurdNum from_int(long v);
  static SurdNum from_rational(const mpq_class& q);
  static SurdNum rho();  // 3^(1/4)

  const CycloNum& plain_part() const { return a_; }
  const CycloNum& rho_part() const { return b_; }
  bool is_zero() const;
  bool is_plain() const;     // rho coefficient zero
  bool is_rational() const;  // plain and rational
  mpq_class rational_value() const;

  SurdNum operator+(const SurdNum& o) const;
  SurdNum operator-(const SurdNum& o) const;
  SurdNum operator-() const;
  SurdNum operator*(const SurdNum& o) const;
  SurdNum operator/(const SurdNum& o) const;
  SurdNum inverse() const;  // throws std::domain_error on zero
  bool operator==(const SurdNum& o) const;
  bool operator!=(const SurdNum& o) const { return !(*this == o); }

  std::complex<double> approx() const;
  std::string str() const;

 private:
  CycloNum a_, b_;
};

// Admissibility of a fusion vertex at level 4: even label sum, triangle
// inequality, and sum <= 8. Labels outside 0..4 are never admissible.
bool is_admissible(int a, int b, int c);

// Quantum dimension of charge a in 0..4: {1, sqrt3, 2, sqrt3, 1}.
SurdNum qdim(int a);

// Non-unitary theta symbol by the standard quantum-factorial closed form;
// requires (a,b,c) admissible.
SurdNum theta(int a, int b, int c);

// Unitary theta symbol sqrt(qdim(a) * qdim(b) * qdim(c)); requires
// (a,b,c) admissible.
SurdNum theta_u(int a, int b, int c);

// Tetrahedral network value for the 2x3 bracket [A B E; C D F] by the
// standard closed-form interior sum; requires the four vertex triples
// (A,D,E), (B,C,E), (A,B,F), (C,D,F) admissible.
SurdNum tet(int A, int B, int E, int C, int D, int F);

// Unitary 6j symbol
//   Tet[A B E; C D F] * sqrt(qdim(E) * qdim(F))
//     / sqrt(theta(A,D,E) theta(C,D,F) theta(C,B,E) theta(A,B,F));
// requires the four theta triples admissible.
SurdNum six_j_unitary(int A, int B, int E, int C, int D, int F);

// Fusion-operation matrix over the basis |0>, |2>, |4>: entry (row i/2,
// column k/2) is the product of the two 6j brackets and the squared loop
// factor theta_u(k,4,i)/qdim(i) wherever the intermediate couplings are
// admissible (which forces i = 4-k), and 0 elsewhere. Every computed
// coefficient is exactly 1, so the result is antidiag(1,1,1).
Mat3 derive_fusion_matrix();

// Scale m by -e^(2*pi*i/3) (the special-unitarizing scalar for the derived
// fusion matrix) and return the product; throws std::domain_error if the
// result does not have determinant 1.
Mat3 su3_normalize(const Mat3& m);

}  // namespace su3kit::fusion
