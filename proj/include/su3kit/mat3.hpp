#pragma once
// Exact 3x3 matrices over a cyclotomic field.
//
// Entries are stored row-major; at(r, c) uses 0-based indices. Prose
// descriptions of entry positions elsewhere in the docs are 1-based
// (matching the usual matrix convention).

#include <array>
#include <complex>
#include <string>

#include "su3kit/cyclo.hpp"

namespace su3kit {

class Mat3 {
 public:
  explicit Mat3(int conductor = 72);  // zero matrix
  static Mat3 identity(int conductor = 72);
  static Mat3 scalar(const CycloNum& c);
  static Mat3 diag(const CycloNum& a, const CycloNum& b, const CycloNum& c);
  // antidiagonal: (1,3) = a, (2,2) = b, (3,1) = c  [1-based positions]
  static Mat3 antidiag(const CycloNum& a, const CycloNum& b, const CycloNum& c);

  int conductor() const { return n_; }
  const CycloNum& at(int r, int c) const { return e_[3 * r + c]; }
  CycloNum& at(int r, int c) { return e_[3 * r + c]; }

  Mat3 operator*(const Mat3& o) const;
  bool operator==(const Mat3& o) const;
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  Mat3 transpose() const;
  Mat3 dagger() const;   // conjugate transpose
  Mat3 inverse() const;  // adjugate / det; throws std::domain_error if singular
  Mat3 pow(long k) const;

  CycloNum det() const;
  CycloNum trace() const;

  bool is_identity() const;
  bool is_unitary() const;          // M * M^dagger == I, exact
  bool is_special_unitary() const;  // unitary and det == 1
  bool is_diagonal() const;
  // vanishing at the 1-based positions (1,2), (2,1), (2,3), (3,2) -- the
  // positions (i, j) with exactly one of i, j even
  bool is_cross() const;

  // Least k >= 1 with M^k == I; throws cap_exceeded beyond the cap.
  int element_order(int cap = 648) const;

  // Total order for the canonical element ordering: lexicographic over the
  // 9 entries row-major, each compared by CycloNum::cmp.
  int cmp(const Mat3& o) const;

  // Rounded-double fingerprint for hash lookup. Identical exact values give
  // identical fingerprints; distinct values may collide (resolved by exact
  // comparison), so this never affects exactness.
  std::string fingerprint() const;

  std::string str() const;  // "[a, b, c; d, e, f; g, h, i]" exact entries

 private:
  int n_;
  std::array<CycloNum, 9> e_;
};

// Entrywise re-expression in Q(zeta_n); requires conductor(m) | n.
Mat3 promote_conductor(const Mat3& m, int n);

}  // namespace su3kit
