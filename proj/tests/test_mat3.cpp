#include "doctest.h"
#include "su3kit/catalog.hpp"
#include "su3kit/mat3.hpp"

using su3kit::CycloNum;
using su3kit::Mat3;
namespace cat = su3kit::catalog;

namespace {

CycloNum z(long k) { return CycloNum::zeta_pow(k, 72); }

}  // namespace

TEST_CASE("constructors and accessors") {
  const Mat3 zero(72);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(zero.at(r, c).is_zero());
  const Mat3 id = Mat3::identity(72);
  CHECK(id.is_identity());
  CHECK(id.is_diagonal());
  CHECK(id.det() == CycloNum::from_int(1));
  CHECK(id.trace() == CycloNum::from_int(3));
  const Mat3 anti = Mat3::antidiag(z(1), z(2), z(3));
  CHECK(anti.at(0, 2) == z(1));
  CHECK(anti.at(1, 1) == z(2));
  CHECK(anti.at(2, 0) == z(3));
  CHECK(!anti.is_diagonal());
}

TEST_CASE("multiplication against hand-computed product") {
  // simple permutation matrix algebra: E^3 == I
  const Mat3 e = cat::e_matrix(72);
  CHECK(e * e * e == Mat3::identity(72));
  CHECK(e.pow(3).is_identity());
  // diag * diag multiplies entrywise
  const Mat3 d1 = Mat3::diag(z(1), z(2), z(3));
  const Mat3 d2 = Mat3::diag(z(10), z(20), z(30));
  CHECK(d1 * d2 == Mat3::diag(z(11), z(22), z(33)));
}

TEST_CASE("transpose, dagger, inverse") {
  const Mat3 g2 = cat::braid_g2();
  CHECK(g2.transpose().transpose() == g2);
  CHECK(g2.dagger().dagger() == g2);
  CHECK(g2 * g2.inverse() == Mat3::identity(72));
  CHECK(g2.inverse() * g2 == Mat3::identity(72));
  // unitary: inverse equals dagger
  CHECK(g2.inverse() == g2.dagger());
  CHECK_THROWS_AS(Mat3(72).inverse(), std::domain_error);
}

TEST_CASE("det and pow") {
  const Mat3 g1 = cat::braid_g1();
  CHECK(g1.det() == CycloNum::from_int(1));
  CHECK(g1.pow(0).is_identity());
  CHECK(g1.pow(5) == g1 * g1 * g1 * g1 * g1);
  CHECK(g1.pow(-3) == g1.inverse().pow(3));
}

TEST_CASE("unitarity predicates") {
  CHECK(cat::braid_g1().is_special_unitary());
  CHECK(cat::braid_g2().is_special_unitary());
  CHECK(cat::fum().is_special_unitary());
  const Mat3 notsu = Mat3::diag(z(1), z(1), z(1));  // det = z^3 != 1
  CHECK(notsu.is_unitary());
  CHECK(!notsu.is_special_unitary());
  const Mat3 notu = Mat3::diag(CycloNum::from_int(2), CycloNum::from_int(1),
                               CycloNum::from_int(1));
  CHECK(!notu.is_unitary());
}

TEST_CASE("cross predicate") {
  // cross matrices vanish at the four positions with exactly one even index
  CHECK(cat::matrix_A().is_cross());
  CHECK(cat::matrix_B().is_cross());
  CHECK(cat::h_matrix(0).is_cross());
  CHECK(Mat3::identity(72).is_cross());
  CHECK(!cat::e_matrix(72).is_cross());
  CHECK(!cat::braid_g2().is_cross());
}

TEST_CASE("element order") {
  CHECK(Mat3::identity(72).element_order() == 1);
  CHECK(cat::fum().element_order() == 6);
  CHECK(cat::braid_g1().element_order() == 18);
  CHECK(cat::e_matrix(72).element_order() == 3);
  CHECK_THROWS_AS(cat::braid_g1().element_order(5), su3kit::cap_exceeded);
}

TEST_CASE("cmp and fingerprint") {
  const Mat3 a = cat::braid_g1();
  const Mat3 b = cat::braid_g2();
  CHECK(a.cmp(a) == 0);
  CHECK(a.cmp(b) == -b.cmp(a));
  CHECK(a.cmp(b) != 0);
  CHECK(a.fingerprint() == cat::braid_g1().fingerprint());
  CHECK(a.fingerprint() != b.fingerprint());
  // fingerprint never distinguishes equal values, including -0 vs +0
  const Mat3 mz = Mat3::diag(CycloNum::from_int(-1), CycloNum::from_int(1),
                             CycloNum::from_int(-1));
  CHECK(mz.fingerprint() == cat::w_matrix(2).fingerprint());
}

TEST_CASE("str shows entries") {
  const std::string s = Mat3::identity(72).str();
  CHECK(s.find('[') != std::string::npos);
  CHECK(s.find(';') != std::string::npos);
}
