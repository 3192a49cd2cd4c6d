#include <complex>

#include "doctest.h"
#include "su3kit/cyclo.hpp"

using su3kit::CycloNum;
using su3kit::cyclotomic_poly;
using su3kit::euler_phi;

namespace {

CycloNum z(long k) { return CycloNum::zeta_pow(k, 72); }

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(72) == 24);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1
  CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
  // Phi_4 = x^2 + 1
  CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
  // Phi_9 = x^6 + x^3 + 1
  CHECK(cyclotomic_poly(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
  // Phi_72 = x^24 - x^12 + 1
  std::vector<mpz_class> p72(25, 0);
  p72[0] = 1;
  p72[12] = -1;
  p72[24] = 1;
  CHECK(cyclotomic_poly(72) == p72);
}

TEST_CASE("basic representation") {
  CHECK(CycloNum(72).is_zero());
  CHECK(CycloNum::from_int(0).is_zero());
  CHECK(!CycloNum::from_int(1).is_zero());
  CHECK(CycloNum::from_int(5).is_rational());
  CHECK(CycloNum::from_int(5).rational_value() == 5);
  CHECK(!z(1).is_rational());
  CHECK(z(0) == CycloNum::from_int(1));
  CHECK(z(72) == CycloNum::from_int(1));
  CHECK(z(-1) == z(71));
  CHECK(z(36) == CycloNum::from_int(-1));
  // the defining reduction: z^24 = z^12 - 1
  CHECK(z(24) == z(12) - CycloNum::from_int(1));
}

TEST_CASE("ring and field axioms on sampled elements") {
  const CycloNum a = z(5) + CycloNum::from_rational(mpq_class(2, 3)) * z(17);
  const CycloNum b = z(30) - CycloNum::from_int(4);
  const CycloNum c = CycloNum::from_rational(mpq_class(-7, 2)) + z(23) * z(60);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK(a - a == CycloNum(72));
  CHECK(a * CycloNum::from_int(1) == a);
}

TEST_CASE("inverse and division") {
  const CycloNum one = CycloNum::from_int(1);
  for (long k : {1L, 5L, 12L, 35L, 71L}) {
    CHECK(z(k) * z(k).inverse() == one);
    CHECK(z(k).inverse() == z(-k));
  }
  const CycloNum a = z(7) + CycloNum::from_int(3) - z(50);
  CHECK(a * a.inverse() == one);
  CHECK(a / a == one);
  CHECK((a / z(13)) * z(13) == a);
  CHECK_THROWS_AS(CycloNum(72).inverse(), std::domain_error);
}

TEST_CASE("pow") {
  const CycloNum a = z(1) + CycloNum::from_int(2);
  CHECK(a.pow(0) == CycloNum::from_int(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inverse());
  CHECK(z(1).pow(72) == CycloNum::from_int(1));
}

TEST_CASE("conjugation") {
  CHECK(z(9).conj() == z(-9));
  const CycloNum a = z(7) + CycloNum::from_rational(mpq_class(1, 2)) * z(3);
  CHECK(a.conj().conj() == a);
  // a * conj(a) is real: equal to its own conjugate
  const CycloNum norm = a * a.conj();
  CHECK(norm.conj() == norm);
  // rationals are fixed
  CHECK(CycloNum::from_rational(mpq_class(3, 7)).conj() ==
        CycloNum::from_rational(mpq_class(3, 7)));
}

TEST_CASE("numeric embedding") {
  const double pi = 3.14159265358979323846;
  for (long k : {0L, 1L, 9L, 24L, 36L, 55L}) {
    const std::complex<double> want(std::cos(2 * pi * k / 72),
                                    std::sin(2 * pi * k / 72));
    CHECK(std::abs(z(k).approx() - want) < 1e-12);
  }
  CHECK(std::abs(su3kit::cyclo_sqrt2(72).approx() -
                 std::complex<double>(std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(su3kit::cyclo_sqrt3(72).approx() -
                 std::complex<double>(std::sqrt(3.0), 0)) < 1e-12);
  CHECK(std::abs(su3kit::cyclo_i(72).approx() - std::complex<double>(0, 1)) <
        1e-12);
}

TEST_CASE("surd constants are exact square roots") {
  CHECK(su3kit::cyclo_sqrt2(72) * su3kit::cyclo_sqrt2(72) ==
        CycloNum::from_int(2));
  CHECK(su3kit::cyclo_sqrt3(72) * su3kit::cyclo_sqrt3(72) ==
        CycloNum::from_int(3));
  CHECK(su3kit::cyclo_i(72) * su3kit::cyclo_i(72) == CycloNum::from_int(-1));
  CHECK(su3kit::cyclo_i(72) == z(18));
}

TEST_CASE("other conductors") {
  const CycloNum w = CycloNum::zeta_pow(1, 360);
  CHECK(w.degree() == 96);
  CHECK(w.pow(360) == CycloNum::from_int(1, 360));
  CHECK(w.pow(180) == CycloNum::from_int(-1, 360));
  CHECK(w.pow(5) * w.pow(5).inverse() == CycloNum::from_int(1, 360));
  // e(1/5) has order 5
  const CycloNum f = CycloNum::zeta_pow(72, 360);
  CycloNum acc = f;
  int ord = 1;
  while (acc != CycloNum::from_int(1, 360)) {
    acc *= f;
    ++ord;
  }
  CHECK(ord == 5);
}

TEST_CASE("cmp is a total order consistent with equality") {
  const CycloNum a = z(3);
  const CycloNum b = z(4);
  CHECK(a.cmp(a) == 0);
  CHECK(a.cmp(b) != 0);
  CHECK(a.cmp(b) == -b.cmp(a));
}

TEST_CASE("str round-trips something readable") {
  CHECK(CycloNum::from_int(0).str() == "0");
  CHECK(CycloNum::from_int(1).str() == "1");
  const std::string s = (z(12) * CycloNum::from_rational(mpq_class(1, 2))).str();
  CHECK(s.find("z^12") != std::string::npos);
}
