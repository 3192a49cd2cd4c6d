#include <map>

#include "doctest.h"
#include "su3kit/catalog.hpp"
#include "su3kit/engine.hpp"

using su3kit::Mat3;
using su3kit::cap_exceeded;
using su3kit::usage_error;
namespace cat = su3kit::catalog;
namespace eng = su3kit::engine;
using eng::MatrixGroup;
using eng::SubgroupHandle;

namespace {

MatrixGroup from_set(const cat::NamedGeneratorSet& s, int cap = 10000) {
  return eng::generate(s.generators, cap, s.name);
}

const MatrixGroup& fr162() {
  static const MatrixGroup g = from_set(cat::fr162());
  return g;
}

const MatrixGroup& fr162x4() {
  static const MatrixGroup g = from_set(cat::fr162x4());
  return g;
}

const MatrixGroup& d18() {
  static const MatrixGroup g = from_set(cat::d18_1_1_2_1_1());
  return g;
}

const MatrixGroup& d9() {
  static const MatrixGroup g = from_set(cat::d_group(9, 1, 1, 2, 1, 1));
  return g;
}

const MatrixGroup& sigma() {
  static const MatrixGroup g = from_set(cat::sigma216x3());
  return g;
}

using Spectrum = std::map<int, int>;

}  // namespace

TEST_CASE("closure orders of the core groups") {
  CHECK(fr162().order() == 162);
  CHECK(fr162x4().order() == 648);
  CHECK(d18().order() == 648);
  CHECK(d9().order() == 162);
  CHECK(sigma().order() == 648);
  CHECK(eng::generate({cat::e_matrix(72), cat::btilde(72)}).order() == 6);
  CHECK(eng::generate({Mat3::identity(72)}).order() == 1);
  CHECK(eng::generate({}).order() == 1);
  CHECK(from_set(cat::c9_1_1()).order() == 81);
  CHECK(from_set(cat::c_group(18, 1, 1)).order() == 324);
  CHECK(from_set(cat::c_group(18, 10, 1)).order() == 324);
  CHECK(from_set(cat::c_group(9, 3, 1)).order() == 243);
  CHECK(from_set(cat::c_group(2, 0, 1)).order() == 12);
}

TEST_CASE("closure cap") {
  CHECK_THROWS_AS(from_set(cat::fr162x4(), 100), cap_exceeded);
}

TEST_CASE("replacing the fusion generator by its cube gives the same group") {
  const MatrixGroup alt = eng::generate(
      {cat::braid_g1(), cat::braid_g2(), cat::fum().pow(3)});
  CHECK(eng::set_equal(alt, fr162x4()));
}

TEST_CASE("canonical ordering and words") {
  const MatrixGroup& g = fr162();
  CHECK(g.elements()[0].is_identity());
  CHECK(g.words()[0].empty());
  for (int i = 2; i < g.order(); ++i)
    CHECK(g.elements()[i - 1].cmp(g.elements()[i]) < 0);
  // word-log soundness: every logged word reproduces its element exactly
  for (int i = 0; i < g.order(); ++i)
    CHECK(g.eval_word(g.words()[i]) == g.elements()[i]);
}

TEST_CASE("word-log soundness for the order-648 groups") {
  for (const MatrixGroup* g : {&fr162x4(), &d18(), &sigma()}) {
    for (int i = 0; i < g->order(); i += 7)
      CHECK(g->eval_word(g->words()[i]) == g->elements()[i]);
  }
}

TEST_CASE("multiplication table matches exact matrix products") {
  const MatrixGroup s3 = eng::generate({cat::e_matrix(72), cat::btilde(72)});
  for (int i = 0; i < s3.order(); ++i)
    for (int j = 0; j < s3.order(); ++j) {
      const Mat3 prod = s3.elements()[i] * s3.elements()[j];
      CHECK(s3.elements()[s3.mult(i, j)] == prod);
    }
  const MatrixGroup n27 = eng::generate({cat::matrix_A(), cat::matrix_B()});
  REQUIRE(n27.order() == 27);
  for (int i = 0; i < n27.order(); ++i)
    for (int j = 0; j < n27.order(); ++j)
      CHECK(n27.elements()[n27.mult(i, j)] ==
            n27.elements()[i] * n27.elements()[j]);
  // inverse indices
  for (int i = 0; i < n27.order(); ++i) CHECK(n27.mult(i, n27.inv(i)) == 0);
}

TEST_CASE("order spectra") {
  CHECK(fr162().order_spectrum() ==
        Spectrum{{1, 1}, {2, 9}, {3, 62}, {6, 18}, {9, 18}, {18, 54}});
  CHECK(fr162x4().order_spectrum() == Spectrum{{1, 1},
                                               {2, 21},
                                               {3, 224},
                                               {4, 18},
                                               {6, 60},
                                               {9, 18},
                                               {12, 36},
                                               {18, 162},
                                               {36, 108}});
  CHECK(sigma().order_spectrum() == Spectrum{{1, 1},
                                             {2, 9},
                                             {3, 170},
                                             {4, 54},
                                             {6, 18},
                                             {9, 72},
                                             {12, 108},
                                             {18, 216}});
  // same order, different spectra: an exact non-isomorphism witness
  CHECK(fr162x4().order_spectrum() != sigma().order_spectrum());
  CHECK(d18().order_spectrum() == fr162x4().order_spectrum());
  CHECK(d9().order_spectrum() == fr162().order_spectrum());
}

TEST_CASE("centers") {
  CHECK(eng::center(fr162()).order() == 3);
  CHECK(eng::center(fr162x4()).order() == 3);
  CHECK(eng::center(d18()).order() == 3);
  CHECK(eng::center(sigma()).order() == 3);
  // center of an abelian group is everything
  const MatrixGroup n27 = eng::generate({cat::matrix_A(), cat::matrix_B()});
  CHECK(eng::center(n27).order() == 27);
}

TEST_CASE("subgroup closure and normality") {
  const MatrixGroup& g = fr162x4();
  const SubgroupHandle ab = eng::subgroup(g, {cat::matrix_A(), cat::matrix_B()});
  CHECK(ab.order() == 27);
  CHECK(eng::is_normal(ab));
  const SubgroupHandle v = eng::subgroup(g, {cat::klein_V()[1], cat::klein_V()[2]});
  CHECK(v.order() == 4);
  CHECK(eng::is_normal(v));
  const SubgroupHandle a = eng::subgroup(g, {cat::matrix_A()});
  CHECK(a.order() == 9);
  CHECK(!eng::is_normal(a));
  // seed outside the group
  CHECK_THROWS_AS(eng::subgroup(g, {cat::sigma_d()}), usage_error);
}

TEST_CASE("subgroup of V semidirect H1 generated by H1 alone is not normal") {
  const MatrixGroup vh = eng::generate({cat::klein_V()[1], cat::klein_V()[2],
                                        cat::h_matrix(1)});
  CHECK(vh.order() == 8);
  const SubgroupHandle h1 = eng::subgroup(vh, {cat::h_matrix(1)});
  CHECK(h1.order() == 2);
  CHECK(!eng::is_normal(h1));
}

TEST_CASE("sylow subgroups") {
  const auto s3f = eng::sylow(fr162(), 3);
  REQUIRE(s3f.size() == 1);
  CHECK(s3f[0].order() == 81);
  CHECK(eng::sylow(fr162x4(), 3).size() == 4);
  CHECK(eng::sylow(fr162x4(), 2).size() == 9);
  CHECK(eng::sylow(fr162(), 2).size() == 9);
  CHECK(eng::sylow(d18(), 3).size() == 4);
  CHECK(eng::sylow(sigma(), 3).size() == 4);
  CHECK(eng::sylow(sigma(), 2).size() == 9);
  CHECK(eng::sylow(d9(), 3).size() == 1);
  CHECK_THROWS_AS(eng::sylow(fr162(), 5), usage_error);
}

TEST_CASE("sylow consistency invariants") {
  for (const MatrixGroup* gp : {&fr162x4(), &sigma()}) {
    const MatrixGroup& g = *gp;
    for (int p : {2, 3}) {
      const auto syl = eng::sylow(g, p);
      int pk = 1;
      for (int n = g.order(); n % p == 0; n /= p) pk *= p;
      for (const auto& h : syl) CHECK(h.order() == pk);
      CHECK(static_cast<int>(syl.size()) % p == 1);
      CHECK((g.order() / pk) % static_cast<int>(syl.size()) == 0);
    }
  }
}

TEST_CASE("group generated by the 3-sylows") {
  const SubgroupHandle s = eng::generated_by_sylows(fr162x4(), 3);
  CHECK(s.order() == 324);
  CHECK(eng::is_normal(s));
  CHECK(fr162x4().order() / s.order() == 2);
  // for Fr(162) the unique 3-Sylow already is the generated subgroup
  CHECK(eng::generated_by_sylows(fr162(), 3).order() == 81);
}

TEST_CASE("set equality of D-series groups") {
  const MatrixGroup d_201 = from_set(cat::d_group(18, 1, 1, 2, 0, 1));
  const MatrixGroup d_200 = from_set(cat::d_group(18, 1, 1, 2, 0, 0));
  CHECK(eng::set_equal(d_201, d_200));
  const MatrixGroup d9_201 = from_set(cat::d_group(9, 1, 1, 2, 0, 1));
  CHECK(eng::set_equal(d9_201, d18()));
  CHECK(eng::set_equal(d18(), d18()));
  CHECK(!eng::set_equal(d9(), d18()));
  CHECK(eng::is_subset(d9(), d18()));
  CHECK(d18().order() / d9().order() == 4);
}

TEST_CASE("conjugation by the orthogonal matrix") {
  const MatrixGroup c1 = eng::conjugate_group(cat::conjugator_O(), fr162x4());
  CHECK(eng::set_equal(c1, d18()));
  const MatrixGroup c2 = eng::conjugate_group(cat::conjugator_O(), fr162());
  CHECK(eng::set_equal(c2, d9()));
  // words stay sound over the conjugated generators
  for (int i = 0; i < c2.order(); i += 11)
    CHECK(c2.eval_word(c2.words()[i]) == c2.elements()[i]);
  const MatrixGroup c3 = eng::conjugate_group(Mat3::identity(72), fr162());
  CHECK(eng::set_equal(c3, fr162()));
}

TEST_CASE("unique factorization") {
  std::vector<Mat3> ai, bj, hs;
  for (int i = 0; i < 9; ++i) ai.push_back(cat::matrix_A().pow(i));
  for (int j = 0; j < 3; ++j) bj.push_back(cat::matrix_B().pow(j));
  hs.push_back(Mat3::identity(72));
  for (int i = 0; i < 5; ++i) hs.push_back(cat::h_matrix(i));
  CHECK(eng::unique_factorization_check(fr162x4(), {ai, bj, cat::klein_V(), hs}));

  std::vector<Mat3> aibj;
  for (const Mat3& a : ai)
    for (const Mat3& b : bj) aibj.push_back(a * b);
  const MatrixGroup h6 = eng::generate({cat::h_matrix(1), cat::h_matrix(3)});
  REQUIRE(h6.order() == 6);
  CHECK(eng::unique_factorization_check(fr162(), {aibj, h6.elements()}));

  CHECK(!eng::unique_factorization_check(
      fr162(), {fr162().elements(), fr162().elements()}));
}

TEST_CASE("isomorphism of the order-162 groups") {
  const MatrixGroup src = eng::generate({cat::matrix_A(), cat::matrix_B(),
                                         cat::h_matrix(1), cat::h_matrix(3)});
  CHECK(eng::set_equal(src, fr162()));
  const Mat3 f = cat::f_matrix(18, 1, 1);
  const Mat3 ffpp2 = (f * cat::fdprime().dagger()).pow(2);
  const Mat3 bte = cat::btilde(72) * cat::e_matrix(72);
  const std::vector<Mat3> images = {f.pow(2), f.pow(12) * ffpp2, bte,
                                    cat::e_matrix(72)};
  CHECK(eng::verify_isomorphism(src, d9(), images));
  // breaking one assignment kills multiplicativity
  const std::vector<Mat3> broken = {f.pow(4), f.pow(12) * ffpp2, bte,
                                    cat::e_matrix(72)};
  CHECK(!eng::verify_isomorphism(src, d9(), broken));
  // image outside the target group
  CHECK_THROWS_AS(
      eng::verify_isomorphism(src, d9(),
                              {cat::sigma_v(), f.pow(12) * ffpp2, bte,
                               cat::e_matrix(72)}),
      usage_error);
}

TEST_CASE("isomorphism of the order-648 groups") {
  const MatrixGroup src = eng::generate(
      {cat::c18(), cat::c6(), cat::h_matrix(1), cat::h_matrix(3)});
  CHECK(eng::set_equal(src, fr162x4()));
  const Mat3 e = cat::e_matrix(72);
  const Mat3 f = cat::f_matrix(18, 1, 1);
  const Mat3 gc18 = f.pow(2) * (e.pow(2) * f * e * f.inverse()).pow(3);
  const Mat3 gc6 = e * gc18 * e.pow(-2) * gc18.pow(8) * e.pow(-2) * gc18.pow(3);
  const Mat3 bte = cat::btilde(72) * e;
  CHECK(eng::verify_isomorphism(src, d18(), {gc18, gc6, bte, e.pow(2)}));
  // identity map
  CHECK(eng::verify_isomorphism(fr162(), fr162(),
                                {cat::braid_g1(), cat::braid_g2()}));
}

TEST_CASE("two-sylow type") {
  CHECK(eng::two_sylow_type(fr162x4()) == "D4");
  CHECK(eng::two_sylow_type(d18()) == "D4");
  CHECK(eng::two_sylow_type(sigma()) == "Q8");
  CHECK_THROWS_AS(eng::two_sylow_type(fr162()), usage_error);
  // the D4 2-Sylow of Fr(162x4) has 5 involutions, Q8's has 1
  const auto syl = eng::sylow(fr162x4(), 2);
  CHECK(syl[0].order_spectrum() == Spectrum{{1, 1}, {2, 5}, {4, 2}});
  const auto syl2 = eng::sylow(sigma(), 2);
  CHECK(syl2[0].order_spectrum() == Spectrum{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("normal chain with index sequence 3,3,3,2,2,3,2") {
  const MatrixGroup& g = fr162x4();
  const Mat3 a = cat::matrix_A();
  const Mat3 b = cat::matrix_B();
  const Mat3 v2 = cat::fum().pow(3);
  const auto v = cat::klein_V();
  std::vector<SubgroupHandle> chain;
  chain.push_back(eng::subgroup(g, {Mat3::identity(72)}));
  chain.push_back(eng::subgroup(g, {a.pow(3)}));
  chain.push_back(eng::subgroup(g, {a}));
  chain.push_back(eng::subgroup(g, {a, b}));
  chain.push_back(eng::subgroup(g, {a, b, v2}));
  chain.push_back(eng::subgroup(g, {a, b, v[1], v[2]}));
  chain.push_back(eng::generated_by_sylows(g, 3));
  std::vector<int> want = {1, 3, 9, 27, 54, 108, 324, 648};
  std::vector<int> idx = {3, 3, 3, 2, 2, 3, 2};
  for (size_t i = 0; i < chain.size(); ++i)
    CHECK(chain[i].order() == want[i]);
  SubgroupHandle whole{&g, {}};
  for (int i = 0; i < g.order(); ++i) whole.members.push_back(i);
  chain.push_back(whole);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(chain[i + 1].order() / chain[i].order() == idx[i]);
    CHECK(eng::is_normal_in(chain[i], chain[i + 1]));
  }
}

TEST_CASE("trivial-intersection invariants") {
  const MatrixGroup& g = fr162x4();
  const SubgroupHandle ab = eng::subgroup(g, {cat::matrix_A(), cat::matrix_B()});
  const SubgroupHandle v = eng::subgroup(g, {cat::klein_V()[1], cat::klein_V()[2]});
  const SubgroupHandle h =
      eng::subgroup(g, {cat::h_matrix(1), cat::h_matrix(3)});
  std::vector<int> meet;
  for (int m : ab.members)
    if (v.contains_index(m)) meet.push_back(m);
  CHECK(meet == std::vector<int>{0});
  const SubgroupHandle abv = eng::subgroup(
      g, {cat::matrix_A(), cat::matrix_B(), cat::klein_V()[1], cat::klein_V()[2]});
  CHECK(abv.order() == 108);
  meet.clear();
  for (int m : abv.members)
    if (h.contains_index(m)) meet.push_back(m);
  CHECK(meet == std::vector<int>{0});
  // A and B commute with both order-2 klein generators
  const Mat3 x = cat::klein_V()[2];
  CHECK(cat::matrix_A() * cat::fum().pow(3) ==
        cat::fum().pow(3) * cat::matrix_A());
  CHECK(cat::matrix_B() * cat::fum().pow(3) ==
        cat::fum().pow(3) * cat::matrix_B());
  CHECK(cat::matrix_A() * x == x * cat::matrix_A());
  CHECK(cat::matrix_B() * x == x * cat::matrix_B());
}

TEST_CASE("automorphism counts of abelian groups") {
  CHECK(eng::aut_count_abelian(18, 6) == 648);
  CHECK(eng::aut_count_abelian(2, 2) == 6);
  CHECK(eng::aut_count_abelian(1, 9) == 6);
  CHECK(eng::aut_count_abelian(1, 1) == 1);
  CHECK(eng::aut_count_abelian(3, 3) == 48);  // |GL2(F3)|
}

TEST_CASE("series inclusion checks") {
  // even-d rows
  CHECK(eng::cd_inclusion_check(2, 0, 1, 9, 1, 1, 2, 0, 1));
  CHECK(eng::cd_inclusion_check(4, 2, 1, 2, 1, 1, 4, 1, 0));
  CHECK(eng::cd_inclusion_check(4, 2, 3, 2, 1, 1, 4, 3, 0));
  CHECK(eng::cd_inclusion_check(2, 0, 0, 9, 1, 1, 2, 1, 1));
  // odd-d rows
  CHECK(eng::cd_inclusion_check(3, 1, 1, 9, 1, 1, 3, 1, 1));
  CHECK(eng::cd_inclusion_check(3, 0, 0, 9, 1, 1, 3, 0, 1));
  CHECK(eng::cd_inclusion_check(2, 0, 0, 9, 1, 1, 2, 0, 1));
  CHECK(eng::cd_inclusion_check(3, 1, 1, 2, 1, 1, 3, 1, 0));
  // the conductor-360 instance
  CHECK(eng::cd_inclusion_check(5, 4, 3, 1, 0, 0, 5, 1, 0));
  // a non-inclusion
  CHECK(!eng::cd_inclusion_check(18, 1, 1, 9, 1, 1, 2, 1, 1));
}

TEST_CASE("membership queries") {
  CHECK(fr162x4().contains(cat::fum()));
  CHECK(fr162x4().contains(cat::c18()));
  CHECK(!d9().contains(cat::w_matrix(4)));
  CHECK(d18().contains(cat::w_matrix(4)));
  CHECK(fr162x4().index_of(Mat3::identity(72)) == 0);
  CHECK(fr162x4().index_of(cat::sigma_v()) == -1);
}
