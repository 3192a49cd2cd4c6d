#include "su3kit/verify_suite.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "su3kit/catalog.hpp"
#include "su3kit/cyclo.hpp"
#include "su3kit/engine.hpp"
#include "su3kit/fp.hpp"
#include "su3kit/mat3.hpp"

namespace su3kit::verify {
namespace {

namespace cat = su3kit::catalog;
namespace eng = su3kit::engine;
namespace pres = su3kit::fp;
using eng::MatrixGroup;
using eng::SubgroupHandle;

// ---------------------------------------------------------------------------
// small helpers

CycloNum ci(long v) { return CycloNum::from_int(v); }
CycloNum ru(long n, long d) { return cat::root_of_unity(n, d); }

std::string ns(long v) { return std::to_string(v); }

std::string spec_str(const std::map<int, int>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [o, c] : s) {
    if (!first) out += ",";
    out += ns(o) + ":" + ns(c);
    first = false;
  }
  return out + "}";
}

std::vector<Mat3> sort_mats(std::vector<Mat3> v) {
  std::sort(v.begin(), v.end(),
            [](const Mat3& x, const Mat3& y) { return x.cmp(y) < 0; });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Mat3& x, const Mat3& y) { return x.cmp(y) == 0; }),
          v.end());
  return v;
}

bool same_mats(const std::vector<Mat3>& a, const std::vector<Mat3>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].cmp(b[i]) != 0) return false;
  return true;
}

std::vector<Mat3> conj_all(const Mat3& p, const std::vector<Mat3>& v) {
  const Mat3 pi = p.inverse();
  std::vector<Mat3> out;
  out.reserve(v.size());
  for (const Mat3& x : v) out.push_back(p * x * pi);
  return out;
}

std::vector<Mat3> coset_right(const std::vector<Mat3>& v, const Mat3& m) {
  std::vector<Mat3> out;
  out.reserve(v.size());
  for (const Mat3& x : v) out.push_back(x * m);
  return out;
}

std::vector<Mat3> handle_mats(const SubgroupHandle& h) {
  std::vector<Mat3> out;
  out.reserve(h.members.size());
  for (int i : h.members) out.push_back(h.parent->elements()[i]);
  return out;
}

// Sorted member-index vectors of a handle list, as a canonical set of sets.
std::vector<std::vector<int>> handle_index_sets(
    const std::vector<SubgroupHandle>& hs) {
  std::vector<std::vector<int>> out;
  for (const auto& h : hs) out.push_back(h.members);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// shared exact matrices

struct Mats {
  Mat3 g1, g2, m, x, y;
  Mat3 a, b, ab2;
  Mat3 h0, h1, h2, h3, h4;
  Mat3 e, bt, f, fpr, fpp, fk;  // fk = (F F''^-1)^2, order 3
  Mat3 c18, c6;
  Mat3 o, w2, w3, w4;
  Mat3 fb;       // F^12 (F F''^-1)^2, the diagonal image of B
  Mat3 gc18, gc6;  // diagonal images of C18 and C6 on the D side
  std::vector<Mat3> V, VD;
};

const Mats& mm() {
  static const Mats k = [] {
    Mats t;
    t.g1 = cat::braid_g1();
    t.g2 = cat::braid_g2();
    t.m = cat::fum();
    t.x = t.g1 * t.m.pow(3) * t.g1.inverse();
    t.y = t.m.pow(3) * t.x;
    t.a = cat::matrix_A();
    t.b = cat::matrix_B();
    t.ab2 = t.a * t.b.pow(2);
    t.h0 = cat::h_matrix(0);
    t.h1 = cat::h_matrix(1);
    t.h2 = cat::h_matrix(2);
    t.h3 = cat::h_matrix(3);
    t.h4 = cat::h_matrix(4);
    t.e = cat::e_matrix();
    t.bt = cat::btilde();
    t.f = cat::f_matrix(18, 1, 1);
    t.fpr = cat::fprime();
    t.fpp = cat::fdprime();
    t.fk = (t.f * t.fpp.inverse()).pow(2);
    t.c18 = cat::c18();
    t.c6 = cat::c6();
    t.o = cat::conjugator_O();
    t.w2 = cat::w_matrix(2);
    t.w3 = cat::w_matrix(3);
    t.w4 = cat::w_matrix(4);
    t.fb = t.f.pow(12) * (t.f * t.fpp.inverse()).pow(2);
    t.gc18 = t.f.pow(2) * (t.e.pow(2) * t.f * t.e * t.f.inverse()).pow(3);
    t.gc6 = Mat3::diag(ru(1, 6), ci(-1), ru(1, 3));
    t.V = cat::klein_V();
    t.VD = cat::klein_VD();
    return t;
  }();
  return k;
}

// ---------------------------------------------------------------------------
// memoized group closures (built on first use; every later item reuses them)

const MatrixGroup& fr() {
  static const MatrixGroup g = [] {
    auto s = cat::fr162x4();
    return eng::generate(s.generators, 10000, s.name);
  }();
  return g;
}

const MatrixGroup& fr9() {
  static const MatrixGroup g = [] {
    auto s = cat::fr162();
    return eng::generate(s.generators, 10000, s.name);
  }();
  return g;
}

const MatrixGroup& d18g() {
  static const MatrixGroup g = [] {
    auto s = cat::d18_1_1_2_1_1();
    return eng::generate(s.generators, 10000, s.name);
  }();
  return g;
}

const MatrixGroup& sig() {
  static const MatrixGroup g = [] {
    auto s = cat::sigma216x3();
    return eng::generate(s.generators, 10000, s.name);
  }();
  return g;
}

const MatrixGroup& cgrp(long n, long a, long b) {
  static std::map<std::string, MatrixGroup> memo;
  const std::string key = ns(n) + "," + ns(a) + "," + ns(b);
  auto it = memo.find(key);
  if (it == memo.end()) {
    auto s = cat::c_group(n, a, b);
    it = memo.emplace(key, eng::generate(s.generators, 10000, s.name)).first;
  }
  return it->second;
}

const MatrixGroup& dgrp(long n, long a, long b, long d, long r, long s) {
  static std::map<std::string, MatrixGroup> memo;
  const std::string key =
      ns(n) + "," + ns(a) + "," + ns(b) + ";" + ns(d) + "," + ns(r) + "," + ns(s);
  auto it = memo.find(key);
  if (it == memo.end()) {
    auto g = cat::d_group(n, a, b, d, r, s);
    it = memo.emplace(key, eng::generate(g.generators, 10000, g.name)).first;
  }
  return it->second;
}

const MatrixGroup& d9g() { return dgrp(9, 1, 1, 2, 1, 1); }

const MatrixGroup& Ngrp() {
  static const MatrixGroup g =
      eng::generate({mm().a, mm().b}, 10000, "N=<A,B>");
  return g;
}

const MatrixGroup& Sgrp() {
  static const MatrixGroup g =
      eng::generate({mm().a, mm().b, mm().h2}, 10000, "S=<A,B,H2>");
  return g;
}

const MatrixGroup& scrF() {
  static const MatrixGroup g =
      eng::generate({mm().f.pow(2), mm().fk}, 10000, "scriptF");
  return g;
}

const MatrixGroup& s3fG() {
  static const MatrixGroup g =
      eng::generate({mm().a, mm().b, mm().h3}, 10000, "S3F");
  return g;
}

const MatrixGroup& s3dG() {
  static const MatrixGroup g =
      eng::generate({mm().f.pow(2), mm().e}, 10000, "S3D");
  return g;
}

const MatrixGroup& syl3FG() {
  static const MatrixGroup g = eng::generate(
      {mm().a, mm().b, mm().h3, mm().V[1], mm().V[2]}, 10000, "3Syl(Fr)");
  return g;
}

const MatrixGroup& nvG() {
  static const MatrixGroup g =
      eng::generate({mm().c18, mm().c6}, 10000, "N.V=<C18,C6>");
  return g;
}

const MatrixGroup& bh2grp() {
  static const MatrixGroup g = eng::generate({mm().b, mm().h2}, 100, "<B,H2>");
  return g;
}

const MatrixGroup& h13grp() {
  static const MatrixGroup g = eng::generate({mm().h1, mm().h3}, 100, "<H1,H3>");
  return g;
}

const MatrixGroup& frAlt() {  // the order-162 group on generators A,B,H1,H3
  static const MatrixGroup g =
      eng::generate({mm().a, mm().b, mm().h1, mm().h3}, 10000, "fr162-abh");
  return g;
}

const MatrixGroup& fr8src() {  // the order-648 group on generators C18,C6,H1,H3
  static const MatrixGroup g = eng::generate(
      {mm().c18, mm().c6, mm().h1, mm().h3}, 10000, "fr648-c18c6");
  return g;
}

const std::vector<SubgroupHandle>& syl3_fr() {
  static const std::vector<SubgroupHandle> v = eng::sylow(fr(), 3);
  return v;
}

const std::vector<SubgroupHandle>& syl3_d18() {
  static const std::vector<SubgroupHandle> v = eng::sylow(d18g(), 3);
  return v;
}

const std::vector<SubgroupHandle>& syl2_fr() {
  static const std::vector<SubgroupHandle> v = eng::sylow(fr(), 2);
  return v;
}

const SubgroupHandle& syl3F_h() {
  static const SubgroupHandle h = eng::generated_by_sylows(fr(), 3);
  return h;
}

const SubgroupHandle& syl3D_h() {
  static const SubgroupHandle h = eng::generated_by_sylows(d18g(), 3);
  return h;
}

// The index-2 subgroup generated by all squares (g/Sq is elementary 2-abelian,
// so Sq lies inside every index-2 subgroup; if Sq itself has index 2 it is the
// unique one).
SubgroupHandle squares_closure(const MatrixGroup& g) {
  std::vector<int> seeds;
  seeds.reserve(g.order());
  for (int i = 0; i < g.order(); ++i) seeds.push_back(g.mult(i, i));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return eng::subgroup_from_indices(g, seeds);
}

bool handle_abelian(const SubgroupHandle& h) {
  for (int i : h.members)
    for (int j : h.members)
      if (h.parent->mult(i, j) != h.parent->mult(j, i)) return false;
  return true;
}

// Derived subgroup of g as a handle (closure of all commutators).
SubgroupHandle derived_subgroup(const MatrixGroup& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> seeds;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c = g.mult(g.mult(i, j), g.mult(g.inv(i), g.inv(j)));
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  std::sort(seeds.begin(), seeds.end());
  return eng::subgroup_from_indices(g, seeds);
}

// The constructive isomorphism from the order-648 group onto D(18,1,1;2,1,1):
// C18 -> diag(e^{-7 i pi/9}, e^{2 i pi/9}, e^{5 i pi/9}), C6 -> the gc6
// diagonal, H1 -> Btilde E, H3 -> E. Memoized; shared by thm7 and thm8.
bool thm8_iso_ok() {
  static const bool ok = [] {
    const Mats& K = mm();
    return eng::verify_isomorphism(fr8src(), d18g(),
                                   {K.gc18, K.gc6, K.bt * K.e, K.e.pow(2)});
  }();
  return ok;
}

// The direct-product structure of S = <A,B,H2>: central <AB^2> of order 9
// times the order-6 nonabelian <B,H2>. Memoized; shared by prop6/cor5/cor6.
bool s_product_ok() {
  static const bool ok = [] {
    const Mats& K = mm();
    std::vector<Mat3> f1;
    for (int i = 0; i < 9; ++i) f1.push_back(K.ab2.pow(i));
    const bool central = (K.h2 * K.ab2 * K.h2.inverse()) == K.ab2;
    const bool six = bh2grp().order() == 6 &&
                     !(K.b * K.h2 == K.h2 * K.b);
    return central && six && K.ab2.element_order() == 9 &&
           eng::unique_factorization_check(Sgrp(), {f1, bh2grp().elements()});
  }();
  return ok;
}

ItemResult res(bool ok, std::string detail) { return {ok, std::move(detail)}; }

void add(std::vector<Item>& v, const char* id, std::function<ItemResult()> f) {
  v.push_back(Item{id, std::move(f)});
}

// ---------------------------------------------------------------------------
// the registry

std::vector<Item> build_items() {
  std::vector<Item> it;

  // ---- theorems ----

  add(it, "thm1.order", [] {
    const int n1 = fr().order(), n2 = fr9().order();
    return res(n1 == 648 && n2 == 162,
               "order(<G1,G2,FUM>) = " + ns(n1) + ", order(<G1,G2>) = " + ns(n2));
  });

  add(it, "thm1.factorization", [] {
    const Mats& K = mm();
    std::vector<Mat3> fa, fb_;
    for (int i = 0; i < 9; ++i) fa.push_back(K.a.pow(i));
    for (int j = 0; j < 3; ++j) fb_.push_back(K.b.pow(j));
    const bool sizes = h13grp().order() == 6 && K.V.size() == 4;
    const bool ok = sizes && eng::unique_factorization_check(
                                 fr(), {fa, fb_, K.V, h13grp().elements()});
    return res(ok,
               "every element is uniquely A^i B^j v h with i<9, j<3, v in the "
               "Klein four-group, h in <H1,H3>; 9*3*4*6 = 648");
  });

  add(it, "thm1.presentation", [] {
    const auto p1 = pres::fr162x4_presentation();
    const auto a1 = pres::fr162x4_assignment();
    const auto p2 = pres::d_action_presentation();
    const auto a2 = pres::d_action_assignment();
    const auto p3 = pres::fr162_presentation();
    const auto a3 = pres::fr162_assignment();
    const bool rel = pres::check_presentation(p1, a1).empty() &&
                     pres::check_presentation(p2, a2).empty() &&
                     pres::check_presentation(p3, a3).empty();
    const int n1 = pres::todd_coxeter(p1);
    const int n2 = pres::todd_coxeter(p2);
    const int n3 = pres::todd_coxeter(p3);
    return res(rel && n1 == 648 && n2 == 648 && n3 == 162,
               "all relators hold on the matrix generators; coset enumeration "
               "closes at 648 (C18/C6/H1/H3), 648 (F/F'/F''/E/Btilde), 162 "
               "(A/B/H1/H3)");
  });

  add(it, "thm1.sylow", [] {
    const auto& syl = syl3_fr();
    bool orders = true;
    for (const auto& h : syl) orders = orders && h.order() == 81;
    return res(syl.size() == 4 && orders && syl3F_h().order() == 324,
               ns(syl.size()) + " Sylow-3 subgroups of order 81; together they "
               "generate the order-324 subgroup");
  });

  add(it, "thm1.conjugacy", [] {
    const Mats& K = mm();
    const bool orth = (K.o * K.o.transpose()).is_identity();
    const bool conj = eng::set_equal(eng::conjugate_group(K.o, fr()), d18g());
    return res(orth && conj,
               "O is real orthogonal and O <G1,G2,FUM> O^T = D(18,1,1;2,1,1) "
               "as matrix sets");
  });

  add(it, "thm1.kernel", [] {
    const Mats& K = mm();
    const auto nv = eng::subgroup(fr(), {K.a, K.b, K.V[1], K.V[2]});
    std::vector<Mat3> f18, f6;
    for (int i = 0; i < 18; ++i) f18.push_back(K.c18.pow(i));
    for (int j = 0; j < 6; ++j) f6.push_back(K.c6.pow(j));
    const bool ufc = eng::unique_factorization_check(nvG(), {f18, f6});
    const bool match = same_mats(sort_mats(handle_mats(nv)),
                                 sort_mats(nvG().elements()));
    const bool ok = nvG().order() == 108 && match && ufc &&
                    K.c18.element_order() == 18 && K.c6.element_order() == 6 &&
                    K.c18 * K.c6 == K.c6 * K.c18;
    return res(ok,
               "the diagonalizable kernel N.V = <A,B> x Klein = <C18> x <C6> "
               "~ Z18 x Z6 (order 108, unique factorization)");
  });

  add(it, "thm2", [] {
    const Mats& K = mm();
    const bool same = eng::set_equal(frAlt(), fr9());
    const bool iso = eng::verify_isomorphism(
        frAlt(), d9g(), {K.f.pow(2), K.fb, K.bt * K.e, K.e});
    return res(same && iso,
               "<G1,G2> = <A,B,H1,H3> and is isomorphic to D(9,1,1;2,1,1) "
               "(order 162)");
  });

  add(it, "thm3", [] {
    const auto syl = eng::sylow(fr9(), 3);
    const Mats& K = mm();
    if (syl.size() != 1) return res(false, "expected a unique Sylow-3 subgroup");
    const auto u =
        sort_mats([&] {
          std::vector<Mat3> v = Ngrp().elements();
          auto c1 = coset_right(Ngrp().elements(), K.h3);
          auto c2 = coset_right(Ngrp().elements(), K.h3.pow(2));
          v.insert(v.end(), c1.begin(), c1.end());
          v.insert(v.end(), c2.begin(), c2.end());
          return v;
        }());
    const bool ok = syl[0].order() == 81 && u.size() == 81 &&
                    same_mats(u, sort_mats(handle_mats(syl[0])));
    return res(ok,
               "the order-162 group has a unique Sylow-3 subgroup, "
               "N + N H3 + N H3^2 of order 81");
  });

  add(it, "thm4", [] {
    const auto syl = eng::sylow(d9g(), 3);
    const Mats& K = mm();
    if (syl.size() != 1) return res(false, "expected a unique Sylow-3 subgroup");
    const auto u =
        sort_mats([&] {
          std::vector<Mat3> v = scrF().elements();
          auto c1 = coset_right(scrF().elements(), K.e);
          auto c2 = coset_right(scrF().elements(), K.e.pow(2));
          v.insert(v.end(), c1.begin(), c1.end());
          v.insert(v.end(), c2.begin(), c2.end());
          return v;
        }());
    const bool deco = syl[0].order() == 81 && u.size() == 81 &&
                      same_mats(u, sort_mats(handle_mats(syl[0])));
    const bool c911 = eng::set_equal(s3dG(), cgrp(9, 1, 1));
    return res(deco && c911,
               "D(9,1,1;2,1,1) has a unique Sylow-3 subgroup scriptF + "
               "scriptF E + scriptF E^2, and it equals C(9,1,1)");
  });

  add(it, "thm5", [] {
    const size_t nf = syl3_fr().size(), nd = syl3_d18().size();
    return res(nf == 4 && nd == 4,
               "Sylow-3 counts: " + ns(nf) + " in the order-648 braid-side "
               "group, " + ns(nd) + " in D(18,1,1;2,1,1)");
  });

  add(it, "thm6", [] {
    const Mats& K = mm();
    const bool iso = eng::verify_isomorphism(
        frAlt(), d9g(), {K.f.pow(2), K.fb, K.bt * K.e, K.e});
    bool wrong = true;  // negative control: A -> F^4 does not extend
    try {
      wrong = eng::verify_isomorphism(frAlt(), d9g(),
                                      {K.f.pow(4), K.fb, K.bt * K.e, K.e});
    } catch (const std::exception&) {
      wrong = false;
    }
    return res(iso && !wrong,
               "A -> F^2, B -> F^12 (F F''^-1)^2, H1 -> Btilde E, H3 -> E is "
               "an isomorphism onto D(9,1,1;2,1,1) (all 162^2 products); "
               "A -> F^4 is rejected");
  });

  add(it, "thm7", [] {
    return res(thm8_iso_ok(),
               "the order-648 braid-side group is isomorphic to "
               "D(18,1,1;2,1,1); witnessed by the constructive generator map "
               "of the explicit-map item");
  });

  add(it, "thm8", [] {
    const Mats& K = mm();
    const bool img18 =
        K.gc18 == Mat3::diag(ru(-7, 18), ru(1, 9), ru(5, 18));
    const bool src = eng::set_equal(fr8src(), fr());
    return res(img18 && src && thm8_iso_ok(),
               "g(C18) = F^2 (E^2 F E F^-1)^3 = diag(e^{-7 i pi/9}, "
               "e^{2 i pi/9}, e^{5 i pi/9}), g(C6) = diag(e^{i pi/3}, -1, "
               "e^{2 i pi/3}), g(H1) = Btilde E, g(H3) = E^2; verified over "
               "all 648^2 products");
  });

  add(it, "thm9", [] {
    const std::string tf = eng::two_sylow_type(fr());
    const std::string ts = eng::two_sylow_type(sig());
    const bool spectra = eng::order_spectrum(fr()) != eng::order_spectrum(sig());
    return res(tf == "D4" && ts == "Q8" && spectra,
               "Sylow-2 type D4 vs " + ts + " and distinct order spectra: the "
               "two order-648 groups are not isomorphic");
  });

  add(it, "thm10.candidates", [] {
    const Mats& K = mm();
    std::vector<Mat3> diag;
    std::set<int> orders;
    for (int i = 0; i < d18g().order(); ++i)
      if (d18g().elements()[i].is_diagonal()) {
        diag.push_back(d18g().elements()[i]);
        orders.insert(d18g().element_order(i));
      }
    const MatrixGroup dg =
        eng::generate({K.f, K.f * K.fpp.inverse()}, 10000, "diag(D18)");
    std::vector<Mat3> f18, f6;
    for (int i = 0; i < 18; ++i) f18.push_back(K.f.pow(i));
    for (int j = 0; j < 6; ++j) f6.push_back((K.f * K.fpp.inverse()).pow(j));
    const bool ufc = eng::unique_factorization_check(dg, {f18, f6});
    const bool match =
        same_mats(sort_mats(diag), sort_mats(dg.elements()));
    std::string olist;
    for (int o : orders) olist += (olist.empty() ? "" : ",") + ns(o);
    const std::set<int> expect = {1, 2, 3, 6, 9, 18};
    return res(diag.size() == 108 && match && ufc && orders == expect,
               "the diagonal part of D(18,1,1;2,1,1) is <F> x <F F''^-1> ~ "
               "Z18 x Z6 with element orders {" + olist + "}; the surviving "
               "diagonal-order candidates n in {2,3,6,9,18} (4, 12 and 36 are "
               "excluded by the C(4)/C(12)/C(36) items)");
  });

  add(it, "thm10.identical", [] {
    const bool ok = d18g().order() == 648 &&
                    eng::set_equal(dgrp(18, 1, 1, 2, 0, 1), d18g()) &&
                    eng::set_equal(dgrp(18, 1, 1, 2, 0, 0), d18g()) &&
                    eng::set_equal(dgrp(9, 1, 1, 2, 0, 1), d18g()) &&
                    eng::set_equal(dgrp(9, 1, 1, 2, 0, 0), d18g());
    return res(ok,
               "D(18,1,1;2,1,1) = D(18,1,1;2,0,1) = D(18,1,1;2,0,0) = "
               "D(9,1,1;2,0,1) = D(9,1,1;2,0,0) as matrix sets (order 648)");
  });

  add(it, "thm11", [] {
    const Mats& K = mm();
    // Every C-group splits as (diagonal part) x| <E> with the diagonal part
    // abelian of index 3; witnesses:
    bool witness = true;
    for (const MatrixGroup* w :
         {&cgrp(2, 0, 1), &cgrp(18, 1, 1), &cgrp(36, 1, 1)}) {
      std::vector<int> inv;
      for (int i = 0; i < w->order(); ++i)
        if (w->element_order(i) == 2) inv.push_back(i);
      for (int i : inv)
        for (int j : inv)
          if (w->mult(i, j) != w->mult(j, i)) witness = false;
      int ndiag = 0;
      for (const Mat3& x : w->elements())
        if (x.is_diagonal()) ++ndiag;
      witness = witness && 3 * ndiag == w->order();
    }
    // The braid-side group has no abelian normal subgroup of index 3: its
    // derived subgroup has index 6 with cyclic quotient, so the index-3
    // normal subgroup is unique, and it is nonabelian.
    const auto der = derived_subgroup(fr());
    std::vector<int> mseed = der.members;
    mseed.push_back(fr().index_of(K.h1));
    const auto m3 = eng::subgroup_from_indices(fr(), mseed);
    std::vector<char> inD(fr().order(), 0);
    for (int i : der.members) inD[i] = 1;
    int maxc = 0;
    for (int i = 0; i < fr().order(); ++i) {
      int j = i, c = 1;
      while (!inD[j]) {
        j = fr().mult(j, i);
        ++c;
      }
      maxc = std::max(maxc, c);
    }
    const bool unique3 = der.order() == 108 && maxc == 6 &&
                         m3.order() == 216 && eng::is_normal(m3) &&
                         !handle_abelian(m3);
    const bool noncomm = !(K.h1 * K.h2 == K.h2 * K.h1);
    return res(witness && unique3 && noncomm,
               "in C-group witnesses (C(2,0,1), C(18,1,1), C(36,1,1)) the "
               "involutions commute and the diagonal part is abelian of index "
               "3; the braid-side group's unique index-3 normal subgroup "
               "(order 216 above the order-108 derived subgroup, cyclic "
               "quotient Z6) is nonabelian, and H1 H2 != H2 H1");
  });

  add(it, "thm12", [] {
    bool ok = true;
    std::string parts;
    for (const MatrixGroup* g : {&fr(), &sig()}) {
      const auto z = eng::center(*g);
      const auto zm = sort_mats(handle_mats(z));
      const bool zok = same_mats(
          zm, sort_mats({Mat3::identity(), Mat3::scalar(ru(1, 3)),
                         Mat3::scalar(ru(2, 3))}));
      const auto sq = squares_closure(*g);
      bool nonab = false;
      for (int i = 0; i < g->order() && !nonab; ++i)
        for (int j = i + 1; j < g->order(); ++j)
          if (g->mult(i, j) != g->mult(j, i)) {
            nonab = true;
            break;
          }
      bool branch;
      if (sq.order() == g->order()) {
        branch = true;  // no index-2 subgroup at all
        parts += g->name() + ": squares generate everything; ";
      } else {
        branch = 2 * sq.order() == g->order() && !handle_abelian(sq);
        parts += g->name() + ": unique index-2 subgroup nonabelian; ";
      }
      ok = ok && zok && nonab && branch;
    }
    return res(ok,
               "both order-648 groups have scalar center {I, wI, w^2I} and " +
                   parts +
                   "a U(2) subgroup with scalar center of odd order maps onto "
                   "a rotation group, forcing abelian (cyclic image), an "
                   "abelian index-2 subgroup (dihedral image) or image order "
                   "in {12,24,60}; 648/3 = 216 rules all out");
  });

  add(it, "thm13", [] {
    const Mats& K = mm();
    const auto t = conj_all(K.o, Sgrp().elements());
    int fixed = -1;
    for (int c = 0; c < 3 && fixed < 0; ++c) {
      bool all = true;
      for (const Mat3& x : t) {
        for (int k = 0; k < 3; ++k)
          if (k != c && (!x.at(c, k).is_zero() || !x.at(k, c).is_zero()))
            all = false;
        if (!all) break;
      }
      if (all) fixed = c;
    }
    return res(Sgrp().order() == 54 && fixed >= 0 && s_product_ok(),
               "O S O^T (54 matrices) all fix coordinate " + ns(fixed + 1) +
                   " (zero off-diagonal row/column there): S is of B-type, "
                   "and S ~ Z9 x S3 by the direct-product item");
  });

  add(it, "thm14", [] {
    const Mats& K = mm();
    const bool orth = (K.o * K.o.transpose()).is_identity();
    const bool big = eng::set_equal(eng::conjugate_group(K.o, fr()), d18g());
    const bool small = eng::set_equal(eng::conjugate_group(K.o, fr9()), d9g());
    const Mat3 ot = K.o.transpose();
    const bool els = (K.o * K.h3 * ot) == K.e && (K.o * K.h1 * ot) == K.bt * K.e &&
                     (K.o * K.V[1] * ot) == K.w3 && (K.o * K.V[2] * ot) == K.w4;
    return res(orth && big && small && els,
               "O O^T = I; O conjugates the order-648 braid-side group onto "
               "D(18,1,1;2,1,1) and the order-162 subgroup onto D(9,1,1;2,1,1); "
               "O H3 O^T = E, O H1 O^T = Btilde E, O FUM^3 O^T = W3, "
               "O X O^T = W4");
  });

  // ---- lemmas ----

  add(it, "lemma1", [] {
    const Mats& K = mm();
    std::vector<int> cross;
    for (int i = 0; i < fr().order(); ++i)
      if (fr().elements()[i].is_cross()) cross.push_back(i);
    std::vector<char> isc(fr().order(), 0);
    for (int i : cross) isc[i] = 1;
    bool closed = true;
    for (int i : cross) {
      if (!isc[fr().inv(i)]) closed = false;
      for (int j : cross)
        if (!isc[fr().mult(i, j)]) closed = false;
    }
    return res(K.a.is_cross() && K.b.is_cross() && closed,
               "A and B are cross matrices; the " + ns(cross.size()) +
                   " cross matrices in the order-648 group are closed under "
                   "product and inverse");
  });

  add(it, "lemma2", [] {
    const Mats& K = mm();
    const auto s3 = eng::subgroup(fr9(), {K.a, K.b, K.h3});
    std::vector<char> in(fr9().order(), 0);
    for (int i : s3.members) in[i] = 1;
    bool ok = s3.order() == 81;
    for (int i = 0; i < fr9().order(); ++i)
      if (!in[i] && !in[fr9().mult(i, i)]) ok = false;
    return res(ok,
               "for every element x of the order-162 group outside its "
               "Sylow-3 subgroup, x^2 lies in the Sylow-3 subgroup");
  });

  add(it, "lemma3", [] {
    const Mats& K = mm();
    const auto s3 = eng::subgroup(d9g(), {K.f.pow(2), K.e});
    bool ok = s3.order() == 81;
    int odd = 0;
    for (int i = 0; i < d9g().order(); ++i)
      if (d9g().element_order(i) % 2 == 1) {
        ++odd;
        if (!s3.contains_index(i)) ok = false;
      }
    return res(ok, "all " + ns(odd) +
                       " odd-order elements of D(9,1,1;2,1,1) lie in its "
                       "Sylow-3 subgroup");
  });

  add(it, "lemma4", [] {
    const Mats& K = mm();
    const auto z1 = eng::center(s3fG());
    std::vector<Mat3> o3a;
    for (int i : z1.members)
      if (s3fG().element_order(i) == 3)
        o3a.push_back(s3fG().elements()[i]);
    const bool frside = same_mats(sort_mats(o3a),
                                  sort_mats({K.a.pow(3), K.a.pow(6)}));
    const auto z2 = eng::center(s3dG());
    std::vector<Mat3> o3d;
    for (int i : z2.members)
      if (s3dG().element_order(i) == 3)
        o3d.push_back(s3dG().elements()[i]);
    const bool dside = same_mats(sort_mats(o3d),
                                 sort_mats({K.f.pow(6), K.f.pow(12)}));
    return res(frside && dside,
               "order-3 central elements: {A^3, A^6} in the braid-side "
               "Sylow-3 subgroup, {F^6, F^12} = {wI, w^2I} on the D side");
  });

  add(it, "lemma5", [] {
    const Mats& K = mm();
    std::vector<std::vector<int>> sets;
    for (const Mat3& v : K.V) {
      const auto c = conj_all(v, s3fG().elements());
      std::vector<int> idx;
      for (const Mat3& x : c) idx.push_back(fr().index_of(x));
      std::sort(idx.begin(), idx.end());
      sets.push_back(idx);
    }
    std::sort(sets.begin(), sets.end());
    const bool distinct =
        std::adjacent_find(sets.begin(), sets.end()) == sets.end();
    return res(distinct && sets == handle_index_sets(syl3_fr()),
               "the four Sylow-3 subgroups of the order-648 braid-side group "
               "are exactly the Klein-four conjugates of <A,B,H3>");
  });

  add(it, "lemma6", [] {
    const Mats& K = mm();
    std::vector<std::vector<int>> sets;
    for (const Mat3& p :
         {Mat3::identity(), K.f, K.e * K.f, K.e.pow(2) * K.f}) {
      const auto c = conj_all(p, s3dG().elements());
      std::vector<int> idx;
      for (const Mat3& x : c) idx.push_back(d18g().index_of(x));
      std::sort(idx.begin(), idx.end());
      sets.push_back(idx);
    }
    std::sort(sets.begin(), sets.end());
    const bool distinct =
        std::adjacent_find(sets.begin(), sets.end()) == sets.end();
    return res(distinct && sets == handle_index_sets(syl3_d18()),
               "the four Sylow-3 subgroups of D(18,1,1;2,1,1) are the "
               "conjugates of S3D by I, F, EF and E^2 F");
  });

  add(it, "lemma7", [] {
    const Mats& K = mm();
    const Mat3 m1 = K.f * K.e * K.f.inverse() * K.e.pow(2);
    const Mat3 m2 = K.e.pow(2) * K.f * K.e * K.f.inverse();
    const bool ord = m1.element_order() == 6 && m2.element_order() == 6;
    const bool cubes = same_mats(sort_mats({m1.pow(3), m2.pow(3)}),
                                 sort_mats({K.w2, K.w3})) &&
                       m1.pow(3) * m2.pow(3) == K.w4;
    std::vector<int> vd;
    for (const Mat3& w : K.VD) vd.push_back(d18g().index_of(w));
    std::sort(vd.begin(), vd.end());
    bool inSyl = true;
    for (int i : vd) inSyl = inSyl && syl3D_h().contains_index(i);
    const auto vh = eng::subgroup_from_indices(d18g(), vd);
    return res(ord && cubes && inSyl && eng::is_normal(vh),
               "F E F^-1 E^2 and E^2 F E F^-1 have order 6; their cubes are "
               "{W2, W3} with product W4; the Klein group {I,W2,W3,W4} lies "
               "in the Sylow-3 closure and is normal in D(18,1,1;2,1,1)");
  });

  add(it, "lemma8", [] {
    const Mats& K = mm();
    std::vector<std::vector<int>> sets;
    for (const Mat3& w : K.VD) {
      const auto c = conj_all(w, s3dG().elements());
      std::vector<int> idx;
      for (const Mat3& x : c) idx.push_back(d18g().index_of(x));
      std::sort(idx.begin(), idx.end());
      sets.push_back(idx);
    }
    std::sort(sets.begin(), sets.end());
    const bool distinct =
        std::adjacent_find(sets.begin(), sets.end()) == sets.end();
    return res(distinct && sets == handle_index_sets(syl3_d18()),
               "the four Sylow-3 subgroups of D(18,1,1;2,1,1) are equally the "
               "conjugates of S3D by the Klein matrices I, W2, W3, W4");
  });

  add(it, "lemma9", [] {
    const std::map<int, int> d4 = {{1, 1}, {2, 5}, {4, 2}};
    bool ok = !syl2_fr().empty();
    for (const auto& h : syl2_fr())
      ok = ok && h.order() == 8 && h.order_spectrum() == d4;
    return res(ok, "all " + ns(syl2_fr().size()) +
                       " Sylow-2 subgroups of the braid-side group have order "
                       "spectrum {1:1,2:5,4:2}, the dihedral D4 signature");
  });

  add(it, "lemma10", [] {
    const Mats& K = mm();
    const auto vh1 = eng::subgroup(fr(), {K.V[1], K.V[2], K.h1});
    const std::map<int, int> d4 = {{1, 1}, {2, 5}, {4, 2}};
    const Mat3 w = K.V[1] * K.h1 * K.V[1].inverse();
    const bool notnormal = !(w == K.h1) && !w.is_identity();
    return res(vh1.order() == 8 && vh1.order_spectrum() == d4 && notnormal,
               "<Klein, H1> is a Sylow-2 subgroup with spectrum {1:1,2:5,4:2} "
               "in which <H1> is not normal; in Q8 every subgroup is normal, "
               "so it is D4");
  });

  add(it, "lemma11", [] {
    const auto spec = eng::order_spectrum(fr());
    bool ok = true;
    for (int k : {24, 27, 54, 72, 108}) ok = ok && spec.count(k) == 0;
    return res(ok,
               "the order-648 braid-side group has no elements of order 24, "
               "27, 54, 72 or 108; spectrum " + spec_str(spec));
  });

  add(it, "lemma12", [] {
    const bool r1 = eng::is_subset(cgrp(2, 0, 1), dgrp(9, 1, 1, 2, 0, 1));
    const bool r2 = eng::is_subset(cgrp(2, 0, 0), d9g());
    const bool r3 = eng::cd_inclusion_check(4, 2, 3, 2, 0, 1, 4, 3, 1);
    return res(r1 && r2 && r3,
               "even-d inclusion rows: C(2,0,1) in D(9,1,1;2,0,1) (r = "
               "d/2 - 1), C(2,0,0) in D(9,1,1;2,1,1) (r = d/2), C(4,2,3) in "
               "D(2,0,1;4,3,1) (r = d/2 + 1)");
  });

  add(it, "lemma13", [] {
    const bool r1 = eng::cd_inclusion_check(3, 1, 1, 9, 1, 1, 3, 1, 1);
    const bool r2 = eng::is_subset(cgrp(2, 0, 0), dgrp(9, 1, 1, 2, 0, 1));
    const bool r3 = eng::cd_inclusion_check(3, 2, 2, 9, 1, 1, 3, 2, 1);
    return res(r1 && r2 && r3,
               "odd-d inclusion rows: C(3,1,1) in D(9,1,1;3,1,1) (d = 3, "
               "r = 1, also the floor(d/2) row), C(2,0,0) in D(9,1,1;2,0,1) "
               "(r = 0), C(3,2,2) in D(9,1,1;3,2,1) (r = floor(3d/4))");
  });

  add(it, "lemma14", [] {
    const Mats& K = mm();
    std::vector<Mat3> inv;
    for (int i = 0; i < Sgrp().order(); ++i)
      if (Sgrp().element_order(i) == 2) inv.push_back(Sgrp().elements()[i]);
    const bool ok = same_mats(
        sort_mats(inv),
        sort_mats({K.h2, K.b * K.h2, K.b.pow(2) * K.h2}));
    return res(ok,
               "S = <A,B,H2> has exactly three involutions: H2, B H2, B^2 H2");
  });

  add(it, "lemma15", [] {
    const Mats& K = mm();
    std::vector<Mat3> fixed9;
    for (int i = 0; i < Sgrp().order(); ++i) {
      const Mat3& x = Sgrp().elements()[i];
      if (Sgrp().element_order(i) == 9 && K.h2 * x * K.h2 == x)
        fixed9.push_back(x);
    }
    const std::vector<Mat3> expect = sort_mats(
        {K.a * K.b.pow(2), K.a.pow(2) * K.b, K.a.pow(4) * K.b.pow(2),
         K.a.pow(5) * K.b, K.a.pow(7) * K.b.pow(2), K.a.pow(8) * K.b});
    const auto z = eng::center(Sgrp());
    std::vector<Mat3> z9;
    for (int i : z.members)
      if (Sgrp().element_order(i) == 9) z9.push_back(Sgrp().elements()[i]);
    const bool ok = same_mats(sort_mats(fixed9), expect) &&
                    same_mats(sort_mats(z9), expect);
    return res(ok,
               "the H2-invariant order-9 elements of S are exactly A B^2, "
               "A^2 B, A^4 B^2, A^5 B, A^7 B^2, A^8 B -- the order-9 part of "
               "Z(S)");
  });

  add(it, "lemma16", [] {
    const Mats& K = mm();
    bool diag = true;
    for (const Mat3& n : Ngrp().elements())
      diag = diag && (K.o * n * K.o.transpose()).is_diagonal();
    const bool nmap = same_mats(
        sort_mats(conj_all(K.o, Ngrp().elements())),
        sort_mats(scrF().elements()));
    bool traces = true;
    for (const Mat3& w : K.VD)
      for (int k : {1, 2}) {
        const Mat3 t = w * K.e.pow(k) * w;
        for (const Mat3& d : scrF().elements())
          traces = traces && (d * t).trace().is_zero();
      }
    const bool trs = !K.a.trace().is_zero() && K.b.trace().is_zero() &&
                     !(K.a * K.b).trace().is_zero();
    return res(diag && nmap && traces && trs,
               "O simultaneously diagonalizes N onto scriptF; every element "
               "of the cosets scriptF W E^k W (k = 1,2, W Klein) has trace 0, "
               "while tr(A) != 0, tr(B) = 0, tr(AB) != 0");
  });

  // ---- corollaries ----

  add(it, "cor1", [] {
    const Mats& K = mm();
    bool ok = true;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 3; ++j)
        ok = ok && (K.a.pow(i) * K.b.pow(j)).is_cross();
    ok = ok && !K.h3.is_cross() && !K.h3.pow(2).is_cross();
    return res(ok,
               "all 27 products A^i B^j are cross matrices; H3 and H3^2 are "
               "not");
  });

  add(it, "cor2", [] {
    const Mats& K = mm();
    const auto s3 = eng::subgroup(fr9(), {K.a, K.b, K.h3});
    const bool in3 = s3.contains_index(fr9().index_of(K.h3)) &&
                     s3.contains_index(fr9().index_of(K.h3.pow(2)));
    const bool h4sq = K.h4 == K.h3.pow(2);
    const bool coset = same_mats(
        sort_mats(coset_right(Ngrp().elements(), K.h3.pow(2))),
        sort_mats(coset_right(Ngrp().elements(), K.h4)));
    return res(in3 && h4sq && coset,
               "H3 and H3^2 lie in the Sylow-3 subgroup; H4 = H3^2 exactly, "
               "so N H4 = N H3^2");
  });

  add(it, "cor3", [] {
    const auto& h = syl3F_h();
    const auto nv = eng::subgroup(fr(), {mm().a, mm().b, mm().V[1], mm().V[2]});
    const bool series = eng::is_normal_in(nv, h) && eng::is_normal(h) &&
                        h.order() == 3 * nv.order() &&
                        fr().order() == 2 * h.order();
    return res(h.order() == 324 && series,
               "the Sylow-3 closure has order 324 and index 2; the chain "
               "N.V (108) < Sylow-3 closure (324) < full group (648) has "
               "normal steps with prime indices 3 and 2");
  });

  add(it, "cor4", [] {
    const Mats& K = mm();
    const auto& h = syl3D_h();
    const auto vs = eng::subgroup(
        d18g(), {K.w2, K.w3, K.f.pow(2), K.e});
    const bool gen = vs.members == h.members;
    const auto nvd = eng::subgroup(d18g(), {K.w2, K.w3, K.f.pow(2), K.fk});
    bool alldiag = true;
    for (int i : nvd.members)
      alldiag = alldiag && d18g().elements()[i].is_diagonal();
    const MatrixGroup nvdg = eng::generate(
        {K.w2, K.w3, K.f.pow(2), K.fk}, 10000, "V_D.scriptF");
    const bool ufc = eng::unique_factorization_check(
        nvdg, {K.VD, scrF().elements()});
    const bool series = eng::is_normal_in(nvd, h) && eng::is_normal(h) &&
                        h.order() == 3 * nvd.order() &&
                        d18g().order() == 2 * h.order();
    return res(h.order() == 324 && gen && nvd.order() == 108 && alldiag &&
                   ufc && series,
               "on the D side the Sylow-3 closure <V_D, S3D> has order 324 "
               "and index 2; its diagonal part V_D x scriptF ~ Z2^2 x Z9 x Z3 "
               "(order 108, unique factorization) starts a normal chain with "
               "prime indices 3 and 2");
  });

  add(it, "cor5", [] {
    std::vector<Mat3> sInv;
    for (int i = 0; i < Sgrp().order(); ++i)
      if (Sgrp().element_order(i) == 2) sInv.push_back(Sgrp().elements()[i]);
    // Concrete model of Z3 x D9: a rotation by 2 pi/9 embedded in the plane,
    // a reflection, and the scalar w.
    const CycloNum half = CycloNum::from_rational(mpq_class(1, 2));
    const CycloNum c = (ru(1, 9) + ru(-1, 9)) * half;
    const CycloNum s =
        (ru(1, 9) - ru(-1, 9)) * half * cyclo_i().inverse();
    Mat3 rot;
    rot.at(0, 0) = c;
    rot.at(0, 1) = -s;
    rot.at(1, 0) = s;
    rot.at(1, 1) = c;
    rot.at(2, 2) = ci(1);
    const Mat3 refl = Mat3::diag(ci(1), ci(-1), ci(1));
    const MatrixGroup model = eng::generate(
        {rot, refl, Mat3::scalar(ru(1, 3))}, 1000, "Z3xD9");
    int minv = 0;
    for (int i = 0; i < model.order(); ++i)
      if (model.element_order(i) == 2) ++minv;
    return res(Sgrp().order() == 54 && sInv.size() == 3 &&
                   model.order() == 54 && minv == 9 && s_product_ok(),
               "S has 3 involutions while a concrete Z3 x D9 of order 54 has "
               "9, so S is the other nonabelian order-54 option Z9 x S3, "
               "realized by the direct-product item");
  });

  add(it, "cor6", [] {
    const Mats& K = mm();
    const auto nh = eng::subgroup(Sgrp(), {K.a, K.b});
    const bool semi =
        nh.order() == 27 && eng::is_normal(nh) &&
        eng::unique_factorization_check(
            Sgrp(), {Ngrp().elements(), {Mat3::identity(), K.h2}});
    std::vector<Mat3> fa, fbv;
    for (int i = 0; i < 9; ++i) fa.push_back(K.a.pow(i));
    for (int j = 0; j < 3; ++j) fbv.push_back(K.b.pow(j));
    const bool nzz = eng::unique_factorization_check(Ngrp(), {fa, fbv});
    return res(semi && nzz && s_product_ok(),
               "S realizes both abstract shapes: (Z9 x Z3) x| Z2 as N x| "
               "<H2>, and Z9 x (Z3 x| Z2) as <A B^2> x <B,H2>; hence the two "
               "semidirect products are isomorphic");
  });

  add(it, "cor7", [] {
    const Mats& K = mm();
    const bool ok = same_mats(sort_mats(conj_all(K.o, Ngrp().elements())),
                              sort_mats(scrF().elements()));
    return res(ok, "O N O^T = scriptF as 27-element matrix sets");
  });

  // ---- propositions ----

  add(it, "prop1", [] {
    const bool i1 = eng::is_subset(cgrp(9, 1, 1), cgrp(18, 1, 1));
    const bool i2 = eng::is_subset(cgrp(9, 1, 1), cgrp(18, 10, 1));
    const bool i3 = eng::is_subset(cgrp(3, 1, 1), cgrp(9, 1, 1));
    return res(i1 && i2 && i3,
               "series inclusions: C(9,1,1) in C(18,1,1) and in C(18,10,1) "
               "(doubling rules, abar = a and abar = a - k), C(3,1,1) in "
               "C(9,1,1) (tripling rule)");
  });

  add(it, "prop2", [] {
    const Mats& K = mm();
    const bool eq = eng::set_equal(cgrp(2, 0, 1), cgrp(2, 1, 0)) &&
                    eng::set_equal(cgrp(2, 0, 1), cgrp(2, 1, 1));
    bool klein = true;
    for (const Mat3& w : K.VD) klein = klein && cgrp(2, 0, 1).contains(w);
    return res(eq && klein && cgrp(2, 0, 1).order() == 12,
               "C(2,0,1) = C(2,1,0) = C(2,1,1) (order 12) and contains the "
               "Klein group {I,W2,W3,W4}");
  });

  add(it, "prop3", [] {
    int ndiag = 0;
    for (const Mat3& x : cgrp(4, 1, 1).elements())
      if (x.is_diagonal()) ++ndiag;
    const bool ok = cgrp(4, 1, 1).order() == 48 && 648 % 48 != 0 &&
                    ndiag == 16 && 108 % 16 != 0 &&
                    !eng::is_subset(cgrp(4, 1, 1), d18g());
    return res(ok,
               "C(4,1,1) has order 48 with diagonal part of order 16; 48 does "
               "not divide 648 and 16 does not divide 108, so no D-group "
               "realizing the order-648 structure contains it");
  });

  add(it, "prop4", [] {
    const bool ok = eng::is_subset(cgrp(4, 1, 1), cgrp(12, 1, 1)) &&
                    cgrp(12, 1, 1).order() == 144 && 648 % 144 != 0 &&
                    !eng::is_subset(cgrp(12, 1, 1), d18g());
    return res(ok,
               "C(4,1,1) in C(12,1,1) (order 144); 144 does not divide 648, "
               "and C(12,1,1) is not inside D(18,1,1;2,1,1)");
  });

  add(it, "prop5", [] {
    const bool chain = eng::is_subset(cgrp(4, 1, 1), cgrp(12, 1, 1)) &&
                       eng::is_subset(cgrp(12, 1, 1), cgrp(36, 1, 1));
    const bool ok = chain && cgrp(36, 1, 1).order() == 1296 &&
                    !eng::is_subset(cgrp(36, 1, 1), d18g());
    return res(ok,
               "C(4,1,1) in C(12,1,1) in C(36,1,1) (order 1296 > 648), so "
               "none of the n = 4, 12, 36 diagonal-order options can occur");
  });

  add(it, "prop6", [] {
    const Mats& K = mm();
    const bool six = bh2grp().order() == 6 && !(K.b * K.h2 == K.h2 * K.b);
    return res(s_product_ok() && six && K.ab2.element_order() == 9,
               "S = <A B^2> x <B,H2>: A B^2 is central of order 9, <B,H2> is "
               "the nonabelian order-6 group, and the product map is a "
               "bijection onto the 54 elements");
  });

  // ---- facts ----

  add(it, "fact1", [] {
    int ndiag = 0;
    std::map<int, int> dspec;
    for (int i = 0; i < cgrp(9, 3, 1).order(); ++i)
      if (cgrp(9, 3, 1).elements()[i].is_diagonal()) {
        ++ndiag;
        ++dspec[cgrp(9, 3, 1).element_order(i)];
      }
    const std::map<int, int> z9z9 = {{1, 1}, {3, 8}, {9, 72}};
    const bool ok = cgrp(9, 3, 1).order() == 243 && 648 % 243 != 0 &&
                    ndiag == 81 && dspec == z9z9 &&
                    eng::is_subset(cgrp(9, 3, 1), cgrp(18, 3, 1));
    return res(ok,
               "C(9,3,1) has order 243 = 3^5 (not dividing 648) with "
               "diagonal part Z9 x Z9 of order 81, and C(18,3,1) (order " +
                   ns(cgrp(18, 3, 1).order()) + ") contains it");
  });

  add(it, "fact2", [] {
    const Mats& K = mm();
    const bool eqs = eng::set_equal(dgrp(9, 1, 1, 2, 0, 1), d18g()) &&
                     eng::set_equal(dgrp(9, 1, 1, 2, 0, 0), d18g());
    const bool proper = eng::is_subset(d9g(), d18g()) &&
                        d18g().order() == 4 * d9g().order();
    const bool els = !d9g().contains(K.w4) &&
                     (cat::gtilde(2, 0, 1) * K.e).pow(2) == K.w4 &&
                     K.bt * K.w4 == cat::gtilde(2, 0, 1) &&
                     K.f.pow(9) == K.w4 &&
                     cat::gtilde(2, 0, 0) == cat::gtilde(2, 0, 1).inverse();
    return res(eqs && proper && els,
               "D(9,1,1;2,0,1) = D(9,1,1;2,0,0) = D(18,1,1;2,1,1), and "
               "D(9,1,1;2,1,1) is a proper subgroup (order 162, index 4): "
               "W4 = (Gtilde(2,0,1) E)^2 = F^9 lies outside it, with "
               "Btilde W4 = Gtilde(2,0,1) and Gtilde(2,0,0) = "
               "Gtilde(2,0,1)^-1");
  });

  // ---- claim ----

  add(it, "claim1", [] {
    const Mats& K = mm();
    const bool ok = K.f.pow(6) == Mat3::scalar(ru(1, 3)) &&
                    K.f.pow(12) == Mat3::scalar(ru(2, 3));
    return res(ok, "F^6 = wI and F^12 = w^2 I exactly");
  });

  // ---- numbered identities: braid-side generators ----

  add(it, "eq1", [] {
    const Mats& K = mm();
    return res(K.a == K.g1 * K.g2.pow(2) * K.g1.inverse(),
               "A = G1 G2^2 G1^-1");
  });
  add(it, "eq2", [] {
    const Mats& K = mm();
    return res(K.b == K.g1 * K.g2.pow(-2) * K.g1,
               "B = G1 G2^-2 G1 (trailing factor G1, not its inverse)");
  });
  add(it, "eq3", [] {
    const Mats& K = mm();
    return res(K.g2 * K.x * K.g2.inverse() == K.y, "G2 X G2^-1 = Y");
  });
  add(it, "eq4", [] {
    const Mats& K = mm();
    return res(K.g2.inverse() * K.x * K.g2 == K.y, "G2^-1 X G2 = Y");
  });
  add(it, "eq5", [] {
    const Mats& K = mm();
    return res(K.m * K.x * K.m.inverse() == K.x, "FUM X FUM^-1 = X");
  });
  add(it, "eq6", [] {
    const Mats& K = mm();
    return res(K.m.inverse() * K.x * K.m == K.x, "FUM^-1 X FUM = X");
  });
  add(it, "eq7", [] {
    const Mats& K = mm();
    return res(K.g2 * K.y * K.g2.inverse() == K.x, "G2 Y G2^-1 = X");
  });
  add(it, "eq8", [] {
    const Mats& K = mm();
    return res(K.g2.inverse() * K.y * K.g2 == K.x, "G2^-1 Y G2 = X");
  });
  add(it, "eq9", [] {
    const Mats& K = mm();
    return res(K.m.pow(4) * K.x * K.m.inverse() == K.y, "FUM^4 X FUM^-1 = Y");
  });
  add(it, "eq10", [] {
    const Mats& K = mm();
    return res(K.m.pow(2) * K.x * K.m == K.y, "FUM^2 X FUM = Y");
  });
  add(it, "eq11", [] {
    const Mats& K = mm();
    return res(K.m * K.a * K.m.inverse() == K.a, "FUM A FUM^-1 = A");
  });
  add(it, "eq12", [] {
    const Mats& K = mm();
    return res(K.m * K.b * K.m.inverse() == K.b, "FUM B FUM^-1 = B");
  });
  add(it, "eq13", [] {
    const Mats& K = mm();
    return res(K.m == K.a.pow(3) * K.m.pow(3), "FUM = A^3 FUM^3");
  });
  add(it, "eq14", [] {
    const Mats& K = mm();
    const MatrixGroup g =
        eng::generate({K.g1, K.g2, K.e * K.bt}, 10000, "<G1,G2,EBtilde>");
    return res(K.e * K.bt == K.m.pow(3) && eng::set_equal(g, fr()),
               "E Btilde = FUM^3, and <G1, G2, E Btilde> regenerates the full "
               "order-648 group");
  });
  add(it, "eq15", [] {
    const Mats& K = mm();
    const MatrixGroup g =
        eng::generate({K.e, K.bt, K.f}, 10000, "<E,Btilde,F>");
    return res(g.order() == 648 && eng::set_equal(g, d18g()),
               "<E, Btilde, F> closes to the order-648 group "
               "D(18,1,1;2,1,1)");
  });
  add(it, "eq16", [] {
    const Mats& K = mm();
    return res(K.fpr == (K.f * K.fpp).inverse(), "F' = (F F'')^-1");
  });
  add(it, "eq17", [] {
    const Mats& K = mm();
    return res(K.fpp == (K.f * K.fpr).inverse(), "F'' = (F F')^-1");
  });
  add(it, "eq18", [] {
    const Mats& K = mm();
    return res(K.fpr == K.f.pow(-2) * K.f * K.fpp.inverse(),
               "F' = F^-2 F F''^-1");
  });
  add(it, "eq19", [] {
    const Mats& K = mm();
    const Mat3 rhs = K.c18.pow(10) * K.c6.pow(4) *
                     Mat3::antidiag(ci(-1), ci(-1), ci(-1)) *
                     Mat3::diag(ci(-1), ci(1), ci(-1));
    return res(K.h3 * K.c18 * K.h3.inverse() == rhs,
               "H3 C18 H3^-1 = C18^10 C6^4 antidiag(-1,-1,-1) diag(-1,1,-1)");
  });
  add(it, "eq20", [] {
    const Mats& K = mm();
    return res(K.c6.pow(3) == Mat3::antidiag(ci(1), ci(-1), ci(1)),
               "C6^3 = antidiag(1,-1,1)");
  });
  add(it, "eq21", [] {
    const Mats& K = mm();
    return res(K.h3 * K.c18 * K.h3.inverse() == K.c18.pow(10) * K.c6.pow(7),
               "H3 C18 H3^-1 = C18^10 C6^7");
  });
  add(it, "eq22", [] {
    const Mats& K = mm();
    return res(K.c18.pow(2) == K.a.pow(2), "C18^2 = A^2");
  });
  add(it, "eq23", [] {
    const Mats& K = mm();
    return res(K.c18.pow(3) == K.m, "C18^3 = FUM");
  });
  add(it, "eq24", [] {
    const Mats& K = mm();
    const Mat3 rhs = K.c6.pow(2) * K.m.pow(2) *
                     Mat3::antidiag(ci(1), ci(-1), ci(1));
    return res(K.h1 * K.c6 * K.h1.inverse() == rhs,
               "H1 C6 H1^-1 = C6^2 FUM^2 antidiag(1,-1,1)");
  });
  add(it, "eq25", [] {
    const Mats& K = mm();
    return res(K.h1 * K.c6 * K.h1.inverse() == K.c6.pow(5) * K.c18.pow(6),
               "H1 C6 H1^-1 = C6^5 C18^6");
  });
  add(it, "eq26", [] {
    const Mats& K = mm();
    const Mat3 lhs = (K.h3 * K.c6 * K.h3.inverse()) *
                     (K.m * K.c18.pow(6) * K.c6.pow(5));
    return res(lhs == Mat3::scalar(ru(2, 3)),
               "(H3 C6 H3^-1)(FUM C18^6 C6^5) = w^2 I");
  });
  add(it, "eq27", [] {
    const Mats& K = mm();
    const Mat3 lhs = (K.h1 * K.c18 * K.h1.inverse()) *
                     (K.m * K.c18.pow(4) * K.c6.pow(5));
    return res(lhs == Mat3::diag(ru(2, 9), ru(5, 9), ru(2, 9)),
               "(H1 C18 H1^-1)(FUM C18^4 C6^5) = diag(e^{4 i pi/9}, "
               "-e^{i pi/9}, e^{4 i pi/9})");
  });
  add(it, "eq28", [] {
    bool ok = true;
    const std::array<std::array<CycloNum, 3>, 3> samples = {{
        {CycloNum::zeta_pow(1), cyclo_sqrt2(), ru(1, 3)},
        {ci(1) + CycloNum::zeta_pow(2), -CycloNum::zeta_pow(5),
         CycloNum::from_rational(mpq_class(3, 2))},
        {ru(1, 8), ci(2), ru(1, 9) + ci(1)},
    }};
    for (const auto& s : samples) {
      const CycloNum &a = s[0], &b = s[1], &c = s[2];
      Mat3 m1, m2;
      m1.at(0, 0) = a; m1.at(0, 2) = b; m1.at(1, 1) = c;
      m1.at(2, 0) = b; m1.at(2, 2) = a;
      m2.at(0, 0) = a; m2.at(0, 2) = -b; m2.at(1, 1) = c;
      m2.at(2, 0) = -b; m2.at(2, 2) = a;
      ok = ok && m1 * m2 == Mat3::diag(a * a - b * b, c * c, a * a - b * b);
    }
    return res(ok,
               "[[a,0,b],[0,c,0],[b,0,a]] [[a,0,-b],[0,c,0],[-b,0,a]] = "
               "diag(a^2-b^2, c^2, a^2-b^2) on three exact sample triples");
  });
  add(it, "eq29", [] {
    const Mats& K = mm();
    return res(K.h3 * K.c6 * K.h3.inverse() == K.c6.pow(-5) * K.c18.pow(-3),
               "H3 C6 H3^-1 = C6^-5 C18^-3");
  });
  add(it, "eq30", [] {
    const Mats& K = mm();
    return res(Mat3::diag(ru(2, 9), ru(5, 9), ru(2, 9)) ==
                   K.c6.pow(2) * K.c18.pow(8),
               "diag(e^{4 i pi/9}, -e^{i pi/9}, e^{4 i pi/9}) = C6^2 C18^8");
  });
  add(it, "eq31", [] {
    const Mats& K = mm();
    return res(K.h1 * K.c18 * K.h1.inverse() == K.c6.pow(3) * K.c18,
               "H1 C18 H1^-1 = C6^3 C18");
  });
  add(it, "eq32", [] {
    const Mats& K = mm();
    std::vector<Mat3> u = Ngrp().elements();
    auto c1 = coset_right(Ngrp().elements(), K.h3);
    auto c2 = coset_right(Ngrp().elements(), K.h3.pow(2));
    u.insert(u.end(), c1.begin(), c1.end());
    u.insert(u.end(), c2.begin(), c2.end());
    const auto su = sort_mats(u);
    return res(su.size() == 81 && same_mats(su, sort_mats(s3fG().elements())),
               "S3F = N + N H3 + N H3^2, a disjoint union of 27-element "
               "cosets");
  });
  add(it, "eq33", [] {
    const Mats& K = mm();
    std::vector<Mat3> u = scrF().elements();
    auto c1 = coset_right(scrF().elements(), K.e);
    auto c2 = coset_right(scrF().elements(), K.e.pow(2));
    u.insert(u.end(), c1.begin(), c1.end());
    u.insert(u.end(), c2.begin(), c2.end());
    const auto su = sort_mats(u);
    return res(su.size() == 81 && same_mats(su, sort_mats(s3dG().elements())),
               "S3D = scriptF + scriptF E + scriptF E^2, a disjoint union of "
               "27-element cosets");
  });
  add(it, "eq34", [] {
    const Mats& K = mm();
    return res(K.h1 * K.a * K.h1.inverse() == K.a, "H1 A H1^-1 = A");
  });
  add(it, "eq35", [] {
    const Mats& K = mm();
    return res(K.h1 * K.b * K.h1.inverse() == K.a.pow(6) * K.b.pow(2),
               "H1 B H1^-1 = A^6 B^2");
  });
  add(it, "eq36", [] {
    const Mats& K = mm();
    return res(K.h3 * K.a * K.h3.inverse() == K.a * K.b,
               "H3 A H3^-1 = A B");
  });
  add(it, "eq37", [] {
    const Mats& K = mm();
    return res(K.h3 * K.b * K.h3.inverse() == K.a.pow(6) * K.b,
               "H3 B H3^-1 = A^6 B");
  });
  add(it, "eq38", [] {
    const Mats& K = mm();
    const Mat3 lhs = K.bt * K.e * K.f.pow(2) * K.e.inverse() * K.bt;
    return res(lhs == K.f.pow(2), "Btilde E F^2 E^-1 Btilde = F^2");
  });
  add(it, "eq39", [] {
    const Mats& K = mm();
    const Mat3 lhs = K.e * K.f.pow(2) * K.e.inverse();
    return res(lhs == K.f.pow(2) * K.fb,
               "E F^2 E^-1 = F^2 * F^12 (F F''^-1)^2");
  });
  add(it, "eq40", [] {
    const Mats& K = mm();
    const Mat3 rhs = K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse();
    return res(K.fb == rhs, "F^12 (F F''^-1)^2 = F^-2 E F^2 E^-1");
  });
  add(it, "eq41", [] {
    const Mats& K = mm();
    const Mat3 lhs = K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse();
    const Mat3 d = Mat3::diag(ci(1), ru(2, 3), ru(1, 3));
    return res(lhs == d && K.fb == d,
               "F^-2 E F^2 E^-1 = diag(1, -e^{i pi/3}, e^{2 i pi/3}) = "
               "F^12 (F F''^-1)^2");
  });
  add(it, "eq42", [] {
    const Mats& K = mm();
    const Mat3 core = K.e * K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse() *
                      K.e.inverse();
    const Mat3 lhs = K.bt * core * K.bt;
    const Mat3 q = K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse();
    return res(lhs == K.f.pow(12) * q * q,
               "Btilde E F^-2 E F^2 E^-1 E^-1 Btilde = F^12 (F^-2 E F^2 "
               "E^-1)^2");
  });
  add(it, "eq43", [] {
    const Mats& K = mm();
    const Mat3 lhs = K.e * K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse() *
                     K.e.inverse();
    const Mat3 q = K.f.pow(-2) * K.e * K.f.pow(2) * K.e.inverse();
    return res(lhs == K.f.pow(12) * q,
               "E F^-2 E F^2 E^-1 E^-1 = F^12 F^-2 E F^2 E^-1");
  });
  add(it, "eq44", [] {
    const Mats& K = mm();
    const auto vs =
        eng::subgroup(fr(), {K.V[1], K.V[2], K.a, K.b, K.h3});
    const bool ok = std::includes(syl3F_h().members.begin(),
                                  syl3F_h().members.end(),
                                  vs.members.begin(), vs.members.end());
    return res(ok, "<V, S3F> (order " + ns(vs.order()) +
                       ") is contained in the Sylow-3 closure");
  });
  add(it, "eq45", [] {
    const Mats& K = mm();
    const auto vs =
        eng::subgroup(fr(), {K.V[1], K.V[2], K.a, K.b, K.h3});
    const bool ok = std::includes(vs.members.begin(), vs.members.end(),
                                  syl3F_h().members.begin(),
                                  syl3F_h().members.end());
    return res(ok, "the Sylow-3 closure is contained in <V, S3F>");
  });
  add(it, "eq46", [] {
    const Mats& K = mm();
    const auto vs =
        eng::subgroup(fr(), {K.V[1], K.V[2], K.a, K.b, K.h3});
    return res(vs.members == syl3F_h().members,
               "<V, S3F> equals the Sylow-3 closure exactly");
  });
  add(it, "eq47", [] {
    const Mats& K = mm();
    std::vector<int> vidx;
    for (const Mat3& v : K.V) vidx.push_back(fr().index_of(v));
    std::sort(vidx.begin(), vidx.end());
    const auto vh = eng::subgroup_from_indices(fr(), vidx);
    const auto s3h = eng::subgroup(fr(), {K.a, K.b, K.h3});
    std::vector<int> inter;
    std::set_intersection(vh.members.begin(), vh.members.end(),
                          s3h.members.begin(), s3h.members.end(),
                          std::back_inserter(inter));
    const bool ufc = eng::unique_factorization_check(
        syl3FG(), {K.V, s3fG().elements()});
    const bool ok = eng::is_normal_in(vh, syl3F_h()) && inter.size() == 1 &&
                    ufc && 4 * 81 == syl3F_h().order();
    return res(ok,
               "V is normal in the Sylow-3 closure, V meets S3F trivially, "
               "and V x S3F -> closure is a bijection, so closure/V ~ S3F");
  });
  add(it, "eq48", [] {
    return res(syl3F_h().order() == 324,
               "the Sylow-3 closure has order 324");
  });
  add(it, "eq49", [] {
    const Mats& K = mm();
    bool ok = true;
    int cnt = 0;
    for (const Mat3& w : K.VD)
      for (const Mat3& d : scrF().elements()) {
        const Mat3 lhs = (w * d * K.e).pow(2);
        const Mat3 rhs = (w * d) * (K.e * w * d * K.e);
        ok = ok && lhs == rhs && !rhs.is_identity();
        ++cnt;
      }
    return res(ok, ns(cnt) + " instances: (W d E)^2 = (W d)(E W d E), never "
                             "the identity, so no involutions arise there");
  });
  add(it, "eq50", [] {
    const Mats& K = mm();
    bool ok = true;
    int cnt = 0;
    const Mat3 e2 = K.e.pow(2);
    for (const Mat3& w : K.VD)
      for (const Mat3& d : scrF().elements()) {
        const Mat3 lhs = (w * d * e2).pow(2);
        const Mat3 rhs = (w * d) * (e2 * w * d * e2);
        ok = ok && lhs == rhs && !rhs.is_identity();
        ++cnt;
      }
    return res(ok, ns(cnt) + " instances: (W d E^2)^2 = (W d)(E^2 W d E^2), "
                             "never the identity");
  });
  add(it, "eq51", [] {
    const Mats& K = mm();
    bool ok = true;
    int cnt = 0;
    for (const Mat3& w : K.VD)
      for (const Mat3& d : scrF().elements())
        for (int k : {1, 2}) {
          const Mat3 u = w * d * K.e.pow(k) * w;
          const Mat3 lhs = u * K.gc18 * u.inverse();
          const Mat3 rhs = (w * d * K.e.pow(k) * w) * K.gc18 *
                           (w * K.e.pow(-k) * d.inverse() * w);
          ok = ok && lhs == rhs;
          ++cnt;
        }
    return res(ok, ns(cnt) + " instances: (W d E^k W)^-1 = W E^-k d^-1 W, so "
                             "the conjugate expands as displayed");
  });
  add(it, "eq52", [] {
    const Mats& K = mm();
    bool ok = true;
    int cnt = 0;
    for (const Mat3& w : K.VD)
      for (const Mat3& d : scrF().elements())
        for (int k : {1, 2}) {
          const Mat3 u = w * d * K.e.pow(k) * w;
          ok = ok && u * K.gc18 * u.inverse() ==
                         K.e.pow(k) * K.gc18 * K.e.pow(-k);
          ++cnt;
        }
    return res(ok, ns(cnt) + " instances: conjugating g(C18) by W d E^k W "
                             "equals conjugating by E^k alone");
  });
  add(it, "eq53", [] {
    const Mats& K = mm();
    return res(K.gc6 == K.e.pow(2) * K.gc18 * K.e.pow(-2) * K.gc18.pow(8),
               "g(C6) = E^2 g(C18) E^-2 g(C18)^8");
  });
  add(it, "eq54", [] {
    const Mats& K = mm();
    return res(K.e.pow(2) * K.gc6 * K.e.pow(-2) == K.gc6 * K.gc18.pow(-3),
               "E^2 g(C6) E^-2 = g(C6) g(C18)^-3");
  });
  add(it, "eq55", [] {
    const Mats& K = mm();
    return res(K.gc6 == K.e.pow(2) * K.gc6 * K.e.pow(-2) * K.gc18.pow(3),
               "g(C6) = E^2 g(C6) E^-2 g(C18)^3");
  });
  add(it, "eq56", [] {
    const Mats& K = mm();
    const Mat3 rhs = K.e * K.gc18 * K.e.pow(-2) * K.gc18.pow(8) *
                     K.e.pow(-2) * K.gc18.pow(3);
    return res(K.gc6 == rhs,
               "g(C6) = E g(C18) E^-2 g(C18)^8 E^-2 g(C18)^3");
  });
  add(it, "eq57", [] {
    const Mats& K = mm();
    std::set<std::pair<int, int>> sol;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 3; ++j)
        if (K.h2 * K.a.pow(i) * K.b.pow(j) * K.h2 ==
            K.a.pow(-i) * K.b.pow(-j))
          sol.insert({i, j});
    const std::set<std::pair<int, int>> expect = {{0, 0}, {0, 1}, {0, 2}};
    bool invs = true;
    for (const Mat3& x : {K.h2, K.b * K.h2, K.b.pow(2) * K.h2})
      invs = invs && x.element_order() == 2;
    return res(sol == expect && invs,
               "H2 A^i B^j H2 = A^-i B^-j holds exactly for (i,j) in "
               "{(0,0),(0,1),(0,2)}, giving the three involutions H2, B H2, "
               "B^2 H2");
  });
  add(it, "eq58", [] {
    const Mats& K = mm();
    return res(K.h2 * K.a * K.h2.inverse() == K.a * K.b,
               "H2 A H2^-1 = A B");
  });
  add(it, "eq59", [] {
    const Mats& K = mm();
    return res(K.h2 * K.b * K.h2.inverse() == K.b.pow(2),
               "H2 B H2^-1 = B^2");
  });
  add(it, "eq60", [] {
    const Mats& K = mm();
    bool ok = true;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 3; ++j)
        ok = ok && K.h2 * K.a.pow(i) * K.b.pow(j) * K.h2 ==
                       K.a.pow(i) * K.b.pow((i + (3 - j)) % 3);
    return res(ok,
               "H2 A^i B^j H2 = A^i B^{i - j mod 3} for all 27 pairs (i,j)");
  });
  add(it, "eq61", [] {
    const Mats& K = mm();
    std::vector<Mat3> pa, pb;
    for (int i = 0; i < 9; ++i) pa.push_back(K.a.pow(i));
    for (int j = 0; j < 3; ++j) pb.push_back(K.b.pow(j));
    std::vector<Mat3> inter;
    for (const Mat3& x : pa)
      for (const Mat3& y : pb)
        if (x == y) inter.push_back(x);
    return res(inter.size() == 1 && inter[0].is_identity(),
               "<A> and <B> intersect only in the identity");
  });
  add(it, "eq62", [] {
    const Mats& K = mm();
    bool ok = true;
    for (int i : {0, 3, 6})
      for (int j = 0; j < 3; ++j)
        ok = ok && K.h2 * K.a.pow(i) * K.b.pow(j) * K.h2 ==
                       K.a.pow(i) * K.b.pow((3 - j) % 3);
    return res(ok,
               "for i in {0,3,6}: H2 A^i B^j H2 = A^i B^-j (A^i is then "
               "central in S)");
  });

  // ---- numbered identities: the conjugacy dictionary ----

  add(it, "eq67", [] {
    const Mats& K = mm();
    const auto t = sort_mats(conj_all(K.o, s3fG().elements()));
    int found = -1;
    for (int i = 0; i < 4 && found < 0; ++i)
      if (same_mats(t, sort_mats(conj_all(K.VD[i], s3dG().elements()))))
        found = i;
    return res(found >= 0,
               "O S3F O^T = W_i S3D W_i^-1 holds with W_" + ns(found + 1) +
                   (found == 0 ? " (the identity)" : ""));
  });
  add(it, "eq68", [] {
    const Mats& K = mm();
    const auto t = sort_mats(conj_all(K.o, s3fG().elements()));
    int found = -1;
    for (int i = 0; i < 4 && found < 0; ++i)
      if (same_mats(t, sort_mats(conj_all(K.VD[i], s3dG().elements()))))
        found = i;
    if (found < 0) return res(false, "no Klein conjugate matches");
    const Mat3& w = K.VD[found];
    const Mat3 we = w * K.e * w.inverse();
    const Mat3 we2 = w * K.e.pow(2) * w.inverse();
    std::vector<Mat3> u = scrF().elements();
    auto c1 = coset_right(scrF().elements(), we);
    auto c2 = coset_right(scrF().elements(), we2);
    u.insert(u.end(), c1.begin(), c1.end());
    u.insert(u.end(), c2.begin(), c2.end());
    const auto su = sort_mats(u);
    return res(su.size() == 81 && same_mats(su, t),
               "O S3F O^T = scriptF + scriptF W E W^-1 + scriptF W E^2 W^-1, "
               "a disjoint union of 27-element cosets");
  });
  add(it, "eq69", [] {
    const Mats& K = mm();
    return res(scrF().contains(K.o * K.a * K.o.transpose()),
               "O A O^T lies in scriptF");
  });
  add(it, "eq70", [] {
    const Mats& K = mm();
    const Mat3 ot = K.o.transpose();
    const Mat3 lhs = K.o * (K.a * K.b) * ot;
    const bool ok = lhs == (K.o * K.a * ot) * (K.o * K.b * ot) &&
                    scrF().contains(lhs);
    return res(ok, "O (AB) O^T = (O A O^T)(O B O^T) lies in scriptF");
  });
  add(it, "eq71", [] {
    const Mats& K = mm();
    return res(same_mats(sort_mats(conj_all(K.o, Ngrp().elements())),
                         sort_mats(scrF().elements())),
               "O N O^T = scriptF elementwise as 27-element sets");
  });
  add(it, "eq72", [] {
    const Mats& K = mm();
    return res(same_mats(sort_mats(conj_all(K.o, K.V)), sort_mats(K.VD)),
               "O V O^T = {I, W2, W3, W4}");
  });
  add(it, "eq73", [] {
    const Mats& K = mm();
    return res(same_mats(sort_mats(conj_all(K.o, s3fG().elements())),
                         sort_mats(s3dG().elements())),
               "O S3F O^T = S3D as 81-element matrix sets");
  });
  add(it, "eq74", [] {
    const Mats& K = mm();
    Mat3 m0;
    m0.at(0, 0) = ci(-1); m0.at(0, 2) = ci(1);
    m0.at(1, 1) = ci(1);
    m0.at(2, 0) = ci(1); m0.at(2, 2) = ci(1);
    // Columns of M0 are eigenvectors of A with three distinct eigenvalues.
    const Mat3 am = K.a * m0;
    std::vector<CycloNum> lam;
    bool eig = true;
    for (int c = 0; c < 3; ++c) {
      int piv = -1;
      for (int r = 0; r < 3; ++r)
        if (!m0.at(r, c).is_zero()) piv = r;
      const CycloNum l = am.at(piv, c) / m0.at(piv, c);
      for (int r = 0; r < 3; ++r)
        if (!(am.at(r, c) == l * m0.at(r, c))) eig = false;
      lam.push_back(l);
    }
    const bool spectrum = lam[0] == lam[1] && lam[0] == ru(-2, 9) &&
                          lam[2] == ru(4, 9);
    // Witness d = (-1/sqrt2, 1, 1/sqrt2): M0 diag(d) inverts to O itself.
    const CycloNum h = cyclo_sqrt2() * CycloNum::from_rational(mpq_class(1, 2));
    const Mat3 dd = Mat3::diag(-h, ci(1), h);
    const bool witness = (m0 * dd) == K.o.transpose() &&
                         (m0 * dd).inverse() == K.o;
    return res(eig && spectrum && witness,
               "M0 columns are A-eigenvectors, spectrum {e^{-4 i pi/9} "
               "twice, e^{8 i pi/9}} (two distinct values, not three); with "
               "d = (-1/sqrt2, 1, 1/sqrt2), [M0 diag(d)]^-1 is exactly O");
  });
  add(it, "eq75", [] {
    const Mats& K = mm();
    Mat3 m0;
    m0.at(0, 0) = ci(-1); m0.at(0, 2) = ci(1);
    m0.at(1, 1) = ci(1);
    m0.at(2, 0) = ci(1); m0.at(2, 2) = ci(1);
    const CycloNum s2 = cyclo_sqrt2();
    const CycloNum h = s2 * CycloNum::from_rational(mpq_class(1, 2));
    auto check = [&](const CycloNum& d1, const CycloNum& d2,
                     const CycloNum& d3) {
      const Mat3 dd = Mat3::diag(d1, d2, d3);
      const Mat3 di =
          Mat3::diag(d1.inverse(), d2.inverse(), d3.inverse());
      const Mat3 lhs = di * m0.inverse() * K.h3 * m0 * dd;
      Mat3 rhs;
      rhs.at(0, 1) = -(d2 / (s2 * d1));
      rhs.at(1, 2) = s2 * d3 / d2;
      rhs.at(2, 0) = -(d1 / d3);
      return lhs == rhs;
    };
    const bool generic = check(ci(2), ci(3), ci(5));
    const bool witness = check(-h, ci(1), h);
    return res(generic && witness,
               "diag(1/d) M0^-1 H3 M0 diag(d) has the displayed three-entry "
               "form for a generic rational d and for the witness "
               "(-1/sqrt2, 1, 1/sqrt2)");
  });

  return it;
}

}  // namespace

const std::vector<Item>& all_items() {
  static const std::vector<Item> items = build_items();
  return items;
}

std::vector<const Item*> select_items(const std::string& selector) {
  const auto& items = all_items();
  std::vector<const Item*> out;
  if (selector == "all") {
    for (const auto& i : items) out.push_back(&i);
    return out;
  }
  const std::string prefix = selector + ".";
  for (const auto& i : items)
    if (i.id == selector || i.id.rfind(prefix, 0) == 0) out.push_back(&i);
  if (out.empty())
    throw usage_error("unknown suite selector: " + selector);
  return out;
}

}  // namespace su3kit::verify
