#include "su3kit/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace su3kit::catalog {

namespace {

CycloNum z(long k) { return CycloNum::zeta_pow(k, 72); }

CycloNum frac(long num, long den) {
  return CycloNum::from_rational(mpq_class(num, den), 72);
}

// 1/sqrt(2) at conductor 72
CycloNum s2() { return cyclo_sqrt2(72) * frac(1, 2); }

Mat3 from_rows(const std::array<CycloNum, 9>& v) {
  Mat3 m(72);
  for (int i = 0; i < 9; ++i) m.at(i / 3, i % 3) = v[i];
  return m;
}

}  // namespace

int series_conductor(long n, long d) {
  if (n < 1 || d < 1) throw usage_error("series parameters must be positive");
  long c = std::lcm(std::lcm(72L, n), d);
  if (c > 100000) throw usage_error("conductor too large: " + std::to_string(c));
  return static_cast<int>(c);
}

CycloNum root_of_unity(long num, long den, int conductor) {
  if (den == 0 || conductor % den != 0)
    throw usage_error("root order " + std::to_string(den) +
                      " does not divide conductor " + std::to_string(conductor));
  return CycloNum::zeta_pow(num * (conductor / den), conductor);
}

Mat3 braid_g1() {
  // diag(e(7/18), -e(2/9), -e(7/18))
  return Mat3::diag(z(28), -z(16), -z(28));
}

Mat3 braid_g2() {
  const CycloNum a = z(16) * frac(1, 2);   // e(2/9)/2
  const CycloNum b = z(28) * s2();         // e(7/18)/sqrt2
  const CycloNum zero(72);
  return from_rows({-a, b, a,              //
                    b, zero, b,            //
                    a, b, -a});
}

Mat3 fum() {
  // antidiag(-omega, -omega, -omega), omega = e(1/3)
  const CycloNum t = -z(24);
  return Mat3::antidiag(t, t, t);
}

Mat3 matrix_A() {
  // order-9 diagonalizable generator of the abelian part of Fr(162)
  const CycloNum a1 = z(20) * (CycloNum::from_int(-1) + z(12)) * frac(1, 2);
  const CycloNum a2 = z(20) * (CycloNum::from_int(1) + z(12)) * frac(1, 2);
  const CycloNum zero(72);
  return from_rows({a1, zero, a2,          //
                    zero, -z(20), zero,    //
                    a2, zero, a1});
}

Mat3 matrix_B() {
  // order-3 partner of A, commuting with it
  const CycloNum b1 = (CycloNum::from_int(1) + z(24)) * frac(1, 2);
  const CycloNum b2 = (CycloNum::from_int(-1) + z(24)) * frac(1, 2);
  const CycloNum zero(72);
  return from_rows({b1, zero, b2,          //
                    zero, -z(12), zero,    //
                    b2, zero, b1});
}

Mat3 h_matrix(int i) {
  const CycloNum h = frac(1, 2);
  const CycloNum s = s2();
  const CycloNum zero(72);
  switch (i) {
    case 0:
      return Mat3::diag(CycloNum::from_int(-1), CycloNum::from_int(-1),
                        CycloNum::from_int(1));
    case 1:
      return from_rows({-h, -s, -h,        //
                        -s, zero, s,       //
                        -h, s, -h});
    case 2:
      return from_rows({-h, -s, h,         //
                        -s, zero, -s,      //
                        h, -s, -h});
    case 3:
      return from_rows({h, s, -h,          //
                        s, zero, s,        //
                        h, -s, -h});
    case 4:
      return from_rows({h, s, h,           //
                        s, zero, -s,       //
                        -h, s, -h});
    default:
      throw usage_error("h_matrix index must be 0..4");
  }
}

Mat3 e_matrix(int conductor) {
  Mat3 m(conductor);
  const CycloNum one = CycloNum::from_int(1, conductor);
  m.at(0, 1) = one;
  m.at(1, 2) = one;
  m.at(2, 0) = one;
  return m;
}

Mat3 btilde(int conductor) {
  Mat3 m(conductor);
  const CycloNum mone = CycloNum::from_int(-1, conductor);
  m.at(0, 0) = mone;
  m.at(1, 2) = mone;
  m.at(2, 1) = mone;
  return m;
}

Mat3 f_matrix(long n, long a, long b, int conductor) {
  if (conductor == 0) conductor = series_conductor(n);
  return Mat3::diag(root_of_unity(a, n, conductor),
                    root_of_unity(b, n, conductor),
                    root_of_unity(-(a + b), n, conductor));
}

Mat3 gtilde(long d, long r, long s, int conductor) {
  if (conductor == 0) conductor = series_conductor(1, d);
  Mat3 m(conductor);
  m.at(0, 0) = root_of_unity(r, d, conductor);
  m.at(1, 2) = root_of_unity(s, d, conductor);
  m.at(2, 1) = -root_of_unity(-(r + s), d, conductor);
  return m;
}

Mat3 fprime() { return f_matrix(18, 1, -2, 72); }
Mat3 fdprime() { return f_matrix(18, -2, 1, 72); }

Mat3 w_matrix(int i) {
  const CycloNum p = CycloNum::from_int(1);
  const CycloNum m = CycloNum::from_int(-1);
  switch (i) {
    case 2:
      return Mat3::diag(m, p, m);
    case 3:
      return Mat3::diag(p, m, m);
    case 4:
      return Mat3::diag(m, m, p);
    default:
      throw usage_error("w_matrix index must be 2, 3 or 4");
  }
}

Mat3 c18() { return matrix_A() * fum().pow(3); }

Mat3 c6() {
  const Mat3 g1 = braid_g1();
  const Mat3 x = g1 * fum().pow(3) * g1.dagger();
  return matrix_B() * x;
}

Mat3 sigma_d() {
  // eps = e(2/9), eps*omega = e(2/9 + 1/3) = e(5/9)
  return Mat3::diag(z(16), z(16), z(40));
}

Mat3 sigma_v() {
  // (1/(i*sqrt3)) * [[1,1,1],[1,w,w^2],[1,w^2,w]], w = e(1/3)
  const CycloNum pref = (z(24) + z(12)).inverse();  // i*sqrt3 = z^24 + z^12
  const CycloNum one = CycloNum::from_int(1);
  const CycloNum w = z(24);
  const CycloNum w2 = z(48);
  Mat3 m = from_rows({one, one, one,       //
                      one, w, w2,          //
                      one, w2, w});
  return Mat3::scalar(pref) * m;
}

Mat3 conjugator_O() {
  const CycloNum s = s2();
  const CycloNum zero(72);
  const CycloNum one = CycloNum::from_int(1);
  return from_rows({s, zero, -s,           //
                    zero, one, zero,       //
                    s, zero, s});
}

std::vector<Mat3> klein_V() {
  const Mat3 g1 = braid_g1();
  const Mat3 v2 = fum().pow(3);
  const Mat3 x = g1 * v2 * g1.dagger();
  return {Mat3::identity(72), v2, x, v2 * x};
}

std::vector<Mat3> klein_VD() {
  return {Mat3::identity(72), w_matrix(2), w_matrix(3), w_matrix(4)};
}

NamedGeneratorSet c_group(long n, long a, long b) {
  const int cond = series_conductor(n);
  std::ostringstream name;
  name << "c" << n << "-" << a << "-" << b;
  std::ostringstream prov;
  prov << "series-C group <E, F(" << n << "," << a << "," << b
       << ")> of diagonal matrices and cyclic coordinate permutations";
  return {name.str(), {e_matrix(cond), f_matrix(n, a, b, cond)}, prov.str()};
}

NamedGeneratorSet d_group(long n, long a, long b, long d, long r, long s) {
  const int cond = series_conductor(n, d);
  std::ostringstream name;
  name << "d" << n << "-" << a << "-" << b << "-" << d << "-" << r << "-" << s;
  std::ostringstream prov;
  prov << "series-D group <E, F(" << n << "," << a << "," << b << "), Gtilde("
       << d << "," << r << "," << s
       << ")>, the series-C group extended by a transposition-like generator";
  return {name.str(),
          {e_matrix(cond), f_matrix(n, a, b, cond), gtilde(d, r, s, cond)},
          prov.str()};
}

NamedGeneratorSet fr162() {
  return {"fr162",
          {braid_g1(), braid_g2()},
          "order-162 image of the braid-group representation, generated by "
          "the two braid matrices G1, G2"};
}

NamedGeneratorSet fr162x4() {
  return {"fr162x4",
          {braid_g1(), braid_g2(), fum()},
          "order-648 group generated by the braid matrices G1, G2 together "
          "with the fusion matrix"};
}

NamedGeneratorSet d18_1_1_2_1_1() { return d_group(18, 1, 1, 2, 1, 1); }

NamedGeneratorSet sigma216x3() {
  return {"sigma216x3",
          {sigma_d(), sigma_v()},
          "exceptional order-648 subgroup of SU(3), generated by "
          "diag(eps,eps,eps*w) with eps = e^{4*pi*i/9} and the "
          "discrete-Fourier-like matrix (1/(i*sqrt3))*[[1,1,1],[1,w,w^2],"
          "[1,w^2,w]]"};
}

NamedGeneratorSet c9_1_1() { return c_group(9, 1, 1); }

std::vector<NamedGeneratorSet> named_sets() {
  return {fr162(), fr162x4(), d18_1_1_2_1_1(), sigma216x3(), c9_1_1()};
}

namespace {

// Parse "<n>-<a>-<b>" style parameter tails; empty result on malformed input.
std::vector<long> parse_params(const std::string& tail) {
  std::vector<long> out;
  std::string cur;
  for (char ch : tail + "-") {
    if (ch == '-') {
      if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
        return {};
      out.push_back(std::strtol(cur.c_str(), nullptr, 10));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

NamedGeneratorSet find_named(const std::string& name) {
  if (name == "fr162") return fr162();
  if (name == "fr162x4") return fr162x4();
  if (name == "sigma216x3") return sigma216x3();
  if (!name.empty() && (name[0] == 'c' || name[0] == 'd')) {
    const std::vector<long> p = parse_params(name.substr(1));
    if (name[0] == 'c' && p.size() == 3) return c_group(p[0], p[1], p[2]);
    if (name[0] == 'd' && p.size() == 6)
      return d_group(p[0], p[1], p[2], p[3], p[4], p[5]);
  }
  throw usage_error("unknown group name: " + name);
}

std::vector<Mat3> triple_graph_closure(int n, std::array<int, 3> start) {
  if (n < 1) throw usage_error("triple graph modulus must be positive");
  auto norm = [n](long v) { return static_cast<int>(((v % n) + n) % n); };
  std::array<int, 3> s0 = {norm(start[0]), norm(start[1]), norm(start[2])};
  if ((s0[0] + s0[1] + s0[2]) % n != 0)
    throw usage_error("start triple does not sum to 0 mod n");

  // the six signed permutations of (1, 1, -2)
  static const int moves[6][3] = {{1, 1, -2},  {1, -2, 1},  {-2, 1, 1},
                                  {-1, -1, 2}, {-1, 2, -1}, {2, -1, -1}};
  std::set<std::array<int, 3>> seen = {s0};
  std::queue<std::array<int, 3>> q;
  q.push(s0);
  while (!q.empty()) {
    const std::array<int, 3> t = q.front();
    q.pop();
    for (const auto& mv : moves) {
      std::array<int, 3> u = {norm(t[0] + mv[0]), norm(t[1] + mv[1]),
                              norm(t[2] + mv[2])};
      if (seen.insert(u).second) q.push(u);
    }
  }

  const int cond = series_conductor(n);
  std::vector<Mat3> out;
  out.reserve(seen.size());
  for (const auto& t : seen)
    out.push_back(Mat3::diag(root_of_unity(t[0], n, cond),
                             root_of_unity(t[1], n, cond),
                             root_of_unity(t[2], n, cond)));
  std::sort(out.begin(), out.end(),
            [](const Mat3& a, const Mat3& b) { return a.cmp(b) < 0; });
  return out;
}

}  // namespace su3kit::catalog
