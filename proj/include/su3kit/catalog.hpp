#pragma once
// The matrix catalog: braid/fusion generators, the abelian-part matrices,
// the order-6 symmetric subgroup, the C/D series constructors F(n,a,b) and
// Gtilde(d,r,s), the exceptional order-648 group, Klein four-groups, and the
// orthogonal conjugator relating the two order-648 realizations.

#include <array>
#include <string>
#include <vector>

#include "su3kit/mat3.hpp"

namespace su3kit::catalog {

struct NamedGeneratorSet {
  std::string name;
  std::vector<Mat3> generators;
  std::string provenance;  // plain-language construction description
};

// Smallest conductor that is a multiple of 72 and holds e^{2*pi*i/n} and
// e^{2*pi*i/d}: lcm(72, n, d). Keeps the whole catalog in one field whenever
// possible (72) while letting desk-scale series parameters like d = 5 work.
int series_conductor(long n, long d = 1);

// exp(2*pi*i * num/den) at the given conductor (den must divide it)
CycloNum root_of_unity(long num, long den, int conductor = 72);

Mat3 braid_g1();
Mat3 braid_g2();
Mat3 fum();

Mat3 matrix_A();
Mat3 matrix_B();
Mat3 h_matrix(int i);  // 0..4; throws usage_error out of range

Mat3 e_matrix(int conductor = 72);
Mat3 btilde(int conductor = 72);
Mat3 f_matrix(long n, long a, long b, int conductor = 0);               // 0 = auto
Mat3 gtilde(long d, long r, long s, int conductor = 0);                 // 0 = auto
Mat3 fprime();   // F' = F(18,1,-2)
Mat3 fdprime();  // F'' = F(18,-2,1)

Mat3 w_matrix(int i);  // i in {2,3,4}: diag sign matrices W2, W3, W4

Mat3 c18();  // A * FUM^3, order 18
Mat3 c6();   // B * G1 FUM^3 G1^-1, order 6

Mat3 sigma_d();  // diag(eps, eps, eps*omega), eps = e^{4 i pi / 9}
Mat3 sigma_v();  // (1/(i*sqrt3)) * [[1,1,1],[1,w,w^2],[1,w^2,w]]

// Orthogonal change of basis with O * Fr(162x4) * O^T = D(18,1,1;2,1,1) and
// O * Fr(162) * O^T = D(9,1,1;2,1,1) as matrix sets.
Mat3 conjugator_O();

std::vector<Mat3> klein_V();   // {I, FUM^3, G1 FUM^3 G1^-1, their product}
std::vector<Mat3> klein_VD();  // {I, W2, W3, W4}

NamedGeneratorSet c_group(long n, long a, long b);
NamedGeneratorSet d_group(long n, long a, long b, long d, long r, long s);
NamedGeneratorSet fr162();
NamedGeneratorSet fr162x4();
NamedGeneratorSet d18_1_1_2_1_1();
NamedGeneratorSet sigma216x3();
NamedGeneratorSet c9_1_1();

// The named sets listed by `catalog list`.
std::vector<NamedGeneratorSet> named_sets();

// Lookup by CLI name: the five canonical names plus parametric
// c{n}-{a}-{b} and d{n}-{a}-{b}-{d}-{r}-{s}. Throws usage_error.
NamedGeneratorSet find_named(const std::string& name);

// BFS closure of an integer triple (mod n) under the six signed permutations
// of (1,1,-2), returned as the corresponding diagonal matrices
// diag(eta^k1, eta^k2, eta^k3), eta = e^{2*pi*i/n}, canonically sorted.
// Throws usage_error if the start triple does not sum to 0 mod n.
std::vector<Mat3> triple_graph_closure(int n, std::array<int, 3> start);

}  // namespace su3kit::catalog
