#pragma once
// Generic finite matrix-group machinery: BFS closure with generator-word
// logging, canonical element indexing, multiplication tables, subgroups,
// normality, Sylow subgroups, centers, conjugacy, factorizations and
// isomorphism verification.

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "su3kit/mat3.hpp"

namespace su3kit::engine {

// A finite group of exact 3x3 matrices, closed under product and inverse.
// Elements are canonically ordered: identity at index 0, the rest ascending
// by Mat3::cmp. words()[i] is a generator word for elements()[i]: letters are
// +j for generators()[j-1] and -j for its inverse, composed left to right.
//
// Structural caches (index, multiplication table, inverses, element orders)
// are built lazily on first use; the group itself is immutable.
class MatrixGroup {
 public:
  const std::string& name() const { return name_; }
  void set_name(const std::string& n) { name_ = n; }
  int conductor() const { return conductor_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<Mat3>& elements() const { return elems_; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const std::vector<Mat3>& generators() const { return gens_; }

  // Canonical index of m, or -1 when m is not a member. A matrix at a
  // smaller conductor is promoted before comparison.
  int index_of(const Mat3& m) const;
  bool contains(const Mat3& m) const { return index_of(m) >= 0; }

  int mult(int i, int j) const;  // index of elements[i] * elements[j]
  int inv(int i) const;
  int element_order(int i) const;
  std::map<int, int> order_spectrum() const;

  // Evaluate a generator word to a matrix.
  Mat3 eval_word(const std::vector<int>& word) const;

 private:
  MatrixGroup() = default;
  void canonicalize();  // sort elements, permute words
  void ensure_index() const;
  void ensure_table() const;

  std::string name_;
  int conductor_ = 72;
  std::vector<Mat3> gens_;
  std::vector<Mat3> elems_;
  std::vector<std::vector<int>> words_;

  mutable std::unordered_map<std::string, std::vector<int>> index_;
  mutable std::vector<int> table_;  // order x order, row-major
  mutable std::vector<int> inv_;
  mutable std::vector<int> eord_;

  friend MatrixGroup generate(const std::vector<Mat3>&, int,
                              const std::string&);
  friend MatrixGroup conjugate_group(const Mat3&, const MatrixGroup&);
};

// A subgroup as a sorted index set over a parent group.
struct SubgroupHandle {
  const MatrixGroup* parent = nullptr;
  std::vector<int> members;  // ascending canonical indices

  int order() const { return static_cast<int>(members.size()); }
  bool contains_index(int i) const;
  std::map<int, int> order_spectrum() const;
};

// BFS closure of the generator list (left multiplication by generators and
// their inverses, FIFO), logging a shortest generator word per element.
// Throws cap_exceeded if more than `cap` elements appear.
MatrixGroup generate(const std::vector<Mat3>& gens, int cap = 10000,
                     const std::string& name = "");

std::map<int, int> order_spectrum(const MatrixGroup& g);

SubgroupHandle center(const MatrixGroup& g);

// Closure of seed elements inside g; throws usage_error if a seed is not a
// member.
SubgroupHandle subgroup(const MatrixGroup& g, const std::vector<Mat3>& seed);
SubgroupHandle subgroup_from_indices(const MatrixGroup& g,
                                     std::vector<int> seed);

bool is_normal(const SubgroupHandle& h);

// h normal inside k (both handles over the same parent, h subset of k).
bool is_normal_in(const SubgroupHandle& h, const SubgroupHandle& k);

// All p-Sylow subgroups: grow one p-subgroup inside its normalizer until it
// reaches full p-power order, then conjugate by every element and dedupe.
// Throws usage_error if p does not divide |g|.
std::vector<SubgroupHandle> sylow(const MatrixGroup& g, int p);

SubgroupHandle generated_by_sylows(const MatrixGroup& g, int p);

// Exact equality / inclusion as matrix sets (conductors are reconciled).
bool set_equal(const MatrixGroup& a, const MatrixGroup& b);
bool is_subset(const MatrixGroup& a, const MatrixGroup& b);

// The group {p x p^-1 : x in g}; element words remain valid over the
// conjugated generators.
MatrixGroup conjugate_group(const Mat3& p, const MatrixGroup& g);

// True iff (f1,...,fk) -> f1*...*fk is a bijection from the cartesian
// product of the factor lists onto g.
bool unique_factorization_check(const MatrixGroup& g,
                                const std::vector<std::vector<Mat3>>& factors);

// Map src generators to images in dst, extend along logged words, then check
// bijectivity and multiplicativity over all |src|^2 pairs. Throws usage_error
// if an image is not a dst member.
bool verify_isomorphism(const MatrixGroup& src, const MatrixGroup& dst,
                        const std::vector<Mat3>& images);

// Isomorphism label of the order-8 Sylow subgroup: one of "C8", "C4xC2",
// "C2^3", "D4", "Q8". Throws usage_error unless the 2-part of |g| is 8.
std::string two_sylow_type(const MatrixGroup& g);

// |Aut(Z_m x Z_n)| by brute force over generator-image pairs.
long aut_count_abelian(int m, int n);

// Closure of C(cn,ca,cb) contained in closure of D(dn,da,db;dd,dr,ds)?
// Both groups are built at a common conductor.
bool cd_inclusion_check(long cn, long ca, long cb, long dn, long da, long db,
                        long dd, long dr, long ds, int cap = 10000);

}  // namespace su3kit::engine
