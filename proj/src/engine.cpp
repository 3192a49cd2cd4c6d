#include "su3kit/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "su3kit/catalog.hpp"

namespace su3kit::engine {

namespace {

bool matrices_equal(const Mat3& a, const Mat3& b) {
  if (a.conductor() == b.conductor()) return a == b;
  const int l = std::lcm(a.conductor(), b.conductor());
  return promote_conductor(a, l) == promote_conductor(b, l);
}

bool is_p_power(int v, int p) {
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

int MatrixGroup::index_of(const Mat3& m) const {
  ensure_index();
  const auto it = index_.find(m.fingerprint());
  if (it == index_.end()) return -1;
  for (int i : it->second)
    if (matrices_equal(elems_[i], m)) return i;
  return -1;
}

int MatrixGroup::mult(int i, int j) const {
  ensure_table();
  return table_[static_cast<size_t>(i) * elems_.size() + j];
}

int MatrixGroup::inv(int i) const {
  ensure_table();
  return inv_[i];
}

int MatrixGroup::element_order(int i) const {
  ensure_table();
  return eord_[i];
}

std::map<int, int> MatrixGroup::order_spectrum() const {
  ensure_table();
  std::map<int, int> out;
  for (int o : eord_) ++out[o];
  return out;
}

Mat3 MatrixGroup::eval_word(const std::vector<int>& word) const {
  Mat3 acc = Mat3::identity(conductor_);
  for (int l : word) {
    if (l == 0 || std::abs(l) > static_cast<int>(gens_.size()))
      throw usage_error("word letter out of range");
    const Mat3& g = gens_[std::abs(l) - 1];
    acc = acc * (l > 0 ? g : g.inverse());
  }
  return acc;
}

void MatrixGroup::canonicalize() {
  const int n = static_cast<int>(elems_.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [this](int a, int b) {
    const bool ia = elems_[a].is_identity();
    const bool ib = elems_[b].is_identity();
    if (ia != ib) return ia;
    return elems_[a].cmp(elems_[b]) < 0;
  });
  std::vector<Mat3> e2;
  std::vector<std::vector<int>> w2;
  e2.reserve(n);
  w2.reserve(n);
  for (int i : perm) {
    e2.push_back(std::move(elems_[i]));
    w2.push_back(std::move(words_[i]));
  }
  elems_ = std::move(e2);
  words_ = std::move(w2);
}

void MatrixGroup::ensure_index() const {
  if (!index_.empty()) return;
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i)
    index_[elems_[i].fingerprint()].push_back(i);
}

void MatrixGroup::ensure_table() const {
  if (!table_.empty()) return;
  const int n = static_cast<int>(elems_.size());
  const int k = static_cast<int>(gens_.size());

  // Right-multiplication columns for each generator step (+1..+k, -1..-k),
  // the only stage that multiplies matrices.
  std::vector<std::vector<int>> step(2 * k, std::vector<int>(n));
  for (int s = 0; s < k; ++s) {
    const Mat3 g = gens_[s];
    const Mat3 gi = g.inverse();
    for (int i = 0; i < n; ++i) {
      step[s][i] = index_of(elems_[i] * g);
      step[k + s][i] = index_of(elems_[i] * gi);
    }
  }

  // Every element is the left-to-right product of its word's steps, so its
  // right-multiplication column is the composition of step columns.
  table_.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    const std::vector<int>& w = words_[x];
    for (int i = 0; i < n; ++i) {
      int j = i;
      for (int l : w) j = step[l > 0 ? l - 1 : k - l - 1][j];
      table_[static_cast<size_t>(i) * n + x] = j;
    }
  }

  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_[static_cast<size_t>(i) * n + j] == 0) {
        inv_[i] = j;
        break;
      }

  eord_.assign(n, 1);
  for (int i = 1; i < n; ++i) {
    int j = i, c = 1;
    while (j != 0) {
      j = table_[static_cast<size_t>(j) * n + i];
      ++c;
    }
    eord_[i] = c;
  }
}

bool SubgroupHandle::contains_index(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::map<int, int> SubgroupHandle::order_spectrum() const {
  std::map<int, int> out;
  for (int i : members) ++out[parent->element_order(i)];
  return out;
}

MatrixGroup generate(const std::vector<Mat3>& gens, int cap,
                     const std::string& name) {
  int conductor = 72;
  for (const Mat3& g : gens) conductor = std::lcm(conductor, g.conductor());

  MatrixGroup r;
  r.name_ = name;
  r.conductor_ = conductor;
  for (const Mat3& g : gens) r.gens_.push_back(promote_conductor(g, conductor));

  std::vector<Mat3> steps;
  std::vector<int> letters;
  for (int i = 0; i < static_cast<int>(r.gens_.size()); ++i) {
    steps.push_back(r.gens_[i]);
    letters.push_back(i + 1);
  }
  for (int i = 0; i < static_cast<int>(r.gens_.size()); ++i) {
    steps.push_back(r.gens_[i].inverse());
    letters.push_back(-(i + 1));
  }

  r.elems_.push_back(Mat3::identity(conductor));
  r.words_.push_back({});
  std::unordered_map<std::string, std::vector<int>> seen;
  seen[r.elems_[0].fingerprint()].push_back(0);

  auto lookup = [&](const Mat3& m) -> int {
    const auto it = seen.find(m.fingerprint());
    if (it == seen.end()) return -1;
    for (int i : it->second)
      if (r.elems_[i] == m) return i;
    return -1;
  };

  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < steps.size(); ++s) {
      Mat3 next = steps[s] * r.elems_[cur];
      if (lookup(next) >= 0) continue;
      if (static_cast<int>(r.elems_.size()) >= cap)
        throw cap_exceeded("group closure exceeded cap " + std::to_string(cap));
      std::vector<int> w;
      w.reserve(r.words_[cur].size() + 1);
      w.push_back(letters[s]);
      w.insert(w.end(), r.words_[cur].begin(), r.words_[cur].end());
      const int idx = static_cast<int>(r.elems_.size());
      seen[next.fingerprint()].push_back(idx);
      r.elems_.push_back(std::move(next));
      r.words_.push_back(std::move(w));
      queue.push_back(idx);
    }
  }

  r.canonicalize();
  return r;
}

std::map<int, int> order_spectrum(const MatrixGroup& g) {
  return g.order_spectrum();
}

SubgroupHandle center(const MatrixGroup& g) {
  std::vector<int> gidx;
  for (const Mat3& gen : g.generators()) gidx.push_back(g.index_of(gen));
  SubgroupHandle h{&g, {}};
  for (int i = 0; i < g.order(); ++i) {
    bool commutes = true;
    for (int gi : gidx)
      if (g.mult(i, gi) != g.mult(gi, i)) {
        commutes = false;
        break;
      }
    if (commutes) h.members.push_back(i);
  }
  return h;
}

SubgroupHandle subgroup_from_indices(const MatrixGroup& g,
                                     std::vector<int> seed) {
  for (int s : seed)
    if (s < 0 || s >= g.order()) throw usage_error("seed index out of range");
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int s : seed) {
      const int nxt = g.mult(cur, s);
      if (!in[nxt]) {
        in[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  }
  SubgroupHandle h{&g, {}};
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) h.members.push_back(i);
  return h;
}

SubgroupHandle subgroup(const MatrixGroup& g, const std::vector<Mat3>& seed) {
  std::vector<int> idx;
  for (const Mat3& m : seed) {
    const int i = g.index_of(m);
    if (i < 0) throw usage_error("seed element is not a member of the group");
    idx.push_back(i);
  }
  return subgroup_from_indices(g, std::move(idx));
}

bool is_normal(const SubgroupHandle& h) {
  const MatrixGroup& g = *h.parent;
  for (int a = 0; a < g.order(); ++a) {
    const int ai = g.inv(a);
    for (int m : h.members)
      if (!h.contains_index(g.mult(g.mult(a, m), ai))) return false;
  }
  return true;
}

bool is_normal_in(const SubgroupHandle& h, const SubgroupHandle& k) {
  if (h.parent != k.parent)
    throw usage_error("handles must share the same parent group");
  const MatrixGroup& g = *h.parent;
  for (int a : k.members) {
    const int ai = g.inv(a);
    for (int m : h.members)
      if (!h.contains_index(g.mult(g.mult(a, m), ai))) return false;
  }
  return true;
}

namespace {

bool normalizes(const MatrixGroup& g, int y, const SubgroupHandle& h) {
  const int yi = g.inv(y);
  for (int m : h.members)
    if (!h.contains_index(g.mult(g.mult(y, m), yi))) return false;
  return true;
}

}  // namespace

std::vector<SubgroupHandle> sylow(const MatrixGroup& g, int p) {
  if (p < 2 || g.order() % p != 0)
    throw usage_error("p = " + std::to_string(p) +
                      " does not divide the group order");
  int target = 1;
  for (int n = g.order(); n % p == 0; n /= p) target *= p;

  // grow one p-subgroup inside its normalizer until it has full order
  int seed = -1;
  for (int i = 0; i < g.order(); ++i)
    if (g.element_order(i) == p) {
      seed = i;
      break;
    }
  SubgroupHandle h = subgroup_from_indices(g, {seed});
  while (h.order() < target) {
    bool grew = false;
    for (int y = 0; y < g.order() && !grew; ++y) {
      if (!is_p_power(g.element_order(y), p)) continue;
      if (h.contains_index(y)) continue;
      if (!normalizes(g, y, h)) continue;
      std::vector<int> ext = h.members;
      ext.push_back(y);
      SubgroupHandle h2 = subgroup_from_indices(g, std::move(ext));
      if (h2.order() <= target && is_p_power(h2.order(), p)) {
        h = std::move(h2);
        grew = true;
      }
    }
    if (!grew) throw std::logic_error("sylow growth stalled");
  }

  // all conjugates, deduplicated
  std::set<std::vector<int>> models;
  for (int a = 0; a < g.order(); ++a) {
    const int ai = g.inv(a);
    std::vector<int> k;
    k.reserve(h.members.size());
    for (int m : h.members) k.push_back(g.mult(g.mult(a, m), ai));
    std::sort(k.begin(), k.end());
    models.insert(std::move(k));
  }
  std::vector<SubgroupHandle> out;
  for (const auto& m : models) out.push_back(SubgroupHandle{&g, m});
  return out;
}

SubgroupHandle generated_by_sylows(const MatrixGroup& g, int p) {
  std::set<int> all;
  for (const SubgroupHandle& h : sylow(g, p))
    all.insert(h.members.begin(), h.members.end());
  return subgroup_from_indices(g, std::vector<int>(all.begin(), all.end()));
}

bool is_subset(const MatrixGroup& a, const MatrixGroup& b) {
  if (a.order() > b.order()) return false;
  for (const Mat3& m : a.elements())
    if (!b.contains(m)) return false;
  return true;
}

bool set_equal(const MatrixGroup& a, const MatrixGroup& b) {
  return a.order() == b.order() && is_subset(a, b);
}

MatrixGroup conjugate_group(const Mat3& p, const MatrixGroup& g) {
  const int conductor = std::lcm(p.conductor(), g.conductor());
  const Mat3 pc = promote_conductor(p, conductor);
  const Mat3 pi = pc.inverse();
  MatrixGroup r;
  r.name_ = g.name().empty() ? "" : "conj(" + g.name() + ")";
  r.conductor_ = conductor;
  for (const Mat3& gen : g.generators())
    r.gens_.push_back(pc * promote_conductor(gen, conductor) * pi);
  r.elems_.reserve(g.order());
  for (const Mat3& m : g.elements())
    r.elems_.push_back(pc * promote_conductor(m, conductor) * pi);
  r.words_ = g.words();
  r.canonicalize();
  return r;
}

bool unique_factorization_check(const MatrixGroup& g,
                                const std::vector<std::vector<Mat3>>& factors) {
  long expected = 1;
  for (const auto& f : factors) expected *= static_cast<long>(f.size());
  if (expected != g.order()) return false;

  std::vector<char> used(g.order(), 0);
  std::vector<size_t> pos(factors.size(), 0);
  while (true) {
    Mat3 prod = Mat3::identity(g.conductor());
    for (size_t i = 0; i < factors.size(); ++i)
      prod = prod * promote_conductor(factors[i][pos[i]], g.conductor());
    const int idx = g.index_of(prod);
    if (idx < 0 || used[idx]) return false;
    used[idx] = 1;
    // odometer increment over the factor lists
    size_t i = factors.size();
    while (i > 0) {
      --i;
      if (++pos[i] < factors[i].size()) break;
      pos[i] = 0;
      if (i == 0) return true;
    }
  }
}

bool verify_isomorphism(const MatrixGroup& src, const MatrixGroup& dst,
                        const std::vector<Mat3>& images) {
  if (images.size() != src.generators().size())
    throw usage_error("need exactly one image per generator");
  std::vector<int> img;
  for (const Mat3& m : images) {
    const int i = dst.index_of(m);
    if (i < 0) throw usage_error("generator image is not a member of the target");
    img.push_back(i);
  }
  if (src.order() != dst.order()) return false;

  const int n = src.order();
  std::vector<int> phi(n);
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    int j = 0;
    for (int l : src.words()[x]) {
      const int gi = img[std::abs(l) - 1];
      j = dst.mult(j, l > 0 ? gi : dst.inv(gi));
    }
    phi[x] = j;
    if (hit[j]) return false;  // not injective
    hit[j] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[src.mult(x, y)] != dst.mult(phi[x], phi[y])) return false;
  return true;
}

std::string two_sylow_type(const MatrixGroup& g) {
  int part = 1;
  for (int n = g.order(); n % 2 == 0; n /= 2) part *= 2;
  if (part != 8) throw usage_error("2-part of the group order is not 8");
  const SubgroupHandle h = sylow(g, 2).front();
  const std::map<int, int> sp = h.order_spectrum();
  auto cnt = [&sp](int o) {
    const auto it = sp.find(o);
    return it == sp.end() ? 0 : it->second;
  };
  if (cnt(8) > 0) return "C8";
  if (cnt(2) == 1 && cnt(4) == 6) return "Q8";
  if (cnt(2) == 5 && cnt(4) == 2) return "D4";
  if (cnt(2) == 7) return "C2^3";
  if (cnt(2) == 3 && cnt(4) == 4) return "C4xC2";
  throw std::logic_error("impossible order-8 spectrum");
}

long aut_count_abelian(int m, int n) {
  if (m < 1 || n < 1) throw usage_error("moduli must be positive");
  const int total = m * n;
  auto ord = [&](int a, int b) {
    const int oa = m / std::gcd(a, m);
    const int ob = n / std::gcd(b, n);
    return std::lcm(oa, ob);
  };
  auto spans = [&](int ua, int ub, int va, int vb) {
    std::vector<char> in(static_cast<size_t>(total), 0);
    in[0] = 1;
    std::deque<int> q = {0};
    int count = 1;
    while (!q.empty()) {
      const int cur = q.front();
      q.pop_front();
      const int ca = cur / n, cb = cur % n;
      const int nexts[2][2] = {{(ca + ua) % m, (cb + ub) % n},
                               {(ca + va) % m, (cb + vb) % n}};
      for (const auto& nx : nexts) {
        const int id = nx[0] * n + nx[1];
        if (!in[id]) {
          in[id] = 1;
          ++count;
          q.push_back(id);
        }
      }
    }
    return count == total;
  };
  long out = 0;
  for (int ua = 0; ua < m; ++ua)
    for (int ub = 0; ub < n; ++ub) {
      if (m % ord(ua, ub) != 0) continue;  // image of an order-m generator
      for (int va = 0; va < m; ++va)
        for (int vb = 0; vb < n; ++vb) {
          if (n % ord(va, vb) != 0) continue;  // image of an order-n generator
          if (spans(ua, ub, va, vb)) ++out;
        }
    }
  return out;
}

bool cd_inclusion_check(long cn, long ca, long cb, long dn, long da, long db,
                        long dd, long dr, long ds, int cap) {
  namespace cat = su3kit::catalog;
  const int conductor =
      std::lcm(cat::series_conductor(cn), cat::series_conductor(dn, dd));
  const MatrixGroup c = generate(
      {cat::e_matrix(conductor), cat::f_matrix(cn, ca, cb, conductor)}, cap);
  const MatrixGroup d =
      generate({cat::e_matrix(conductor), cat::f_matrix(dn, da, db, conductor),
                cat::gtilde(dd, dr, ds, conductor)},
               cap);
  return is_subset(c, d);
}

}  // namespace su3kit::engine
