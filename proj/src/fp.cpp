#include "su3kit/fp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "su3kit/catalog.hpp"

namespace su3kit::fp {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::string spaced;
  for (char c : text) {
    if (c == ';') {
      spaced += " ; ";
    } else {
      spaced += c;
    }
  }
  std::vector<std::string> out;
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int gen_index(const Presentation& p, const std::string& name) {
  for (size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] == name) return static_cast<int>(i);
  throw usage_error("unknown generator: " + name);
}

// "name" or "name^exp" -> letters appended to w
void append_term(const Presentation& p, const std::string& tok, Word& w) {
  const size_t caret = tok.find('^');
  const std::string name = tok.substr(0, caret);
  if (!valid_name(name)) throw usage_error("bad generator token: " + tok);
  long exp = 1;
  if (caret != std::string::npos) {
    const std::string e = tok.substr(caret + 1);
    size_t pos = 0;
    try {
      exp = std::stol(e, &pos);
    } catch (const std::exception&) {
      throw usage_error("bad exponent in token: " + tok);
    }
    if (pos != e.size()) throw usage_error("bad exponent in token: " + tok);
  }
  const int letter = gen_index(p, name) + 1;
  for (long i = 0; i < std::labs(exp); ++i)
    w.push_back(exp > 0 ? letter : -letter);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  const std::vector<std::string> toks = tokenize(text);
  Presentation p;
  size_t i = 0;
  if (i >= toks.size() || toks[i] != "gens:")
    throw usage_error("presentation must start with 'gens:'");
  ++i;
  while (i < toks.size() && toks[i] != ";") {
    if (!valid_name(toks[i])) throw usage_error("bad generator name: " + toks[i]);
    for (const std::string& g : p.generators)
      if (g == toks[i]) throw usage_error("duplicate generator: " + toks[i]);
    p.generators.push_back(toks[i]);
    ++i;
  }
  while (i < toks.size()) {
    if (toks[i] == ";") {
      ++i;
      continue;
    }
    if (toks[i] != "rel:") throw usage_error("expected 'rel:', got: " + toks[i]);
    ++i;
    Word w;
    while (i < toks.size() && toks[i] != ";") append_term(p, toks[i++], w);
    if (w.empty()) throw usage_error("empty relator");
    p.relators.push_back(std::move(w));
  }
  return p;
}

Word parse_word(const Presentation& p, const std::string& text) {
  const std::vector<std::string> toks = tokenize(text);
  if (toks.size() == 1 && toks[0] == "1") return Word{};  // empty word
  Word w;
  for (const std::string& tok : toks) {
    if (tok == ";") throw usage_error("unexpected ';' in word");
    append_term(p, tok, w);
  }
  return w;
}

std::string format_word(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    if (!first) out << " ";
    first = false;
    out << p.generators.at(std::abs(w[i]) - 1);
    if (run != 1) out << "^" << run;
    i = j;
  }
  return out.str();
}

Mat3 eval_word(const Presentation& p, const GenAssignment& a, const Word& w) {
  int conductor = 72;
  for (const auto& [name, m] : a) conductor = std::max(conductor, m.conductor());
  Mat3 acc = Mat3::identity(conductor);
  for (int l : w) {
    const std::string& name = p.generators.at(std::abs(l) - 1);
    const auto it = a.find(name);
    if (it == a.end()) throw usage_error("generator not assigned: " + name);
    acc = acc * (l > 0 ? it->second : it->second.inverse());
  }
  return acc;
}

std::vector<Word> check_presentation(const Presentation& p,
                                     const GenAssignment& a) {
  std::vector<Word> failing;
  for (const Word& r : p.relators)
    if (!eval_word(p, a, r).is_identity()) failing.push_back(r);
  return failing;
}

bool verify_identity(const Presentation& p, const GenAssignment& a,
                     const Word& lhs, const Word& rhs) {
  return eval_word(p, a, lhs) == eval_word(p, a, rhs);
}

bool verify_identity(const Presentation& p, const GenAssignment& a,
                     const std::string& lhs, const std::string& rhs) {
  return verify_identity(p, a, parse_word(p, lhs), parse_word(p, rhs));
}

namespace {

// HLT coset enumeration state over the trivial subgroup.
struct Enumerator {
  int k;    // generator count
  int cap;  // maximum live cosets
  std::vector<std::vector<int>> tab;  // [coset][2k] targets, -1 undefined
  std::vector<int> parent;            // union-find over cosets
  std::deque<std::pair<int, int>> pending;  // coincidences
  int live = 0;

  Enumerator(int gens, int cap_) : k(gens), cap(cap_) {}

  static int col(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int icol(int c) { return c ^ 1; }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  int fresh() {
    if (live + 1 > cap)
      throw cap_exceeded("coset enumeration exceeded cap " +
                         std::to_string(cap));
    tab.emplace_back(2 * k, -1);
    parent.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  int get(int q, int c) {
    const int r = tab[q][c];
    return r == -1 ? -1 : find(r);
  }

  // Record q·c = r, queueing a coincidence on conflict.
  void set(int q, int c, int r) {
    q = find(q);
    r = find(r);
    const int cur = get(q, c);
    if (cur == -1) {
      tab[q][c] = r;
      const int rev = get(r, icol(c));
      if (rev == -1) {
        tab[r][icol(c)] = q;
      } else if (rev != q) {
        pending.emplace_back(rev, q);
      }
    } else if (cur != r) {
      pending.emplace_back(cur, r);
    }
  }

  void merge_all() {
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      int a = find(x), b = find(y);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[b] = a;
      --live;
      for (int c = 0; c < 2 * k; ++c) {
        int t = tab[b][c];
        if (t == -1) continue;
        t = find(t);
        const int cur = get(a, c);
        if (cur == -1) {
          tab[a][c] = t;
          const int rev = get(t, icol(c));
          if (rev == -1) {
            tab[t][icol(c)] = a;
          } else if (rev != a) {
            pending.emplace_back(rev, a);
          }
        } else if (cur != t) {
          pending.emplace_back(cur, t);
        }
      }
    }
  }

  // Trace a relator from q: interior gaps spawn fresh cosets, the closing
  // step is forced as a deduction and may trigger coincidences.
  void trace(int q, const Word& w) {
    q = find(q);
    int pos = q;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      const int c = col(w[i]);
      int nxt = get(pos, c);
      if (nxt == -1) {
        nxt = fresh();
        tab[pos][c] = nxt;
        tab[nxt][icol(c)] = pos;
      }
      pos = nxt;
    }
    set(pos, col(w.back()), q);
    merge_all();
  }
};

}  // namespace

int todd_coxeter(const Presentation& p, int cap) {
  if (cap < 1) throw usage_error("cap must be at least 1");
  Enumerator e(static_cast<int>(p.generators.size()), cap);
  e.fresh();
  for (size_t q = 0; q < e.tab.size(); ++q) {
    const int qi = static_cast<int>(q);
    if (e.find(qi) != qi) continue;
    for (const Word& w : p.relators) {
      if (w.empty()) continue;
      if (e.find(qi) != qi) break;
      e.trace(qi, w);
    }
    if (e.find(qi) != qi) continue;
    for (int c = 0; c < 2 * e.k; ++c) {
      if (e.find(qi) != qi) break;
      if (e.get(qi, c) == -1) {
        const int n = e.fresh();
        e.tab[qi][c] = n;
        e.tab[n][Enumerator::icol(c)] = qi;
      }
    }
  }
  int count = 0;
  for (size_t i = 0; i < e.tab.size(); ++i)
    if (e.find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  return count;
}

Presentation fr162x4_presentation() {
  return parse_presentation(
      "gens: c6 c18 h1 h3;"
      "rel: c6^6;"
      "rel: c18^18;"
      "rel: c6 c18 c6^-1 c18^-1;"
      "rel: h1^2;"
      "rel: h3^3;"
      "rel: h1 h3 h1 h3;"
      "rel: h1 c6 h1^-1 c18^-6 c6;"
      "rel: h1 c18 h1^-1 c18^-1 c6^-3;"
      "rel: h3 c6 h3^-1 c18^3 c6^-1;"
      "rel: h3 c18 h3^-1 c18^-10 c6^-1");
}

GenAssignment fr162x4_assignment() {
  namespace cat = su3kit::catalog;
  return {{"c6", cat::c6()},
          {"c18", cat::c18()},
          {"h1", cat::h_matrix(1)},
          {"h3", cat::h_matrix(3)}};
}

Presentation d_action_presentation() {
  return parse_presentation(
      "gens: f fp fpp e b;"
      "rel: f^18;"
      "rel: fpp^18;"
      "rel: f fpp f^-1 fpp^-1;"
      "rel: f fpp^-1 f fpp^-1 f fpp^-1 f fpp^-1 f fpp^-1 f fpp^-1;"
      "rel: f fpp fp;"
      "rel: e^3;"
      "rel: b^2;"
      "rel: b e b e;"
      "rel: b f b^-1 fp^-1;"
      "rel: b fp b^-1 f^-1;"
      "rel: b fpp b^-1 fpp^-1;"
      "rel: e f e^-1 fp^-1;"
      "rel: e fp e^-1 fpp^-1;"
      "rel: e fpp e^-1 f^-1");
}

GenAssignment d_action_assignment() {
  namespace cat = su3kit::catalog;
  return {{"f", cat::f_matrix(18, 1, 1)},
          {"fp", cat::fprime()},
          {"fpp", cat::fdprime()},
          {"e", cat::e_matrix(72)},
          {"b", cat::btilde(72)}};
}

Presentation fr162_presentation() {
  return parse_presentation(
      "gens: a b h1 h3;"
      "rel: a^9;"
      "rel: b^3;"
      "rel: a b a^-1 b^-1;"
      "rel: h1^2;"
      "rel: h3^3;"
      "rel: h1 h3 h1 h3;"
      "rel: h1 a h1^-1 a^-1;"
      "rel: h1 b h1^-1 b^-2 a^-6;"
      "rel: h3 a h3^-1 b^-1 a^-1;"
      "rel: h3 b h3^-1 b^-1 a^-6");
}

GenAssignment fr162_assignment() {
  namespace cat = su3kit::catalog;
  return {{"a", cat::matrix_A()},
          {"b", cat::matrix_B()},
          {"h1", cat::h_matrix(1)},
          {"h3", cat::h_matrix(3)}};
}

}  // namespace su3kit::fp
