#include "clusterkit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "clusterkit/errors.hpp"

namespace clusterkit {

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return w;
  while (true) {
    skip_ws();
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed word '" + text + "': expected a letter index");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 100000) throw ParseError("letter index too large in '" + text + "'");
      ++i;
    }
    w.letters.push_back(v);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("malformed word '" + text + "': expected ','");
    ++i;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  return os.str();
}

void check_word(const Word& w, int n) {
  for (int s : w.letters)
    if (s < 1 || s > n)
      throw IndexError("letter " + std::to_string(s) + " out of range 1.." + std::to_string(n));
}

bool is_coxeter_word(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int s : w.letters) {
    if (s < 1 || s > n || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

GroupElement GroupElement::identity(int n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return GroupElement(std::move(m));
}

RootVec GroupElement::apply(const RootVec& v) const {
  const int n = rank();
  RootVec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += mat_[i][j] * v[j];
  return out;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  const int n = a.rank();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.mat_[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) m[i][j] += a.mat_[i][k] * b.mat_[k][j];
    }
  return GroupElement(std::move(m));
}

GroupElement simple_reflection(const RootSystem& rs, int s) {
  const int n = rs.rank();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int t = 1; t <= n; ++t) {
    const RootVec col = rs.reflect(s, rs.simple_root(t));
    for (int i = 0; i < n; ++i) m[i][t - 1] = col[i];
  }
  return GroupElement(std::move(m));
}

GroupElement element_of_word(const RootSystem& rs, const Word& w) {
  check_word(w, rs.rank());
  GroupElement g = GroupElement::identity(rs.rank());
  for (int s : w.letters) g = g * simple_reflection(rs, s);
  return g;
}

int length(const RootSystem& rs, const GroupElement& g) {
  int len = 0;
  for (const RootVec& beta : rs.positive_roots())
    if (g.apply(beta).is_nonpositive()) ++len;
  return len;
}

bool is_left_descent(const RootSystem& rs, const GroupElement& g, int s) {
  return length(rs, simple_reflection(rs, s) * g) < length(rs, g);
}

GroupElement longest_element(const RootSystem& rs) {
  GroupElement g = GroupElement::identity(rs.rank());
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 1; s <= rs.rank(); ++s) {
      GroupElement h = g * simple_reflection(rs, s);
      const int hl = length(rs, h);
      if (hl > len) {
        g = std::move(h);
        len = hl;
        grew = true;
        break;
      }
    }
  }
  if (len != static_cast<int>(rs.num_positive_roots()))
    throw InvariantViolation("longest element has length != N");
  return g;
}

Word c_sorting_word(const RootSystem& rs, const Word& c, const GroupElement& target) {
  const int n = rs.rank();
  if (!is_coxeter_word(c, n)) throw IndexError("'" + to_string(c) + "' is not a Coxeter word");
  const std::size_t cap = static_cast<std::size_t>(n) * (rs.num_positive_roots() + 1);
  Word out;
  GroupElement rest = target;
  int rest_len = length(rs, rest);
  for (std::size_t step = 0; rest_len > 0; ++step) {
    if (step >= cap) throw InvariantViolation("c-sorting scan exceeded n(N+1) letters");
    const int s = c[step % c.size()];
    GroupElement shorter = simple_reflection(rs, s) * rest;
    const int l = length(rs, shorter);
    if (l < rest_len) {
      out.letters.push_back(s);
      rest = std::move(shorter);
      rest_len = l;
    }
  }
  return out;
}

namespace {

// Heap order of a word: p precedes q (p < q) when the letters do not commute,
// closed transitively. below[q] lists every p that must precede q.
std::vector<std::vector<bool>> heap_order(const CartanMatrix& cartan, const Word& w) {
  const std::size_t k = w.size();
  std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t p = 0; p < q; ++p)
      if (w[p] == w[q] || !cartan.commute(w[p], w[q])) {
        lt[p][q] = true;
        for (std::size_t r = 0; r < p; ++r)
          if (lt[r][p]) lt[r][q] = true;
      }
  return lt;
}

}  // namespace

Word commutation_normal_form(const CartanMatrix& cartan, const Word& w) {
  check_word(w, cartan.rank());
  const auto lt = heap_order(cartan, w);
  const std::size_t k = w.size();
  std::vector<bool> used(k, false);
  Word out;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = k;
    for (std::size_t q = 0; q < k; ++q) {
      if (used[q]) continue;
      bool available = true;
      for (std::size_t p = 0; p < q && available; ++p)
        if (lt[p][q] && !used[p]) available = false;
      if (available && (best == k || w[q] < w[best])) best = q;
    }
    used[best] = true;
    out.letters.push_back(w[best]);
  }
  return out;
}

std::vector<Word> restricted_prefixes(const CartanMatrix& cartan, const Word& c, int i, int j) {
  const int n = cartan.rank();
  if (!is_coxeter_word(c, n)) throw IndexError("'" + to_string(c) + "' is not a Coxeter word");
  if (i < 1 || j > n || i > j)
    throw IndexError("restriction interval " + std::to_string(i) + ".." + std::to_string(j) +
                     " invalid for rank " + std::to_string(n));
  const auto lt = heap_order(cartan, c);
  const std::size_t k = c.size();

  // Grow order ideals of the heap of c one available letter at a time and
  // keep the letters inside i..j.
  std::set<std::vector<bool>> seen;
  std::set<Word> out;
  std::function<void(std::vector<bool>&)> grow = [&](std::vector<bool>& ideal) {
    if (!seen.insert(ideal).second) return;
    Word prefix;
    for (std::size_t q = 0; q < k; ++q)
      if (ideal[q] && c[q] >= i && c[q] <= j) prefix.letters.push_back(c[q]);
    out.insert(commutation_normal_form(cartan, prefix));
    for (std::size_t q = 0; q < k; ++q) {
      if (ideal[q]) continue;
      bool available = true;
      for (std::size_t p = 0; p < q && available; ++p)
        if (lt[p][q] && !ideal[p]) available = false;
      if (!available) continue;
      ideal[q] = true;
      grow(ideal);
      ideal[q] = false;
    }
  };
  std::vector<bool> empty(k, false);
  grow(empty);

  std::vector<Word> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  });
  return sorted;
}

std::vector<Word> coxeter_elements(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  std::vector<std::pair<int, int>> edges;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (!cartan.commute(s, t)) edges.emplace_back(s, t);
  std::set<Word> out;
  const std::size_t count = std::size_t{1} << edges.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    // bit set: t before s; clear: s before t
    std::vector<std::vector<int>> preds(n + 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [s, t] = edges[e];
      if (mask >> e & 1U)
        preds[s].push_back(t);
      else
        preds[t].push_back(s);
    }
    Word w;
    std::vector<bool> placed(n + 1, false);
    for (int step = 0; step < n; ++step) {
      int pick = 0;
      for (int s = 1; s <= n && pick == 0; ++s) {
        if (placed[s]) continue;
        bool ready = true;
        for (int p : preds[s])
          if (!placed[p]) ready = false;
        if (ready) pick = s;
      }
      if (pick == 0) throw InvariantViolation("Dynkin diagram orientation has a cycle");
      placed[pick] = true;
      w.letters.push_back(pick);
    }
    out.insert(w);
  }
  return {out.begin(), out.end()};
}

}  // namespace clusterkit
