#include "clusterkit/subword.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "clusterkit/errors.hpp"
#include "clusterkit/parallel.hpp"

namespace clusterkit {

bool Facet::contains(int k) const {
  return std::binary_search(positions.begin(), positions.end(), k);
}

std::string to_string(const Facet& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.positions[i];
  os << '}';
  return os.str();
}

Complex::Complex(CartanMatrix cartan, Word c)
    : rs_(std::move(cartan)), c_(std::move(c)), w0_(GroupElement::identity(1)) {
  const int n = rs_.rank();
  if (!is_coxeter_word(c_, n))
    throw IndexError("'" + to_string(c_) + "' is not a Coxeter word for rank " + std::to_string(n));
  w0_ = longest_element(rs_);
  q_ = c_;
  const Word tail = c_sorting_word(rs_, c_, w0_);
  q_.letters.insert(q_.letters.end(), tail.letters.begin(), tail.letters.end());

  pos_root_.reserve(q_.size());
  for (int k = 0; k < n; ++k) pos_root_.push_back(-rs_.simple_root(c_[k]));
  GroupElement prefix = GroupElement::identity(n);
  for (int letter : tail.letters) {
    pos_root_.push_back(prefix.apply(rs_.simple_root(letter)));
    prefix = prefix * simple_reflection(rs_, letter);
  }
  for (std::size_t k = n; k < pos_root_.size(); ++k)
    if (!rs_.is_positive_root(pos_root_[k]))
      throw InvariantViolation("position root of the sorting word is not positive");

  // The leftmost reduced subword for w0 is the complement of the
  // lexicographically last facet.
  GroupElement g = GroupElement::identity(n);
  int len = 0;
  for (int k = 1; k <= size(); ++k) {
    GroupElement h = g * simple_reflection(rs_, letter(k));
    const int l = length(rs_, h);
    if (len < static_cast<int>(rs_.num_positive_roots()) && l == len + 1) {
      g = std::move(h);
      len = l;
    } else {
      antigreedy_.positions.push_back(k);
    }
  }
  if (!is_facet(antigreedy_)) throw InvariantViolation("antigreedy construction failed");
}

int Complex::position_of_root(const RootVec& beta) const {
  for (int k = 0; k < size(); ++k)
    if (pos_root_[k] == beta) return k + 1;
  throw IndexError("vector is not an almost positive root");
}

void Complex::check_position(int k) const {
  if (k < 1 || k > size())
    throw IndexError("position " + std::to_string(k) + " out of range 1.." + std::to_string(size()));
}

void Complex::check_facet(const Facet& f) const {
  if (static_cast<int>(f.size()) != rank())
    throw IndexError("facet " + to_string(f) + " does not have " + std::to_string(rank()) +
                     " positions");
  for (std::size_t i = 0; i < f.size(); ++i) {
    check_position(f.positions[i]);
    if (i > 0 && f.positions[i] <= f.positions[i - 1])
      throw IndexError("facet " + to_string(f) + " is not strictly increasing");
  }
}

Facet Complex::greedy_facet() const {
  Facet f;
  for (int k = 1; k <= rank(); ++k) f.positions.push_back(k);
  return f;
}

Facet Complex::antigreedy_facet() const { return antigreedy_; }

bool Complex::is_facet(const Facet& f) const {
  try {
    check_facet(f);
  } catch (const IndexError&) {
    return false;
  }
  GroupElement g = GroupElement::identity(rank());
  for (int k = 1; k <= size(); ++k)
    if (!f.contains(k)) g = g * simple_reflection(rs_, letter(k));
  return g == w0_;
}

namespace {

template <class V>
V apply_prefix(const RootSystem& rs, const Word& q, const Facet& f, int k, V v) {
  for (int p = k - 1; p >= 1; --p)
    if (!f.contains(p)) v = rs.reflect(q[p - 1], v);
  return v;
}

}  // namespace

RootVec Complex::root_function(const Facet& f, int k) const {
  check_position(k);
  return apply_prefix(rs_, q_, f, k, rs_.simple_root(letter(k)));
}

WeightVec Complex::weight_function(const Facet& f, int k) const {
  check_position(k);
  return apply_prefix(rs_, q_, f, k, rs_.fundamental_weight(letter(k)));
}

CorootVec Complex::coroot_function(const Facet& f, int k) const {
  check_position(k);
  return apply_prefix(rs_, q_, f, k, rs_.simple_coroot(letter(k)));
}

CoweightVec Complex::coweight_function(const Facet& f, int k) const {
  check_position(k);
  return apply_prefix(rs_, q_, f, k, rs_.fundamental_coweight(letter(k)));
}

RootTable Complex::root_table(const Facet& f) const {
  check_facet(f);
  RootTable t;
  const int m = size();
  t.roots.reserve(m);
  t.weights.reserve(m);
  t.coroots.reserve(m);
  t.coweights.reserve(m);
  for (int k = 1; k <= m; ++k) {
    t.roots.push_back(root_function(f, k));
    t.weights.push_back(weight_function(f, k));
    t.coroots.push_back(coroot_function(f, k));
    t.coweights.push_back(coweight_function(f, k));
  }
  return t;
}

FlipResult Complex::flip(const Facet& f, int i) const { return flip(f, i, root_table(f)); }

FlipResult Complex::flip(const Facet& f, int i, const RootTable& table) const {
  if (!f.contains(i)) throw IndexError("position " + std::to_string(i) + " is not in " + to_string(f));
  const RootVec& beta = table.roots[i - 1];
  const RootVec minus = -beta;
  int partner = 0;
  for (int k = 1; k <= size(); ++k) {
    if (f.contains(k)) continue;
    const RootVec& r = table.roots[k - 1];
    if (r == beta || r == minus) {
      if (partner != 0) throw InvariantViolation("flip partner of " + std::to_string(i) + " in " +
                                                 to_string(f) + " is not unique");
      partner = k;
    }
  }
  if (partner == 0)
    throw InvariantViolation("no flip partner for " + std::to_string(i) + " in " + to_string(f));
  FlipResult out;
  out.entered = partner;
  out.facet.positions = f.positions;
  std::replace(out.facet.positions.begin(), out.facet.positions.end(), i, partner);
  std::sort(out.facet.positions.begin(), out.facet.positions.end());
  return out;
}

RootTable Complex::update_after_flip(const Facet& f, int i, const FlipResult& flipped,
                                     const RootTable& table) const {
  if (!f.contains(i)) throw IndexError("position " + std::to_string(i) + " is not in " + to_string(f));
  const int j = flipped.entered;
  const RootVec beta = table.roots[i - 1];
  const CorootVec beta_vee = table.coroots[i - 1];
  RootTable out = table;
  for (int k = std::min(i, j) + 1; k <= std::max(i, j); ++k) {
    out.roots[k - 1] = rs_.reflect_in(beta, beta_vee, table.roots[k - 1]);
    out.weights[k - 1] = rs_.reflect_in(beta, beta_vee, table.weights[k - 1]);
    out.coroots[k - 1] = rs_.reflect_in(beta, beta_vee, table.coroots[k - 1]);
    out.coweights[k - 1] = rs_.reflect_in(beta, beta_vee, table.coweights[k - 1]);
  }
  return out;
}

WeightVec Complex::brick_vector(const Facet& f) const { return clusterkit::brick_vector(root_table(f)); }

WeightVec brick_vector(const RootTable& table) {
  WeightVec b(table.weights.empty() ? 0 : table.weights.front().size());
  for (const WeightVec& w : table.weights) b += w;
  return b;
}

long FacetEnumeration::index_of(const Facet& f) const {
  auto it = std::lower_bound(facets.begin(), facets.end(), f);
  if (it == facets.end() || *it != f) return -1;
  return it - facets.begin();
}

FacetEnumeration enumerate_facets_with_tables(const Complex& k, unsigned jobs) {
  const Facet greedy = k.greedy_facet();
  const Facet antigreedy = k.antigreedy_facet();
  std::map<Facet, RootTable> found;
  std::vector<Facet> frontier{greedy};
  found.emplace(greedy, k.root_table(greedy));
  std::size_t discovered = 1;

  struct Candidate {
    Facet facet;
    RootTable table;
  };
  while (!frontier.empty()) {
    // Flip every position of every frontier facet; merge in frontier order so
    // the discovery sequence does not depend on the number of workers.
    std::vector<std::vector<Candidate>> out(frontier.size());
    parallel_for(frontier.size(), jobs, [&](std::size_t idx) {
      const Facet& f = frontier[idx];
      const RootTable& table = found.at(f);
      for (int i : f.positions) {
        FlipResult r = k.flip(f, i, table);
        RootTable t = k.update_after_flip(f, i, r, table);
        out[idx].push_back({std::move(r.facet), std::move(t)});
      }
    });
    std::vector<Facet> next;
    for (auto& batch : out)
      for (auto& cand : batch) {
        if (found.count(cand.facet)) continue;
        const bool spot = discovered % 20 == 0 || cand.facet == antigreedy;
        ++discovered;
        if (spot && k.root_table(cand.facet) != cand.table)
          throw InvariantViolation("flip update disagrees with the direct formula at " +
                                   to_string(cand.facet));
        next.push_back(cand.facet);
        found.emplace(std::move(cand.facet), std::move(cand.table));
      }
    frontier = std::move(next);
  }

  FacetEnumeration e;
  e.facets.reserve(found.size());
  e.tables.reserve(found.size());
  for (auto& [f, t] : found) {
    e.facets.push_back(f);
    e.tables.push_back(std::move(t));
  }
  return e;
}

std::vector<Facet> enumerate_facets(const Complex& k, unsigned jobs) {
  return enumerate_facets_with_tables(k, jobs).facets;
}

std::vector<Facet> brute_force_facets(const Complex& k) {
  const int n = k.rank();
  const int m = k.size();
  const RootSystem& rs = k.root_system();
  std::vector<Facet> out;
  std::vector<int> chosen;
  // Complement prefixes of a reduced word are reduced, which prunes the search.
  std::function<void(int, const GroupElement&, int)> rec = [&](int pos, const GroupElement& g,
                                                               int len) {
    if (pos > m) {
      if (static_cast<int>(chosen.size()) == n && g == k.longest()) out.push_back({chosen});
      return;
    }
    if (static_cast<int>(chosen.size()) < n) {
      chosen.push_back(pos);
      rec(pos + 1, g, len);
      chosen.pop_back();
    }
    if ((pos - 1) - static_cast<int>(chosen.size()) < m - n) {
      GroupElement h = g * simple_reflection(rs, k.letter(pos));
      if (length(rs, h) == len + 1) rec(pos + 1, h, len + 1);
    }
  };
  rec(1, GroupElement::identity(n), 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clusterkit
