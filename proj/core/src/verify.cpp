#include "clusterkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "clusterkit/errors.hpp"
#include "clusterkit/parallel.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/typea.hpp"

namespace clusterkit {

namespace {

using Clock = std::chrono::steady_clock;
using Finding = std::optional<Counterexample>;

std::string type_label(const CartanMatrix& a) { return a.label().empty() ? "custom" : a.label(); }

Report start_report(const std::string& name, const Complex& k) {
  Report r;
  r.check = name;
  r.type = type_label(k.cartan());
  r.coxeter = to_string(k.coxeter());
  return r;
}

/// Runs fn on every index and records the failure with the smallest index,
/// so the outcome does not depend on the number of jobs.
Report run(Report r, std::size_t count, unsigned jobs, const std::function<Finding(std::size_t)>& fn) {
  const auto t0 = Clock::now();
  std::vector<Finding> found(count);
  parallel_for(count, jobs, [&](std::size_t i) { found[i] = fn(i); });
  for (auto& f : found)
    if (f) {
      r.pass = false;
      r.counterexample = std::move(f);
      break;
    }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

std::string to_string(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + to_string(RootVec(pts[i]));
  return out + "}";
}

Int determinant(std::vector<std::vector<BigInt>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * static_cast<Int>(m[n - 1][n - 1]);
}

template <class Vec>
Int determinant_of_columns(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
  return determinant(std::move(m));
}

/// Dominant representative of the W-orbit of a weight.
WeightVec dominant(const RootSystem& rs, WeightVec w) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int s = 1; s <= rs.rank(); ++s)
      if (w[s - 1] < 0) {
        w = rs.reflect(s, w);
        moved = true;
      }
  }
  return w;
}

/// Every root-lattice vector between 0 and beta.
std::vector<RootVec> box_below(const RootVec& beta) {
  std::vector<RootVec> out{RootVec(beta.size())};
  for (std::size_t i = 0; i < beta.size(); ++i) {
    std::vector<RootVec> next;
    for (const RootVec& v : out)
      for (Int x = 0; x <= beta[i]; ++x) {
        RootVec u = v;
        u[i] = x;
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

std::size_t antigreedy_index(const Correspondence& k) {
  return static_cast<std::size_t>(k.facets.index_of(k.complex.antigreedy_facet()));
}

Finding newton_finding(const Correspondence& k, const RootVec& beta) {
  const Complex& cx = k.complex;
  const int pos = cx.position_of_root(beta);
  const FPolynomial f = f_polynomial(k.variable_of_root(beta));
  const std::size_t ag = antigreedy_index(k);
  std::vector<Point> column;
  for (const RootTable& t : k.facets.tables)
    column.push_back(cx.root_system()
                         .weight_diff_to_root_coords(t.weights[pos - 1], k.facets.tables[ag].weights[pos - 1])
                         .coords());
  const LatticePolytope expected = hull(column), actual = hull(f.exponents());
  if (expected == actual) return std::nullopt;
  return Counterexample{k.facets.facets[ag], pos, to_string(expected.vertices()), to_string(actual.vertices())};
}

}  // namespace

int Correspondence::slot_of(std::size_t i, int p) const {
  const auto& idx = seeds.at(i).col_index;
  const auto it = std::find(idx.begin(), idx.end(), p);
  return it == idx.end() ? -1 : static_cast<int>(it - idx.begin());
}

const MPoly& Correspondence::variable_of_root(const RootVec& beta) const {
  const int p = complex.position_of_root(beta);
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (const int s = slot_of(i, p); s >= 0) return seeds[i].vars[s];
  throw InvariantViolation("no cluster variable for root " + to_string(beta));
}

Correspondence build_correspondence(const CartanMatrix& cartan, const Word& c, unsigned jobs) {
  Correspondence k{Complex(cartan, c), {}, {}};
  k.facets = enumerate_facets_with_tables(k.complex, jobs);
  const std::size_t count = k.facets.facets.size();
  k.seeds.assign(count, Seed{});
  std::vector<char> seen(count, 0);
  const long start = k.facets.index_of(k.complex.greedy_facet());
  k.seeds[start] = initial_seed(cartan, c);
  seen[start] = 1;
  const int n = cartan.rank();

  auto by_position = [](const Seed& s) {
    std::map<int, MPoly> m;
    for (int slot = 0; slot < s.rank(); ++slot) m.emplace(s.col_index[slot], s.vars[slot]);
    return m;
  };

  std::vector<std::size_t> frontier{static_cast<std::size_t>(start)};
  while (!frontier.empty()) {
    std::vector<std::vector<std::pair<long, Seed>>> children(frontier.size());
    parallel_for(frontier.size(), jobs, [&](std::size_t f) {
      const std::size_t u = frontier[f];
      const Facet& facet = k.facets.facets[u];
      const Seed& seed = k.seeds[u];
      for (int slot = 0; slot < n; ++slot) {
        const int p = seed.col_index[slot];
        const FlipResult flipped = k.complex.flip(facet, p, k.facets.tables[u]);
        Seed next = mutate(seed, slot + 1);
        next.col_index[slot] = flipped.entered;
        if (d_vector(next.vars[slot]) != k.complex.pos_root(flipped.entered))
          throw InvariantViolation("mutating " + to_string(facet) + " at position " + std::to_string(p) +
                                   " does not produce the root of position " + std::to_string(flipped.entered));
        const long v = k.facets.index_of(flipped.facet);
        if (v < 0) throw InvariantViolation("flip left the facet list");
        children[f].emplace_back(v, std::move(next));
      }
    });
    std::vector<std::size_t> next_frontier;
    for (auto& batch : children)
      for (auto& [v, s] : batch) {
        if (seen[v]) {
          if (by_position(k.seeds[v]) != by_position(s))
            throw InvariantViolation("facet " + to_string(k.facets.facets[v]) + " reached with two different clusters");
          continue;
        }
        seen[v] = 1;
        k.seeds[v] = std::move(s);
        next_frontier.push_back(static_cast<std::size_t>(v));
      }
    frontier = std::move(next_frontier);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvariantViolation("some facets are not reached by mutation");
  return k;
}

Report check_correspondence(const CartanMatrix& cartan, const Word& c, unsigned jobs) {
  Report r;
  r.check = "correspondence";
  r.type = type_label(cartan);
  r.coxeter = to_string(c);
  const auto t0 = Clock::now();
  try {
    const Correspondence k = build_correspondence(cartan, c, jobs);
    std::set<std::vector<MPoly>> clusters;
    for (const Seed& s : k.seeds) clusters.insert(seed_key(s));
    if (clusters.size() != k.seeds.size()) {
      r.pass = false;
      r.detail = "two facets share a cluster";
    }
    r.detail = std::to_string(k.seeds.size()) + " facets and seeds";
  } catch (const InvariantViolation& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

Report check_c_vectors(const Correspondence& k, unsigned jobs) {
  const int n = k.complex.rank();
  return run(start_report("c-vectors", k.complex), k.seeds.size(), jobs, [&](std::size_t i) -> Finding {
    const Seed& s = k.seeds[i];
    const auto cv = c_vectors(s);
    for (int slot = 0; slot < n; ++slot) {
      const int p = s.col_index[slot];
      const RootVec& expected = k.facets.tables[i].roots[p - 1];
      if (cv[slot] != expected || !cv[slot].is_sign_coherent())
        return Counterexample{k.facets.facets[i], p, to_string(expected), to_string(cv[slot])};
    }
    if (const Int det = determinant_of_columns(cv); det != 1 && det != -1)
      return Counterexample{k.facets.facets[i], 0, "determinant +-1", "determinant " + std::to_string(det)};
    return std::nullopt;
  });
}

Report check_g_vectors(const Correspondence& k, unsigned jobs) {
  const int n = k.complex.rank();
  const RootSystem& rs = k.complex.root_system();
  return run(start_report("g-vectors", k.complex), k.seeds.size(), jobs, [&](std::size_t i) -> Finding {
    const Seed& s = k.seeds[i];
    const auto cv = c_vectors(s);
    std::vector<WeightVec> g;
    for (int slot = 0; slot < n; ++slot) {
      const int p = s.col_index[slot];
      g.push_back(g_vector(s.vars[slot]));
      const WeightVec& expected = k.facets.tables[i].weights[p - 1];
      if (g.back() != expected) return Counterexample{k.facets.facets[i], p, to_string(expected), to_string(g.back())};
    }
    // g-vectors are the dual basis of the coroots of the c-vectors.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Int got = rs.pair(g[a], rs.coroot_of(cv[b].is_nonnegative() ? cv[b] : -cv[b])) *
                        (cv[b].is_nonnegative() ? 1 : -1);
        if (got != (a == b ? 1 : 0))
          return Counterexample{k.facets.facets[i], s.col_index[a],
                                "<g, c^v> = " + std::to_string(a == b ? 1 : 0) + " against position " +
                                    std::to_string(s.col_index[b]),
                                std::to_string(got)};
      }
    return std::nullopt;
  });
}

Report check_exchange_matrix(const Correspondence& k, unsigned jobs) {
  const int n = k.complex.rank();
  const RootSystem& rs = k.complex.root_system();
  return run(start_report("exchange-matrix", k.complex), k.seeds.size(), jobs, [&](std::size_t i) -> Finding {
    const Seed& s = k.seeds[i];
    const RootTable& t = k.facets.tables[i];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int pa = s.col_index[a], pb = s.col_index[b];
        Int expected = 0;
        if (a != b) expected = (pa < pb ? -1 : 1) * rs.pair(t.roots[pb - 1], t.coroots[pa - 1]);
        if (s.matrix[a][b] != expected)
          return Counterexample{k.facets.facets[i], pa,
                                "b(" + std::to_string(pa) + "," + std::to_string(pb) + ") = " + std::to_string(expected),
                                std::to_string(s.matrix[a][b])};
      }
    return std::nullopt;
  });
}

Report check_newton_conjecture(const Correspondence& k, unsigned jobs) {
  const auto& roots = k.complex.root_system().positive_roots();
  return run(start_report("newton", k.complex), roots.size(), jobs,
             [&](std::size_t b) { return newton_finding(k, roots[b]); });
}

Report check_lattice_points(const Correspondence& k, unsigned jobs) {
  const auto& roots = k.complex.root_system().positive_roots();
  return run(start_report("lattice", k.complex), roots.size(), jobs, [&](std::size_t b) -> Finding {
    const FPolynomial f = f_polynomial(k.variable_of_root(roots[b]));
    std::vector<Point> monomials = f.exponents();
    std::sort(monomials.begin(), monomials.end());
    std::vector<Point> inside;
    for (Point& p : hull(monomials).lattice_points())
      if (std::all_of(p.begin(), p.end(), [](Int x) { return x >= 0; })) inside.push_back(std::move(p));
    if (inside == monomials) return std::nullopt;
    return Counterexample{Facet{}, k.complex.position_of_root(roots[b]), to_string(inside), to_string(monomials)};
  });
}

Report check_lemmas(const Correspondence& k, unsigned jobs) {
  const Complex& cx = k.complex;
  const RootSystem& rs = cx.root_system();
  const auto& facets = k.facets.facets;
  const auto& tables = k.facets.tables;
  const std::size_t ag = antigreedy_index(k);
  const std::size_t g = static_cast<std::size_t>(k.facets.index_of(cx.greedy_facet()));
  const std::size_t count = facets.size();
  // Index i < count: facet i; the final index covers the greedy/antigreedy identity.
  return run(start_report("lemmas", cx), count + 1, jobs, [&](std::size_t i) -> Finding {
    if (i == count) {
      for (int p = cx.rank() + 1; p <= cx.size(); ++p) {
        const RootVec diff = rs.weight_diff_to_root_coords(tables[g].weights[p - 1], tables[ag].weights[p - 1]);
        if (diff != tables[g].roots[p - 1])
          return Counterexample{facets[g], p, to_string(tables[g].roots[p - 1]), to_string(diff)};
      }
      return std::nullopt;
    }
    const RootTable& t = tables[i];
    // Every facet containing p carries the antigreedy weight at p.
    for (int p : facets[i].positions)
      if (t.weights[p - 1] != tables[ag].weights[p - 1])
        return Counterexample{facets[i], p, to_string(tables[ag].weights[p - 1]), to_string(t.weights[p - 1])};
    for (int p : facets[i].positions) {
      const FlipResult fr = cx.flip(facets[i], p, t);
      const RootTable& u = tables[k.facets.index_of(fr.facet)];
      for (int q : facets[i].positions)
        if (q != p && t.weights[q - 1] != u.weights[q - 1])
          return Counterexample{fr.facet, q, to_string(t.weights[q - 1]), to_string(u.weights[q - 1])};
      if (fr.entered < p) continue;
      if (!rs.is_positive_root(t.roots[p - 1]))
        return Counterexample{facets[i], p, "positive root", to_string(t.roots[p - 1])};
      for (int q = 1; q <= cx.size(); ++q) {
        const RootVec shift = rs.weight_diff_to_root_coords(t.weights[q - 1], u.weights[q - 1]);
        if (!shift.is_nonnegative()) return Counterexample{fr.facet, q, "nonnegative shift", to_string(shift)};
      }
    }
    return std::nullopt;
  });
}

Report check_minkowski_brick(const Correspondence& k, unsigned jobs) {
  Report r = start_report("minkowski", k.complex);
  const auto t0 = Clock::now();
  const Complex& cx = k.complex;
  const auto& roots = cx.root_system().positive_roots();
  std::vector<std::optional<LatticePolytope>> newton(roots.size());
  parallel_for(roots.size(), jobs,
               [&](std::size_t b) { newton[b] = hull(f_polynomial(k.variable_of_root(roots[b])).exponents()); });
  LatticePolytope sum = *newton.front();
  for (std::size_t b = 1; b < newton.size(); ++b) sum = minkowski_sum(sum, *newton[b]);
  const std::size_t ag = antigreedy_index(k);
  const WeightVec b_ag = brick_vector(k.facets.tables[ag]);
  std::vector<Point> shifted;
  for (const RootTable& t : k.facets.tables)
    shifted.push_back(cx.root_system().weight_diff_to_root_coords(brick_vector(t), b_ag).coords());
  const LatticePolytope brick = hull(shifted);
  const auto t = equal_up_to_translation(sum, brick);
  if (!t || std::any_of(t->begin(), t->end(), [](Int x) { return x != 0; })) {
    r.pass = false;
    r.counterexample =
        Counterexample{k.facets.facets[ag], 0, to_string(brick.vertices()), to_string(sum.vertices())};
  }
  r.detail = std::to_string(brick.vertices().size()) + " vertices; brick polytope = Minkowski sum + " +
             to_string(b_ag);
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}


Report check_typea_models(int n, unsigned jobs) {
  Report r;
  r.check = "typea";
  r.type = "A" + std::to_string(n);
  r.coxeter = "all";
  const auto t0 = Clock::now();
  const CartanMatrix a = cartan_of_type('A', n);
  const RootSystem rs(a);
  const auto words = coxeter_elements(a);
  std::vector<Finding> found(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t w) -> void {
    const Word& c = words[w];
    std::map<RootVec, FPolynomial> mutation;
    for (const Seed& s : enumerate_seeds(a, c))
      for (const MPoly& u : s.vars) mutation.emplace(d_vector(u), f_polynomial(u));
    const Triangulation tri = triangulation_of_coxeter(c, n);
    const Complex cx(a, c);
    for (int i = 1; i <= n && !found[w]; ++i)
      for (int j = i; j <= n; ++j) {
        RootVec beta(n);
        for (int l = i; l <= j; ++l) beta[l - 1] = 1;
        const FPolynomial via_mutation = mutation.at(beta);
        const FPolynomial via_paths = f_poly_via_tpaths(tri, i, j);
        const FPolynomial via_prefixes = f_poly_via_prefixes(c, i, j);
        if (via_paths != via_mutation || via_prefixes != via_mutation) {
          found[w] = Counterexample{Facet{}, cx.position_of_root(beta), to_string(via_mutation),
                                    to_string(via_paths) + " | " + to_string(via_prefixes)};
          break;
        }
      }
    if (found[w]) return;
    const FacetEnumeration fe = enumerate_facets_with_tables(cx);
    const RootTable& g = fe.tables[fe.index_of(cx.greedy_facet())];
    const RootTable& ag = fe.tables[fe.index_of(cx.antigreedy_facet())];
    for (int p = 1; p <= cx.size(); ++p) {
      std::set<WeightVec> realised;
      for (const RootTable& t : fe.tables) realised.insert(t.weights[p - 1]);
      const WeightVec target = rs.fundamental_weight(cx.letter(p));
      std::set<WeightVec> interval;
      for (const RootVec& gamma : box_below(rs.weight_diff_to_root_coords(g.weights[p - 1], ag.weights[p - 1]))) {
        const WeightVec w = ag.weights[p - 1] + rs.root_to_weight_coords(gamma);
        if (dominant(rs, w) == target) interval.insert(w);
      }
      if (interval != realised) {
        found[w] = Counterexample{cx.antigreedy_facet(), p, std::to_string(interval.size()) + " interval weights",
                                  std::to_string(realised.size()) + " realised weights"};
        return;
      }
    }
  });
  for (std::size_t w = 0; w < words.size(); ++w)
    if (found[w]) {
      r.pass = false;
      r.coxeter = to_string(words[w]);
      r.counterexample = found[w];
      break;
    }
  r.detail = std::to_string(words.size()) + " Coxeter elements";
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"correspondence", "c-vectors", "g-vectors", "exchange-matrix",
                                                 "newton",         "lattice",   "lemmas",    "minkowski",
                                                 "typea"};
  return names;
}

std::vector<Report> run_checks(const CartanMatrix& cartan, const Word& c, const std::vector<std::string>& checks,
                               unsigned jobs) {
  std::set<std::string> wanted;
  for (const std::string& name : checks) {
    if (name == "all") {
      wanted.insert(check_names().begin(), check_names().end());
      continue;
    }
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw ParseError("unknown check '" + name + "'");
    wanted.insert(name);
  }
  check_word(c, cartan.rank());
  if (!is_coxeter_word(c, cartan.rank())) throw ParseError("'" + to_string(c) + "' is not a Coxeter word");

  std::vector<Report> out;
  auto skipped = [&](const std::string& name, const std::string& why) {
    Report r;
    r.check = name;
    r.type = type_label(cartan);
    r.coxeter = to_string(c);
    r.skipped = true;
    r.detail = why;
    return r;
  };

  std::optional<Correspondence> k;
  std::string broken;
  auto needs_k = [&](const std::string& name) { return name != "typea" && name != "correspondence"; };
  if (std::any_of(wanted.begin(), wanted.end(), needs_k) || wanted.count("correspondence")) {
    const auto t0 = Clock::now();
    try {
      k.emplace(build_correspondence(cartan, c, jobs));
    } catch (const InvariantViolation& e) {
      broken = e.what();
    }
    if (wanted.count("correspondence")) {
      Report r;
      r.check = "correspondence";
      r.type = type_label(cartan);
      r.coxeter = to_string(c);
      r.pass = broken.empty();
      r.detail = broken.empty() ? std::to_string(k->seeds.size()) + " facets and seeds" : broken;
      r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      out.push_back(r);
    }
  }

  bool newton_failed = false;
  for (const std::string& name : check_names()) {
    if (!wanted.count(name) || name == "correspondence") continue;
    if (name == "typea") {
      const int n = cartan.rank();
      if (cartan == cartan_of_type('A', n))
        out.push_back(check_typea_models(n, jobs));
      else
        out.push_back(skipped(name, "not of type A"));
      continue;
    }
    if (!k) {
      out.push_back(skipped(name, "no facet/seed correspondence: " + broken));
      continue;
    }
    if (name == "c-vectors") out.push_back(check_c_vectors(*k, jobs));
    if (name == "g-vectors") out.push_back(check_g_vectors(*k, jobs));
    if (name == "exchange-matrix") out.push_back(check_exchange_matrix(*k, jobs));
    if (name == "newton") {
      out.push_back(check_newton_conjecture(*k, jobs));
      newton_failed = !out.back().pass;
    }
    if (name == "lattice") out.push_back(check_lattice_points(*k, jobs));
    if (name == "lemmas") out.push_back(check_lemmas(*k, jobs));
    if (name == "minkowski") {
      if (newton_failed)
        out.push_back(skipped(name, "requires the Newton polytope check to pass"));
      else
        out.push_back(check_minkowski_brick(*k, jobs));
    }
  }
  return out;
}

}  // namespace clusterkit
