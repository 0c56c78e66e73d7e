#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "clusterkit/errors.hpp"
#include "clusterkit/typea.hpp"
#include "json_io.hpp"

namespace clusterkit::cli {

namespace {

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string cartan_path;
  std::string coxeter;
  std::string root;
  std::string checks = "all";
  std::string emit_json;
  unsigned jobs = 1;
};

/// Exit code 1 without a diagnostic: the command ran and found a counterexample.
struct Counterexamples {};

CartanMatrix resolve_cartan(const RunConfig& cfg) {
  if (!cfg.cartan_path.empty()) {
    if (!cfg.type.empty()) throw ParseError("--type and --cartan are mutually exclusive");
    std::ifstream in(cfg.cartan_path);
    if (!in) throw ParseError("cannot read " + cfg.cartan_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(cfg.cartan_path + ": " + e.what());
    }
    return cartan_from_json(j);
  }
  if (cfg.type.empty()) throw ParseError("one of --type or --cartan is required");
  if (cfg.type.size() == 1) {
    if (cfg.rank <= 0) throw ParseError("--type " + cfg.type + " needs --rank");
    return cartan_of_type(cfg.type[0], cfg.rank);
  }
  const CartanMatrix a = cartan_of_type(cfg.type);
  if (cfg.rank != 0 && cfg.rank != a.rank())
    throw ParseError("--rank " + std::to_string(cfg.rank) + " contradicts --type " + cfg.type);
  return a;
}

Word resolve_coxeter(const RunConfig& cfg, int n) {
  if (cfg.coxeter.empty()) {
    Word c;
    for (int s = 1; s <= n; ++s) c.letters.push_back(s);
    return c;
  }
  const Word c = parse_word(cfg.coxeter);
  if (!is_coxeter_word(c, n))
    throw ParseError("--coxeter " + cfg.coxeter + " is not a permutation of 1.." + std::to_string(n));
  return c;
}

std::string type_name(const CartanMatrix& a) { return a.label().empty() ? "custom" : a.label(); }

/// Display width of a UTF-8 string.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], width(r[i]));
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(w[i] - width(r[i]) + 2, ' ');
    }
    out << line << '\n';
  }
}

template <class Tag>
std::string combination(const CoordVec<Tag>& v, const char* symbol) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Int x = v[i];
    if (x == 0) continue;
    if (x < 0) out += "-";
    else if (!out.empty()) out += "+";
    const Int a = x < 0 ? -x : x;
    if (a != 1) out += std::to_string(a);
    out += symbol + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string root_label(const RootVec& v) { return combination(v, "α"); }
std::string weight_label(const WeightVec& v) { return combination(v, "ω"); }

std::string matrix_string(const std::vector<std::vector<Int>>& m, std::size_t from, std::size_t to) {
  std::string out = "[";
  for (std::size_t r = from; r < to; ++r) {
    out += r > from ? ",[" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? "," : "") + std::to_string(m[r][c]);
    out += "]";
  }
  return out + "]";
}

json header(const CartanMatrix& a, const Word& c) {
  return {{"type", type_name(a)}, {"cartan", a.entries()}, {"coxeter", c.letters}};
}

void emit(const RunConfig& cfg, const json& doc) {
  if (cfg.emit_json.empty()) return;
  std::ofstream f(cfg.emit_json);
  if (!f) throw ParseError("cannot write " + cfg.emit_json);
  f << doc.dump(2) << '\n';
}

void cmd_facets(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const Word c = resolve_coxeter(cfg, a.rank());
  const Complex k(a, c);
  const FacetEnumeration fe = enumerate_facets_with_tables(k, cfg.jobs);
  out << type_name(a) << "  c = " << to_string(c) << "  Q = " << to_string(k.word()) << "  (" << fe.facets.size()
      << " facets)\n";
  std::vector<std::vector<std::string>> rows{{"facet", "root configuration", "weight configuration", "brick vector"}};
  json facets = json::array();
  for (std::size_t i = 0; i < fe.facets.size(); ++i) {
    const Facet& f = fe.facets[i];
    const RootTable& t = fe.tables[i];
    std::string roots, weights;
    json jr = json::array(), jw = json::array();
    for (int p : f.positions) {
      roots += (roots.empty() ? "" : ", ") + root_label(t.roots[p - 1]);
      weights += (weights.empty() ? "" : ", ") + weight_label(t.weights[p - 1]);
      jr.push_back(to_json(t.roots[p - 1]));
      jw.push_back(to_json(t.weights[p - 1]));
    }
    const WeightVec b = brick_vector(t);
    rows.push_back({to_string(f), roots, weights, to_string(b)});
    facets.push_back({{"positions", f.positions}, {"roots", jr}, {"weights", jw}, {"brick", to_json(b)}});
  }
  print_table(out, rows);
  json doc = header(a, c);
  doc["word"] = k.word().letters;
  doc["facets"] = facets;
  emit(cfg, doc);
}

void cmd_seeds(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const Word c = resolve_coxeter(cfg, a.rank());
  const Correspondence k = build_correspondence(a, c, cfg.jobs);
  const auto n = static_cast<std::size_t>(a.rank());
  out << type_name(a) << "  c = " << to_string(c) << "  (" << k.seeds.size() << " seeds)\n";
  json seeds = json::array();
  for (std::size_t i = 0; i < k.seeds.size(); ++i) {
    const Seed& s = k.seeds[i];
    out << "\nfacet " << to_string(k.facets.facets[i]) << "  B = " << matrix_string(s.matrix, 0, n)
        << "  C = " << matrix_string(s.matrix, n, 2 * n) << '\n';
    std::vector<std::vector<std::string>> rows;
    for (std::size_t slot = 0; slot < n; ++slot)
      rows.push_back({"  " + std::to_string(s.col_index[slot]), root_label(d_vector(s.vars[slot])),
                      to_string(s.vars[slot])});
    print_table(out, rows);
    json js = to_json(s);
    js["facet"] = k.facets.facets[i].positions;
    seeds.push_back(js);
  }
  json doc = header(a, c);
  doc["seeds"] = seeds;
  emit(cfg, doc);
}

void cmd_fpoly(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const Word c = resolve_coxeter(cfg, a.rank());
  const Correspondence k = build_correspondence(a, c, cfg.jobs);
  out << type_name(a) << "  c = " << to_string(c) << '\n';
  std::vector<std::vector<std::string>> rows{{"position", "d-vector", "cluster variable", "g-vector", "c-vector", "F"}};
  json roots = json::array();
  // Negative simple roots first, then the positive roots in position order.
  std::vector<int> order;
  for (int p = 1; p <= k.complex.size(); ++p) order.push_back(p);
  std::stable_partition(order.begin(), order.end(), [&](int p) { return k.complex.pos_root(p).is_nonpositive(); });
  for (int p : order) {
    const RootVec& beta = k.complex.pos_root(p);
    std::size_t first = 0;
    while (!k.facets.facets[first].contains(p)) ++first;
    const MPoly& u = k.seeds[first].vars[k.slot_of(first, p)];
    const WeightVec g = g_vector(u);
    const RootVec cv = k.facets.tables[first].roots[p - 1];
    const FPolynomial f = f_polynomial(u);
    rows.push_back({std::to_string(p), root_label(beta), to_string(u), weight_label(g), root_label(cv), to_string(f)});
    roots.push_back({{"position", p},
                     {"d", to_json(beta)},
                     {"label", root_label(beta)},
                     {"variable", to_json(u)},
                     {"g", to_json(g)},
                     {"c", to_json(cv)},
                     {"c_facet", k.facets.facets[first].positions},
                     {"F", to_json(f)}});
  }
  print_table(out, rows);
  json doc = header(a, c);
  doc["roots"] = roots;
  emit(cfg, doc);
}

void cmd_brick(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const Word c = resolve_coxeter(cfg, a.rank());
  const Complex k(a, c);
  const FacetEnumeration fe = enumerate_facets_with_tables(k, cfg.jobs);
  const WeightVec b_ag = brick_vector(fe.tables[fe.index_of(k.antigreedy_facet())]);
  std::vector<Point> weights, shifted;
  for (const RootTable& t : fe.tables) {
    const WeightVec b = brick_vector(t);
    weights.push_back(b.coords());
    shifted.push_back(k.root_system().weight_diff_to_root_coords(b, b_ag).coords());
  }
  const LatticePolytope brick = hull(weights), root_copy = hull(shifted);
  out << type_name(a) << "  c = " << to_string(c) << "  b(antigreedy) = " << to_string(b_ag) << '\n';
  out << "\nbrick polytope, " << brick.vertices().size() << " vertices (fundamental weight coordinates)\n";
  for (const Point& v : brick.vertices()) out << "  " << to_string(WeightVec(v)) << '\n';
  out << "\ntranslated by -b(antigreedy), " << root_copy.vertices().size()
      << " vertices (simple root coordinates)\n";
  for (const Point& v : root_copy.vertices()) out << "  " << to_string(RootVec(v)) << "  " << root_label(RootVec(v)) << '\n';
  json doc = header(a, c);
  doc["antigreedy_brick"] = to_json(b_ag);
  doc["brick"] = to_json(brick);
  doc["root_copy"] = to_json(root_copy);
  emit(cfg, doc);
}

void cmd_tpaths(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const int n = a.rank();
  if (!(a == cartan_of_type('A', n))) throw ParseError("tpaths needs a matrix of type A");
  const Word c = resolve_coxeter(cfg, n);
  if (cfg.root.empty()) throw ParseError("tpaths needs --root i,j");
  const Word ij = parse_word(cfg.root);
  if (ij.size() != 2) throw ParseError("--root expects two indices i,j");
  const int i = ij[0], j = ij[1];
  const Triangulation t = triangulation_of_coxeter(c, n);
  const OrientedDiagonal g = diagonal_of_root(t, i, j);
  out << type_name(a) << "  c = " << to_string(c) << "  polygon with " << t.vertices() << " vertices\n";
  out << "diagonals:";
  for (std::size_t l = 0; l < t.diagonals.size(); ++l)
    out << "  " << l + 1 << "={" << t.diagonals[l].first << "," << t.diagonals[l].second << "}";
  out << "\nroot α" << i << "+...+α" << j << ": diagonal " << g.from << " -> " << g.to << '\n';
  std::vector<std::vector<std::string>> rows{{"T-path", "monomial"}};
  json paths = json::array();
  FPolynomial f(static_cast<std::size_t>(n));
  for (const TPath& z : enumerate_tpaths(t, g)) {
    const Exponent e = monomial_of_tpath(z, n);
    FPolynomial m(static_cast<std::size_t>(n));
    m.add_term(e, 1);
    f.add_term(e, 1);
    rows.push_back({to_string(t, z), to_string(m)});
    paths.push_back({{"signs", z.signs}, {"vertices", z.vertices}, {"text", to_string(t, z)}, {"monomial", e}});
  }
  print_table(out, rows);
  out << "F = " << to_string(f) << '\n';
  json doc = header(a, c);
  doc["root"] = {i, j};
  doc["diagonals"] = t.diagonals;
  doc["diagonal"] = {g.from, g.to};
  doc["tpaths"] = paths;
  doc["F"] = to_json(f);
  emit(cfg, doc);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const CartanMatrix a = resolve_cartan(cfg);
  const Word c = resolve_coxeter(cfg, a.rank());
  const std::vector<std::string> checks = split(cfg.checks);
  if (checks.empty()) throw ParseError("--checks is empty");
  const std::vector<Report> reports = run_checks(a, c, checks, cfg.jobs);
  bool failed = false;
  std::vector<std::vector<std::string>> rows;
  json jr = json::array();
  for (const Report& r : reports) {
    const std::string status = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
    failed = failed || (!r.pass && !r.skipped);
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << r.millis << " ms";
    rows.push_back({status, r.check, r.type, "c=" + r.coxeter, ms.str(), r.detail});
    if (r.counterexample)
      rows.push_back({"", "  facet " + to_string(r.counterexample->facet),
                      "position " + std::to_string(r.counterexample->position),
                      "expected " + r.counterexample->expected, "actual " + r.counterexample->actual, ""});
    jr.push_back(to_json(r));
  }
  print_table(out, rows);
  json doc = header(a, c);
  doc["reports"] = jr;
  emit(cfg, doc);
  if (failed) throw Counterexamples{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster algebras of finite type through subword complexes", "clusterkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type such as B3, or a family letter with --rank");
    sub->add_option("--rank", cfg.rank, "Rank for a family letter")->check(CLI::PositiveNumber);
    sub->add_option("--cartan", cfg.cartan_path, "JSON file with a Cartan matrix");
    sub->add_option("--coxeter", cfg.coxeter, "Coxeter element as a comma separated permutation (default 1,..,n)");
    sub->add_option("--emit-json", cfg.emit_json, "Write the result as JSON to this file");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  std::vector<std::pair<CLI::App*, void (*)(const RunConfig&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, void (*fn)(const RunConfig&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("facets", "Facets of the subword complex with root and weight configurations", cmd_facets);
  add("seeds", "Every seed, matched to its facet", cmd_seeds);
  add("fpoly", "Cluster variables with d-, g-, c-vectors and F-polynomials", cmd_fpoly);
  add("brick", "Brick polytope and its translate into the root lattice", cmd_brick);
  add("tpaths", "T-paths of one type A root", cmd_tpaths)
      ->add_option("--root", cfg.root, "Root alpha_i+...+alpha_j given as i,j");
  add("verify", "Run verification checks", cmd_verify)
      ->add_option("--checks", cfg.checks, "Comma separated check names or 'all'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) fn(cfg, out);
  } catch (const Counterexamples&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace clusterkit::cli
