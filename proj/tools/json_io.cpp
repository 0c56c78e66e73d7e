#include "json_io.hpp"

#include <limits>

#include "clusterkit/errors.hpp"

namespace clusterkit::cli {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing JSON field '") + name + "'");
  return j.at(name);
}

template <class T>
T read(const json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + name + "': " + e.what());
  }
}

json terms_to_json(const std::map<Exponent, BigInt>& terms) {
  json out = json::array();
  for (const auto& [e, c] : terms) out.push_back({{"exponent", e}, {"coefficient", bigint_to_json(c)}});
  return out;
}

template <class Poly>
void read_terms(Poly& p, const json& j) {
  for (const json& t : field(j, "terms")) p.add_term(read<Exponent>(t, "exponent"), bigint_from_json(field(t, "coefficient")));
}

}  // namespace

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() <= start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("'" + s + "' is not a decimal integer");
    return BigInt(s);
  }
  throw ParseError("expected an integer or a decimal string");
}

json to_json(const MPoly& u) {
  return {{"rank", u.rank()}, {"terms", terms_to_json(u.terms())}, {"text", to_string(u)}};
}

MPoly mpoly_from_json(const json& j) {
  MPoly u(read<int>(j, "rank"));
  read_terms(u, j);
  return u;
}

json to_json(const FPolynomial& f) {
  return {{"nvars", f.nvars()}, {"terms", terms_to_json(f.terms())}, {"text", to_string(f)}};
}

FPolynomial fpoly_from_json(const json& j) {
  FPolynomial f(read<std::size_t>(j, "nvars"));
  read_terms(f, j);
  return f;
}

json to_json(const Seed& s) {
  json vars = json::array();
  for (const MPoly& u : s.vars) vars.push_back(to_json(u));
  return {{"matrix", s.matrix}, {"variables", vars}, {"frozen", s.frozen}, {"positions", s.col_index}};
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.matrix = read<std::vector<std::vector<Int>>>(j, "matrix");
  for (const json& u : field(j, "variables")) s.vars.push_back(mpoly_from_json(u));
  s.frozen = read<std::vector<Exponent>>(j, "frozen");
  s.col_index = read<std::vector<int>>(j, "positions");
  const std::size_t n = s.vars.size();
  if (s.matrix.size() != 2 * n || s.frozen.size() != n || s.col_index.size() != n)
    throw ParseError("seed fields have inconsistent sizes");
  return s;
}

json to_json(const LatticePolytope& p) { return {{"dimension", p.dimension()}, {"vertices", p.vertices()}}; }

LatticePolytope polytope_from_json(const json& j) {
  const auto vertices = read<std::vector<Point>>(j, "vertices");
  if (vertices.empty()) throw ParseError("a polytope needs at least one vertex");
  return hull(vertices);
}

json to_json(const Report& r) {
  json out = {{"check", r.check}, {"type", r.type},     {"coxeter", r.coxeter}, {"pass", r.pass},
              {"skipped", r.skipped}, {"detail", r.detail}, {"millis", r.millis}};
  if (r.counterexample)
    out["counterexample"] = {{"facet", r.counterexample->facet.positions},
                             {"position", r.counterexample->position},
                             {"expected", r.counterexample->expected},
                             {"actual", r.counterexample->actual}};
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.check = read<std::string>(j, "check");
  r.type = read<std::string>(j, "type");
  r.coxeter = read<std::string>(j, "coxeter");
  r.pass = read<bool>(j, "pass");
  r.skipped = read<bool>(j, "skipped");
  r.detail = read<std::string>(j, "detail");
  r.millis = read<double>(j, "millis");
  if (j.contains("counterexample")) {
    const json& c = j.at("counterexample");
    r.counterexample = Counterexample{Facet{read<std::vector<int>>(c, "facet")}, read<int>(c, "position"),
                                      read<std::string>(c, "expected"), read<std::string>(c, "actual")};
  }
  return r;
}

json to_json(const CartanMatrix& a) { return {{"cartan", a.entries()}, {"label", a.label()}}; }

CartanMatrix cartan_from_json(const json& j) {
  try {
    if (j.is_array()) return CartanMatrix(j.get<std::vector<std::vector<Int>>>());
    return CartanMatrix(read<std::vector<std::vector<Int>>>(j, "cartan"),
                        j.contains("label") ? read<std::string>(j, "label") : std::string{});
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad Cartan matrix: ") + e.what());
  }
}

}  // namespace clusterkit::cli
