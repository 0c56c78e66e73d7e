#pragma once

// JSON forms of the library's values. Integers that do not fit into a signed
// 64-bit word are written as decimal strings; readers accept either form.

#include <json.hpp>

#include "clusterkit/cluster.hpp"
#include "clusterkit/polytope.hpp"
#include "clusterkit/verify.hpp"

namespace clusterkit::cli {

using nlohmann::json;

json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const MPoly& u);
MPoly mpoly_from_json(const json& j);

json to_json(const FPolynomial& f);
FPolynomial fpoly_from_json(const json& j);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

json to_json(const Report& r);
Report report_from_json(const json& j);

json to_json(const CartanMatrix& a);
/// Either a bare matrix or {"cartan": matrix, "label": ...}.
CartanMatrix cartan_from_json(const json& j);

template <class Tag>
json to_json(const CoordVec<Tag>& v) {
  return v.coords();
}

}  // namespace clusterkit::cli
