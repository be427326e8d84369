#ifndef RIORDAN_JSON_IO_HPP
#define RIORDAN_JSON_IO_HPP

#include <json.hpp>

#include "riordan/eigen.hpp"
#include "riordan/finite_order.hpp"
#include "riordan/riordan_pair.hpp"

namespace riordan {

// Series: {precision, conductor, coeffs:[string]}
nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

// Matrix: {rows:[[string]]}
nlohmann::json to_json(const RiordanMatrix& m);
RiordanMatrix matrix_from_json(const nlohmann::json& j, const FieldRef& field);

// OrderReport: {order: n | "infinite", verified_to, lcm_witness: [a, b] | null}
nlohmann::json to_json(const OrderReport& report);

// IdentityRecord: {n, lhs, rhs, equal, pair: {g, F}, spec: {k, b, theta:[string]}}
nlohmann::json to_json(const IdentityRecord& record, const RiordanPair& pair,
                       const EigenSpec& spec);

} // namespace riordan

#endif
