#include "riordan/json_io.hpp"

#include "riordan/errors.hpp"
#include "riordan/parser.hpp"

namespace riordan {

using nlohmann::json;

json to_json(const Series& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.precision(); ++i) coeffs.push_back(to_string(s.coeff(i)));
    return json{{"precision", s.precision()},
                {"conductor", s.field()->conductor()},
                {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const json& j) {
    FieldRef field = FieldContext::make(j.at("conductor").get<long>());
    const int precision = j.at("precision").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<size_t>(precision) + 1)
        throw Error(errc::domain_error, "coeffs must hold precision+1 entries");
    Series s(field, precision);
    for (int i = 0; i <= precision; ++i)
        s.set_coeff(i, parse_scalar(coeffs.at(static_cast<size_t>(i)).get<std::string>(), field));
    return s;
}

json to_json(const RiordanMatrix& m) {
    json rows = json::array();
    for (int n = 0; n < m.rows(); ++n) {
        json row = json::array();
        for (int j = 0; j <= n; ++j) row.push_back(to_string(m.at(n, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

RiordanMatrix matrix_from_json(const json& j, const FieldRef& field) {
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
        throw Error(errc::domain_error, "matrix must hold at least one row");
    std::vector<std::vector<Scalar>> entries;
    for (size_t n = 0; n < rows.size(); ++n) {
        const auto& row = rows.at(n);
        if (!row.is_array() || row.size() != n + 1)
            throw Error(errc::domain_error, "row " + std::to_string(n) +
                                                " must hold exactly " + std::to_string(n + 1) +
                                                " entries");
        std::vector<Scalar> out;
        out.reserve(row.size());
        for (const auto& cell : row) out.push_back(parse_scalar(cell.get<std::string>(), field));
        entries.push_back(std::move(out));
    }
    return {static_cast<int>(rows.size()), std::move(entries)};
}

json to_json(const OrderReport& report) {
    json j{{"verified_to", report.verified_to}};
    if (report.finite())
        j["order"] = *report.order;
    else
        j["order"] = "infinite";
    if (report.lcm_witness)
        j["lcm_witness"] = json::array({report.lcm_witness->first, report.lcm_witness->second});
    else
        j["lcm_witness"] = nullptr;
    return j;
}

json to_json(const IdentityRecord& record, const RiordanPair& pair, const EigenSpec& spec) {
    json theta = json::array();
    for (const auto& t : spec.theta) theta.push_back(to_string(t));
    return json{{"n", record.n},
                {"lhs", to_string(record.lhs)},
                {"rhs", to_string(record.rhs)},
                {"equal", record.equal},
                {"pair", json{{"g", to_json(pair.g())}, {"F", to_json(pair.F())}}},
                {"spec", json{{"k", spec.k}, {"b", spec.b}, {"theta", std::move(theta)}}}};
}

} // namespace riordan
