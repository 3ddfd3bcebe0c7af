#include "json_io.hpp"

#include "symchar2/parse.hpp"

namespace symchar2::io {

namespace {

Scalar scalar_from_json(const Field& field, const json& v) {
    if (v.is_string()) return parse_scalar(field, v.get<std::string>());
    if (v.is_number_unsigned()) return field.from_bits(v.get<std::uint32_t>());
    if (v.is_number_integer() && v.get<long long>() >= 0) return field.from_bits(static_cast<std::uint32_t>(v.get<long long>()));
    throw Error(ErrorCode::ParseError, "matrix entry must be a scalar string, got " + v.dump());
}

json poly_list(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

}  // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const TransferForm& form) {
    json blocks = json::array();
    for (const auto& b : form.blocks) {
        json values = json::array();
        for (const auto& v : b.values) values.push_back(v.to_string());
        blocks.push_back({{"modulus", b.modulus.to_string()}, {"values", std::move(values)}, {"claim", std::string(to_string(b.claim))}});
    }
    return {{"field", form.field.name()}, {"blocks", std::move(blocks)}};
}

json to_json(const Realization& r) {
    json blocks = json::array();
    for (const auto& u : r.plan.units) {
        blocks.push_back({{"kind", std::string(to_string(u.kind))},
                          {"pi", u.pi.to_string()},
                          {"depth", u.n},
                          {"multiplicity", u.m},
                          {"modulus", u.modulus.to_string()}});
    }
    if (r.plan.even) blocks.push_back({{"kind", "even"}, {"modulus", r.plan.even->to_string()}});
    json out = {
        {"field", r.f.field().name()},
        {"f", r.f.to_string()},
        {"target", r.target.to_string()},
        {"case", std::string(to_string(r.plan.kind))},
        {"blocks", std::move(blocks)},
        {"form", to_json(r.form)},
        {"S", to_json(r.S)},
        {"C", to_json(r.C)},
        {"Q", to_json(r.Q)},
        {"M", to_json(r.M)},
        {"certificate",
         {{"symmetric", r.certificate.symmetric},
          {"min_poly_ok", r.certificate.min_poly_ok},
          {"char_poly_ok", r.certificate.char_poly_ok},
          {"gram_ok", r.certificate.gram_ok}}},
    };
    if (r.smaller_size_impossible) out["smaller_size_impossible"] = true;
    return out;
}

json to_json(const VerifyReport& r) {
    json out = {{"passed", r.passed},
                {"symmetric", r.symmetric},
                {"min_poly_ok", r.min_poly_ok},
                {"char_poly_ok", r.char_poly_ok},
                {"eigen_ok", r.eigen_ok},
                {"failures", r.failures}};
    if (r.min_poly) out["min_poly"] = r.min_poly->to_string();
    if (r.char_poly) out["char_poly"] = r.char_poly->to_string();
    return out;
}

json to_json(const ReductionResult& r) {
    return {{"rank", r.rank}, {"U", to_json(r.U)}, {"Q", to_json(r.Q)}, {"P", to_json(r.P)}};
}

Matrix matrix_from_json(const Field& field, const json& j) {
    const json* rows = &j;
    if (j.is_object()) {
        if (j.contains("M")) {
            rows = &j.at("M");
        } else if (j.contains("matrix")) {
            rows = &j.at("matrix");
        } else {
            throw Error(ErrorCode::ParseError, "matrix object needs an \"M\" or \"matrix\" member");
        }
    }
    if (!rows->is_array() || rows->empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array of rows");
    std::vector<std::vector<Scalar>> out;
    for (const auto& row : *rows) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "matrix row must be an array");
        std::vector<Scalar> r;
        for (const auto& v : row) r.push_back(scalar_from_json(field, v));
        if (!out.empty() && r.size() != out.front().size()) throw Error(ErrorCode::ParseError, "ragged matrix rows");
        out.push_back(std::move(r));
    }
    return Matrix(field, out);
}

TransferForm form_from_json(const Field& field, const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
        throw Error(ErrorCode::ParseError, "form JSON needs a \"blocks\" array");
    TransferForm form{field, {}};
    for (const auto& b : j.at("blocks")) {
        Poly modulus = parse_poly(field, b.at("modulus").get<std::string>());
        std::vector<Scalar> values;
        for (const auto& v : b.at("values")) values.push_back(scalar_from_json(field, v));
        if (!modulus.is_monic() || values.size() != static_cast<std::size_t>(modulus.degree()))
            throw Error(ErrorCode::ParseError, "block values must match the degree of a monic modulus");
        const std::string claim = b.value("claim", "unit");
        if (claim != "unit" && claim != "hyperbolic") throw Error(ErrorCode::ParseError, "unknown claim '" + claim + "'");
        form.blocks.push_back({std::move(modulus), std::move(values), claim == "unit" ? BlockClaim::Unit : BlockClaim::Hyperbolic});
    }
    return form;
}

}  // namespace symchar2::io
