#ifndef SYMCHAR2_TOOLS_JSON_IO_HPP
#define SYMCHAR2_TOOLS_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "symchar2/bilinear.hpp"
#include "symchar2/realizer.hpp"

namespace symchar2::io {

using json = nlohmann::json;

json to_json(const Matrix& m);
json to_json(const TransferForm& form);
json to_json(const Realization& r);
json to_json(const VerifyReport& r);
json to_json(const ReductionResult& r);

/// Accepts a bare array of rows, or an object carrying the matrix under "M" or "matrix".
/// Entries are scalar strings (or integers for bit-encoded constants). Throws ParseError.
Matrix matrix_from_json(const Field& field, const json& j);
TransferForm form_from_json(const Field& field, const json& j);

}  // namespace symchar2::io

#endif
