#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "braidkit/braided_core.hpp"
#include "braidkit/tensor_bialgebra.hpp"
#include "braidkit/transport.hpp"

namespace braidkit::json_io {

using Json = nlohmann::json;

/// {"kind": "rationals"} or {"kind": "prime", "p": 5}; the short strings
/// "q" and "fp:<p>" are accepted on input.
Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

/// Row-major array of arrays of scalar strings.
Json matrix_to_json(const ExactMatrix& m);
/// Throws ParseError naming `key` on malformed input or when the shape is
/// not rows×cols.
ExactMatrix matrix_from_json(const Json& j, const FieldSpec& field, std::size_t rows,
                             std::size_t cols, const std::string& key);

/// The field stored in `doc`, reconciled with an optional override: a file
/// without "field" takes the override (default Q), and a conflict throws
/// FieldMismatch.
FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& override_field);

/// {"field", "dim", "c"}.
Json braiding_to_json(const BraidedObject& v);
BraidedObject braiding_from_json(const Json& doc, const std::optional<FieldSpec>& field = {});

/// {"field", "dim", "m", "u", "delta", "eps", "c"}.
Json bialgebra_to_json(const BialgebraData& b);
BialgebraData bialgebra_from_json(const Json& doc, const std::optional<FieldSpec>& field = {});

/// Truncated tensor bialgebra dump: "c" of V plus "blocks" keyed
/// "delta/k_n", "cT/m_n" (m + n ≤ N) and "eps/n".
Json built_to_json(const TruncatedTensorBialgebra& t);
/// Reads the Δ blocks back without recomputing them; "cT" and "eps" blocks
/// are returned separately for comparison.
struct BuiltFile {
  TruncatedTensorBialgebra tensor;
  std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> ct_blocks;
  std::map<std::size_t, ExactMatrix> eps_blocks;
};
BuiltFile built_from_json(const Json& doc, const std::optional<FieldSpec>& field = {});

/// A bare matrix, {"g": matrix} or {"lambda": "2"}.
FunctorData functor_from_json(const Json& doc, const FieldSpec& field, std::size_t dim);

/// Throws ParseError when the file cannot be opened or parsed.
Json load_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace braidkit::json_io
