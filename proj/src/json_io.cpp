#include "braidkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "braidkit/errors.hpp"

namespace braidkit::json_io {

namespace {

const Json& require(const Json& doc, const std::string& key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object holding \"" + key + "\"");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing key \"" + key + "\"");
  return *it;
}

std::size_t require_count(const Json& doc, const std::string& key) {
  const Json& j = require(doc, key);
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
    throw ParseError("key \"" + key + "\" must be a positive integer");
  }
  return j.get<std::size_t>();
}

// "k_n" → (k, n).
std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const std::string& key) {
  const auto sep = text.find('_');
  try {
    if (sep == std::string::npos) throw std::invalid_argument("no separator");
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, sep), b = text.substr(sep + 1);
    const auto x = std::stoul(a, &used_a), y = std::stoul(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing text");
    return {x, y};
  } catch (const std::exception&) {
    throw ParseError("malformed block key \"" + key + "\"");
  }
}

std::string pair_key(const char* prefix, std::size_t a, std::size_t b) {
  return std::string(prefix) + "/" + std::to_string(a) + "_" + std::to_string(b);
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
  if (field.is_rational()) return Json{{"kind", "rationals"}};
  return Json{{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  try {
    if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
    const Json& kind = require(j, "kind");
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "prime") {
      const Json& p = require(j, "p");
      if (!p.is_number_unsigned()) throw ParseError("key \"p\" must be a positive integer");
      return FieldSpec::prime(p.get<std::uint64_t>());
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("key \"field\": ") + e.what());
  }
  throw ParseError("key \"field\": unknown kind");
}

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

ExactMatrix matrix_from_json(const Json& j, const FieldSpec& field, std::size_t rows,
                             std::size_t cols, const std::string& key) {
  auto shape_error = [&](const std::string& what) {
    return ParseError("key \"" + key + "\": " + what + " (expected " + std::to_string(rows) +
                      "x" + std::to_string(cols) + ")");
  };
  if (!j.is_array()) throw shape_error("not an array of rows");
  if (j.size() != rows) throw shape_error("has " + std::to_string(j.size()) + " rows");
  ExactMatrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw shape_error("row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& cell = row[c];
      try {
        if (cell.is_string()) {
          m.set(r, c, Scalar::parse(field, cell.get<std::string>()));
        } else if (cell.is_number_integer()) {
          m.set(r, c, Scalar(field, cell.get<long>()));
        } else {
          throw ParseError("not a scalar string");
        }
      } catch (const Error& e) {
        throw ParseError("key \"" + key + "\" entry (" + std::to_string(r) + "," +
                         std::to_string(c) + "): " + e.what());
      }
    }
  }
  return m;
}

FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& override_field) {
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  auto it = doc.find("field");
  if (it == doc.end()) return override_field.value_or(FieldSpec::rationals());
  const FieldSpec stored = field_from_json(*it);
  if (override_field && !(*override_field == stored)) {
    throw FieldMismatch("--field " + override_field->to_string() + " conflicts with file field " +
                        stored.to_string());
  }
  return stored;
}

Json braiding_to_json(const BraidedObject& v) {
  return Json{{"field", field_to_json(v.field())}, {"dim", v.dim()}, {"c", matrix_to_json(v.c())}};
}

BraidedObject braiding_from_json(const Json& doc, const std::optional<FieldSpec>& field) {
  const FieldSpec f = resolve_field(doc, field);
  const std::size_t d = require_count(doc, "dim");
  return BraidedObject(matrix_from_json(require(doc, "c"), f, d * d, d * d, "c"));
}

Json bialgebra_to_json(const BialgebraData& b) {
  return Json{{"field", field_to_json(b.field())}, {"dim", b.dim()},
              {"m", matrix_to_json(b.m())},        {"u", matrix_to_json(b.u())},
              {"delta", matrix_to_json(b.delta())}, {"eps", matrix_to_json(b.eps())},
              {"c", matrix_to_json(b.c)}};
}

BialgebraData bialgebra_from_json(const Json& doc, const std::optional<FieldSpec>& field) {
  const FieldSpec f = resolve_field(doc, field);
  const std::size_t d = require_count(doc, "dim");
  BialgebraData b;
  b.algebra.m = matrix_from_json(require(doc, "m"), f, d, d * d, "m");
  b.algebra.u = matrix_from_json(require(doc, "u"), f, d, 1, "u");
  b.coalgebra.delta = matrix_from_json(require(doc, "delta"), f, d * d, d, "delta");
  b.coalgebra.eps = matrix_from_json(require(doc, "eps"), f, 1, d, "eps");
  b.c = matrix_from_json(require(doc, "c"), f, d * d, d * d, "c");
  return b;
}

Json built_to_json(const TruncatedTensorBialgebra& t) {
  const std::size_t N = t.degree();
  Json blocks = Json::object();
  for (const auto& [key, m] : t.delta_blocks()) {
    blocks[pair_key("delta", key.first, key.second)] = matrix_to_json(m);
  }
  for (std::size_t m = 0; m <= N; ++m) {
    for (std::size_t n = 0; m + n <= N; ++n) {
      blocks[pair_key("cT", m, n)] = matrix_to_json(t.braid().block(m, n));
    }
  }
  for (std::size_t n = 0; n <= N; ++n) {
    blocks["eps/" + std::to_string(n)] = matrix_to_json(t.counit(n));
  }
  return Json{{"field", field_to_json(t.field())},
              {"dim", t.dim()},
              {"degree", N},
              {"c", matrix_to_json(t.source().c())},
              {"blocks", std::move(blocks)}};
}

BuiltFile built_from_json(const Json& doc, const std::optional<FieldSpec>& field) {
  const FieldSpec f = resolve_field(doc, field);
  const std::size_t d = require_count(doc, "dim");
  const std::size_t N = require_count(doc, "degree");
  const BraidedObject v(matrix_from_json(require(doc, "c"), f, d * d, d * d, "c"));
  const Json& blocks = require(doc, "blocks");
  if (!blocks.is_object()) throw ParseError("key \"blocks\" must be an object");

  std::map<TruncatedTensorBialgebra::BlockKey, ExactMatrix> delta;
  std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> ct;
  std::map<std::size_t, ExactMatrix> eps;
  for (const auto& [key, value] : blocks.items()) {
    const auto slash = key.find('/');
    const std::string kind = key.substr(0, slash);
    const std::string rest = slash == std::string::npos ? "" : key.substr(slash + 1);
    if (kind == "delta") {
      const auto [k, n] = parse_pair(rest, key);
      if (k > n || n > N) throw ParseError("block key \"" + key + "\" out of range");
      const std::size_t size = ipow(d, n);
      delta.emplace(std::pair{k, n}, matrix_from_json(value, f, size, size, key));
    } else if (kind == "cT") {
      const auto [m, n] = parse_pair(rest, key);
      if (m + n > N) throw ParseError("block key \"" + key + "\" out of range");
      const std::size_t size = ipow(d, m + n);
      ct.emplace(std::pair{m, n}, matrix_from_json(value, f, size, size, key));
    } else if (kind == "eps") {
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("malformed block key \"" + key + "\"");
      }
      if (n > N) throw ParseError("block key \"" + key + "\" out of range");
      eps.emplace(n, matrix_from_json(value, f, 1, ipow(d, n), key));
    } else {
      throw ParseError("unknown block key \"" + key + "\"");
    }
  }
  try {
    return BuiltFile{TruncatedTensorBialgebra::from_blocks(v, N, std::move(delta)), std::move(ct),
                     std::move(eps)};
  } catch (const ShapeError& e) {
    throw ParseError(std::string("key \"blocks\": ") + e.what());
  }
}

FunctorData functor_from_json(const Json& doc, const FieldSpec& field, std::size_t dim) {
  if (doc.is_object() && doc.contains("lambda")) {
    const Json& l = doc["lambda"];
    if (!l.is_string() && !l.is_number_integer()) {
      throw ParseError("key \"lambda\" must be a scalar string");
    }
    try {
      return FunctorData::scalar_twist(l.is_string() ? Scalar::parse(field, l.get<std::string>())
                                                     : Scalar(field, l.get<long>()));
    } catch (const NotInvertible&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("key \"lambda\": ") + e.what());
    }
  }
  const Json& g = doc.is_object() ? require(doc, "g") : doc;
  return FunctorData::basis_change(matrix_from_json(g, field, dim, dim, "g"));
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace braidkit::json_io
