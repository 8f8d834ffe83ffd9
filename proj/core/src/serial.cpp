#include "moca/serial.hpp"

#include <sstream>

namespace moca::serial {

namespace {

std::uint64_t require_u64(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ValidationError(std::string("missing or invalid field: ") + key);
  }
  return j[key].get<std::uint64_t>();
}

std::vector<gf::Elem> elem_vector(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an integer array");
  std::vector<gf::Elem> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_unsigned()) throw ValidationError("expected nonnegative integers");
    out.push_back(v.get<gf::Elem>());
  }
  return out;
}

}  // namespace

json rule_to_json(const ca::LocalRule& rule) {
  if (rule.is_linear()) {
    return json{{"kind", "linear"}, {"q", rule.field().q()}, {"coeffs", rule.coefficients()}};
  }
  return json{{"kind", "table"}, {"d", rule.diameter()}, {"wolfram", rule.wolfram()}};
}

ca::LocalRule rule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ValidationError("rule JSON needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "linear") {
    const gf::FieldSpec field(static_cast<gf::Elem>(require_u64(j, "q")));
    return ca::LocalRule::linear(field, elem_vector(j.at("coeffs")));
  }
  if (kind == "table") {
    return ca::LocalRule::from_wolfram(static_cast<unsigned>(require_u64(j, "d")),
                                       require_u64(j, "wolfram"));
  }
  throw ValidationError("unknown rule kind: " + kind);
}

json poly_to_json(const gf::Polynomial& p) { return json(p.coeffs()); }

gf::Polynomial poly_from_json(const json& j, const gf::FieldSpec& field) {
  return gf::Polynomial(field, elem_vector(j));
}

json family_to_json(const linear::MocaFamily& family) {
  json polys = json::array();
  for (const gf::Polynomial& p : family.polynomials) polys.push_back(poly_to_json(p));
  return json{{"q", family.field.q()},
              {"n", family.degree},
              {"size", family.size()},
              {"polynomials", polys}};
}

linear::MocaFamily family_from_json(const json& j) {
  const gf::FieldSpec field(static_cast<gf::Elem>(require_u64(j, "q")));
  const unsigned n = static_cast<unsigned>(require_u64(j, "n"));
  linear::MocaFamily family{field, n, {}};
  if (!j.contains("polynomials") || !j["polynomials"].is_array()) {
    throw ValidationError("family JSON needs a polynomials array");
  }
  for (const json& p : j["polynomials"]) {
    family.polynomials.push_back(poly_from_json(p, field));
  }
  if (j.contains("size") && j["size"].get<std::size_t>() != family.polynomials.size()) {
    throw ValidationError("family size field disagrees with the polynomial list");
  }
  return family;
}

json pair_to_json(const ca::LocalRule& f, const ca::LocalRule& g) {
  return json{{"f", rule_to_json(f)}, {"g", rule_to_json(g)}};
}

std::pair<ca::LocalRule, ca::LocalRule> pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("g")) {
    throw ValidationError("pair JSON needs f and g rules");
  }
  return {rule_from_json(j["f"]), rule_from_json(j["g"])};
}

std::string square_to_text(const designs::LatinSquare& square) {
  std::ostringstream out;
  for (std::size_t i = 0; i < square.order; ++i) {
    for (std::size_t j = 0; j < square.order; ++j) {
      if (j) out << ' ';
      out << square.at(i, j) + 1;
    }
    out << '\n';
  }
  return out.str();
}

json square_to_json(const designs::LatinSquare& square) {
  json rows = json::array();
  for (std::size_t i = 0; i < square.order; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < square.order; ++j) row.push_back(square.at(i, j) + 1);
    rows.push_back(std::move(row));
  }
  return json{{"order", square.order}, {"rows", rows}};
}

designs::LatinSquare square_from_json(const json& j) {
  const std::size_t order = require_u64(j, "order");
  designs::LatinSquare square{order, {}};
  square.cells.reserve(order * order);
  if (!j.contains("rows") || j["rows"].size() != order) {
    throw ValidationError("square JSON needs `order` rows");
  }
  for (const json& row : j["rows"]) {
    if (row.size() != order) throw ValidationError("square row length mismatch");
    for (const json& v : row) {
      const std::uint64_t e = v.get<std::uint64_t>();
      if (e < 1 || e > order) throw ValidationError("square entries must lie in 1..order");
      square.cells.push_back(static_cast<std::uint32_t>(e - 1));
    }
  }
  return square;
}

std::string symbol_matrix_to_text(const designs::SymbolMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

json symbol_matrix_to_json(const designs::SymbolMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows}, {"columns", m.cols}, {"symbols", m.symbols}, {"matrix", rows}};
}

designs::SymbolMatrix symbol_matrix_from_json(const json& j) {
  designs::SymbolMatrix m{require_u64(j, "rows"), require_u64(j, "columns"),
                          static_cast<std::uint32_t>(require_u64(j, "symbols")),
                          {}};
  m.cells.reserve(m.rows * m.cols);
  if (!j.contains("matrix") || j["matrix"].size() != m.rows) {
    throw ValidationError("matrix JSON needs `rows` rows");
  }
  for (const json& row : j["matrix"]) {
    if (row.size() != m.cols) throw ValidationError("matrix row length mismatch");
    for (const json& v : row) {
      const std::uint64_t e = v.get<std::uint64_t>();
      if (e >= m.symbols) throw ValidationError("matrix entry out of symbol range");
      m.cells.push_back(static_cast<std::uint32_t>(e));
    }
  }
  return m;
}

json oa_to_json(const designs::OrthogonalArray& oa) {
  json j = symbol_matrix_to_json(oa.matrix);
  j["strength"] = oa.strength;
  j["index"] = oa.index;
  return j;
}

json shares_to_json(std::span<const sss::Share> shares) {
  json out = json::array();
  for (const sss::Share& s : shares) {
    out.push_back(json{{"player", s.player}, {"value", s.value + 1}});
  }
  return out;
}

std::vector<sss::Share> shares_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("shares JSON must be an array");
  std::vector<sss::Share> out;
  for (const json& s : j) {
    const std::uint64_t value = require_u64(s, "value");
    if (value < 1) throw ValidationError("share values are 1-based");
    out.push_back(sss::Share{static_cast<unsigned>(require_u64(s, "player")), value - 1});
  }
  return out;
}

json function_to_json(const boolfun::BooleanFunction& f) {
  return json{{"n", f.n}, {"table_hex", boolfun::table_to_hex(f)}};
}

boolfun::BooleanFunction function_from_json(const json& j) {
  return boolfun::table_from_hex(static_cast<unsigned>(require_u64(j, "n")),
                                 j.at("table_hex").get<std::string>());
}

}  // namespace moca::serial
