#ifndef MOCA_SERIAL_HPP
#define MOCA_SERIAL_HPP

#include <string>

#include <json.hpp>

#include "moca/boolfun.hpp"
#include "moca/sss.hpp"

namespace moca::serial {

using nlohmann::json;

// Rules: {"kind":"linear","q":2,"coeffs":[1,1,1]} or
//        {"kind":"table","d":3,"wolfram":150}
json rule_to_json(const ca::LocalRule& rule);
ca::LocalRule rule_from_json(const json& j);

// Polynomials: arrays of integers, ascending degree ([1,0,1] = 1 + X^2).
json poly_to_json(const gf::Polynomial& p);
gf::Polynomial poly_from_json(const json& j, const gf::FieldSpec& field);

// Families: {"q":2,"n":2,"size":2,"polynomials":[[1,0,1],[1,1,1]]}
json family_to_json(const linear::MocaFamily& family);
linear::MocaFamily family_from_json(const json& j);

// Pairs: {"f": <rule>, "g": <rule>}
json pair_to_json(const ca::LocalRule& f, const ca::LocalRule& g);
std::pair<ca::LocalRule, ca::LocalRule> pair_from_json(const json& j);

// Squares print one row per line, 1-based, space separated; JSON mirrors that.
std::string square_to_text(const designs::LatinSquare& square);
json square_to_json(const designs::LatinSquare& square);
designs::LatinSquare square_from_json(const json& j);

std::string symbol_matrix_to_text(const designs::SymbolMatrix& m);
json symbol_matrix_to_json(const designs::SymbolMatrix& m);
designs::SymbolMatrix symbol_matrix_from_json(const json& j);

json oa_to_json(const designs::OrthogonalArray& oa);

// Shares: {"player":1,"value":4} with the 1-based display convention.
json shares_to_json(std::span<const sss::Share> shares);
std::vector<sss::Share> shares_from_json(const json& j);

json function_to_json(const boolfun::BooleanFunction& f);
boolfun::BooleanFunction function_from_json(const json& j);

}  // namespace moca::serial

#endif
