#pragma once

#include <string>
#include <string_view>

#include "foresthopf/lincomb.hpp"

namespace foresthopf {

// Text grammar (whitespace separated):
//   forest := "1" | tree (WS tree)*
//   tree   := label [ "[" (tree (WS tree)*)? "]" ]
//   label  := "@" | IDENT          IDENT = [A-Za-z_][A-Za-z0-9_]*, not "1"
// Linear combinations print "c * F" with unit coefficients omitted and
// negative coefficients rendered "- ..."; tensor legs are joined by " (x) ";
// zero prints "0". Terms print in descending (vertex count, text) order.
Forest parse_forest(std::string_view s);
std::string serialize_forest(const Forest& f);

LinComb parse_lincomb(std::string_view s);
std::string serialize_lincomb(const LinComb& v);

Tensor2 parse_tensor2(std::string_view s);
std::string serialize_tensor2(const Tensor2& t);

// JSON interchange. forest = [tree...]; tree = {"label": s, "children": [...]};
// lincomb = {"terms": [{"coeff": "p/q", "forest": [...]}]};
// tensor = {"terms": [{"coeff": "p/q", "left": [...], "right": [...]}]}.
std::string to_json(const Forest& f);
std::string to_json(const LinComb& v);
std::string to_json(const Tensor2& t);
Forest forest_from_json(std::string_view s);
LinComb lincomb_from_json(std::string_view s);
Tensor2 tensor2_from_json(std::string_view s);

}  // namespace foresthopf
