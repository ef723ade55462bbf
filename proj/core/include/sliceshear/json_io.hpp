#pragma once

// JSON interchange with a stable key order.
//
//   monomial:     {"group","level","coeff","norms":[[i,j,e],...],"a":{...},"u":{...}}
//   differential: {"group","page","source","target","provenance"}
//
// Schema violations raise ParseError with a JSON path such as "$[2].source.a".

#include <string>
#include <vector>

#include "sliceshear/classes.hpp"
#include "sliceshear/differentials.hpp"

namespace sliceshear {

std::string to_json(const ClassMonomial& m, int indent = -1);
std::string to_json(const Differential& d, int indent = -1);

ClassMonomial class_from_json(const std::string& text);
Differential differential_from_json(const std::string& text);

std::string export_json(const std::vector<Differential>& items, int indent = -1);
std::vector<Differential> import_json(const std::string& text);

}  // namespace sliceshear
