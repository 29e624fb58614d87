// JSON forms: Laurent polynomials as {"exponent": coefficient} objects,
// elements as their canonical word strings, Coxeter systems from matrix
// files with infinity encoded as 0.
#pragma once

#include <json.hpp>

#include "klc/coxeter.hpp"
#include "klc/laurent.hpp"

namespace klc {

nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

// Elements appear in JSON values as lists of generator labels; object keys
// use the canonical '*'-joined string form.
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const CoxeterSystem& sys, const nlohmann::json& j);

// "e" or labels joined by '*', e.g. "s1*s2*s1".
Element element_from_str(const CoxeterSystem& sys, const std::string& text);

// Matrix file: {"generators": [...], "matrix": [[...]]}.
CoxeterSystem system_from_json(const nlohmann::json& j);
CoxeterSystem system_from_file(const std::string& path);

}  // namespace klc
