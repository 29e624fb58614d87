#include "klc/serialize.hpp"

#include <fstream>
#include <limits>

namespace klc {

nlohmann::json laurent_to_json(const Laurent& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, c] : p.terms()) {
    const std::string key = std::to_string(k);
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      j[key] = static_cast<std::int64_t>(c);
    else
      j[key] = c.str();  // decimal string for coefficients beyond 64 bits
  }
  return j;
}

Laurent laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("polynomial JSON must be an object");
  Laurent p;
  for (const auto& [key, value] : j.items()) {
    const int k = std::stoi(key);
    Int c;
    if (value.is_number_integer())
      c = Int(value.get<std::int64_t>());
    else if (value.is_string())
      c = Int(value.get<std::string>());
    else
      throw Error("polynomial coefficient must be an integer or string");
    p += Laurent::monomial(c, k);
  }
  return p;
}

nlohmann::json element_to_json(const Element& x) {
  nlohmann::json a = nlohmann::json::array();
  for (Gen s : x.word()) a.push_back(x.system().label(s));
  return a;
}

Element element_from_json(const CoxeterSystem& sys, const nlohmann::json& j) {
  if (j.is_string()) return element_from_str(sys, j.get<std::string>());
  if (!j.is_array()) throw Error("element JSON must be a list of labels");
  return sys.from_labels(j.get<std::vector<std::string>>());
}

Element element_from_str(const CoxeterSystem& sys, const std::string& text) {
  if (text.empty() || text == "e") return sys.identity();
  std::vector<std::string> labels;
  std::string cur;
  for (char ch : text) {
    if (ch == '*' || ch == ',') {
      if (!cur.empty()) labels.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) labels.push_back(cur);
  return sys.from_labels(labels);
}

CoxeterSystem system_from_json(const nlohmann::json& j) {
  if (!j.contains("generators") || !j.contains("matrix"))
    throw Error("matrix file needs 'generators' and 'matrix' fields");
  std::vector<std::string> labels =
      j.at("generators").get<std::vector<std::string>>();
  std::vector<std::vector<int>> matrix =
      j.at("matrix").get<std::vector<std::vector<int>>>();
  return CoxeterSystem(std::move(labels), std::move(matrix));
}

CoxeterSystem system_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid matrix file '" + path + "': " + e.what());
  }
  return system_from_json(j);
}

}  // namespace klc
