#include "camfan/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "camfan/errors.hpp"

namespace camfan {

using nlohmann::json;

CoxeterGroup load_group_json(const std::string& text, BuildOptions opts) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid group JSON: ") + e.what());
  }
  if (!j.contains("coxeter_matrix"))
    fail(Errc::ParseError, "group file is missing \"coxeter_matrix\"");
  std::vector<std::vector<int>> m;
  for (const auto& row : j["coxeter_matrix"]) {
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(Errc::ParseError, "coxeter_matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    m.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  return CoxeterGroup::build(m, std::move(labels), opts);
}

CoxeterGroup load_group_file(const std::string& path, BuildOptions opts) {
  std::ifstream in(path);
  if (!in) fail(Errc::UsageError, "cannot open group file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_group_json(ss.str(), opts);
}

std::string group_definition_json(const CoxeterGroup& g) {
  json j;
  j["labels"] = json::array();
  for (int s = 0; s < g.rank(); ++s) j["labels"].push_back(g.label(s));
  j["coxeter_matrix"] = g.coxeter_matrix();
  return j.dump(2) + "\n";
}

}  // namespace camfan
