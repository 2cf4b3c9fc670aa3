#ifndef CAMFAN_GROUP_IO_HPP
#define CAMFAN_GROUP_IO_HPP

#include <string>

#include "camfan/coxeter.hpp"

namespace camfan {

/// Group definition file: {"labels": ["s0", ...], "coxeter_matrix": [[1,3],...]}.
CoxeterGroup load_group_file(const std::string& path, BuildOptions opts = {});
CoxeterGroup load_group_json(const std::string& text, BuildOptions opts = {});
std::string group_definition_json(const CoxeterGroup& g);

}  // namespace camfan

#endif
