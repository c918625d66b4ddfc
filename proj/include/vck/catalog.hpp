#pragma once

#include <string>
#include <vector>

#include "vck/diagram.hpp"

namespace vck {

// Directory holding bundled diagram codes and goldens: $VCK_DATA when set,
// otherwise the build-time default.
std::string data_dir();

// Bundled diagram by name (reads <data>/diagrams/<name>.gauss).
LinkDiagram catalog(const std::string& name);
std::vector<std::string> catalog_list();

}  // namespace vck
