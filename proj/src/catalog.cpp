#include "vck/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

#include "vck/solution_io.hpp"

#ifndef VCK_DATA_DIR
#define VCK_DATA_DIR "data"
#endif

namespace vck {

std::string data_dir() {
    if (const char* env = std::getenv("VCK_DATA")) return env;
    return VCK_DATA_DIR;
}

LinkDiagram catalog(const std::string& name) {
    std::string path = data_dir() + "/diagrams/" + name + ".gauss";
    if (!std::filesystem::exists(path))
        throw std::runtime_error("unknown diagram '" + name + "' (no file " + path + ")");
    std::string text = read_text_file(path);
    // strip comment lines
    std::string code;
    std::string line;
    for (char ch : text + "\n") {
        if (ch == '\n') {
            if (!line.empty() && line[0] != '#') code += line + " ";
            line.clear();
        } else {
            line += ch;
        }
    }
    return parse_gauss(code);
}

std::vector<std::string> catalog_list() {
    std::vector<std::string> names;
    std::string dir = data_dir() + "/diagrams";
    if (!std::filesystem::exists(dir)) return names;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".gauss") names.push_back(e.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace vck
