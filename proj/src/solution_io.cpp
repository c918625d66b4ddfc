#include "vck/solution_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vck {

namespace {

SolutionTable parse_block(const std::vector<std::string>& rows, int n, int base) {
    if ((int)rows.size() != n) throw std::runtime_error("solution file: expected " +
                                                        std::to_string(n) + " rows per block");
    SolutionTable s(n);
    for (int x = 0; x < n; ++x) {
        std::istringstream ss(rows[x]);
        std::string tok;
        for (int y = 0; y < n; ++y) {
            if (!(ss >> tok))
                throw std::runtime_error("solution file: short row " + std::to_string(x + 1));
            auto comma = tok.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("solution file: cell (" + std::to_string(x + 1) + "," +
                                         std::to_string(y + 1) + ") is not 'z,w'");
            int z = std::stoi(tok.substr(0, comma)) - base;
            int w = std::stoi(tok.substr(comma + 1)) - base;
            if (z < 0 || z >= n || w < 0 || w >= n)
                throw std::runtime_error("solution file: out-of-range entry at cell (" +
                                         std::to_string(x + 1) + "," + std::to_string(y + 1) +
                                         ")");
            s.set(x, y, z, w);
        }
        std::string extra;
        if (ss >> extra)
            throw std::runtime_error("solution file: trailing tokens in row " +
                                     std::to_string(x + 1));
    }
    return s;
}

}  // namespace

SolutionFile parse_solution_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, base = 1;
    std::vector<std::vector<std::string>> blocks(1);
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (n < 0) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
                else if (tok.rfind("base=", 0) == 0) base = std::stoi(tok.substr(5));
                else throw std::runtime_error("solution file: bad header token '" + tok + "'");
            }
            if (n <= 0) throw std::runtime_error("solution file: header must set n");
            continue;
        }
        if (line.empty()) {
            if (!blocks.back().empty()) blocks.emplace_back();
            continue;
        }
        blocks.back().push_back(line);
    }
    while (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
    if (n < 0 || blocks.empty()) throw std::runtime_error("solution file: no table");
    if (blocks.size() > 2) throw std::runtime_error("solution file: more than two blocks");

    SolutionFile out;
    out.S = parse_block(blocks[0], n, base);
    if (blocks.size() == 2) out.beta = parse_block(blocks[1], n, base);
    return out;
}

std::string format_solution_file(const SolutionTable& S, const SolutionTable* beta, int base) {
    std::ostringstream out;
    out << "n=" << S.n << " base=" << base << "\n";
    auto dump = [&](const SolutionTable& t) {
        for (int x = 0; x < t.n; ++x) {
            for (int y = 0; y < t.n; ++y) {
                auto [z, w] = t.at(x, y);
                out << (y ? " " : "") << z + base << "," << w + base;
            }
            out << "\n";
        }
    };
    dump(S);
    if (beta) {
        out << "\n";
        dump(*beta);
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << content;
}

}  // namespace vck
