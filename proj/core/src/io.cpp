#include "treecenters/io.hpp"

#include <fstream>
#include <sstream>

namespace treecenters {

namespace {

bool blank(const std::string& s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Tree parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1) {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": expected vertex count");
            }
            std::string rest;
            if (ls >> rest) {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": unexpected token after vertex count");
            }
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) {
            throw ValidationError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": unexpected token after edge");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ValidationError("line " + std::to_string(lineno) + ": vertex id out of range [1," +
                                  std::to_string(n) + "]");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ValidationError("empty edge-list input");
    return build_from_edges(static_cast<int>(n), edges);
}

Tree load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return parse_edge_list(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string to_edge_list(const Tree& t) {
    std::string out = std::to_string(t.n) + "\n";
    for (auto [u, v] : t.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

std::string to_dot(const Tree& t) {
    std::string out = "graph tree {\n  node [shape=circle];\n";
    for (auto [u, v] : t.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace treecenters
