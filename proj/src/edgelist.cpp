#include "degenum/edgelist.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace degenum {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::pair<int, int> parse_edge_line(const std::string& line) {
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed edge line: " + line);
    std::string rest;
    if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens on edge line: " + line);
    return {u, v};
}

}  // namespace

AnyGraph parse_edge_list(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw std::invalid_argument("edge list: missing header");
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    std::vector<std::pair<int, int>> edges;
    if (kind == "graph") {
        int n;
        if (!(header >> n)) throw std::invalid_argument("edge list: header needs a vertex count");
        while (next_content_line(in, line)) edges.push_back(parse_edge_line(line));
        return Graph(n, std::move(edges));
    }
    if (kind == "bigraph") {
        int m, n;
        if (!(header >> m >> n))
            throw std::invalid_argument("edge list: header needs left and right counts");
        while (next_content_line(in, line)) edges.push_back(parse_edge_line(line));
        return BipartiteGraph(m, n, std::move(edges));
    }
    throw std::invalid_argument("edge list: unknown header '" + kind + "'");
}

AnyGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string format_edge_list(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "bigraph " << g.left_count() << " " << g.right_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string format_edge_list(const AnyGraph& g) {
    return std::visit([](const auto& gg) { return format_edge_list(gg); }, g);
}

}  // namespace degenum
