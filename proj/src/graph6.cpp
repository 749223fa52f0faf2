#include "turan/graph6.hpp"

#include <algorithm>
#include <fstream>

#include "turan/errors.hpp"

namespace turan {

namespace {

constexpr int kBias = 63;

bool valid_byte(char c) { return c >= kBias && c <= kBias + 63; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    if (!valid_byte(text[0])) throw ParseError("graph6 byte out of range", 0);
    const int n = text[0] - kBias;
    if (n == 63) throw CapacityError("graph6 header declares more than 62 vertices; capacity is 16");
    if (n > kMaxVertices) throw CapacityError("graph6 graph on " + std::to_string(n) + " vertices exceeds capacity");

    const int bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match " +
                             std::to_string(expected) + " for n=" + std::to_string(n),
                         std::min(text.size(), expected));

    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t pos = 1 + static_cast<std::size_t>(k / 6);
            if (!valid_byte(text[pos])) throw ParseError("graph6 byte out of range", pos);
            const int chunk = text[pos] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) g = g.with_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t pos = text.size() - 1;
        if (!valid_byte(text[pos])) throw ParseError("graph6 byte out of range", pos);
        const int padding = 6 - bits % 6;
        if ((text[pos] - kBias) & ((1 << padding) - 1)) throw ParseError("nonzero graph6 padding bits", pos);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + kBias));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.starts_with(">>graph6<<")) line.erase(0, 10);
        first = false;
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file " + path);
    return read_graph6_stream(in);
}

}  // namespace turan
