#include "turan/constructions.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

ClassVector::ClassVector(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("class vector needs at least one part");
    for (std::uint64_t s : sizes_)
        if (s == 0) throw std::invalid_argument("class vector parts must be nonempty");
    total_ = std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
}

ClassVector ClassVector::balanced(int r, std::uint64_t n) {
    if (r < 1 || static_cast<std::uint64_t>(r) > n)
        throw std::invalid_argument("balanced split needs 1 <= r <= n");
    std::vector<std::uint64_t> sizes(r, n / r);
    for (std::uint64_t i = 0; i < n % r; ++i) ++sizes[i];
    return ClassVector(std::move(sizes));
}

std::string ClassVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < sizes_.size(); ++i) out << (i ? "," : "") << sizes_[i];
    out << ')';
    return out.str();
}

namespace {

Graph graph_from_edges(int n, const std::vector<Edge>& edges) { return make_graph(n, edges); }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_capacity(int n, const char* family) {
    if (n > kMaxVertices)
        throw CapacityError(std::string(family) + " needs " + std::to_string(n) + " vertices; capacity is 16");
}

}  // namespace

Graph path_graph(int vertices) {
    require(vertices >= 1, "path needs at least one vertex");
    require_capacity(vertices, "path");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
    return graph_from_edges(vertices, edges);
}

Graph cycle_graph(int vertices) {
    require(vertices >= 3, "cycle needs at least three vertices");
    require_capacity(vertices, "cycle");
    return path_graph(vertices).with_edge(vertices - 1, 0);
}

Graph complete_graph(int vertices) {
    require(vertices >= 1, "clique needs at least one vertex");
    require_capacity(vertices, "clique");
    std::vector<Edge> edges;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
    return graph_from_edges(vertices, edges);
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    require_capacity(leaves + 1, "star");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return graph_from_edges(leaves + 1, edges);
}

Graph book_graph(int pages) {
    require(pages >= 1, "book needs at least one page");
    require_capacity(pages + 2, "book");
    std::vector<Edge> edges{{0, 1}};
    for (int p = 2; p < pages + 2; ++p) {
        edges.emplace_back(0, p);
        edges.emplace_back(1, p);
    }
    return graph_from_edges(pages + 2, edges);
}

Graph fan_graph(int blades) {
    require(blades >= 1, "fan needs at least one triangle");
    require_capacity(2 * blades + 1, "fan");
    std::vector<Edge> edges;
    for (int i = 1; i <= blades; ++i) {
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(0, 2 * i);
        edges.emplace_back(2 * i - 1, 2 * i);
    }
    return graph_from_edges(2 * blades + 1, edges);
}

Graph matching_complement(int k) {
    require(k >= 1, "matching complement needs k >= 1");
    require_capacity(2 * k, "matching complement");
    std::vector<Edge> edges;
    for (int i = 0; i < 2 * k; ++i)
        for (int j = i + 1; j < 2 * k; ++j)
            if (!(j == i + 1 && i % 2 == 0)) edges.emplace_back(i, j);
    return graph_from_edges(2 * k, edges);
}

Graph matching_complement_plus(int k) {
    const Graph base = matching_complement(k);
    return base.with_edge(0, 1);
}

Graph turan_graph(int r, int n) {
    require(r >= 1, "Turan graph needs at least one class");
    require(r <= n, "Turan graph T_r(n) needs r <= n");
    require_capacity(n, "Turan graph");
    return complete_multipartite(ClassVector::balanced(r, static_cast<std::uint64_t>(n)));
}

Graph complete_multipartite(const ClassVector& cv) {
    if (cv.total() > static_cast<std::uint64_t>(kMaxVertices))
        throw CapacityError("complete multipartite host " + cv.to_string() + " exceeds capacity");
    const int n = static_cast<int>(cv.total());
    std::vector<int> part(n);
    int v = 0;
    for (int p = 0; p < cv.parts(); ++p)
        for (std::uint64_t i = 0; i < cv.sizes()[p]; ++i) part[v++] = p;
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[a] != part[b]) edges.emplace_back(a, b);
    return graph_from_edges(n, edges);
}

Graph glue_h_prime(const Graph& h, VertexMask clique, int k, const std::vector<std::pair<int, int>>& pattern) {
    require(k >= 2, "gluing needs k >= 2");
    require((clique & ~h.vertices()) == 0, "clique mask references missing vertices");
    for (VertexMask m = clique; m; m &= m - 1) {
        const int u = lowest_vertex(m);
        require((clique & ~bit(u) & ~h.neighbors(u)) == 0, "vertex set X does not induce a complete subgraph");
    }
    const int n = h.order();
    require_capacity(n + k - 1, "glued graph");

    std::vector<Edge> edges = h.edges();
    for (int a = 0; a < k - 1; ++a)
        for (int b = a + 1; b < k - 1; ++b) edges.emplace_back(n + a, n + b);
    for (const auto& [x, j] : pattern) {
        require(x >= 0 && x < n && (clique & bit(x)), "pattern vertex " + std::to_string(x) + " is not in X");
        require(j >= 0 && j < k - 1, "pattern clique index " + std::to_string(j) + " out of range");
        edges.emplace_back(x, n + j);
    }
    return make_graph(n + k - 1, edges);
}

// ---------------------------------------------------------------------------
// Family DSL

namespace {

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse() {
        if (text_.starts_with("g6:")) {
            FamilySpec spec{FamilyKind::Graph6Literal, {}, std::string(text_.substr(3))};
            try {
                parse_graph6(spec.literal);
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad graph6 literal: ") + e.what(), 3 + e.offset());
            }
            return spec;
        }

        const std::size_t name_start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(name_start, pos_ - name_start);
        if (name.empty()) fail("expected a family name");

        FamilySpec spec;
        if (name == "T" || name == "M") {
            spec.kind = name == "T" ? FamilyKind::Turan : FamilyKind::CompleteMultipartite;
            spec.params = number_list();
        } else {
            if (name == "P")
                spec.kind = FamilyKind::Path;
            else if (name == "C")
                spec.kind = FamilyKind::Cycle;
            else if (name == "K")
                spec.kind = FamilyKind::Clique;
            else if (name == "S")
                spec.kind = FamilyKind::Star;
            else if (name == "B")
                spec.kind = FamilyKind::Book;
            else if (name == "F")
                spec.kind = FamilyKind::Fan;
            else if (name == "Mbar")
                spec.kind = FamilyKind::MatchingComplement;
            else if (name == "MbarP")
                spec.kind = FamilyKind::MatchingComplementPlus;
            else
                fail("unknown family '" + std::string(name) + "'", name_start);
            spec.params.push_back(number());
        }
        if (pos_ != text_.size()) fail("trailing characters");
        check_ranges(spec);
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    int number() {
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("number too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        number_offsets_.push_back(start);
        return static_cast<int>(value);
    }

    std::vector<int> number_list() {
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
        ++pos_;
        std::vector<int> values;
        for (;;) {
            skip_spaces();
            values.push_back(number());
            skip_spaces();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == ')') {
                ++pos_;
                return values;
            }
            fail("expected ',' or ')'");
        }
    }

    void range(bool ok, std::size_t param, const std::string& what) const {
        if (!ok) fail(what, number_offsets_.at(param));
    }

    void check_ranges(const FamilySpec& spec) const {
        const auto& p = spec.params;
        switch (spec.kind) {
            case FamilyKind::Path: range(p[0] >= 1 && p[0] <= 16, 0, "path length must be 1..16"); break;
            case FamilyKind::Cycle: range(p[0] >= 3 && p[0] <= 16, 0, "cycle length must be 3..16"); break;
            case FamilyKind::Clique: range(p[0] >= 1 && p[0] <= 16, 0, "clique order must be 1..16"); break;
            case FamilyKind::Star: range(p[0] >= 1 && p[0] <= 15, 0, "star leaves must be 1..15"); break;
            case FamilyKind::Book: range(p[0] >= 1 && p[0] <= 14, 0, "book pages must be 1..14"); break;
            case FamilyKind::Fan: range(p[0] >= 1 && p[0] <= 7, 0, "fan triangles must be 1..7"); break;
            case FamilyKind::MatchingComplement:
            case FamilyKind::MatchingComplementPlus: range(p[0] >= 1 && p[0] <= 8, 0, "matching size must be 1..8"); break;
            case FamilyKind::Turan:
                if (p.size() != 2) fail("T takes exactly two parameters (r,n)", number_offsets_.front());
                range(p[1] >= 1 && p[1] <= 16, 1, "Turan order must be 1..16");
                range(p[0] >= 1 && p[0] <= p[1], 0, "Turan class count must be 1..n");
                break;
            case FamilyKind::CompleteMultipartite: {
                int total = 0;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    range(p[i] >= 1, i, "class sizes must be positive");
                    total += p[i];
                    range(total <= 16, i, "complete multipartite graph exceeds 16 vertices");
                }
                break;
            }
            case FamilyKind::Graph6Literal: break;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> number_offsets_;
};

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return "P";
        case FamilyKind::Cycle: return "C";
        case FamilyKind::Clique: return "K";
        case FamilyKind::Star: return "S";
        case FamilyKind::Book: return "B";
        case FamilyKind::Fan: return "F";
        case FamilyKind::MatchingComplement: return "Mbar";
        case FamilyKind::MatchingComplementPlus: return "MbarP";
        case FamilyKind::Turan: return "T";
        case FamilyKind::CompleteMultipartite: return "M";
        case FamilyKind::Graph6Literal: return "g6:";
    }
    return "?";
}

}  // namespace

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse(); }

std::string FamilySpec::to_string() const {
    std::string out = family_name(kind);
    if (kind == FamilyKind::Graph6Literal) return out + literal;
    if (kind == FamilyKind::Turan || kind == FamilyKind::CompleteMultipartite) {
        out += '(';
        for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
        return out + ')';
    }
    return out + std::to_string(params.at(0));
}

Graph build(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Path: return path_graph(p.at(0));
        case FamilyKind::Cycle: return cycle_graph(p.at(0));
        case FamilyKind::Clique: return complete_graph(p.at(0));
        case FamilyKind::Star: return star_graph(p.at(0));
        case FamilyKind::Book: return book_graph(p.at(0));
        case FamilyKind::Fan: return fan_graph(p.at(0));
        case FamilyKind::MatchingComplement: return matching_complement(p.at(0));
        case FamilyKind::MatchingComplementPlus: return matching_complement_plus(p.at(0));
        case FamilyKind::Turan: return turan_graph(p.at(0), p.at(1));
        case FamilyKind::CompleteMultipartite: {
            std::vector<std::uint64_t> sizes;
            for (int s : p) {
                if (s < 1) throw std::invalid_argument("class sizes must be positive");
                sizes.push_back(static_cast<std::uint64_t>(s));
            }
            return complete_multipartite(ClassVector(std::move(sizes)));
        }
        case FamilyKind::Graph6Literal: return parse_graph6(spec.literal);
    }
    throw std::logic_error("unhandled family kind");
}

Graph build(std::string_view family_text) { return build(parse_family(family_text)); }

}  // namespace turan
