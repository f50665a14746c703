#include "graphpoly/graph_io.hpp"

#include <charconv>
#include <vector>

namespace graphpoly {

namespace {

constexpr int kG6Offset = 63;

// Pairs (i, j), i < j, in the column order graph6 uses: j outer ascending,
// i inner ascending.
template <typename Fn>
void for_upper_triangle(int n, Fn&& fn) {
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) fn(i, j);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 string", 0);
    unsigned char size_char = static_cast<unsigned char>(line[0]);
    if (size_char == 126)
        throw ParseError("extended graph6 sizes (n > 62) are not supported", 0);
    if (size_char < 63 || size_char > 125)
        throw ParseError("graph6 size character out of range", 0);
    int n = size_char - kG6Offset;
    if (n > vertex_capacity())
        throw CapacityError("graph6 string encodes " + std::to_string(n) +
                            " vertices; capacity is " + std::to_string(vertex_capacity()));

    int nbits = n * (n - 1) / 2;
    std::size_t body_len = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != 1 + body_len)
        throw ParseError("graph6 string has wrong length for n = " + std::to_string(n),
                         line.size() < 1 + body_len ? line.size() : 1 + body_len);

    std::vector<bool> bits(static_cast<std::size_t>(body_len) * 6, false);
    for (std::size_t c = 0; c < body_len; ++c) {
        unsigned char ch = static_cast<unsigned char>(line[1 + c]);
        if (ch < 63 || ch > 126)
            throw ParseError("graph6 body character out of range", 1 + c);
        int value = ch - kG6Offset;
        for (int b = 0; b < 6; ++b) bits[c * 6 + static_cast<std::size_t>(b)] = (value >> (5 - b)) & 1;
    }
    for (std::size_t k = static_cast<std::size_t>(nbits); k < bits.size(); ++k) {
        if (bits[k]) throw ParseError("nonzero graph6 padding bits", 1 + k / 6);
    }

    EdgeSet edges;
    std::size_t k = 0;
    for_upper_triangle(n, [&](int i, int j) {
        if (bits[k++]) edges.emplace_back(i, j);
    });
    return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kVertexCapacityCeiling)
        throw CapacityError("graph6 encodes at most 62 vertices");
    std::string out(1, static_cast<char>(n + kG6Offset));
    int value = 0;
    int nbits = 0;
    for_upper_triangle(n, [&](int i, int j) {
        value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
        if (++nbits == 6) {
            out.push_back(static_cast<char>(value + kG6Offset));
            value = 0;
            nbits = 0;
        }
    });
    if (nbits > 0) out.push_back(static_cast<char>((value << (6 - nbits)) + kG6Offset));
    return out;
}

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;  // 1-based, of the line last returned

    // Next line with content, comments stripped and edges trimmed; empty
    // string_view means end of input.
    std::string_view next_content_line() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            pos = eol == std::string_view::npos ? text.size() : eol + 1;
            ++line_no;
            if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
                line.remove_suffix(1);
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
                line.remove_prefix(1);
            if (!line.empty()) return line;
        }
        return {};
    }
};

// Parses "a b" into two nonnegative ints.
bool parse_int_pair(std::string_view line, long long& a, long long& b) {
    const char* begin = line.data();
    const char* end = begin + line.size();
    auto r1 = std::from_chars(begin, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end) return false;
    const char* p = r1.ptr;
    if (*p != ' ' && *p != '\t') return false;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr != end) return false;
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    LineScanner s{text};
    std::string_view header = s.next_content_line();
    if (header.empty()) throw ParseError("missing edge-list header", s.line_no);
    long long n, m;
    if (!parse_int_pair(header, n, m) || n < 0 || m < 0)
        throw ParseError("edge-list header must be \"n m\"", s.line_no);
    if (n > kVertexCapacityCeiling)
        throw CapacityError("edge list declares " + std::to_string(n) + " vertices");

    EdgeSet edges;
    for (long long k = 0; k < m; ++k) {
        std::string_view line = s.next_content_line();
        if (line.empty())
            throw ParseError("expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(k),
                             s.line_no);
        long long u, v;
        if (!parse_int_pair(line, u, v))
            throw ParseError("edge line must be \"u v\"", s.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", s.line_no);
        if (u == v) throw ParseError("loops are not allowed", s.line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!s.next_content_line().empty())
        throw ParseError("unexpected content after " + std::to_string(m) + " edges", s.line_no);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace graphpoly
