#include "cind/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cind {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

// Pulls 6-bit groups (byte minus 63) out of the body.
struct BitReader {
    std::string_view text;
    size_t pos;
    int bit = 0;
    unsigned char cur = 0;

    bool next(size_t total_bits_limit, size_t& bits_read) {
        if (bit == 0) {
            if (pos >= text.size())
                throw ParseError("graph6: truncated adjacency bits at byte offset " +
                                     std::to_string(pos),
                                 pos);
            unsigned char c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: byte out of range at byte offset " + std::to_string(pos),
                                 pos);
            cur = c - 63;
            ++pos;
            bit = 6;
        }
        --bit;
        ++bits_read;
        (void)total_bits_limit;
        return (cur >> bit) & 1;
    }
};

} // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    auto byte_at = [&](size_t p) -> unsigned {
        if (p >= text.size())
            throw ParseError("graph6: truncated order field at byte offset " + std::to_string(p), p);
        unsigned char c = static_cast<unsigned char>(text[p]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte out of range at byte offset " + std::to_string(p), p);
        return c - 63u;
    };

    long long n = 0;
    unsigned b0 = byte_at(pos);
    if (b0 < 63) {
        n = b0;
        ++pos;
    } else { // b0 == 63, extended order
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw ParseError("graph6: 36-bit order form not supported at byte offset " +
                                 std::to_string(pos),
                             pos);
        for (int i = 0; i < 3; ++i) {
            n = (n << 6) | byte_at(pos);
            ++pos;
        }
        if (n < 63)
            throw ParseError("graph6: non-canonical extended order at byte offset " +
                                 std::to_string(pos - 3),
                             pos - 3);
    }

    BitReader br{text, pos};
    std::vector<std::pair<int, int>> edges;
    size_t bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (br.next(0, bits)) edges.emplace_back(row, col);
    // drain padding of the last byte
    while (br.bit > 0) {
        --br.bit;
        if ((br.cur >> br.bit) & 1)
            throw ParseError("graph6: nonzero padding bit at byte offset " +
                                 std::to_string(br.pos - 1),
                             br.pos - 1);
    }
    size_t end = br.pos;
    if (end < text.size() && text[end] == '\n') ++end;
    if (end < text.size())
        throw ParseError("graph6: trailing garbage at byte offset " + std::to_string(end), end);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
    int bit = 5;
    unsigned char cur = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (g.has_edge(row, static_cast<int>(col))) cur |= 1u << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit < 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("edgelist: bad header at line " + std::to_string(lineno), lineno);
            std::string rest;
            if (ls >> rest)
                throw ParseError("edgelist: trailing tokens at line " + std::to_string(lineno), lineno);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("edgelist: expected \"u v\" at line " + std::to_string(lineno), lineno);
        std::string rest;
        if (ls >> rest)
            throw ParseError("edgelist: trailing tokens at line " + std::to_string(lineno), lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edgelist: vertex id out of range at line " + std::to_string(lineno),
                             lineno);
        if (u == v)
            throw ParseError("edgelist: loop at line " + std::to_string(lineno), lineno);
        int lo = static_cast<int>(std::min(u, v)), hi = static_cast<int>(std::max(u, v));
        if (std::find(seen.begin(), seen.end(), std::make_pair(lo, hi)) != seen.end())
            throw ParseError("edgelist: duplicate edge at line " + std::to_string(lineno), lineno);
        seen.emplace_back(lo, hi);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edgelist: missing header", 0);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edgelist: header claims " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         lineno);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto ends_with = [&](std::string_view suf) {
        return path.size() >= suf.size() && path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with(".g6")) return parse_graph6(content);
    if (ends_with(".el")) return parse_edgelist(content);
    // sniff: an edge list starts with a digit, graph6 bytes start >= '?' (63)
    if (!content.empty() && std::isdigit(static_cast<unsigned char>(content[0])))
        return parse_edgelist(content);
    return parse_graph6(content);
}

} // namespace cind
