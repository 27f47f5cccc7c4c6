#include "sturan/graph_io.hpp"

#include "sturan/error.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sturan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(char c)
{
    if (c < 63 || c > 126)
        throw FormatError(std::string("graph6: character code ") +
                          std::to_string(static_cast<unsigned char>(c)) + " outside '?'..'~'");
    return c - 63;
}

} // namespace

Graph from_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("graph6: empty string");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = sixbits(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw FormatError("graph6: 36-bit size header not supported");
        if (text.size() < 4)
            throw FormatError("graph6: truncated size header");
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | sixbits(text[static_cast<std::size_t>(i)]);
        if (n < 63)
            throw FormatError("graph6: long size header used for n < 63");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw CapacityExceeded("graph6: order " + std::to_string(n) + " exceeds capacity");

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body)
        throw FormatError("graph6: truncated body (expected " + std::to_string(body) +
                          " characters, got " + std::to_string(text.size() - pos) + ")");
    if (text.size() - pos > body)
        throw FormatError("graph6: trailing data after body");

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int c = sixbits(text[pos + static_cast<std::size_t>(k / 6)]);
            if ((c >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    return g;
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - used))));
    return out;
}

Graph read_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    int declared = -1;
    int largest = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first))
            continue;
        auto fail = [&](const std::string& what) {
            throw FormatError("edge list line " + std::to_string(lineno) + ": " + what);
        };
        if (first == "n") {
            if (!(fields >> declared) || declared < 0)
                fail("expected 'n <order>'");
            continue;
        }
        int u = 0, v = 0;
        try {
            std::size_t used = 0;
            u = std::stoi(first, &used);
            if (used != first.size())
                fail("bad vertex '" + first + "'");
        } catch (const std::logic_error&) {
            fail("bad vertex '" + first + "'");
        }
        if (!(fields >> v))
            fail("expected two vertex indices");
        std::string extra;
        if (fields >> extra)
            fail("unexpected token '" + extra + "'");
        if (u < 0 || v < 0)
            fail("negative vertex index");
        if (u == v)
            fail("loop at vertex " + std::to_string(u));
        largest = std::max({largest, u, v});
        edges.emplace_back(u, v);
    }
    const int n = declared >= 0 ? declared : largest + 1;
    if (largest >= n)
        throw FormatError("edge list: vertex " + std::to_string(largest) +
                          " outside declared order " + std::to_string(n));
    if (n > kMaxVertices)
        throw CapacityExceeded("edge list: order " + std::to_string(n) + " exceeds capacity");
    return Graph::from_edges(n, edges);
}

} // namespace sturan
