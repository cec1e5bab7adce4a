#include "spectra/graph6.hpp"

namespace spectra {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    int bit = 5;
    unsigned cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= 1u << bit;
            if (--bit < 0) {
                out += static_cast<char>(63 + cur);
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out += static_cast<char>(63 + cur);
    return out;
}

namespace {

int char_value(char c) {
    if (c < 63 || c > 126) throw Graph6Error("graph6: character out of range");
    return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw Graph6Error("graph6: empty line");

    std::size_t pos = 0;
    long n;
    if (line[0] != '~') {
        n = char_value(line[pos++]);
    } else if (line.size() >= 2 && line[1] == '~') {
        if (line.size() < 8) throw Graph6Error("graph6: truncated order field");
        pos = 2;
        n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | char_value(line[pos++]);
    } else {
        if (line.size() < 4) throw Graph6Error("graph6: truncated order field");
        pos = 1;
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | char_value(line[pos++]);
    }
    if (n < 1 || n > Graph::kMaxOrder)
        throw Graph6Error("graph6: order " + std::to_string(n) + " outside supported 1..64");

    const int t = static_cast<int>(n) * (static_cast<int>(n) - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((t + 5) / 6);
    if (line.size() - pos != need)
        throw Graph6Error("graph6: expected " + std::to_string(need) + " adjacency characters, got " +
                          std::to_string(line.size() - pos));

    std::vector<std::pair<int, int>> edges;
    int bit = -1;
    unsigned cur = 0;
    int p = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++p) {
            if (bit < 0) {
                cur = static_cast<unsigned>(char_value(line[pos++]));
                bit = 5;
            }
            if ((cur >> bit) & 1u) edges.emplace_back(i, j);
            --bit;
        }
    }
    if (bit >= 0 && (cur & ((1u << (bit + 1)) - 1)) != 0)
        throw Graph6Error("graph6: nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace spectra
