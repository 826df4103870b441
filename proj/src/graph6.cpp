#include "hbp/graph6.hpp"

#include <cctype>
#include <sstream>

namespace hbp {

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw LimitError("graph6 supports order <= 62 (long form not implemented)");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw LimitError("long-form graph6 not implemented");
    if (c0 < 63 || c0 > 126) throw ParseError("graph6 byte out of range", 0);
    int n = c0 - 63;
    long nbits = static_cast<long>(n) * (n - 1) / 2;
    long ngroups = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) != 1 + ngroups)
        throw ParseError("graph6 payload has wrong length", static_cast<long>(text.size()));
    std::vector<std::pair<int, int>> edges;
    long pos = 0;
    int u = 0, v = 1;
    for (long k = 0; k < ngroups; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1 + k);
        int val = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++pos) {
            int b = (val >> bit) & 1;
            if (pos >= nbits) {
                if (b) throw ParseError("nonzero graph6 padding", 1 + k);
                continue;
            }
            if (b) edges.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_edgelist(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph decode_edgelist(std::string_view text) {
    std::istringstream is{std::string(text)};
    long n = -1, m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("bad edgelist header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long k = 0; k < m; ++k) {
        int u, v;
        if (!(is >> u >> v)) throw ParseError("edgelist truncated at edge " + std::to_string(k));
        edges.emplace_back(u, v);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    size_t i = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > 0 && i < text.size() && (text[i] == ' ' || text[i] == '\t'))
        return decode_edgelist(text);
    return decode_graph6(text);
}

}  // namespace hbp
