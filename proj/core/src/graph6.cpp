#include "spectra/graph6.hpp"

#include <fstream>
#include <istream>

namespace spectra {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxLongOrder = 258047;  // 2^18 - 1

int byte_value(char c, std::size_t pos) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) {
        throw Graph6Error("graph6: byte " + std::to_string(static_cast<int>(u)) +
                          " at position " + std::to_string(pos) +
                          " outside printable range 63..126");
    }
    return u - kOffset;
}

std::size_t body_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(kOffset + n);
    } else if (n <= kMaxLongOrder) {
        out += '~';
        out += static_cast<char>(kOffset + ((n >> 12) & 63));
        out += static_cast<char>(kOffset + ((n >> 6) & 63));
        out += static_cast<char>(kOffset + (n & 63));
    } else {
        throw Graph6Error("graph6: order " + std::to_string(n) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxLongOrder));
    }
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(kOffset + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out += static_cast<char>(kOffset + (group << (6 - filled)));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) {
        throw Graph6Error("graph6: empty input");
    }
    if (text[0] == ':' || text[0] == ';') {
        throw Graph6Error("graph6: sparse6 input not supported");
    }
    if (text[0] == '&') {
        throw Graph6Error("graph6: digraph6 input not supported");
    }
    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') {
            throw Graph6Error("graph6: eight-byte order form not supported");
        }
        if (text.size() < 4) {
            throw Graph6Error("graph6: truncated order header");
        }
        n = (static_cast<long long>(byte_value(text[1], 1)) << 12) |
            (byte_value(text[2], 2) << 6) | byte_value(text[3], 3);
        pos = 4;
    } else {
        n = byte_value(text[0], 0);
        pos = 1;
    }
    std::size_t need = body_bytes(n);
    if (text.size() - pos != need) {
        throw Graph6Error("graph6: body has " + std::to_string(text.size() - pos) +
                          " bytes but order " + std::to_string(n) + " needs " +
                          std::to_string(need));
    }
    std::vector<std::pair<int, int>> edges;
    int group = 0, remaining = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (remaining == 0) {
                group = byte_value(text[pos], pos);
                ++pos;
                remaining = 6;
            }
            if (group & (1 << (remaining - 1))) {
                edges.emplace_back(row, col);
            }
            --remaining;
        }
    }
    if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0) {
        throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

void read_graph6_stream(std::istream& in,
                        const std::function<void(std::size_t, Graph)>& on_graph,
                        const std::function<void(std::size_t, const std::string&)>& on_error,
                        bool strict) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        try {
            Graph g = graph6_decode(line);
            on_graph(line_no, std::move(g));
        } catch (const Graph6Error& e) {
            if (strict) {
                throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
            }
            on_error(line_no, e.what());
        }
    }
}

Graph6File read_graph6_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    Graph6File out;
    read_graph6_stream(
        in,
        [&](std::size_t, Graph g) { out.graphs.push_back(std::move(g)); },
        [&](std::size_t line, const std::string& msg) { out.errors.emplace_back(line, msg); },
        strict);
    return out;
}

}  // namespace spectra
