#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Encodes in graph6: an order header (one byte for n <= 62, '~' plus three
/// bytes up to n = 258047) followed by the upper triangle packed column by
/// column, six bits per printable byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 string. Throws Graph6Error on bytes outside 63..126,
/// a body whose length does not match the order, nonzero padding bits, and
/// the sparse6/digraph6 variants.
Graph graph6_decode(std::string_view text);

/// Reads one graph per line. Leading ">>graph6<<" headers are not accepted;
/// a trailing '\r' per line is tolerated. In strict mode the first bad line
/// throws Graph6Error; otherwise bad lines go to on_error and reading
/// continues. Line numbers start at 1.
void read_graph6_stream(std::istream& in,
                        const std::function<void(std::size_t, Graph)>& on_graph,
                        const std::function<void(std::size_t, const std::string&)>& on_error,
                        bool strict = false);

struct Graph6File {
    std::vector<Graph> graphs;
    std::vector<std::pair<std::size_t, std::string>> errors;  // (line, message)
};

/// Convenience wrapper over read_graph6_stream. Throws std::runtime_error
/// when the file cannot be opened.
Graph6File read_graph6_file(const std::string& path, bool strict = false);

}  // namespace spectra
