#include "spectra/families.hpp"

#include <stdexcept>
#include <string>

namespace spectra {

Graph path_graph(int n) {
    if (n < 1) {
        throw std::invalid_argument("path_graph: order must be at least 1");
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_graph: order must be at least 3");
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, edges);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("complete_multipartite: no parts");
    }
    int n = 0;
    for (int p : parts) {
        if (p < 1) {
            throw std::invalid_argument("complete_multipartite: part size must be at least 1");
        }
        n += p;
    }
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int k = 0; k < parts[i]; ++k) {
            part_of.push_back(static_cast<int>(i));
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph attach_leaf(const Graph& g, int v) {
    return attach_path(g, v, 1);
}

Graph attach_path(const Graph& g, int v, int k) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) {
        throw std::invalid_argument("attach_path: attachment vertex out of range");
    }
    if (k < 1) {
        throw std::invalid_argument("attach_path: path must have at least 1 vertex");
    }
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.emplace_back(v, n);
    for (int i = 0; i + 1 < k; ++i) {
        edges.emplace_back(n + i, n + i + 1);
    }
    return Graph(n + k, edges);
}

Graph decorated_cycle(int g, int t) {
    if (g < 3) {
        throw std::invalid_argument("decorated_cycle: girth must be at least 3");
    }
    if (t < 2) {
        throw std::invalid_argument("decorated_cycle: class size must be at least 2");
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g; ++v) {
        edges.emplace_back(v, (v + 1) % g);
        edges.emplace_back(v, g + v);  // leaf on each cycle vertex
    }
    int tail_len = 2 * t - 3;
    int tail_base = 2 * g;
    edges.emplace_back(0, tail_base);
    for (int i = 0; i + 1 < tail_len; ++i) {
        edges.emplace_back(tail_base + i, tail_base + i + 1);
    }
    int next = tail_base + tail_len;
    for (int i = 1; i <= tail_len; ++i) {
        int leaves = (i % 2 == 1) ? 2 : 1;
        for (int k = 0; k < leaves; ++k) {
            edges.emplace_back(tail_base + i - 1, next++);
        }
    }
    return Graph(next, edges);
}

Graph theta_graph(int a, int b, int c) {
    int lengths[3] = {a, b, c};
    int ones = 0;
    for (int len : lengths) {
        if (len < 1) {
            throw std::invalid_argument("theta_graph: arm length must be at least 1");
        }
        if (len == 1) {
            ++ones;
        }
    }
    if (ones > 1) {
        throw std::invalid_argument("theta_graph: at most one arm of length 1");
    }
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : lengths) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph(next, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int offset = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u + offset, v + offset);
    }
    return Graph(offset + h.vertex_count(), edges);
}

}  // namespace spectra
