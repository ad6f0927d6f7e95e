#include "spectra/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include "spectra/graph6.hpp"

namespace spectra {

namespace {

// Splits color classes by the multiset of neighbor colors until stable. New
// color ids are ranks of the sorted signatures, so they depend only on the
// colored graph up to isomorphism.
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.vertex_count();
    int classes = 0;
    for (int c : color) {
        classes = std::max(classes, c + 1);
    }
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> signatures;
        signatures.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{color[static_cast<std::size_t>(v)]};
            for (int u : g.adjacency(v)) {
                sig.push_back(color[static_cast<std::size_t>(u)]);
            }
            std::sort(sig.begin() + 1, sig.end());
            signatures.emplace_back(std::move(sig), v);
        }
        std::sort(signatures.begin(), signatures.end());
        int next = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [sig, v] : signatures) {
            if (prev == nullptr || sig != *prev) {
                ++next;
                prev = &sig;
            }
            color[static_cast<std::size_t>(v)] = next;
        }
        if (next + 1 == classes) {
            return;
        }
        classes = next + 1;
    }
}

using Bits = std::vector<std::uint8_t>;  // one byte per upper-triangle bit

struct ConnectedCanon {
    const Graph& g;
    int n;
    bool have_best = false;
    Bits best_bits;
    std::vector<int> best_label;

    // Vertices grouped by color, ascending; assumes colors are 0..k-1.
    static std::vector<std::vector<int>> classes_of(const std::vector<int>& color) {
        int k = 0;
        for (int c : color) {
            k = std::max(k, c + 1);
        }
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
        for (std::size_t v = 0; v < color.size(); ++v) {
            classes[static_cast<std::size_t>(color[v])].push_back(static_cast<int>(v));
        }
        return classes;
    }

    // Upper-triangle bits, column by column, over the first k labeled
    // vertices (orig_of[0..k-1]).
    Bits prefix_bits(const std::vector<int>& orig_of, int k) const {
        Bits bits;
        bits.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
        for (int col = 1; col < k; ++col) {
            for (int row = 0; row < col; ++row) {
                bits.push_back(g.adjacent(orig_of[static_cast<std::size_t>(row)],
                                          orig_of[static_cast<std::size_t>(col)])
                                   ? 1
                                   : 0);
            }
        }
        return bits;
    }

    // True when swapping u and v is an automorphism, i.e. they have the same
    // neighbors apart from each other.
    bool twins(int u, int v) const {
        VertexSet nu = g.adjacency(u);
        VertexSet nv = g.adjacency(v);
        nu.erase(v);
        nv.erase(u);
        return nu == nv;
    }

    void search(std::vector<int> color) {
        refine(g, color);
        std::vector<std::vector<int>> classes = classes_of(color);

        std::vector<int> orig_of;
        orig_of.reserve(static_cast<std::size_t>(n));
        int branch_class = -1;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].size() == 1) {
                orig_of.push_back(classes[c][0]);
            } else {
                branch_class = static_cast<int>(c);
                break;
            }
        }

        // Labels before the first non-singleton class are final, and their
        // bits form a prefix of the full string: prune when already worse
        // than the best known prefix.
        if (have_best && orig_of.size() >= 2) {
            Bits prefix = prefix_bits(orig_of, static_cast<int>(orig_of.size()));
            if (std::lexicographical_compare(best_bits.begin(),
                                             best_bits.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                             prefix.begin(), prefix.end())) {
                return;
            }
        }

        if (branch_class < 0) {
            Bits bits = prefix_bits(orig_of, n);
            if (!have_best || bits < best_bits) {
                have_best = true;
                best_bits = std::move(bits);
                best_label.assign(static_cast<std::size_t>(n), 0);
                for (int pos = 0; pos < n; ++pos) {
                    best_label[static_cast<std::size_t>(orig_of[static_cast<std::size_t>(pos)])] = pos;
                }
            }
            return;
        }

        const std::vector<int>& cell = classes[static_cast<std::size_t>(branch_class)];
        std::vector<int> tried;
        for (int v : cell) {
            bool redundant = false;
            for (int u : tried) {
                if (twins(u, v)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) {
                continue;
            }
            tried.push_back(v);
            std::vector<int> child(color.size());
            for (std::size_t w = 0; w < color.size(); ++w) {
                child[w] = 2 * color[w];
            }
            child[static_cast<std::size_t>(v)] -= 1;
            search(std::move(child));
        }
    }

    void run() {
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        search(std::move(color));
    }
};

struct ComponentCanon {
    int size = 0;
    Bits bits;
    int smallest = 0;
    std::vector<int> members;      // original vertices, ascending
    std::vector<int> local_label;  // local index -> canonical local label
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) {
        return {};
    }
    std::vector<ComponentCanon> comps;
    for (const VertexSet& comp : connected_components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        ConnectedCanon canon{sub.graph, sub.graph.vertex_count()};
        canon.run();
        ComponentCanon c;
        c.size = sub.graph.vertex_count();
        c.bits = std::move(canon.best_bits);
        c.members = std::move(sub.vertex_map);
        c.smallest = c.members.front();
        c.local_label = std::move(canon.best_label);
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(), [](const ComponentCanon& a, const ComponentCanon& b) {
        if (a.size != b.size) {
            return a.size < b.size;
        }
        if (a.bits != b.bits) {
            return a.bits < b.bits;
        }
        return a.smallest < b.smallest;
    });
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int offset = 0;
    for (const ComponentCanon& c : comps) {
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            label[static_cast<std::size_t>(c.members[i])] = offset + c.local_label[i];
        }
        offset += c.size;
    }
    return label;
}

Graph canonical_form(const Graph& g) {
    return relabeled(g, canonical_labeling(g));
}

std::string canonical_graph6(const Graph& g) {
    return graph6_encode(canonical_form(g));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
        return false;
    }
    return canonical_form(g) == canonical_form(h);
}

}  // namespace spectra
