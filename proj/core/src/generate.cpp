#include "spectra/generate.hpp"

#include <atomic>
#include <deque>
#include <unordered_set>
#include <utility>

#include "parallel.hpp"
#include "spectra/canonical.hpp"
#include "spectra/graph6.hpp"

namespace spectra {

namespace {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(
        static_cast<std::size_t>(n),
        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& row = dist[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adjacency(u)) {
                if (row[static_cast<std::size_t>(v)] < 0) {
                    row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

class Generator {
public:
    Generator(const GenSpec& spec, const std::function<void(const Graph&)>& yield,
              const SearchLimits& limits)
        : spec_(spec), yield_(yield), limits_(limits) {}

    void run() {
        Graph empty(spec_.n);
        charge(1);
        consider(empty);
        std::vector<std::string> level{canonical_graph6(empty)};
        while (!level.empty()) {
            std::vector<std::vector<std::string>> children(level.size());
            detail::parallel_for(level.size(), limits_.workers, [&](std::size_t i) {
                children[i] = expand(graph6_decode(level[i]));
            });
            std::unordered_set<std::string> seen;
            std::vector<std::string> next;
            for (std::vector<std::string>& batch : children) {
                for (std::string& key : batch) {
                    if (seen.insert(key).second) {
                        next.push_back(std::move(key));
                    }
                }
            }
            for (const std::string& key : next) {
                consider(graph6_decode(key));
            }
            level = std::move(next);
        }
    }

private:
    void charge(std::uint64_t amount) {
        if (used_.fetch_add(amount) + amount > limits_.max_nodes) {
            throw SearchBudgetExceeded(limits_.max_nodes);
        }
    }

    // An edge is admissible when the shortest cycle it would create, namely
    // dist(u,v)+1, respects min_girth; unreachable pairs always are.
    bool admissible(const std::vector<std::vector<int>>& dist, const Graph& g,
                    int u, int v) const {
        if (g.adjacent(u, v)) {
            return false;
        }
        int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        return d < 0 || d + 1 >= spec_.min_girth;
    }

    std::vector<std::string> expand(const Graph& parent) {
        int n = parent.vertex_count();
        std::vector<std::vector<int>> dist = all_pairs_distances(parent);

        // Distances only shrink as edges arrive, so a vertex short of
        // min_degree with no admissible partner now can never be repaired:
        // the whole subtree is barren.
        if (spec_.min_degree > 0) {
            for (int w = 0; w < n; ++w) {
                if (parent.degree(w) >= spec_.min_degree) {
                    continue;
                }
                bool fixable = false;
                for (int x = 0; x < n && !fixable; ++x) {
                    fixable = x != w && admissible(dist, parent, w, x);
                }
                if (!fixable) {
                    return {};
                }
            }
        }

        std::vector<std::pair<int, int>> base = parent.edges();
        std::vector<std::string> out;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!admissible(dist, parent, u, v)) {
                    continue;
                }
                charge(1);
                base.emplace_back(u, v);
                out.push_back(canonical_graph6(Graph(n, base)));
                base.pop_back();
            }
        }
        return out;
    }

    void consider(const Graph& g) {
        if (min_degree(g) < spec_.min_degree) {
            return;
        }
        if (spec_.connected_only && !is_connected(g)) {
            return;
        }
        if (!girth(g) && !spec_.allow_acyclic) {
            return;
        }
        yield_(g);
    }

    const GenSpec& spec_;
    const std::function<void(const Graph&)>& yield_;
    const SearchLimits& limits_;
    std::atomic<std::uint64_t> used_{0};
};

}  // namespace

void generate_graphs(const GenSpec& spec,
                     const std::function<void(const Graph&)>& yield,
                     const SearchLimits& limits) {
    if (spec.n < 1) {
        throw std::invalid_argument("generate_graphs: order must be at least 1");
    }
    if (spec.min_degree < 0) {
        throw std::invalid_argument("generate_graphs: negative minimum degree");
    }
    if (spec.min_girth < 3) {
        throw std::invalid_argument("generate_graphs: minimum girth must be at least 3");
    }
    if (spec.min_degree >= spec.n) {
        return;  // no simple graph on n vertices reaches this degree
    }
    Generator(spec, yield, limits).run();
}

std::vector<Graph> generate_all(const GenSpec& spec, const SearchLimits& limits) {
    std::vector<Graph> out;
    generate_graphs(spec, [&](const Graph& g) { out.push_back(g); }, limits);
    return out;
}

}  // namespace spectra
