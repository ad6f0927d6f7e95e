#include "spectra/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <stdexcept>

namespace spectra {

namespace {

std::size_t words_for(int universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) {
        throw std::invalid_argument("VertexSet: negative universe");
    }
    words_.assign(words_for(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
    for (int v : members) {
        insert(v);
    }
}

VertexSet::VertexSet(int universe, const std::vector<int>& members)
    : VertexSet(universe) {
    for (int v : members) {
        insert(v);
    }
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        s.words_[w] = ~std::uint64_t{0};
    }
    int spare = static_cast<int>(s.words_.size()) * 64 - universe;
    if (spare > 0 && !s.words_.empty()) {
        s.words_.back() >>= spare;
    }
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) {
        return false;
    }
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
}

void VertexSet::insert(int v) {
    require_member_range(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
    require_member_range(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void VertexSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

int VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        }
    }
    return -1;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= o.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= o.words_[w];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~o.words_[w];
    }
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r = full(universe_);
    r -= *this;
    return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & o.words_[w]) {
            return true;
        }
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~o.words_[w]) {
            return false;
        }
    }
    return true;
}

bool VertexSet::precedes(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t diff = words_[w] ^ o.words_[w];
        if (diff == 0) {
            continue;
        }
        // The set holding the smallest differing element comes first, unless
        // the other set has nothing beyond that point: then it is a strict
        // prefix of the sorted member list and comes first instead.
        std::uint64_t low = diff & (~diff + 1);
        bool mine = (words_[w] & low) != 0;
        const std::vector<std::uint64_t>& rest = mine ? o.words_ : words_;
        std::uint64_t beyond = rest[w] & ~((low << 1) - 1);
        for (std::size_t upper = w + 1; beyond == 0 && upper < rest.size(); ++upper) {
            beyond |= rest[upper];
        }
        return mine == (beyond != 0);
    }
    return false;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) {
        out.push_back(v);
    }
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (int v : *this) {
        if (!first_member) {
            out += ",";
        }
        out += std::to_string(v);
        first_member = false;
    }
    out += "}";
    return out;
}

void VertexSet::require_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) {
        throw std::invalid_argument("VertexSet: universe mismatch (" +
                                    std::to_string(universe_) + " vs " +
                                    std::to_string(o.universe_) + ")");
    }
}

void VertexSet::require_member_range(int v) const {
    if (v < 0 || v >= universe_) {
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                " outside universe of size " +
                                std::to_string(universe_));
    }
}

int VertexSet::const_iterator::operator*() const {
    return static_cast<int>(word_ * 64 + std::countr_zero(bits_));
}

VertexSet::const_iterator& VertexSet::const_iterator::operator++() {
    bits_ &= bits_ - 1;
    settle();
    return *this;
}

void VertexSet::const_iterator::settle() {
    while (bits_ == 0 && word_ + 1 < words_->size()) {
        ++word_;
        bits_ = (*words_)[word_];
    }
    if (bits_ == 0) {
        word_ = words_->size();
    }
}

VertexSet::const_iterator VertexSet::begin() const {
    const_iterator it(&words_, 0, words_.empty() ? 0 : words_[0]);
    it.settle();
    return it;
}

VertexSet::const_iterator VertexSet::end() const {
    return const_iterator(&words_, words_.size(), 0);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("Graph: negative order");
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("Graph: edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("Graph: self-loop on vertex " +
                                        std::to_string(u));
        }
        if (!adj_[static_cast<std::size_t>(u)].contains(v)) {
            adj_[static_cast<std::size_t>(u)].insert(v);
            adj_[static_cast<std::size_t>(v)].insert(u);
            ++edge_count_;
        }
    }
}

const VertexSet& Graph::adjacency(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                " outside order " + std::to_string(n_));
    }
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    return adjacency(u).contains(v);
}

int Graph::degree(int v) const {
    return adjacency(v).count();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

int min_degree(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) {
        return 0;
    }
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

bool is_leaf(const Graph& g, int v) {
    return g.degree(v) == 1;
}

VertexSet support_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (is_leaf(g, v)) {
            out.insert(g.adjacency(v).first());
        }
    }
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet out = g.adjacency(v);
    out.insert(v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("closed_neighborhood: set universe differs from graph order");
    }
    VertexSet out = s;
    for (int v : s) {
        out |= g.adjacency(v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.vertex_count()) {
        throw std::invalid_argument("induced_subgraph: set universe differs from graph order");
    }
    std::vector<int> vertex_map = keep.to_vector();
    std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertex_map.size(); ++i) {
        new_index[static_cast<std::size_t>(vertex_map[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep) {
        for (int v : g.adjacency(u)) {
            if (u < v && keep.contains(v)) {
                edges.emplace_back(new_index[static_cast<std::size_t>(u)],
                                   new_index[static_cast<std::size_t>(v)]);
            }
        }
    }
    return {Graph(static_cast<int>(vertex_map.size()), edges), std::move(vertex_map)};
}

InducedSubgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet removed = closed_neighborhood(g, s);
    return induced_subgraph(g, removed.complement());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        VertexSet comp(n);
        std::deque<int> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.insert(u);
            for (int v : g.adjacency(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::optional<int> distance_to_set(const Graph& g, int u, const VertexSet& targets) {
    if (targets.universe() != g.vertex_count()) {
        throw std::invalid_argument("distance_to_set: set universe differs from graph order");
    }
    if (targets.empty()) {
        throw std::invalid_argument("distance_to_set: empty target set");
    }
    if (u < 0 || u >= g.vertex_count()) {
        throw std::out_of_range("distance_to_set: source outside graph");
    }
    if (targets.contains(u)) {
        return 0;
    }
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(u)] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.adjacency(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                if (targets.contains(y)) {
                    return dist[static_cast<std::size_t>(y)];
                }
                queue.push_back(y);
            }
        }
    }
    return std::nullopt;
}

GirthResult girth(const Graph& g) {
    int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            // Any cycle discovered through u has length at least 2*dist[u].
            if (best != std::numeric_limits<int>::max() &&
                2 * dist[static_cast<std::size_t>(u)] >= best) {
                break;
            }
            for (int v : g.adjacency(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                              dist[static_cast<std::size_t>(v)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best;
}

namespace {

// Depth-first search for a cycle of length exactly target through start,
// visiting only vertices > start, trying neighbors in ascending order. The
// first complete cycle found is the lexicographically smallest one. dist
// holds BFS distances to start within the allowed vertex set, used to prune
// branches that cannot close in time.
bool lex_cycle_dfs(const Graph& g, int start, int target, std::vector<int>& path,
                   std::vector<char>& used, const std::vector<int>& dist) {
    int current = path.back();
    int length = static_cast<int>(path.size());
    if (length == target) {
        return g.adjacent(current, start);
    }
    for (int next : g.adjacency(current)) {
        if (next <= start || used[static_cast<std::size_t>(next)]) {
            continue;
        }
        // After next the path holds length+1 vertices and may grow by
        // target-length-1 more; the last must be adjacent to start, so next
        // must sit within distance target-length of start.
        int d = dist[static_cast<std::size_t>(next)];
        if (d < 0 || d > target - length) {
            continue;
        }
        used[static_cast<std::size_t>(next)] = 1;
        path.push_back(next);
        if (lex_cycle_dfs(g, start, target, path, used, dist)) {
            return true;
        }
        path.pop_back();
        used[static_cast<std::size_t>(next)] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    GirthResult glen = girth(g);
    if (!glen) {
        return std::nullopt;
    }
    int n = g.vertex_count();
    for (int start = 0; start < n; ++start) {
        // BFS distances to start over the subgraph induced on {v >= start}.
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adjacency(u)) {
                if (v >= start && dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        std::vector<int> path{start};
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(start)] = 1;
        if (lex_cycle_dfs(g, start, *glen, path, used, dist)) {
            return path;
        }
    }
    return std::nullopt;  // unreachable for cyclic graphs
}

bool is_independent(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw std::invalid_argument("is_independent: set universe differs from graph order");
    }
    for (int v : s) {
        if (g.adjacency(v).intersects(s)) {
            return false;
        }
    }
    return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) {
        return false;
    }
    return closed_neighborhood(g, s) == VertexSet::full(g.vertex_count());
}

bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) {
        return false;
    }
    if (g.edge_count() != static_cast<std::size_t>(n) - 1) {
        return false;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) {
            return false;
        }
    }
    return is_connected(g);
}

bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) {
        return false;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) {
            return false;
        }
    }
    return is_connected(g);
}

Graph relabeled(const Graph& g, const std::vector<int>& new_label_of) {
    int n = g.vertex_count();
    if (static_cast<int>(new_label_of.size()) != n) {
        throw std::invalid_argument("relabeled: map size differs from order");
    }
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int img : new_label_of) {
        if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) {
            throw std::invalid_argument("relabeled: map is not a permutation");
        }
        hit[static_cast<std::size_t>(img)] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(new_label_of[static_cast<std::size_t>(u)],
                           new_label_of[static_cast<std::size_t>(v)]);
    }
    return Graph(n, edges);
}

}  // namespace spectra
