#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

/// Set of vertex indices drawn from a fixed universe 0..universe()-1.
/// Backed by a bitset; binary set operations require both operands to share
/// the same universe and throw std::invalid_argument otherwise.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int count() const;
    bool empty() const;
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    void clear();

    /// Smallest member, or -1 when the set is empty.
    int first() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }
    VertexSet complement() const;

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

    /// Orders sets by their sorted member lists, lexicographically.
    /// {0,2} precedes {0,3}, {65} precedes {65,66}; never reflexive.
    bool precedes(const VertexSet& o) const;

    std::vector<int> to_vector() const;
    std::string to_string() const;  // "{0,2,5}"

    class const_iterator {
    public:
        using value_type = int;
        int operator*() const;
        const_iterator& operator++();
        bool operator==(const const_iterator& o) const {
            return word_ == o.word_ && bits_ == o.bits_;
        }
        bool operator!=(const const_iterator& o) const { return !(*this == o); }

    private:
        friend class VertexSet;
        const_iterator(const std::vector<std::uint64_t>* words, std::size_t word,
                       std::uint64_t bits)
            : words_(words), word_(word), bits_(bits) {}
        void settle();
        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t word_ = 0;
        std::uint64_t bits_ = 0;
    };
    const_iterator begin() const;
    const_iterator end() const;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;

    void require_same_universe(const VertexSet& o) const;
    void require_member_range(int v) const;
};

/// Finite simple graph on vertices 0..n-1. Immutable after construction;
/// the adjacency structure is symmetric, irreflexive and range-checked.
class Graph {
public:
    Graph() = default;  // the empty graph on zero vertices
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    const VertexSet& adjacency(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Labeled equality: same order and same adjacency.
    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

/// Girth as the length of a shortest cycle; empty when the graph is acyclic.
using GirthResult = std::optional<int>;

struct InducedSubgraph {
    Graph graph;
    /// vertex_map[new_index] = original index; strictly increasing.
    std::vector<int> vertex_map;
};

/// Minimum degree; 0 for the empty graph.
int min_degree(const Graph& g);

bool is_leaf(const Graph& g, int v);

/// Vertices adjacent to at least one leaf.
VertexSet support_vertices(const Graph& g);

VertexSet closed_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Induced subgraph on V - N[s], with the order-preserving vertex map.
InducedSubgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// BFS distance from u to the nearest member of targets; empty when
/// unreachable. Throws std::invalid_argument when targets is empty.
std::optional<int> distance_to_set(const Graph& g, int u, const VertexSet& targets);

/// Exact shortest-cycle length via BFS from every vertex.
GirthResult girth(const Graph& g);

/// One shortest cycle as a vertex sequence in cyclic order, or empty when the
/// graph is acyclic. Deterministic: the lexicographically smallest sequence
/// whose start is its smallest vertex and whose second element is smaller
/// than its last.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// True when g is a path on one or more vertices.
bool is_path_graph(const Graph& g);

/// True when g is a cycle (connected and 2-regular).
bool is_cycle_graph(const Graph& g);

/// Relabels vertices: vertex v becomes new_label_of[v]. The map must be a
/// permutation of 0..n-1.
Graph relabeled(const Graph& g, const std::vector<int>& new_label_of);

}  // namespace spectra
