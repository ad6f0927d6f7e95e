#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

/// Default hard cap on the number of maximal independent sets visited before
/// enumeration aborts.
inline constexpr std::uint64_t kDefaultMisCap = 100'000'000;

class MisCapExceeded : public std::runtime_error {
public:
    explicit MisCapExceeded(std::uint64_t cap)
        : std::runtime_error("maximal independent set enumeration exceeded cap of " +
                             std::to_string(cap)) {}
};

/// Set of maximal-independent-set cardinalities of a graph.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<int> sizes);
    static Spectrum interval(int lo, int hi);  // {lo, lo+1, ..., hi}

    const std::vector<int>& sizes() const { return sizes_; }
    bool empty() const { return sizes_.empty(); }
    int count() const { return static_cast<int>(sizes_.size()); }
    int min() const;
    int max() const;
    bool contains(int size) const;
    bool is_interval() const;
    bool operator==(const Spectrum& o) const = default;

    std::string to_string() const;  // "{3,4}"

private:
    std::vector<int> sizes_;  // sorted, distinct
};

struct ClassReport {
    Spectrum spectrum;
    int class_size = 0;  // number of distinct cardinalities
    GirthResult girth;
    int min_degree = 0;
    bool leafless = false;  // no degree-1 vertex and min degree >= 2 (n >= 1)
    std::uint64_t mis_count = 0;
};

namespace detail {

template <class Visitor>
class MisEnumerator {
public:
    MisEnumerator(const Graph& g, Visitor& visit, std::uint64_t cap)
        : g_(g), visit_(visit), cap_(cap), current_(g.vertex_count()) {}

    void run() {
        recurse(VertexSet::full(g_.vertex_count()), VertexSet(g_.vertex_count()));
    }

private:
    // Binary branching on the smallest candidate, include-branch first, so
    // sets come out in lexicographic order of their sorted members. P holds
    // vertices addable to the current set, X vertices excluded by an earlier
    // branch but still addable; a maximal set is reached exactly when both
    // are empty. A branch dies when some excluded vertex can no longer be
    // dominated.
    void recurse(VertexSet candidates, VertexSet excluded) {
        if (candidates.empty()) {
            if (excluded.empty()) {
                if (++emitted_ > cap_) {
                    throw MisCapExceeded(cap_);
                }
                visit_(static_cast<const VertexSet&>(current_));
            }
            return;
        }
        for (int x : excluded) {
            if (!g_.adjacency(x).intersects(candidates)) {
                return;
            }
        }
        int v = candidates.first();
        {
            VertexSet next_candidates = candidates;
            next_candidates.erase(v);
            next_candidates -= g_.adjacency(v);
            VertexSet next_excluded = excluded;
            next_excluded -= g_.adjacency(v);
            current_.insert(v);
            recurse(std::move(next_candidates), std::move(next_excluded));
            current_.erase(v);
        }
        candidates.erase(v);
        excluded.insert(v);
        recurse(std::move(candidates), std::move(excluded));
    }

    const Graph& g_;
    Visitor& visit_;
    std::uint64_t cap_;
    std::uint64_t emitted_ = 0;
    VertexSet current_;
};

}  // namespace detail

/// Visits every maximal independent set exactly once, in lexicographic order
/// of sorted membership, without materializing the collection. Throws
/// MisCapExceeded after cap sets.
template <class Visitor>
void for_each_mis(const Graph& g, Visitor&& visit, std::uint64_t cap = kDefaultMisCap) {
    detail::MisEnumerator<Visitor> enumerator(g, visit, cap);
    enumerator.run();
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                std::uint64_t cap = kDefaultMisCap);

/// Count of maximal independent sets per cardinality.
std::map<int, std::uint64_t> mis_size_histogram(const Graph& g,
                                                std::uint64_t cap = kDefaultMisCap);

std::uint64_t mis_count(const Graph& g, std::uint64_t cap = kDefaultMisCap);

Spectrum spectrum(const Graph& g, std::uint64_t cap = kDefaultMisCap);

ClassReport classify(const Graph& g, std::uint64_t cap = kDefaultMisCap);

}  // namespace spectra
