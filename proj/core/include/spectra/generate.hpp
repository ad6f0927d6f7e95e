#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/mis.hpp"

namespace spectra {

/// Constraints for exhaustive generation. min_girth bounds every cycle from
/// below (3 leaves cycles unconstrained); allow_acyclic controls whether
/// graphs with no cycle at all are yielded.
struct GenSpec {
    int n = 1;
    int min_degree = 0;
    int min_girth = 3;
    bool connected_only = false;
    bool allow_acyclic = true;
};

struct SearchLimits {
    std::uint64_t max_nodes = 10'000'000;  // canonical-form evaluations
    std::uint64_t max_mis = kDefaultMisCap;
    unsigned workers = 1;
};

class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("generation exceeded node budget of " +
                             std::to_string(budget)) {}
};

/// Yields exactly one representative per isomorphism class matching spec, in
/// a deterministic order independent of the worker count. Graphs are grown
/// edge by edge; an edge is admissible when the distance between its ends
/// keeps every new cycle at min_girth or longer, and candidates are merged
/// level by level under canonical-form deduplication. Degree and
/// connectivity constraints apply to finished graphs only. Throws
/// SearchBudgetExceeded when limits.max_nodes canonical forms have been
/// evaluated.
void generate_graphs(const GenSpec& spec,
                     const std::function<void(const Graph&)>& yield,
                     const SearchLimits& limits = {});

std::vector<Graph> generate_all(const GenSpec& spec, const SearchLimits& limits = {});

}  // namespace spectra
