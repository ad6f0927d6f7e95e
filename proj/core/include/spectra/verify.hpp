#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/mis.hpp"

namespace spectra {

/// Outcome of one named check: what was claimed and what was computed.
struct CheckReport {
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;

    std::string to_text() const;  // "[PASS] name params: expected=... actual=..."
    std::string to_json() const;
};

std::string reports_to_json(const std::vector<CheckReport>& reports);
bool all_pass(const std::vector<CheckReport>& reports);

/// Enumerated spectra of cycles and paths against the closed forms
/// Spec(C_n) = [ceil(n/3), floor(n/2)] and Spec(P_n) = [ceil(n/3),
/// ceil(n/2)], for 3 <= n <= n_max. Two reports per order.
std::vector<CheckReport> check_path_cycle_spectra(int n_max,
                                                  std::uint64_t cap = kDefaultMisCap);

/// Spectrum of a cycle of order n with one pendant leaf:
/// [ceil(n/3), floor(n/2) + 1].
CheckReport check_cycle_with_leaf(int n, std::uint64_t cap = kDefaultMisCap);

/// Order, girth and spectrum of decorated_cycle(g, t): order 2g+5t-7,
/// girth g, spectrum [g+2t-3, g+3t-4].
CheckReport check_decorated_cycle(int g, int t, std::uint64_t cap = kDefaultMisCap);

/// For an independent set I of G with |Spec(G)| = t: the graph G - N[I] and
/// each of its components land in classes of size at most t. Throws
/// std::invalid_argument when I is not independent.
CheckReport check_leftover(const Graph& g, const VertexSet& independent,
                           std::uint64_t cap = kDefaultMisCap);

/// Fixed small graphs with known spectra: a cycle of order 12 with pendant
/// leaves on two vertices at cycle distance c12_distance (spectrum
/// {4,...,8}); cycles of order 6t-5 with an attached path on five vertices
/// for t in {4,5} (spectrum [2t,3t]); a cycle of order 19 with pendant
/// leaves at cycle distance c19_distance (five spectrum sizes).
std::vector<CheckReport> check_component_spectra(int c12_distance = 6,
                                                 int c19_distance = 9,
                                                 std::uint64_t cap = kDefaultMisCap);

/// Raised when the witness construction cannot be completed or fails its own
/// validation; signals an input outside the construction's reach or a bug.
class WitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Constructive evidence that a graph with minimum degree >= 2 and girth
/// >= 6t+2 has more than t spectrum sizes: an independent set I whose
/// removal (with its neighborhood) leaves a path component with t+1 sizes.
struct LeftoverPathWitness {
    std::vector<int> cycle;     // a shortest cycle, in cyclic order
    VertexSet independent_set;  // I
    VertexSet leftover_path;    // vertices of the path component of G - N[I]
    int path_class = 0;         // spectrum sizes of that path
};

/// Builds the witness from the lexicographically smallest shortest cycle
/// v_1..v_s: the path P spans cycle positions 3..6t+1 (3..6t+2 when
/// s = 6t+3); I contains v_1, also v_{6t+3} when s >= 6t+4, and for every
/// vertex u off the cycle with a neighbor on P the smallest neighbor of u
/// that is neither on P nor adjacent to P. Validates independence of I and
/// that P survives as a path component of class >= t+1; throws WitnessError
/// otherwise. Preconditions (t >= 1, min degree >= 2, girth >= 6t+2) throw
/// std::invalid_argument.
LeftoverPathWitness leftover_path_witness(const Graph& g, int t,
                                          std::uint64_t cap = kDefaultMisCap);

/// Wraps leftover_path_witness into a report; WitnessError becomes a failed
/// check rather than an exception.
CheckReport check_leftover_path_witness(const Graph& g, int t,
                                        std::uint64_t cap = kDefaultMisCap);

}  // namespace spectra
