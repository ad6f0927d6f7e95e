#include "spectra/table.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parallel.hpp"
#include "spectra/canonical.hpp"
#include "spectra/families.hpp"
#include "spectra/graph6.hpp"
#include "spectra/mis.hpp"

namespace spectra {

namespace {

using nlohmann::ordered_json;

void require_cell(int t, int girth, int n_max) {
    if (t < 1) {
        throw std::invalid_argument("table cell: class size must be at least 1");
    }
    if (girth < 3) {
        throw std::invalid_argument("table cell: girth must be at least 3");
    }
    if (n_max < girth) {
        throw std::invalid_argument("table cell: order bound is below the girth");
    }
}

/// Canonical keys of the batch members with exactly the cell's girth and
/// class size, in batch order. Degree and connectivity are the caller's
/// business.
std::vector<std::string> cell_members(const std::vector<Graph>& batch, int t,
                                      int cell_girth, const SearchLimits& limits) {
    std::vector<char> in_cell(batch.size(), 0);
    std::vector<std::string> keys(batch.size());
    detail::parallel_for(batch.size(), limits.workers, [&](std::size_t i) {
        const Graph& g = batch[i];
        if (girth(g) != cell_girth) {
            return;
        }
        if (classify(g, limits.max_mis).class_size != t) {
            return;
        }
        in_cell[i] = 1;
        keys[i] = canonical_graph6(g);
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (in_cell[i]) {
            out.push_back(std::move(keys[i]));
        }
    }
    return out;
}

/// All connected graphs with min degree >= 2 and girth >= cell_girth of one
/// given order. Any graph with min degree >= 2 contains a cycle, so orders
/// below cell_girth cannot produce candidates.
std::vector<Graph> candidates_of_order(int n, int cell_girth,
                                       const SearchLimits& limits) {
    GenSpec spec;
    spec.n = n;
    spec.min_degree = 2;
    spec.min_girth = cell_girth;
    spec.connected_only = true;
    spec.allow_acyclic = false;
    return generate_all(spec, limits);
}

bool entry_consistent(const TableEntry& e, const std::vector<std::string>& found,
                      int n_max) {
    switch (e.kind) {
        case TableEntry::Kind::Empty:
            return found.empty();
        case TableEntry::Kind::UniqueCycle:
            if (n_max < e.cycle_order) {
                return found.empty();
            }
            return found.size() == 1 &&
                   found.front() == canonical_graph6(cycle_graph(e.cycle_order));
        case TableEntry::Kind::Exists:
        case TableEntry::Kind::NotCovered:
            return true;  // a bounded search cannot refute these
    }
    return false;
}

ordered_json entry_json(const TableEntry& e) {
    ordered_json j;
    switch (e.kind) {
        case TableEntry::Kind::UniqueCycle:
            j["kind"] = "unique-cycle";
            j["cycle_order"] = e.cycle_order;
            break;
        case TableEntry::Kind::Empty:
            j["kind"] = "empty";
            break;
        case TableEntry::Kind::Exists:
            j["kind"] = "exists";
            break;
        case TableEntry::Kind::NotCovered:
            j["kind"] = "open";
            break;
    }
    return j;
}

}  // namespace

std::string TableEntry::to_string() const {
    switch (kind) {
        case Kind::UniqueCycle:
            return "C_" + std::to_string(cycle_order);
        case Kind::Empty:
            return "empty";
        case Kind::Exists:
            return "exists";
        case Kind::NotCovered:
            return "open";
    }
    return "?";
}

TableEntry table_entry(int t, int girth) {
    if (t < 1) {
        throw std::invalid_argument("table_entry: class size must be at least 1");
    }
    if (girth < 3) {
        throw std::invalid_argument("table_entry: girth must be at least 3");
    }
    auto unique_cycle = [](int k) {
        return TableEntry{TableEntry::Kind::UniqueCycle, k};
    };
    TableEntry empty{TableEntry::Kind::Empty, 0};
    TableEntry exists{TableEntry::Kind::Exists, 0};

    if (girth >= 6 * t + 2) {
        return empty;
    }
    if (girth == 6 * t + 1) {
        return unique_cycle(girth);
    }
    if (girth == 6 * t) {
        return empty;
    }
    if (girth >= 6 * t - 4) {
        // girth 6t-4 .. 6t-1: the cycle, except that small well-covered
        // graphs of girths 3..5 abound.
        return t == 1 ? exists : unique_cycle(girth);
    }
    if (girth == 6 * t - 5) {
        return t <= 3 ? exists : empty;
    }
    if (girth == 6 * t - 6) {
        return t == 2 ? exists : unique_cycle(girth);
    }
    return TableEntry{TableEntry::Kind::NotCovered, 0};
}

std::string TableCellReport::to_text() const {
    std::string line = consistent ? "[PASS] " : "[FAIL] ";
    line += "table-cell t=" + std::to_string(t) + " girth=" + std::to_string(girth) +
            " n_max=" + std::to_string(n_max) + ": expected=" + expected.to_string() +
            " found=";
    if (found.empty()) {
        line += "none";
    } else {
        for (std::size_t i = 0; i < found.size(); ++i) {
            line += (i == 0 ? "" : ",") + found[i];
        }
    }
    return line;
}

std::string TableCellReport::to_json() const {
    ordered_json j;
    j["t"] = t;
    j["girth"] = girth;
    j["n_max"] = n_max;
    j["expected"] = entry_json(expected);
    j["found"] = found;
    j["consistent"] = consistent;
    return j.dump();
}

TableCellReport verify_table_cell(int t, int girth, int n_max,
                                  const SearchLimits& limits) {
    require_cell(t, girth, n_max);
    TableCellReport report;
    report.t = t;
    report.girth = girth;
    report.n_max = n_max;
    report.expected = table_entry(t, girth);
    for (int n = girth; n <= n_max; ++n) {
        std::vector<Graph> batch = candidates_of_order(n, girth, limits);
        std::vector<std::string> members = cell_members(batch, t, girth, limits);
        report.found.insert(report.found.end(), members.begin(), members.end());
    }
    report.consistent = entry_consistent(report.expected, report.found, n_max);
    return report;
}

TableCellReport verify_table_cell(int t, int girth, int n_max, std::istream& input,
                                  const SearchLimits& limits) {
    require_cell(t, girth, n_max);
    TableCellReport report;
    report.t = t;
    report.girth = girth;
    report.n_max = n_max;
    report.expected = table_entry(t, girth);

    std::vector<Graph> batch;
    read_graph6_stream(
        input,
        [&](std::size_t, Graph g) {
            if (g.vertex_count() > n_max || min_degree(g) < 2 || !is_connected(g)) {
                return;
            }
            batch.push_back(std::move(g));
        },
        [](std::size_t, const std::string&) {}, /*strict=*/true);

    std::vector<std::string> keys(batch.size());
    detail::parallel_for(batch.size(), limits.workers,
                         [&](std::size_t i) { keys[i] = canonical_graph6(batch[i]); });
    std::vector<Graph> unique;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (seen.insert(keys[i]).second) {
            unique.push_back(std::move(batch[i]));
        }
    }

    report.found = cell_members(unique, t, girth, limits);
    report.consistent = entry_consistent(report.expected, report.found, n_max);
    return report;
}

std::vector<std::string> hunt_delta(int t, int girth, int n_max,
                                    const SearchLimits& limits) {
    require_cell(t, girth, n_max);
    std::vector<std::string> out;
    for (int n = girth; n <= n_max; ++n) {
        std::vector<Graph> batch = candidates_of_order(n, girth, limits);
        std::erase_if(batch, [](const Graph& g) { return is_cycle_graph(g); });
        std::vector<std::string> members = cell_members(batch, t, girth, limits);
        out.insert(out.end(), members.begin(), members.end());
    }
    return out;
}

}  // namespace spectra
