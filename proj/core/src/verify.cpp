#include "spectra/verify.hpp"

#include <algorithm>

#include "json.hpp"
#include "spectra/families.hpp"

namespace spectra {

namespace {

using nlohmann::ordered_json;

int ceil_div(int a, int b) {
    return (a + b - 1) / b;
}

ordered_json report_json(const CheckReport& r) {
    return ordered_json{{"name", r.name},
                        {"params", r.params},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"pass", r.pass}};
}

CheckReport spectrum_report(std::string name, std::string params,
                            const Spectrum& expected, const Spectrum& actual) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.expected = expected.to_string();
    r.actual = actual.to_string();
    r.pass = expected == actual;
    return r;
}

}  // namespace

std::string CheckReport::to_text() const {
    std::string out = pass ? "[PASS] " : "[FAIL] ";
    out += name;
    if (!params.empty()) {
        out += " " + params;
    }
    out += ": expected=" + expected + " actual=" + actual;
    return out;
}

std::string CheckReport::to_json() const {
    return report_json(*this).dump();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const CheckReport& r : reports) {
        arr.push_back(report_json(r));
    }
    return arr.dump();
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.pass; });
}

std::vector<CheckReport> check_path_cycle_spectra(int n_max, std::uint64_t cap) {
    if (n_max < 3) {
        throw std::invalid_argument("check_path_cycle_spectra: n_max must be at least 3");
    }
    std::vector<CheckReport> reports;
    for (int n = 3; n <= n_max; ++n) {
        reports.push_back(spectrum_report("cycle-spectrum", "n=" + std::to_string(n),
                                          Spectrum::interval(ceil_div(n, 3), n / 2),
                                          spectrum(cycle_graph(n), cap)));
        reports.push_back(spectrum_report("path-spectrum", "n=" + std::to_string(n),
                                          Spectrum::interval(ceil_div(n, 3), ceil_div(n, 2)),
                                          spectrum(path_graph(n), cap)));
    }
    return reports;
}

CheckReport check_cycle_with_leaf(int n, std::uint64_t cap) {
    if (n < 3) {
        throw std::invalid_argument("check_cycle_with_leaf: order must be at least 3");
    }
    return spectrum_report("cycle-with-leaf", "n=" + std::to_string(n),
                           Spectrum::interval(ceil_div(n, 3), n / 2 + 1),
                           spectrum(attach_leaf(cycle_graph(n), 0), cap));
}

CheckReport check_decorated_cycle(int g, int t, std::uint64_t cap) {
    Graph h = decorated_cycle(g, t);
    int expected_order = 2 * g + 5 * t - 7;
    Spectrum expected_spectrum = Spectrum::interval(g + 2 * t - 3, g + 3 * t - 4);
    GirthResult gr = girth(h);
    Spectrum actual_spectrum = spectrum(h, cap);

    CheckReport r;
    r.name = "decorated-cycle";
    r.params = "g=" + std::to_string(g) + " t=" + std::to_string(t);
    r.expected = "order=" + std::to_string(expected_order) + " girth=" + std::to_string(g) +
                 " spectrum=" + expected_spectrum.to_string();
    r.actual = "order=" + std::to_string(h.vertex_count()) +
               " girth=" + (gr ? std::to_string(*gr) : "acyclic") +
               " spectrum=" + actual_spectrum.to_string();
    r.pass = h.vertex_count() == expected_order && gr && *gr == g &&
             actual_spectrum == expected_spectrum;
    return r;
}

CheckReport check_leftover(const Graph& g, const VertexSet& independent,
                           std::uint64_t cap) {
    if (!is_independent(g, independent)) {
        throw std::invalid_argument("check_leftover: set is not independent");
    }
    int t = spectrum(g, cap).count();
    InducedSubgraph leftover = remove_closed_neighborhood(g, independent);
    int leftover_class = spectrum(leftover.graph, cap).count();
    std::vector<int> component_classes;
    for (const VertexSet& comp : connected_components(leftover.graph)) {
        component_classes.push_back(
            spectrum(induced_subgraph(leftover.graph, comp).graph, cap).count());
    }

    CheckReport r;
    r.name = "leftover";
    r.params = "n=" + std::to_string(g.vertex_count()) + " I=" + independent.to_string();
    r.expected = "all component classes and the leftover class at most t=" + std::to_string(t);
    std::string classes = "[";
    for (std::size_t i = 0; i < component_classes.size(); ++i) {
        if (i > 0) {
            classes += ",";
        }
        classes += std::to_string(component_classes[i]);
    }
    classes += "]";
    r.actual = "leftover=" + std::to_string(leftover_class) + " components=" + classes;
    r.pass = leftover_class <= t &&
             std::all_of(component_classes.begin(), component_classes.end(),
                         [&](int k) { return k <= t; });
    return r;
}

std::vector<CheckReport> check_component_spectra(int c12_distance, int c19_distance,
                                                 std::uint64_t cap) {
    if (c12_distance < 1 || c12_distance > 6) {
        throw std::invalid_argument("check_component_spectra: cycle-12 distance must be 1..6");
    }
    if (c19_distance < 1 || c19_distance > 9) {
        throw std::invalid_argument("check_component_spectra: cycle-19 distance must be 1..9");
    }
    std::vector<CheckReport> reports;

    Graph two_leaf_12 = attach_leaf(attach_leaf(cycle_graph(12), 0), c12_distance);
    reports.push_back(spectrum_report("two-leaf-cycle12",
                                      "distance=" + std::to_string(c12_distance),
                                      Spectrum::interval(4, 8), spectrum(two_leaf_12, cap)));

    for (int t : {4, 5}) {
        int n = 6 * t - 5;
        reports.push_back(spectrum_report(
            "cycle-plus-path", "t=" + std::to_string(t) + " n=" + std::to_string(n),
            Spectrum::interval(2 * t, 3 * t),
            spectrum(attach_path(cycle_graph(n), 0, 5), cap)));
    }

    Graph two_leaf_19 = attach_leaf(attach_leaf(cycle_graph(19), 0), c19_distance);
    Spectrum s19 = spectrum(two_leaf_19, cap);
    CheckReport r;
    r.name = "two-leaf-cycle19";
    r.params = "distance=" + std::to_string(c19_distance);
    r.expected = "5 spectrum sizes";
    r.actual = s19.to_string() + " (" + std::to_string(s19.count()) + " sizes)";
    r.pass = s19.count() == 5;
    reports.push_back(std::move(r));

    return reports;
}

LeftoverPathWitness leftover_path_witness(const Graph& g, int t, std::uint64_t cap) {
    if (t < 1) {
        throw std::invalid_argument("leftover_path_witness: t must be at least 1");
    }
    if (min_degree(g) < 2) {
        throw std::invalid_argument("leftover_path_witness: minimum degree below 2");
    }
    GirthResult gr = girth(g);
    if (!gr || *gr < 6 * t + 2) {
        throw std::invalid_argument("leftover_path_witness: girth below 6t+2");
    }

    int n = g.vertex_count();
    std::optional<std::vector<int>> cyc_found = shortest_cycle(g);
    if (!cyc_found) {
        throw WitnessError("no shortest cycle found despite finite girth");
    }
    std::vector<int> cyc = std::move(*cyc_found);
    int s = static_cast<int>(cyc.size());

    VertexSet on_cycle(n, cyc);
    // Path positions are 0-based along cyc: v_k sits at index k-1.
    int path_last = (s == 6 * t + 3) ? 6 * t + 1 : 6 * t;
    VertexSet path(n);
    for (int pos = 2; pos <= path_last; ++pos) {
        path.insert(cyc[static_cast<std::size_t>(pos)]);
    }

    VertexSet chosen(n);
    chosen.insert(cyc[0]);
    if (s >= 6 * t + 4) {
        chosen.insert(cyc[static_cast<std::size_t>(6 * t + 2)]);
    }
    for (int u = 0; u < n; ++u) {
        if (on_cycle.contains(u) || !g.adjacency(u).intersects(path)) {
            continue;
        }
        int pick = -1;
        for (int w : g.adjacency(u)) {
            if (!path.contains(w) && !g.adjacency(w).intersects(path)) {
                pick = w;
                break;
            }
        }
        if (pick < 0) {
            throw WitnessError("no eligible second neighbor for vertex " + std::to_string(u));
        }
        chosen.insert(pick);
    }

    if (!is_independent(g, chosen)) {
        throw WitnessError("constructed set " + chosen.to_string() + " is not independent");
    }

    InducedSubgraph leftover = remove_closed_neighborhood(g, chosen);
    bool found = false;
    int path_class = 0;
    for (const VertexSet& comp : connected_components(leftover.graph)) {
        VertexSet original(n);
        for (int v : comp) {
            original.insert(leftover.vertex_map[static_cast<std::size_t>(v)]);
        }
        if (original == path) {
            InducedSubgraph piece = induced_subgraph(leftover.graph, comp);
            if (!is_path_graph(piece.graph)) {
                throw WitnessError("leftover component on " + path.to_string() +
                                   " is not a path");
            }
            path_class = spectrum(piece.graph, cap).count();
            found = true;
            break;
        }
    }
    if (!found) {
        throw WitnessError("path " + path.to_string() +
                           " is not a component of the leftover graph");
    }
    if (path_class < t + 1) {
        throw WitnessError("leftover path has " + std::to_string(path_class) +
                           " spectrum sizes, below t+1");
    }

    return {std::move(cyc), std::move(chosen), std::move(path), path_class};
}

CheckReport check_leftover_path_witness(const Graph& g, int t, std::uint64_t cap) {
    CheckReport r;
    r.name = "witness";
    r.params = "n=" + std::to_string(g.vertex_count()) + " t=" + std::to_string(t);
    r.expected = "leftover path component with at least " + std::to_string(t + 1) +
                 " spectrum sizes";
    try {
        LeftoverPathWitness w = leftover_path_witness(g, t, cap);
        r.actual = "I=" + w.independent_set.to_string() + " path of order " +
                   std::to_string(w.leftover_path.count()) + " with " +
                   std::to_string(w.path_class) + " sizes";
        r.pass = true;
    } catch (const WitnessError& e) {
        r.actual = e.what();
        r.pass = false;
    }
    return r;
}

}  // namespace spectra
