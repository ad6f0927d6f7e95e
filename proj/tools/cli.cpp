#include "cli.hpp"

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spectra/families.hpp"
#include "spectra/generate.hpp"
#include "spectra/graph.hpp"
#include "spectra/graph6.hpp"
#include "spectra/mis.hpp"
#include "spectra/table.hpp"
#include "spectra/verify.hpp"

namespace spectra::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    unsigned workers = 1;
    std::uint64_t max_mis = kDefaultMisCap;
    std::uint64_t max_nodes = 10'000'000;

    bool json() const { return format == "json"; }
    SearchLimits limits() const { return SearchLimits{max_nodes, max_mis, workers}; }
};

/// One graph source per invocation: a named family, a graph6 literal, or a
/// graph6 file (the only source that can carry several graphs).
struct GraphInput {
    int cycle = 0;
    int path = 0;
    std::vector<int> parts;
    std::string g6;
    std::string file;
    bool strict = false;
    CLI::Option* cycle_opt = nullptr;
    CLI::Option* path_opt = nullptr;
    CLI::Option* parts_opt = nullptr;
    CLI::Option* g6_opt = nullptr;
    CLI::Option* file_opt = nullptr;
};

void add_graph_source(CLI::App* cmd, GraphInput& in) {
    auto* src = cmd->add_option_group("source", "where the graph comes from");
    in.cycle_opt = src->add_option("--cycle", in.cycle, "cycle of this order");
    in.path_opt = src->add_option("--path", in.path, "path on this many vertices");
    in.parts_opt = src->add_option("--multipartite", in.parts,
                                   "complete multipartite part sizes a,b,c")
                       ->delimiter(',');
    in.g6_opt = src->add_option("--graph6", in.g6, "one graph6 string");
    in.file_opt = src->add_option("--file", in.file, "graph6 file, one graph per line");
    src->require_option(1);
    cmd->add_flag("--strict", in.strict, "reject a file containing any bad line");
}

std::vector<Graph> load_graphs(const GraphInput& in, std::ostream& err) {
    if (in.cycle_opt->count() > 0) {
        return {cycle_graph(in.cycle)};
    }
    if (in.path_opt->count() > 0) {
        return {path_graph(in.path)};
    }
    if (in.parts_opt->count() > 0) {
        return {complete_multipartite(in.parts)};
    }
    if (in.g6_opt->count() > 0) {
        return {graph6_decode(in.g6)};
    }
    Graph6File f = read_graph6_file(in.file, in.strict);
    for (const auto& [line, message] : f.errors) {
        err << "warning: " << in.file << " line " << line << ": " << message << "\n";
    }
    if (f.graphs.empty()) {
        throw std::invalid_argument("no graphs read from " + in.file);
    }
    return std::move(f.graphs);
}

Graph single_graph(const GraphInput& in, std::ostream& err) {
    std::vector<Graph> graphs = load_graphs(in, err);
    if (graphs.size() != 1) {
        throw std::invalid_argument("this command expects exactly one graph, got " +
                                    std::to_string(graphs.size()));
    }
    return std::move(graphs.front());
}

std::string girth_text(const GirthResult& g) {
    return g ? std::to_string(*g) : "acyclic";
}

ordered_json girth_json(const GirthResult& g) {
    return g ? ordered_json(*g) : ordered_json(nullptr);
}

int run_spectrum(const Options& opt, const GraphInput& in, std::ostream& out,
                 std::ostream& err) {
    std::vector<Graph> graphs = load_graphs(in, err);
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        Spectrum s = spectrum(graphs[i], opt.max_mis);
        if (opt.json()) {
            items.push_back({{"n", graphs[i].vertex_count()},
                             {"spectrum", s.sizes()},
                             {"t", s.count()}});
        } else {
            if (graphs.size() > 1) {
                out << "graph " << (i + 1) << ": ";
            }
            out << "spectrum=" << s.to_string() << " t=" << s.count() << "\n";
        }
    }
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "spectrum";
        doc["graphs"] = items;
        out << doc.dump() << "\n";
    }
    return 0;
}

int run_classify(const Options& opt, const GraphInput& in, std::ostream& out,
                 std::ostream& err) {
    std::vector<Graph> graphs = load_graphs(in, err);
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ClassReport r = classify(graphs[i], opt.max_mis);
        if (opt.json()) {
            items.push_back({{"n", graphs[i].vertex_count()},
                             {"spectrum", r.spectrum.sizes()},
                             {"t", r.class_size},
                             {"girth", girth_json(r.girth)},
                             {"min_degree", r.min_degree},
                             {"leafless", r.leafless},
                             {"mis_count", r.mis_count}});
        } else {
            if (graphs.size() > 1) {
                out << "graph " << (i + 1) << ": ";
            }
            out << "spectrum=" << r.spectrum.to_string() << " t=" << r.class_size
                << " girth=" << girth_text(r.girth) << " min_degree=" << r.min_degree
                << " leafless=" << (r.leafless ? "yes" : "no")
                << " mis_count=" << r.mis_count << "\n";
        }
    }
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "classify";
        doc["graphs"] = items;
        out << doc.dump() << "\n";
    }
    return 0;
}

int emit_construct(const Options& opt, const Graph& g, std::ostream& out) {
    std::string s = graph6_encode(g);
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "construct";
        doc["graph6"] = s;
        doc["n"] = g.vertex_count();
        doc["edges"] = g.edge_count();
        out << doc.dump() << "\n";
    } else {
        out << s << "\n";
    }
    return 0;
}

int emit_reports(const Options& opt, const std::string& check,
                 const std::vector<CheckReport>& reports, std::ostream& out) {
    bool ok = all_pass(reports);
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "verify";
        doc["check"] = check;
        doc["reports"] = ordered_json::parse(reports_to_json(reports));
        doc["pass"] = ok;
        out << doc.dump() << "\n";
    } else {
        for (const CheckReport& r : reports) {
            out << r.to_text() << "\n";
        }
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int run_table_cell(const Options& opt, int t, int girth, int n_max,
                   const std::string& input_file, std::ostream& out) {
    TableCellReport report;
    if (input_file.empty()) {
        report = verify_table_cell(t, girth, n_max, opt.limits());
    } else {
        std::ifstream f(input_file);
        if (!f) {
            throw std::runtime_error("cannot open " + input_file);
        }
        report = verify_table_cell(t, girth, n_max, f, opt.limits());
    }
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "search";
        doc["mode"] = "table-cell";
        doc["report"] = ordered_json::parse(report.to_json());
        out << doc.dump() << "\n";
    } else {
        out << report.to_text() << "\n";
        out << (report.consistent ? "PASS" : "FAIL") << "\n";
    }
    return report.consistent ? 0 : 1;
}

int run_hunt_delta(const Options& opt, int t, int girth, int n_max, std::ostream& out,
                   std::ostream& err) {
    std::vector<std::string> found = hunt_delta(t, girth, n_max, opt.limits());
    if (opt.json()) {
        ordered_json doc;
        doc["command"] = "search";
        doc["mode"] = "hunt-delta";
        doc["t"] = t;
        doc["girth"] = girth;
        doc["n_max"] = n_max;
        doc["found"] = found;
        out << doc.dump() << "\n";
    } else {
        for (const std::string& s : found) {
            out << s << "\n";
        }
        if (found.empty()) {
            err << "note: no non-cycle members up to order " << n_max
                << "; a bounded search proves nothing\n";
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"maximal independent set spectra: analyze, construct, verify, search"};
    app.name("spectra");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "worker thread count")
        ->envname("SPECTRA_WORKERS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-mis", opt.max_mis,
                   "abort after this many maximal independent sets per graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-nodes", opt.max_nodes,
                   "canonical-form budget per generation pass")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    GraphInput spectrum_in;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print the set of maximal independent set sizes");
    add_graph_source(spectrum_cmd, spectrum_in);

    GraphInput classify_in;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "print spectrum, class size, girth, min degree, leaflessness");
    add_graph_source(classify_cmd, classify_in);

    std::string family;
    int family_g = 0;
    int family_t = 0;
    int leaf_n = 0;
    std::vector<int> cycle_path;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "emit a named family member as graph6");
    auto* what = construct_cmd->add_option_group("family", "which graph to build");
    CLI::Option* family_opt = what->add_option("--family", family, "family name (H)")
                                  ->check(CLI::IsMember({"H"}));
    CLI::Option* leaf_opt =
        what->add_option("--cycle-plus-leaf", leaf_n, "cycle order; one leaf attached");
    CLI::Option* cycle_path_opt =
        what->add_option("--cycle-plus-path", cycle_path,
                         "cycle order and path length as N,K")
            ->delimiter(',');
    what->require_option(1);
    CLI::Option* family_g_opt =
        construct_cmd->add_option("--g", family_g, "girth parameter for --family H");
    CLI::Option* family_t_opt =
        construct_cmd->add_option("--t", family_t, "class-size parameter for --family H");
    family_g_opt->needs(family_opt);
    family_t_opt->needs(family_opt);
    family_opt->needs(family_g_opt);
    family_opt->needs(family_t_opt);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run named checks; text output ends PASS or FAIL");
    verify_cmd->require_subcommand(1);

    int prop1_n_max = 30;
    CLI::App* prop1_cmd =
        verify_cmd->add_subcommand("prop1", "cycle and path spectrum closed forms");
    prop1_cmd->add_option("--n-max", prop1_n_max, "largest order checked")
        ->capture_default_str();

    int cycle_leaf_n_max = 24;
    int cycle_leaf_n = 0;
    CLI::App* cycle_leaf_cmd =
        verify_cmd->add_subcommand("cycle-leaf", "cycle plus one leaf spectrum");
    cycle_leaf_cmd->add_option("--n-max", cycle_leaf_n_max, "largest cycle order")
        ->capture_default_str();
    CLI::Option* cycle_leaf_n_opt =
        cycle_leaf_cmd->add_option("--n", cycle_leaf_n, "check one cycle order only");

    int construction_g = 0;
    int construction_t = 0;
    CLI::App* construction_cmd = verify_cmd->add_subcommand(
        "construction", "decorated cycle order, girth and spectrum");
    CLI::Option* construction_g_opt =
        construction_cmd->add_option("--g", construction_g, "girth");
    CLI::Option* construction_t_opt =
        construction_cmd->add_option("--t", construction_t, "class size");
    construction_g_opt->needs(construction_t_opt);
    construction_t_opt->needs(construction_g_opt);

    int c12_distance = 6;
    int c19_distance = 9;
    CLI::App* components_cmd =
        verify_cmd->add_subcommand("components", "fixed graphs with known spectra");
    components_cmd
        ->add_option("--c12-distance", c12_distance,
                     "cycle distance between the two leaves on the 12-cycle")
        ->capture_default_str();
    components_cmd
        ->add_option("--c19-distance", c19_distance,
                     "cycle distance between the two leaves on the 19-cycle")
        ->capture_default_str();

    GraphInput leftover_in;
    std::vector<int> leftover_set;
    CLI::App* leftover_cmd = verify_cmd->add_subcommand(
        "leftover", "component classes after deleting a closed neighborhood");
    add_graph_source(leftover_cmd, leftover_in);
    leftover_cmd->add_option("--set", leftover_set, "independent set members v1,v2,...")
        ->delimiter(',')
        ->required();

    GraphInput witness_in;
    int witness_t = 0;
    CLI::App* witness_cmd = verify_cmd->add_subcommand(
        "witness", "leftover path witness for leafless graphs of high girth");
    add_graph_source(witness_cmd, witness_in);
    witness_cmd->add_option("--t", witness_t, "claimed class-size bound")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* search_cmd =
        app.add_subcommand("search", "exhaustive generation and classification");
    search_cmd->require_subcommand(1);

    int cell_t = 0;
    int cell_girth = 0;
    int cell_n_max = 0;
    std::string cell_input;
    CLI::App* cell_cmd = search_cmd->add_subcommand(
        "table-cell", "members of one girth/class cell up to an order bound");
    cell_cmd->add_option("--t", cell_t, "class size")->required();
    cell_cmd->add_option("--girth", cell_girth, "exact girth")->required();
    cell_cmd->add_option("--n-max", cell_n_max, "largest order")->required();
    cell_cmd->add_option("--input", cell_input,
                         "graph6 file to check instead of generating");

    int hunt_t = 0;
    int hunt_girth = 0;
    int hunt_n_max = 0;
    CLI::App* hunt_cmd = search_cmd->add_subcommand(
        "hunt-delta", "non-cycle members of one girth/class cell");
    hunt_cmd->add_option("--t", hunt_t, "class size")->required();
    hunt_cmd->add_option("--girth", hunt_girth, "exact girth")->required();
    hunt_cmd->add_option("--n-max", hunt_n_max, "largest order")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum_cmd->parsed()) {
            return run_spectrum(opt, spectrum_in, out, err);
        }
        if (classify_cmd->parsed()) {
            return run_classify(opt, classify_in, out, err);
        }
        if (construct_cmd->parsed()) {
            Graph g;
            if (family_opt->count() > 0) {
                g = decorated_cycle(family_g, family_t);
            } else if (leaf_opt->count() > 0) {
                g = attach_leaf(cycle_graph(leaf_n), 0);
            } else {
                if (cycle_path.size() != 2) {
                    throw std::invalid_argument("--cycle-plus-path expects two values N,K");
                }
                g = attach_path(cycle_graph(cycle_path[0]), 0, cycle_path[1]);
            }
            (void)cycle_path_opt;
            return emit_construct(opt, g, out);
        }
        if (verify_cmd->parsed()) {
            if (prop1_cmd->parsed()) {
                return emit_reports(opt, "prop1",
                                    check_path_cycle_spectra(prop1_n_max, opt.max_mis),
                                    out);
            }
            if (cycle_leaf_cmd->parsed()) {
                std::vector<CheckReport> reports;
                if (cycle_leaf_n_opt->count() > 0) {
                    reports.push_back(check_cycle_with_leaf(cycle_leaf_n, opt.max_mis));
                } else {
                    for (int n = 3; n <= cycle_leaf_n_max; ++n) {
                        reports.push_back(check_cycle_with_leaf(n, opt.max_mis));
                    }
                }
                return emit_reports(opt, "cycle-leaf", reports, out);
            }
            if (construction_cmd->parsed()) {
                std::vector<CheckReport> reports;
                if (construction_g_opt->count() > 0) {
                    reports.push_back(
                        check_decorated_cycle(construction_g, construction_t, opt.max_mis));
                } else {
                    for (int g = 3; g <= 8; ++g) {
                        for (int t = 2; t <= 4; ++t) {
                            reports.push_back(check_decorated_cycle(g, t, opt.max_mis));
                        }
                    }
                }
                return emit_reports(opt, "construction", reports, out);
            }
            if (components_cmd->parsed()) {
                return emit_reports(
                    opt, "components",
                    check_component_spectra(c12_distance, c19_distance, opt.max_mis), out);
            }
            if (leftover_cmd->parsed()) {
                Graph g = single_graph(leftover_in, err);
                VertexSet s(g.vertex_count(), leftover_set);
                return emit_reports(opt, "leftover", {check_leftover(g, s, opt.max_mis)},
                                    out);
            }
            if (witness_cmd->parsed()) {
                Graph g = single_graph(witness_in, err);
                return emit_reports(opt, "witness",
                                    {check_leftover_path_witness(g, witness_t, opt.max_mis)},
                                    out);
            }
        }
        if (search_cmd->parsed()) {
            if (cell_cmd->parsed()) {
                return run_table_cell(opt, cell_t, cell_girth, cell_n_max, cell_input, out);
            }
            if (hunt_cmd->parsed()) {
                return run_hunt_delta(opt, hunt_t, hunt_girth, hunt_n_max, out, err);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace spectra::cli
