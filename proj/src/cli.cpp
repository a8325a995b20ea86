#include "tlocus/cli.hpp"

#include "tlocus/cone.hpp"
#include "tlocus/enumerate.hpp"
#include "tlocus/io.hpp"
#include "tlocus/locus.hpp"
#include "tlocus/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace tlocus {

namespace {

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string output = "text";
    std::optional<std::size_t> cap;
    unsigned long seed = 0;
    NewtonConfig newton;
    bool all = false;
    bool table = false;
    bool complete = false;
    std::string variant;
};

/// Raised for command-line usage problems found after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

EGraph read_graph(const std::string& path) {
    try {
        return egraph_from_json(read_json(path));
    } catch (const GraphError& e) {
        throw GraphError(e.kind(), path + ": " + e.what());
    }
}

Json edge_order(const EGraph& g) {
    Json out = Json::array();
    for (const auto& e : g.edges())
        out.push_back(Json::array({e.source, e.target}));
    return out;
}

Json config_json(const RunConfig& c) {
    Json out;
    out["subcommand"] = c.subcommand;
    out["inputs"] = c.inputs;
    out["output"] = c.output;
    out["cap"] = c.cap ? Json(*c.cap) : Json(nullptr);
    out["seed"] = c.seed;
    out["gradient_tol"] = c.newton.gradient_tol;
    out["slice_tol"] = c.newton.slice_tol;
    out["max_iterations"] = c.newton.max_iterations;
    return out;
}

void need_inputs(const RunConfig& c, std::size_t count, const char* usage) {
    if (c.inputs.size() != count)
        throw UsageError(std::string("expected ") + usage);
}

Json cmd_analyze(const RunConfig& c) {
    need_inputs(c, 1, "GRAPH");
    const EGraph g = read_graph(c.inputs[0]);
    Json out;
    out["graph_hash"] = graph_hash(g);
    out["n"] = g.dim();
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    out["edge_order"] = edge_order(g);
    out["linkage_classes"] = linkage_classes(g);
    out["weakly_reversible"] = is_weakly_reversible(g);
    out["dim_s"] = stoich_dim(g);
    out["dim_d0"] = d0_basis(g).dim();
    out["dim_j0"] = j0_basis(g).dim();
    return out;
}

Json cmd_bound(const RunConfig& c) {
    if (c.all) {
        need_inputs(c, 1, "GRAPH with --all");
        const EGraph g = read_graph(c.inputs[0]);
        const GlobalBound result = global_lower_bound(g, c.cap);
        Json out;
        out["edge_order"] = edge_order(result.complete);
        out["subgraphs"] = result.table.size();
        out["best"] = result.best ? bound_json(*result.best) : Json(nullptr);
        out["best_subgraph"] = result.best_subgraph ? graph_json(*result.best_subgraph) : Json(nullptr);
        if (c.table) {
            Json rows = Json::array();
            for (const auto& row : result.table)
                rows.push_back(bound_row_json(row));
            out["table"] = std::move(rows);
        }
        return out;
    }
    need_inputs(c, 2, "G G1 (or --all G)");
    const EGraph g = read_graph(c.inputs[0]);
    const EGraph g1 = read_graph(c.inputs[1]);
    Json out = bound_json(pair_lower_bound(g, g1));
    out["edge_order"] = edge_order(g1);
    return out;
}

Json mismatch_json(const std::optional<RationalVector>& at) {
    return at ? rational_vector_json(*at) : Json(nullptr);
}

Json cmd_check(const RunConfig& c) {
    Json out;
    out["variant"] = c.variant;
    if (c.variant == "de" || c.variant == "fe") {
        need_inputs(c, 4, "G W G2 W2");
        const EGraph g = read_graph(c.inputs[0]);
        const EdgeVector w = parse_edge_vector(read_json(c.inputs[1]), g);
        const EGraph g2 = read_graph(c.inputs[2]);
        const EdgeVector w2 = parse_edge_vector(read_json(c.inputs[3]), g2);
        bool verdict = false;
        std::optional<RationalVector> at;
        if (c.variant == "de") {
            verdict = is_dynamically_equivalent(g, w, g2, w2);
            if (!verdict)
                at = first_net_mismatch(g, w, g2, w2);
        } else {
            verdict = is_flux_equivalent(g, w, g2, w2);
            if (!verdict)
                at = first_net_mismatch(g, w, g2, w2);
        }
        out["verdict"] = verdict;
        out["mismatch_vertex"] = mismatch_json(at);
        out["edge_order"] = edge_order(g);
        out["edge_order_2"] = edge_order(g2);
        return out;
    }
    if (c.variant == "cb-flux") {
        need_inputs(c, 2, "G J");
        const EGraph g = read_graph(c.inputs[0]);
        const EdgeVector flux = parse_edge_vector(read_json(c.inputs[1]), g);
        out["edge_order"] = edge_order(g);
        out["weakly_reversible"] = is_weakly_reversible(g);
        if (!all_positive(flux)) {
            out["verdict"] = false;
            out["reason"] = "flux is not strictly positive";
        } else if (const auto v = first_unbalanced_vertex(g, flux)) {
            out["verdict"] = false;
            out["reason"] = "unbalanced vertex";
            out["vertex"] = rational_vector_json(g.vertex(*v));
        } else {
            out["verdict"] = true;
        }
        if (!is_weakly_reversible(g))
            out["note"] = "graph is not weakly reversible, so no positive balanced flux exists";
        return out;
    }
    if (c.variant == "toric") {
        need_inputs(c, 2, "G K");
        const EGraph g = read_graph(c.inputs[0]);
        const EdgeVector k = parse_edge_vector(read_json(c.inputs[1]), g);
        const ToricDecision d = is_toric(g, k);
        out["edge_order"] = edge_order(g);
        out["verdict"] = d.toric;
        out["reason"] = d.reason;
        if (d.toric) {
            out["witness_mode"] = to_string(d.witness_mode);
            out["witness"] = d.exact_witness ? rational_strings(*d.exact_witness) : Json(d.witness);
            if (!d.warning.empty())
                out["warning"] = d.warning;
            out["tree_constants"] = rational_strings(tree_constants(g, k).values);
        }
        return out;
    }
    // jr-member
    need_inputs(c, 3, "G1 G J");
    const EGraph g1 = read_graph(c.inputs[0]);
    const EGraph g = read_graph(c.inputs[1]);
    const EdgeVector flux = parse_edge_vector(read_json(c.inputs[2]), g1);
    out["edge_order"] = edge_order(g1);
    if (!all_positive(flux)) {
        out["verdict"] = false;
        out["reason"] = "flux is not strictly positive";
    } else if (const auto v = first_unbalanced_vertex(g1, flux)) {
        out["verdict"] = false;
        out["reason"] = "unbalanced vertex";
        out["vertex"] = rational_vector_json(g1.vertex(*v));
    } else {
        const Realization r = realize_on(g1, flux, g);
        out["verdict"] = static_cast<bool>(r);
        if (r) {
            out["realization"] = edge_vector_json(g, *r.values);
        } else {
            out["reason"] = "net flux not realizable on G";
            out["vertex"] = mismatch_json(r.failed_vertex);
        }
    }
    return out;
}

RationalVector vector_field(const Json& doc, const char* key) {
    if (!doc.contains(key))
        throw ParseError(std::string("missing \"") + key + "\"");
    return parse_rational_vector(doc[key]);
}

Json cmd_psi(const RunConfig& c) {
    need_inputs(c, 3, "G1 G INPUT");
    const EGraph g1 = read_graph(c.inputs[0]);
    const EGraph g = read_graph(c.inputs[1]);
    const Json doc = read_json(c.inputs[2]);
    if (!doc.is_object())
        throw ParseError("psi input must be a JSON object");
    Json out;
    out["direction"] = c.variant;
    if (c.variant == "forward") {
        if (!doc.contains("flux"))
            throw ParseError("missing \"flux\"");
        PsiInput in{parse_edge_vector(doc["flux"], g1), vector_field(doc, "x"), vector_field(doc, "x0"),
                    vector_field(doc, "p")};
        const PsiOutput o = psi_map(g1, g, in);
        out["mode"] = to_string(o.mode);
        out["k"] = edge_vector_json(g, o.k);
        out["k1"] = edge_vector_json(g1, o.k1);
        out["q"] = rational_strings(o.q);
        // Echoed so the report is directly a valid inverse input.
        out["x0"] = rational_strings(in.x0);
        return out;
    }
    for (const char* key : {"k", "k1"})
        if (!doc.contains(key))
            throw ParseError(std::string("missing \"") + key + "\"");
    const EdgeVector k = parse_edge_vector(doc["k"], g);
    const EdgeVector k1 = parse_edge_vector(doc["k1"], g1);
    const PsiPreimage pre = psi_hat_inverse(g1, g, k, k1, vector_field(doc, "q"), vector_field(doc, "x0"), c.newton);
    out["mode"] = to_string(pre.mode);
    out["flux"] = edge_vector_json(g1, pre.flux);
    out["x"] = rational_strings(pre.x);
    out["p"] = rational_strings(pre.p);
    return out;
}

Json cmd_enumerate(const RunConfig& c) {
    need_inputs(c, 1, "GRAPH");
    const EGraph input = read_graph(c.inputs[0]);
    const EGraph g = c.complete ? complete_graph(input) : input;
    const std::vector<std::uint64_t> masks = wr_subgraph_masks(g, c.cap);
    Json out;
    out["edge_order"] = edge_order(g);
    out["count"] = masks.size();
    out["masks"] = masks;
    return out;
}

void render_text(const Json& value, const std::string& prefix, std::ostream& out) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items())
            render_text(item, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (value.is_array() && !value.empty() && value.front().is_object()) {
        // Tables: one header line, then one row per element.
        out << prefix << ":\n ";
        for (const auto& [key, item] : value.front().items())
            out << ' ' << key;
        out << '\n';
        for (const auto& row : value) {
            out << ' ';
            for (const auto& [key, item] : row.items())
                out << ' ' << item.dump();
            out << '\n';
        }
        return;
    }
    out << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void emit(const RunConfig& c, const Json& body, std::ostream& out) {
    Json report;
    report["config"] = config_json(c);
    report["result"] = body;
    if (c.output == "json") {
        out << report.dump(2) << '\n';
        return;
    }
    out << "# tlocus " << c.subcommand;
    if (!c.variant.empty())
        out << ' ' << c.variant;
    out << "  output=" << c.output << " cap=" << (c.cap ? std::to_string(*c.cap) : "none") << " seed=" << c.seed
        << " gradient_tol=" << c.newton.gradient_tol << " slice_tol=" << c.newton.slice_tol
        << " max_iterations=" << c.newton.max_iterations << '\n';
    render_text(body, "", out);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact invariants and disguised toric locus bounds for embedded reaction graphs", "tlocus"};
    app.require_subcommand(1, 1);
    // Subcommands inherit this, so global flags may follow the subcommand.
    app.fallthrough();
    app.add_option("--output", c.output, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", c.seed, "Seed recorded for sampling-based checks");
    app.add_option("--gradient-tol", c.newton.gradient_tol, "Newton gradient tolerance (approximate mode)");
    app.add_option("--slice-tol", c.newton.slice_tol, "Newton slice tolerance (approximate mode)");
    app.add_option("--max-iterations", c.newton.max_iterations, "Newton iteration cap");

    auto* analyze = app.add_subcommand("analyze", "Graph invariants");
    analyze->add_option("files", c.inputs, "GRAPH")->required();

    auto* bound = app.add_subcommand("bound", "Lower bound for a pair, or the global bound with --all");
    bound->add_flag("--all", c.all, "Search all weakly reversible subgraphs of the complete graph");
    bound->add_option("--cap", c.cap, "Stop after this many subgraphs");
    bound->add_flag("--table", c.table, "Include the per-subgraph table");
    bound->add_option("files", c.inputs, "G [G1]")->required();

    auto* check = app.add_subcommand("check", "Boolean checks with certificates");
    check->add_option("variant", c.variant, "de | fe | cb-flux | toric | jr-member")
        ->required()
        ->check(CLI::IsMember({"de", "fe", "cb-flux", "toric", "jr-member"}));
    check->add_option("files", c.inputs, "Graph and edge-vector files")->required();

    auto* psi = app.add_subcommand("psi", "The map Psi and its inverse");
    psi->add_option("direction", c.variant, "forward | inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    psi->add_option("files", c.inputs, "G1 G INPUT")->required();

    auto* enumerate = app.add_subcommand("enumerate-wr", "Weakly reversible edge subsets");
    enumerate->add_option("--cap", c.cap, "Stop after this many subgraphs");
    enumerate->add_flag("--complete", c.complete, "Enumerate subgraphs of the complete graph instead");
    enumerate->add_option("files", c.inputs, "GRAPH")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    try {
        Json body;
        if (c.subcommand == "analyze")
            body = cmd_analyze(c);
        else if (c.subcommand == "bound")
            body = cmd_bound(c);
        else if (c.subcommand == "check")
            body = cmd_check(c);
        else if (c.subcommand == "psi")
            body = cmd_psi(c);
        else
            body = cmd_enumerate(c);
        emit(c, body, out);
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error: " << c.subcommand << ": " << e.what() << '\n';
        return exit_input;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const GraphError& e) {
        err << "error: invalid graph (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_input;
    } catch (const HashMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_hash;
    } catch (const NotWeaklyReversible& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_wr;
    } catch (const EnumerationLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_enumeration;
    } catch (const PsiDomainError& e) {
        err << "error: psi domain violation [" << e.constraint() << "]: " << e.what() << '\n';
        return exit_psi_domain;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return c.subcommand == "psi" ? exit_psi_domain : exit_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace tlocus
