// Command-line front end: square, classify, build, lemma, verify, oracle, gen-cx, ham.
//
// Exit status: 0 success / pass / yes, 1 verification failure or "no", 2 hypotheses or arguments
// rejected, 3 malformed input, 4 search budget exhausted, 5 internal invariant broken.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfactor/certificate.hpp"
#include "sqfactor/corpus.hpp"
#include "sqfactor/counterexample.hpp"
#include "sqfactor/errors.hpp"
#include "sqfactor/factor_builder.hpp"
#include "sqfactor/factor_search.hpp"
#include "sqfactor/graph.hpp"
#include "sqfactor/graph_io.hpp"
#include "sqfactor/ham_engine.hpp"
#include "sqfactor/structure.hpp"
#include "sqfactor/verify.hpp"

namespace {

using namespace sqfactor;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kFailed = 1, kRejected = 2, kBadInput = 3, kBudget = 4, kInternal = 5 };

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::string format;
    unsigned s = 2;
    std::uint64_t seed = corpus::kDefaultSeed;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::uint64_t> u;
    std::optional<std::uint64_t> v1;
    std::optional<std::uint64_t> v2;
    std::string g1;
    std::string g2;
    std::optional<std::uint64_t> g1_hub, g1_arc, g2_hub, g2_arc;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw argument_error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const Options& opt, const std::string& text) {
    if (opt.output == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw argument_error("cannot write " + opt.output);
    }
    out << text;
    if (!text.empty() && text.back() != '\n') {
        out << '\n';
    }
}

Graph read_graph(const Options& opt) {
    Graph g = parse_edge_list(read_text(opt.input));
    if (g.vertex_count() == 0) {
        throw precondition_error("input graph has no edges");
    }
    if (!is_connected(g)) {
        throw precondition_error("input graph is disconnected");
    }
    return g;
}

VertexId by_label(const Graph& g, std::uint64_t label, const std::string& flag) {
    const VertexId v = g.find_label(label);
    if (v == kNoVertex) {
        throw argument_error(flag + " " + std::to_string(label) + " is not a vertex of the input graph");
    }
    return v;
}

ordered_json labels_of(const Graph& g, const std::vector<VertexId>& vs) {
    auto out = ordered_json::array();
    for (VertexId v : vs) {
        out.push_back(g.label(v));
    }
    return out;
}

ordered_json edges_of(const Graph& g, const std::vector<Edge>& es) {
    auto out = ordered_json::array();
    for (const Edge& e : es) {
        out.push_back({g.label(e.u), g.label(e.v)});
    }
    return out;
}

std::string factor_edge_list(const Graph& host, const std::vector<TaggedEdge>& edges) {
    std::ostringstream out;
    for (const TaggedEdge& te : edges) {
        out << host.label(te.edge.u) << ' ' << host.label(te.edge.v) << '\n';
    }
    return out.str();
}

std::string format_or(const Options& opt, const std::string& fallback) {
    return opt.format.empty() ? fallback : opt.format;
}

std::string certificate_output(const Options& opt, const FactorCertificate& cert) {
    const std::string fmt = format_or(opt, "json");
    if (fmt == "dot") {
        return to_dot(cert.host, cert.edges, "F");
    }
    if (fmt == "edgelist") {
        return factor_edge_list(cert.host, cert.edges);
    }
    return certificate_to_json(cert);
}

/// Hypothesis report written to stdout when a construction is refused.
std::string violation_report(const std::string& construction, const Graph& g, const unmet_hypotheses& ex) {
    ordered_json doc;
    doc["status"] = "precondition_violation";
    doc["construction"] = construction;
    auto list = ordered_json::array();
    for (const Violation& v : ex.violations()) {
        ordered_json item;
        item["kind"] = std::string(to_string(v.kind));
        item["edge"] = v.edge ? ordered_json::array({g.label(v.edge->u), g.label(v.edge->v)}) : ordered_json(nullptr);
        item["vertices"] = labels_of(g, v.vertices);
        item["text"] = v.describe(g);
        list.push_back(std::move(item));
    }
    doc["violations"] = std::move(list);
    if (g.vertex_count() >= 2) {
        doc["badLeaves"] = labels_of(g, classify(g).bad_leaves);
    }
    doc["message"] = ex.what();
    return doc.dump(2);
}

int run_square(const Options& opt) {
    const Graph g = parse_edge_list(read_text(opt.input));
    const Graph sq = square(g);
    const std::string fmt = format_or(opt, "edgelist");
    write_text(opt, fmt == "json" ? to_json(sq) : fmt == "dot" ? to_dot(sq, "G2") : to_edge_list(sq));
    return kOk;
}

int run_classify(const Options& opt) {
    const Graph g = read_graph(opt);
    const BlockCutTree bct = decompose(g);
    const StructureClassification cls = classify(g, bct);
    ordered_json doc;
    doc["leaves"] = labels_of(g, cls.leaves);
    doc["badLeaves"] = labels_of(g, cls.bad_leaves);
    doc["trivialCutVertices"] = labels_of(g, cls.trivial_cut_vertices);
    doc["nontrivialCutVertices"] = labels_of(g, cls.nontrivial_cut_vertices);
    doc["bridges"] = {{"trivial", edges_of(g, cls.trivial_bridges)},
                      {"bad", edges_of(g, cls.bad_bridges)},
                      {"nontrivial", edges_of(g, cls.nontrivial_bridges)}};
    ordered_json leaf_sets;
    for (const auto& [y, leaves] : cls.leaf_sets) {
        leaf_sets[std::to_string(g.label(y))] = labels_of(g, leaves);
    }
    doc["leafSets"] = leaf_sets.is_null() ? ordered_json::object() : leaf_sets;

    // block order of G - M, M the leaves at trivial cut vertices
    std::vector<VertexId> removal;
    for (const auto& [y, leaves] : cls.leaf_sets) {
        removal.insert(removal.end(), leaves.begin(), leaves.end());
    }
    const Subgraph stripped = strip(g, removal);
    auto order = ordered_json::array();
    if (stripped.graph.edge_count() > 0) {
        const BlockCutTree sbct = decompose(stripped.graph);
        try {
            for (BlockIndex b : order_blocks(stripped.graph, sbct).sequence) {
                order.push_back(labels_of(stripped.graph, sbct.blocks[b].vertices));
            }
        } catch (const precondition_error&) {
            order = nullptr;
        }
    }
    doc["blockOrder"] = std::move(order);
    write_text(opt, doc.dump(2));
    return kOk;
}

BuildOptions build_options(const Options& opt) {
    BuildOptions options;
    options.cycle_budget.max_nodes = opt.budget_nodes;
    return options;
}

int run_build(const Options& opt) {
    const Graph g = read_graph(opt);
    try {
        write_text(opt, certificate_output(opt, build_factor(g, build_options(opt))));
        return kOk;
    } catch (const unmet_hypotheses& ex) {
        write_text(opt, violation_report("theorem", g, ex));
        std::cerr << "sqfactor: " << ex.what() << '\n';
        return kRejected;
    }
}

int run_lemma(const Options& opt) {
    const Graph g = read_graph(opt);
    std::optional<VertexId> u;
    if (opt.u) {
        u = by_label(g, *opt.u, "--u");
    }
    try {
        write_text(opt, certificate_output(opt, lemma_factor(g, u, build_options(opt))));
        return kOk;
    } catch (const unmet_hypotheses& ex) {
        write_text(opt, violation_report("lemma", g, ex));
        std::cerr << "sqfactor: " << ex.what() << '\n';
        return kRejected;
    }
}

int run_verify(const Options& opt) {
    const FactorCertificate cert = certificate_from_json(read_text(opt.input));
    const VerificationReport report = cert.kind == FactorCertificate::Kind::lemma
                                          ? verify_certificate(cert.host, cert)
                                          : verify_factor(cert.host, cert.edges, opt.s);
    write_text(opt, report_to_json(report));
    return report.pass() ? kOk : kFailed;
}

FactorSearchBudget search_budget(const Options& opt) {
    FactorSearchBudget budget;
    budget.max_nodes = opt.budget_nodes;
    return budget;
}

int run_oracle(const Options& opt) {
    const Graph g = read_graph(opt);
    const FactorSearchResult r = exists_factor(g, opt.s, search_budget(opt));
    if (format_or(opt, "text") == "json") {
        ordered_json doc;
        doc["s"] = opt.s;
        doc["outcome"] = std::string(to_string(r.outcome));
        doc["witness"] = edges_of(g, r.witness);
        doc["nodesExplored"] = r.nodes_explored;
        doc["reason"] = r.reason;
        write_text(opt, doc.dump(2));
    } else {
        write_text(opt, std::string(to_string(r.outcome)));
    }
    if (r.outcome == SearchOutcome::out_of_budget) {
        std::cerr << "sqfactor: " << r.reason << '\n';
        return kBudget;
    }
    return r.outcome == SearchOutcome::yes ? kOk : kFailed;
}

AttachmentGraph attachment(const std::string& source, std::optional<std::uint64_t> hub,
                           std::optional<std::uint64_t> arc, corpus::Rng& rng, const char* name) {
    if (source.empty()) {
        AttachmentGraph att = triangle_attachment();
        if (hub) {
            att.hub = by_label(att.graph, *hub, std::string("--") + name + "-hub");
        }
        if (arc) {
            att.arc_end = by_label(att.graph, *arc, std::string("--") + name + "-arc");
        }
        return att;
    }
    Graph g;
    if (source.rfind("random:", 0) == 0) {
        const std::size_t n = std::stoul(source.substr(7));
        g = corpus::random_biconnected(rng, n, n / 2);
    } else {
        g = parse_edge_list(read_text(source));
    }
    AttachmentGraph att{g, 0, kNoVertex};
    if (hub) {
        att.hub = by_label(g, *hub, std::string("--") + name + "-hub");
    }
    if (arc) {
        att.arc_end = by_label(g, *arc, std::string("--") + name + "-arc");
    }
    return att;
}

int run_gen_cx(const Options& opt) {
    corpus::Rng rng(opt.seed);
    const AttachmentGraph a1 = attachment(opt.g1, opt.g1_hub, opt.g1_arc, rng, "g1");
    const AttachmentGraph a2 = attachment(opt.g2, opt.g2_hub, opt.g2_arc, rng, "g2");
    const auto [g, d] = gen_counterexample(opt.s, a1, a2);
    const auto proof = counting_certificate(g, d);
    const std::string fmt = format_or(opt, "edgelist");
    if (fmt == "json") {
        ordered_json doc;
        doc["graph"] = ordered_json::parse(to_json(g));
        doc["descriptor"] = ordered_json::parse(descriptor_to_json(d));
        if (proof) {
            doc["countingProof"] = {{"leaves", proof->leaves},
                                    {"demand", proof->demand},
                                    {"capacity", proof->capacity},
                                    {"argument", proof->argument}};
        } else {
            doc["countingProof"] = nullptr;
        }
        write_text(opt, doc.dump(2));
    } else if (fmt == "dot") {
        write_text(opt, to_dot(g, "family"));
    } else {
        std::string text = "# family instance s=" + std::to_string(d.s) + ", " + std::to_string(g.vertex_count()) +
                           " vertices\n# descriptor " + descriptor_to_json(d) + "\n";
        if (proof) {
            text += "# counting proof: " + std::to_string(proof->demand) + " leaves need an edge into {a, b}, " +
                    std::to_string(proof->capacity) + " slots available\n";
        }
        write_text(opt, text + to_edge_list(g));
    }
    return kOk;
}

int run_ham(const Options& opt) {
    const Graph g = read_graph(opt);
    const VertexId v1 = opt.v1 ? by_label(g, *opt.v1, "--v1") : 0;
    std::optional<VertexId> v2;
    if (opt.v2) {
        v2 = by_label(g, *opt.v2, "--v2");
    }
    SearchBudget budget;
    budget.max_nodes = opt.budget_nodes;
    const CycleWitness w = constrained_hamiltonian_cycle(g, v1, v2, budget);
    const std::string fmt = format_or(opt, "text");
    if (fmt == "json") {
        ordered_json doc;
        doc["cycle"] = labels_of(g, w.cycle);
        auto edges = ordered_json::array();
        for (const TaggedEdge& te : w.edges) {
            edges.push_back({{"u", g.label(te.edge.u)},
                             {"v", g.label(te.edge.v)},
                             {"origin", te.origin == EdgeOrigin::original ? "original" : "square"}});
        }
        doc["edges"] = std::move(edges);
        doc["nodesExplored"] = w.nodes_explored;
        write_text(opt, doc.dump(2));
    } else if (fmt == "dot") {
        write_text(opt, to_dot(g, w.edges, "C"));
    } else {
        std::string line;
        for (VertexId v : w.cycle) {
            line += std::to_string(g.label(v)) + ' ';
        }
        line += std::to_string(g.label(w.cycle.front()));
        write_text(opt, line);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected even factors in squares of graphs"};
    app.require_subcommand(1, 1);
    Options opt;

    const std::vector<std::string> formats{"edgelist", "dot", "json", "text"};
    auto common = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) {
            sub->add_option("-i,--input", opt.input, "input file, '-' for standard input")->capture_default_str();
        }
        sub->add_option("-o,--out", opt.output, "output file, '-' for standard output")->capture_default_str();
        sub->add_option("-f,--format", opt.format, "output format")->check(CLI::IsMember(formats));
    };

    auto* square_cmd = app.add_subcommand("square", "write the square of the input graph");
    common(square_cmd, true);

    auto* classify_cmd = app.add_subcommand("classify", "leaves, cut vertices, bridges and block order as JSON");
    common(classify_cmd, true);

    auto* build_cmd = app.add_subcommand("build", "[2,4]-factor of the square, or a hypothesis report");
    common(build_cmd, true);
    build_cmd->add_option("--budget-nodes", opt.budget_nodes, "node cap for each cycle search");

    auto* lemma_cmd = app.add_subcommand("lemma", "designated [2,4]-factor certificate");
    common(lemma_cmd, true);
    lemma_cmd->add_option("--u", opt.u, "vertex whose two factor edges must be original");
    lemma_cmd->add_option("--budget-nodes", opt.budget_nodes, "node cap for each cycle search");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate produced by build or lemma");
    common(verify_cmd, true);
    verify_cmd->add_option("--s", opt.s, "degree bound 2s for theorem certificates")->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for a [2,2s]-factor of the square");
    common(oracle_cmd, true);
    oracle_cmd->add_option("--s", opt.s, "degree bound 2s")->check(CLI::PositiveNumber)->capture_default_str();
    oracle_cmd->add_option("--budget-nodes", opt.budget_nodes, "node cap; lifts the default size limits");

    auto* gencx_cmd = app.add_subcommand("gen-cx", "member of the family without a [2,2s]-factor");
    common(gencx_cmd, false);
    gencx_cmd->add_option("--s", opt.s, "family parameter")->check(CLI::PositiveNumber)->capture_default_str();
    gencx_cmd->add_option("--seed", opt.seed, "seed for random:N attachments")->capture_default_str();
    gencx_cmd->add_option("--g1", opt.g1, "first attachment: edge-list file or random:N (default triangle)");
    gencx_cmd->add_option("--g2", opt.g2, "second attachment: edge-list file or random:N (default triangle)");
    gencx_cmd->add_option("--g1-hub", opt.g1_hub, "hub label in the first attachment");
    gencx_cmd->add_option("--g2-hub", opt.g2_hub, "hub label in the second attachment");
    gencx_cmd->add_option("--g1-arc", opt.g1_arc, "arc endpoint label in the first attachment");
    gencx_cmd->add_option("--g2-arc", opt.g2_arc, "arc endpoint label in the second attachment");

    auto* ham_cmd = app.add_subcommand("ham", "Hamiltonian cycle of the square of a 2-connected graph");
    common(ham_cmd, true);
    ham_cmd->add_option("--v1", opt.v1, "vertex whose both cycle edges are original (default: first vertex)");
    ham_cmd->add_option("--v2", opt.v2, "vertex with at least one original cycle edge");
    ham_cmd->add_option("--budget-nodes", opt.budget_nodes, "node cap; lifts the default size limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kRejected;
    }

    try {
        if (*square_cmd) return run_square(opt);
        if (*classify_cmd) return run_classify(opt);
        if (*build_cmd) return run_build(opt);
        if (*lemma_cmd) return run_lemma(opt);
        if (*verify_cmd) return run_verify(opt);
        if (*oracle_cmd) return run_oracle(opt);
        if (*gencx_cmd) return run_gen_cx(opt);
        if (*ham_cmd) return run_ham(opt);
    } catch (const format_error& ex) {
        std::cerr << "sqfactor: malformed input: " << ex.what() << '\n';
        return kBadInput;
    } catch (const budget_error& ex) {
        std::cerr << "sqfactor: " << ex.what() << " (" << ex.nodes_explored() << " nodes)\n";
        return kBudget;
    } catch (const precondition_error& ex) {
        std::cerr << "sqfactor: " << ex.what() << '\n';
        return kRejected;
    } catch (const argument_error& ex) {
        std::cerr << "sqfactor: " << ex.what() << '\n';
        return kRejected;
    } catch (const internal_error& ex) {
        std::cerr << "sqfactor: internal error: " << ex.what() << '\n';
        return kInternal;
    }
    return kRejected;
}
