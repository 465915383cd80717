#include "sqfactor/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "sqfactor/errors.hpp"

namespace sqfactor {

namespace {

std::uint64_t parse_token(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw format_error("line " + std::to_string(line_no) + ": '" + std::string(token) +
                           "' is not a non-negative integer");
    }
    return value;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::unordered_map<std::uint64_t, VertexId> ids;
    std::vector<std::uint64_t> labels;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    auto intern = [&](std::uint64_t label) {
        auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_whitespace(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (tokens.size() != 2) {
            throw format_error("line " + std::to_string(line_no) + ": expected two vertex ids, got " +
                               std::to_string(tokens.size()) + " tokens");
        }
        std::uint64_t a = parse_token(tokens[0], line_no);
        std::uint64_t b = parse_token(tokens[1], line_no);
        if (a == b) {
            throw format_error("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(a));
        }
        const VertexId ia = intern(a);
        const VertexId ib = intern(b);
        const Edge e(ia, ib);
        if (!seen.insert(e).second) {
            throw format_error("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(a) + " " +
                               std::to_string(b));
        }
        edges.push_back(e);
    }
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
    return out.str();
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    doc["edges"] = std::move(edges);
    if (!g.has_identity_labels()) {
        doc["labels"] = g.labels();
    }
    return doc.dump();
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw format_error(std::string("graph JSON: ") + ex.what());
    }
    try {
        auto n = doc.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) {
            edges.emplace_back(pair.at(0).get<VertexId>(), pair.at(1).get<VertexId>());
        }
        std::vector<std::uint64_t> labels;
        if (doc.contains("labels")) {
            labels = doc["labels"].get<std::vector<std::uint64_t>>();
        }
        return Graph::from_edges(n, edges, std::move(labels));
    } catch (const nlohmann::json::exception& ex) {
        throw format_error(std::string("graph JSON: ") + ex.what());
    } catch (const argument_error& ex) {
        throw format_error(std::string("graph JSON: ") + ex.what());
    }
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << g.label(v) << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << g.label(e.u) << " -- " << g.label(e.v) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Graph& host, std::span<const TaggedEdge> edges, std::string_view name) {
    std::vector<TaggedEdge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < host.vertex_count(); ++v) {
        out << "  " << host.label(v) << ";\n";
    }
    for (const TaggedEdge& te : sorted) {
        out << "  " << host.label(te.edge.u) << " -- " << host.label(te.edge.v);
        if (te.origin == EdgeOrigin::square_only) {
            out << " [style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sqfactor
