#include "mutations.hpp"

#include <algorithm>
#include <set>

namespace mutations {

using namespace sqfactor;

namespace {

template <class T>
std::size_t pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
}

}  // namespace

std::vector<Mutant> mutate(const FactorCertificate& cert, std::mt19937_64& rng) {
    std::vector<Mutant> out;
    const Graph& g = cert.host;
    const Graph sq = square(g);

    {
        FactorCertificate m = cert;
        m.edges.erase(m.edges.begin() + static_cast<std::ptrdiff_t>(pick(rng, m.edges)));
        out.push_back({"drop edge", std::move(m)});
    }
    {
        std::set<Edge> present;
        for (const TaggedEdge& te : cert.edges) {
            present.insert(te.edge);
        }
        std::vector<Edge> absent;
        for (const Edge& e : sq.edges()) {
            if (!present.contains(e)) {
                absent.push_back(e);
            }
        }
        if (!absent.empty()) {
            const Edge e = absent[pick(rng, absent)];
            FactorCertificate m = cert;
            m.edges.push_back({e, g.has_edge(e.u, e.v) ? EdgeOrigin::original : EdgeOrigin::square_only});
            out.push_back({"add edge", std::move(m)});
        }
    }
    {
        FactorCertificate m = cert;
        TaggedEdge& te = m.edges[pick(rng, m.edges)];
        te.origin = te.origin == EdgeOrigin::original ? EdgeOrigin::square_only : EdgeOrigin::original;
        out.push_back({"flip tag", std::move(m)});
    }
    {
        // move one edge endpoint to another vertex, keeping the edge inside the square
        FactorCertificate m = cert;
        const std::size_t i = pick(rng, m.edges);
        const Edge e = m.edges[i].edge;
        std::set<Edge> present;
        for (const TaggedEdge& te : m.edges) {
            present.insert(te.edge);
        }
        for (VertexId w : sq.neighbors(e.u)) {
            if (w != e.v && !present.contains(Edge(e.u, w))) {
                m.edges[i] = {Edge(e.u, w), g.has_edge(e.u, w) ? EdgeOrigin::original : EdgeOrigin::square_only};
                out.push_back({"reroute edge", std::move(m)});
                break;
            }
        }
    }

    std::vector<Designation> all = cert.cuts;
    if (cert.u) {
        all.push_back(*cert.u);
    }
    if (all.size() >= 2) {
        FactorCertificate m = cert;
        const std::size_t i = pick(rng, m.cuts);
        if (m.u && std::bernoulli_distribution(0.5)(rng)) {
            std::swap(m.cuts[i].vertex, m.u->vertex);
        } else if (m.cuts.size() >= 2) {
            std::size_t j = pick(rng, m.cuts);
            while (j == i) {
                j = pick(rng, m.cuts);
            }
            std::swap(m.cuts[i].vertex, m.cuts[j].vertex);
        } else {
            std::swap(m.cuts[i].vertex, m.u->vertex);
        }
        out.push_back({"swap designations", std::move(m)});
    }
    if (!cert.cuts.empty()) {
        {
            FactorCertificate m = cert;
            m.cuts.erase(m.cuts.begin() + static_cast<std::ptrdiff_t>(pick(rng, m.cuts)));
            out.push_back({"drop designation", std::move(m)});
        }
        {
            FactorCertificate m = cert;
            Designation& d = m.cuts[pick(rng, m.cuts)];
            d.edges[1] = d.edges[0];
            out.push_back({"repeat designated edge", std::move(m)});
        }
        if (cert.cuts.size() >= 2) {
            // designate an edge already designated elsewhere
            FactorCertificate m = cert;
            const std::size_t i = pick(rng, m.cuts);
            bool done = false;
            for (std::size_t j = 0; j < m.cuts.size() && !done; ++j) {
                for (const Edge& e : m.cuts[j].edges) {
                    if (j != i && e.contains(m.cuts[i].vertex)) {
                        m.cuts[i].edges[0] = e;
                        done = true;
                        break;
                    }
                }
            }
            if (done) {
                out.push_back({"shared designated edge", std::move(m)});
            }
        }
        {
            // designate a square-only factor edge at the vertex, if it has one
            FactorCertificate m = cert;
            Designation& d = m.cuts[pick(rng, m.cuts)];
            for (const TaggedEdge& te : m.edges) {
                if (te.edge.contains(d.vertex) && te.origin == EdgeOrigin::square_only) {
                    d.edges[0] = te.edge;
                    out.push_back({"square-only designation", std::move(m)});
                    break;
                }
            }
        }
    }
    if (cert.u) {
        FactorCertificate m = cert;
        const VertexId u = m.u->vertex;
        for (VertexId w : sq.neighbors(u)) {
            if (!g.has_edge(u, w)) {
                m.u->edges[0] = Edge(u, w);
                out.push_back({"u designates a square-only edge", std::move(m)});
                break;
            }
        }
    }
    return out;
}

}  // namespace mutations
