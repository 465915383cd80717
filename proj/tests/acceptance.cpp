// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
// Thresholds and time limits are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mutations.hpp"
#include "oracles.hpp"
#include "sqfactor/corpus.hpp"
#include "sqfactor/counterexample.hpp"
#include "sqfactor/errors.hpp"
#include "sqfactor/factor_builder.hpp"
#include "sqfactor/factor_search.hpp"
#include "sqfactor/ham_engine.hpp"
#include "sqfactor/structure.hpp"
#include "sqfactor/verify.hpp"

using namespace sqfactor;

namespace {

constexpr std::size_t kLemmaGraphs = 200;
constexpr double kLemmaSeconds = 120.0;
constexpr std::size_t kTheoremGraphs = 200;
constexpr double kTheoremSeconds = 180.0;
constexpr std::size_t kBridgelessMinimum = 500;
constexpr std::size_t kBridgelessMaxN = 8;
constexpr std::size_t kFamilyVertices = 16;
constexpr double kFamilySearchSeconds = 60.0;
constexpr double kCountingSeconds = 1.0;
constexpr std::size_t kRandomCycleGraphs = 100;
constexpr std::size_t kRandomCycleMaxN = 18;
constexpr double kRandomCycleSeconds = 60.0;
constexpr std::size_t kEnumeratedCycleMaxN = 8;
constexpr std::size_t kMutantMinimum = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<Edge> plain(const std::vector<TaggedEdge>& edges) {
    std::vector<Edge> out;
    for (const TaggedEdge& te : edges) {
        out.push_back(te.edge);
    }
    return out;
}

std::string fail_note(const std::string& what, std::size_t index, const std::string& why) {
    return what + " #" + std::to_string(index) + ": " + why;
}

// 1. designated factors on decorated bridgeless cores
Outcome lemma_suite() {
    corpus::Rng rng(corpus::kDefaultSeed);
    const auto start = Clock::now();
    std::size_t ok = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < kLemmaGraphs; ++i) {
        const Graph g = corpus::random_lemma_graph(rng, 40);
        const oracle::Classification cls = oracle::classify(g);
        std::string why;
        if (g.vertex_count() > 40 || !cls.bad_leaves.empty() || !cls.nontrivial_bridges.empty()) {
            why = "generator produced a graph outside the hypotheses";
        } else {
            try {
                const FactorCertificate cert = lemma_factor(g);
                const VerificationReport report = verify_certificate(g, cert);
                if (!report.pass()) {
                    why = "certificate rejected";
                } else if (const std::string o = oracle::check_factor(g, plain(cert.edges), 2); !o.empty()) {
                    why = "oracle: " + o;
                }
            } catch (const std::exception& ex) {
                why = ex.what();
            }
        }
        if (why.empty()) {
            ++ok;
        } else if (first_failure.empty()) {
            first_failure = fail_note("graph", i, why);
        }
    }
    const double t = seconds_since(start);
    Outcome out{ok == kLemmaGraphs && t < kLemmaSeconds, ""};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu certificates verified in %.2f s (limit %.0f s)", ok, kLemmaGraphs, t,
                  kLemmaSeconds);
    out.detail = buf + (first_failure.empty() ? "" : "; " + first_failure);
    return out;
}

// 2. [2,4]-factors on graphs with bad leaves spaced at distance 3 or at least 5
Outcome theorem_suite() {
    corpus::Rng rng(corpus::kDefaultSeed + 1);
    const auto start = Clock::now();
    std::size_t ok = 0;
    std::size_t with_bad_leaves = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < kTheoremGraphs; ++i) {
        const Graph g = corpus::random_theorem_graph(rng, 40);
        const oracle::Classification cls = oracle::classify(g);
        const auto dist = oracle::distances(g);
        std::string why;
        if (!cls.nontrivial_bridges.empty()) {
            why = "generator produced a nontrivial bridge";
        }
        for (VertexId a : cls.bad_leaves) {
            for (VertexId b : cls.bad_leaves) {
                if (a < b && (dist[a][b] == 2 || dist[a][b] == 4)) {
                    why = "generator produced bad leaves at distance " + std::to_string(dist[a][b]);
                }
            }
        }
        with_bad_leaves += cls.bad_leaves.empty() ? 0 : 1;
        if (why.empty()) {
            try {
                const FactorCertificate cert = build_factor(g);
                if (!verify_factor(g, cert.edges, 2).pass()) {
                    why = "factor rejected";
                } else if (const std::string o = oracle::check_factor(g, plain(cert.edges), 2); !o.empty()) {
                    why = "oracle: " + o;
                }
            } catch (const std::exception& ex) {
                why = ex.what();
            }
        }
        if (why.empty()) {
            ++ok;
        } else if (first_failure.empty()) {
            first_failure = fail_note("graph", i, why);
        }
    }
    const double t = seconds_since(start);
    Outcome out{ok == kTheoremGraphs && t < kTheoremSeconds, ""};
    char buf[192];
    std::snprintf(buf, sizeof buf, "%zu/%zu factors verified at s=2 (%zu with bad leaves) in %.2f s (limit %.0f s)", ok,
                  kTheoremGraphs, with_bad_leaves, t, kTheoremSeconds);
    out.detail = buf + (first_failure.empty() ? "" : "; " + first_failure);
    return out;
}

// 3. every bridgeless graph on at most 8 vertices: search says yes and the builder's factor verifies
Outcome bridgeless_cross_check() {
    const auto start = Clock::now();
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
    for (std::size_t n = 3; n <= kBridgelessMaxN; ++n) {
        for (const Graph& g : corpus::connected_graphs(n)) {
            if (!oracle::cut_edges(g).empty()) {
                continue;
            }
            ++checked;
            std::string why;
            try {
                if (exists_factor(g, 2).outcome != SearchOutcome::yes) {
                    why = "search did not answer yes";
                } else {
                    const FactorCertificate cert = build_factor(g);
                    if (!verify_factor(g, cert.edges, 2).pass() || !oracle::check_factor(g, plain(cert.edges), 2).empty()) {
                        why = "builder factor rejected";
                    }
                }
            } catch (const std::exception& ex) {
                why = ex.what();
            }
            if (!why.empty()) {
                ++failures;
                if (first_failure.empty()) {
                    first_failure = "n=" + std::to_string(n) + ": " + why;
                }
            }
        }
    }
    Outcome out{failures == 0 && checked >= kBridgelessMinimum, ""};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu bridgeless graphs with n<=%zu, %zu failures, %.2f s", checked, kBridgelessMaxN,
                  failures, seconds_since(start));
    out.detail = buf + (first_failure.empty() ? "" : "; " + first_failure);
    return out;
}

// 4. the family instance without a [2,2]-factor
Outcome family_instance() {
    Outcome out;
    std::string notes;
    const auto [g, d] = gen_counterexample(1, triangle_attachment(), triangle_attachment());
    if (g.vertex_count() != kFamilyVertices) {
        out.pass = false;
        notes += "; vertex count " + std::to_string(g.vertex_count());
    }
    // essentially 2-edge-connected: no cut edge separates two components that both have edges
    for (const Edge& e : oracle::cut_edges(g)) {
        if (oracle::nontrivial_components(g, {e}) >= 2) {
            out.pass = false;
            notes += "; cut edge with edges on both sides";
            break;
        }
    }
    std::vector<bool> keep(g.vertex_count(), true);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        keep[v] = g.degree(v) != 1;
    }
    if (!oracle::biconnected(induced_subgraph(g, keep).graph)) {
        out.pass = false;
        notes += "; leaf-deleted graph not 2-connected";
    }

    const auto search_start = Clock::now();
    const FactorSearchResult r = exists_factor(g, 1);
    const double search_t = seconds_since(search_start);
    if (r.outcome != SearchOutcome::no || search_t >= kFamilySearchSeconds) {
        out.pass = false;
        notes += "; search outcome " + std::string(to_string(r.outcome));
    }

    double worst = 0;
    for (unsigned s = 1; s <= 5; ++s) {
        const auto start = Clock::now();
        const auto [gs, ds] = gen_counterexample(s, triangle_attachment(), triangle_attachment());
        const auto proof = counting_certificate(gs, ds);
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        if (!proof || proof->demand <= proof->capacity || t >= kCountingSeconds) {
            out.pass = false;
            notes += "; no counting proof for s=" + std::to_string(s);
        }
    }
    char buf[224];
    std::snprintf(buf, sizeof buf,
                  "%zu vertices, exhaustive s=1 search '%s' after %llu nodes in %.2f s (limit %.0f s), "
                  "counting proofs s=1..5 slowest %.4f s (limit %.0f s)",
                  g.vertex_count(), std::string(to_string(r.outcome)).c_str(),
                  static_cast<unsigned long long>(r.nodes_explored), search_t, kFamilySearchSeconds, worst,
                  kCountingSeconds);
    out.detail = buf + notes;
    return out;
}

// 5. the family instance is refused only because of bad-leaf pairs at distance four
Outcome family_violations() {
    const auto [g, d] = gen_counterexample(1, triangle_attachment(), triangle_attachment());
    const oracle::Classification cls = oracle::classify(g);
    const auto dist = oracle::distances(g);
    std::set<std::pair<VertexId, VertexId>> expected;
    for (VertexId a : cls.bad_leaves) {
        for (VertexId b : cls.bad_leaves) {
            if (a < b && dist[a][b] == 4) {
                expected.emplace(a, b);
            }
        }
    }
    std::set<std::pair<VertexId, VertexId>> reported;
    std::size_t other = 0;
    for (const Violation& v : check_theorem_preconditions(g, classify(g))) {
        if (v.kind != ViolationKind::bad_leaf_pair_at_distance_four || v.vertices.size() != 2) {
            ++other;
            continue;
        }
        reported.emplace(std::min(v.vertices[0], v.vertices[1]), std::max(v.vertices[0], v.vertices[1]));
    }
    Outcome out{!expected.empty() && other == 0 && reported == expected && cls.nontrivial_bridges.empty(), ""};
    out.detail = std::to_string(reported.size()) + " distance-4 bad-leaf pairs reported, " +
                 std::to_string(expected.size()) + " expected, " + std::to_string(other) + " other violations";
    return out;
}

// 6. small stars and the degree-4 variant
Outcome star_note() {
    Outcome out;
    const bool k12 = degree4_variant_check(fixtures::star(2));
    const bool k13 = degree4_variant_check(fixtures::star(3));
    const bool k14 = degree4_variant_check(fixtures::star(4));
    const bool h12 = exists_factor(fixtures::star(2), 1).outcome == SearchOutcome::yes;
    const bool h13 = exists_factor(fixtures::star(3), 1).outcome == SearchOutcome::yes;
    out.pass = !k12 && !k13 && k14 && h12 && h13;
    auto yn = [](bool b) { return b ? "true" : "false"; };
    out.detail = std::string("degree4 K12=") + yn(k12) + " K13=" + yn(k13) + " K14=" + yn(k14) +
                 "; Hamiltonian square K12=" + yn(h12) + " K13=" + yn(h13);
    return out;
}

std::string cycle_failure(const Graph& g, VertexId v1, std::optional<VertexId> v2) {
    try {
        const CycleWitness w = constrained_hamiltonian_cycle(g, v1, v2);
        return oracle::check_constrained_cycle(g, w.cycle, v1, v2);
    } catch (const std::exception& ex) {
        return ex.what();
    }
}

// 7. constrained Hamiltonian cycles of squares of 2-connected graphs
Outcome cycle_engine() {
    corpus::Rng rng(corpus::kDefaultSeed + 7);
    const auto start = Clock::now();
    std::size_t random_ok = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < kRandomCycleGraphs; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, kRandomCycleMaxN)(rng);
        const Graph g = corpus::random_biconnected(rng, n, std::uniform_int_distribution<std::size_t>(0, n)(rng));
        const VertexId v1 = std::uniform_int_distribution<VertexId>(0, g.vertex_count() - 1)(rng);
        VertexId v2 = std::uniform_int_distribution<VertexId>(0, g.vertex_count() - 2)(rng);
        v2 += v2 >= v1 ? 1 : 0;
        const std::string why = oracle::biconnected(g) ? cycle_failure(g, v1, v2) : "generator not 2-connected";
        if (why.empty()) {
            ++random_ok;
        } else if (first_failure.empty()) {
            first_failure = fail_note("random graph", i, why);
        }
    }
    const double random_t = seconds_since(start);

    const auto enum_start = Clock::now();
    std::size_t graphs = 0;
    std::size_t pairs = 0;
    std::size_t enum_failures = 0;
    for (std::size_t n = 3; n <= kEnumeratedCycleMaxN; ++n) {
        for (const Graph& g : corpus::connected_graphs(n)) {
            if (!oracle::biconnected(g)) {
                continue;
            }
            ++graphs;
            for (VertexId v1 = 0; v1 < n; ++v1) {
                for (VertexId v2 = 0; v2 <= n; ++v2) {
                    const std::optional<VertexId> second = v2 == n ? std::nullopt : std::optional<VertexId>(v2);
                    if (second == v1) {
                        continue;
                    }
                    ++pairs;
                    const std::string why = cycle_failure(g, v1, second);
                    if (!why.empty()) {
                        ++enum_failures;
                        if (first_failure.empty()) {
                            first_failure = "enumerated n=" + std::to_string(n) + ": " + why;
                        }
                    }
                }
            }
        }
    }
    Outcome out{random_ok == kRandomCycleGraphs && random_t < kRandomCycleSeconds && enum_failures == 0, ""};
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "random %zu/%zu valid in %.2f s (limit %.0f s); enumerated %zu graphs n<=%zu, %zu vertex choices, "
                  "%zu failures in %.2f s",
                  random_ok, kRandomCycleGraphs, random_t, kRandomCycleSeconds, graphs, kEnumeratedCycleMaxN, pairs,
                  enum_failures, seconds_since(enum_start));
    out.detail = buf + (first_failure.empty() ? "" : "; " + first_failure);
    return out;
}

// 8. corrupted certificates are rejected
Outcome mutation_soundness() {
    corpus::Rng rng(corpus::kDefaultSeed + 8);
    std::size_t mutants = 0;
    std::size_t rejected = 0;
    std::string first_escape;
    std::set<std::string> kinds;
    for (int i = 0; i < 60; ++i) {
        const Graph g = corpus::random_lemma_graph(rng, 30);
        const FactorCertificate cert = lemma_factor(g);
        for (const mutations::Mutant& m : mutations::mutate(cert, rng)) {
            ++mutants;
            kinds.insert(m.kind);
            if (!verify_certificate(m.certificate.host, m.certificate).pass()) {
                ++rejected;
            } else if (first_escape.empty()) {
                first_escape = "accepted mutant: " + m.kind;
            }
        }
    }
    Outcome out{mutants >= kMutantMinimum && rejected == mutants, ""};
    out.detail = std::to_string(rejected) + "/" + std::to_string(mutants) + " mutants rejected across " +
                 std::to_string(kinds.size()) + " mutation kinds" + (first_escape.empty() ? "" : "; " + first_escape);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"lemma suite", lemma_suite},
        {"theorem suite", theorem_suite},
        {"bridgeless cross-check", bridgeless_cross_check},
        {"family without [2,2s]-factor", family_instance},
        {"family violations", family_violations},
        {"small stars", star_note},
        {"constrained cycle engine", cycle_engine},
        {"mutation soundness", mutation_soundness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("uncaught exception: ") + ex.what()};
        }
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
