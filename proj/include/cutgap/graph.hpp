#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cutgap/rational.hpp"

namespace cutgap {

struct GraphEdge {
    int u = -1;
    int v = -1;
    Rat len = 1;
};

enum class Terminal : uint8_t { S, T, Inner };

/// Canonical hierarchical address of a vertex in a recursive power graph.
/// `path` lists template-edge indices of the enclosing copies, outermost
/// first; `inner` indexes the vertex within V(template) minus the terminals.
/// The global terminals have an empty path and inner == -1. A vertex shared
/// between levels carries the address of minimal depth, so addresses are
/// unique and canonical.
struct VertexAddress {
    Terminal terminal = Terminal::Inner;
    std::vector<int> path;
    int inner = -1;

    int depth() const { return terminal == Terminal::Inner ? static_cast<int>(path.size()) + 1 : 0; }
    bool operator==(const VertexAddress&) const = default;
};

/// One copy of the template inside a power graph: the copy replacing the
/// edge identified by `path` (empty for the outermost copy). `s`/`t` are the
/// host vertices playing the template terminals, `inner[i]` the host vertex
/// for inner template vertex i. `replaced_len` is the length of the replaced
/// edge in the unscaled (s-t distance 1) build, used to recover the copy's
/// scale factor.
struct CopyInfo {
    std::vector<int> path;
    int s = -1;
    int t = -1;
    std::vector<int> inner;
    Rat replaced_len = 1;
};

class StGraph;

/// Construction record kept by power(): the template, the number of levels,
/// and all copies grouped by level (copies_by_level[j] holds the level-(j+1)
/// copies, ordered so that the copy replacing edge e of the previous level
/// with template edge g sits at index e * |E(template)| + g).
struct PowerMeta {
    int levels = 0;
    int template_vertices = 0;
    std::vector<GraphEdge> template_edges;
    int template_s = 0;
    int template_t = 1;
    std::vector<std::vector<CopyInfo>> copies_by_level;
};

class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<Rat> data) : n_(n), d_(std::move(data)) {}

    int size() const { return n_; }
    const Rat& at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    Rat& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }

  private:
    int n_ = 0;
    std::vector<Rat> d_;
};

/// An undirected graph with positive rational edge lengths and two
/// distinguished terminals. Immutable after construction; all values are
/// safe to share across threads.
class StGraph {
  public:
    StGraph(int vertex_count, std::vector<GraphEdge> edges, int s, int t);

    int vertex_count() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    int s() const { return s_; }
    int t() const { return t_; }

    /// Neighbors of v as (neighbor, edge index) pairs.
    const std::vector<std::pair<int, int>>& adjacency(int v) const { return adj_[v]; }

    const std::optional<std::vector<VertexAddress>>& addresses() const { return addresses_; }
    const PowerMeta* power_meta() const { return power_meta_ ? &*power_meta_ : nullptr; }

    /// Copy of this graph with every length multiplied by factor > 0.
    StGraph scaled(const Rat& factor) const;

    /// Checks that every edge length equals the shortest-path distance of its
    /// endpoints (the reduced-length invariant). Returns a violating edge
    /// index if any. O(E * Dijkstra); intended for inputs and tests.
    std::optional<int> find_non_reduced_edge() const;

    void set_addresses(std::vector<VertexAddress> a) { addresses_ = std::move(a); }
    void set_power_meta(PowerMeta m) { power_meta_ = std::move(m); }

  private:
    int n_ = 0;
    std::vector<GraphEdge> edges_;
    int s_ = -1;
    int t_ = -1;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::optional<std::vector<VertexAddress>> addresses_;
    std::optional<PowerMeta> power_meta_;
};

/// K_{2,n}: terminals s=0, t=1 and middles 2..n+1, unit lengths.
/// Edge 2i joins s to middle i, edge 2i+1 joins middle i to t.
StGraph make_k2n(int n);

/// Edge substitution: replaces every edge of H by a copy of G, identifying
/// the copy terminals with the edge endpoints. Lengths are divided by
/// d_G(s,t) so V(H) embeds isometrically. Each edge of H is oriented from
/// its endpoint closer to s(H) (ties by smaller vertex id); the oriented
/// head plays s(G).
StGraph oslash(const StGraph& H, const StGraph& G);

struct PowerOptions {
    long long vertex_budget = 1'000'000;
};

/// k-fold recursive substitution power of G, starting from a single unit
/// edge, rescaled by d_G(s,t)^k so a unit-length template yields unit-length
/// edges (d(s,t) = d_G(s,t)^k). Populates addresses and the copy registry.
/// Throws BudgetError when the projected size exceeds the vertex budget.
StGraph power(const StGraph& G, int k, const PowerOptions& opts = {});

/// Single-source shortest paths (exact rational Dijkstra).
std::vector<Rat> distances_from(const StGraph& g, int source);

DistanceMatrix all_pairs_distances(const StGraph& g, int threads = 1);

struct GeodesicSet {
    std::vector<std::vector<int>> paths;
    bool sampled = false;   // true when paths is a uniform sample, not the full set
    BigInt total = 0;       // exact number of s-t geodesics
};

BigInt count_st_geodesics(const StGraph& g);

/// All s-t shortest paths when their number is at most cap, otherwise cap
/// independent uniform draws (deterministic given seed).
GeodesicSet st_geodesics(const StGraph& g, long long cap, uint64_t seed = 0);

struct CopyDescriptor {
    int level = 0;
    std::vector<int> vertex_map;  // template vertex id -> host vertex id
    Rat scale = 1;
    std::vector<int> path;        // template-edge string identifying the copy
};

/// The |E(G)|^(k-1) level-k copies of the template inside a power graph.
/// Requires 1 <= k <= levels.
std::vector<CopyDescriptor> level_copies(const StGraph& P, int k);

struct CopyCheck {
    std::optional<Rat> scale;           // present iff the subset is an exact scaled copy
    std::pair<int, int> witness{-1, -1};  // violating template pair on failure

    bool ok() const { return scale.has_value(); }
};

/// Verifies d_host(f(u), f(v)) = C * d_template(u, v) for all pairs under the
/// bijection mapped[template id] = host id, returning the unique C or a
/// witness pair.
CopyCheck verify_copy(const StGraph& host, const std::vector<int>& mapped, const StGraph& tmpl);

}  // namespace cutgap
