#include "cutgap/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "cutgap/errors.hpp"
#include "cutgap/parallel.hpp"
#include "cutgap/seed.hpp"

namespace cutgap {

StGraph::StGraph(int vertex_count, std::vector<GraphEdge> edges, int s, int t)
    : n_(vertex_count), edges_(std::move(edges)), s_(s), t_(t) {
    if (n_ < 2) throw std::invalid_argument("StGraph: need at least two vertices");
    if (s_ < 0 || s_ >= n_ || t_ < 0 || t_ >= n_) throw std::invalid_argument("StGraph: terminal out of range");
    if (s_ == t_) throw std::invalid_argument("StGraph: s and t must differ");

    adj_.assign(n_, {});
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const GraphEdge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("StGraph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("StGraph: self-loop");
        if (!(e.len > 0)) throw std::invalid_argument("StGraph: non-positive edge length");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw std::invalid_argument("StGraph: duplicate edge");
        adj_[e.u].emplace_back(e.v, static_cast<int>(i));
        adj_[e.v].emplace_back(e.u, static_cast<int>(i));
    }

    // Connectivity.
    std::vector<char> vis(n_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, ei] : adj_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n_) throw std::invalid_argument("StGraph: not connected");
}

StGraph StGraph::scaled(const Rat& factor) const {
    if (!(factor > 0)) throw std::invalid_argument("scaled: factor must be positive");
    std::vector<GraphEdge> es = edges_;
    for (auto& e : es) e.len *= factor;
    StGraph out(n_, std::move(es), s_, t_);
    if (addresses_) out.set_addresses(*addresses_);
    if (power_meta_) out.set_power_meta(*power_meta_);
    return out;
}

std::optional<int> StGraph::find_non_reduced_edge() const {
    for (size_t i = 0; i < edges_.size(); ++i) {
        std::vector<Rat> d = distances_from(*this, edges_[i].u);
        if (d[edges_[i].v] != edges_[i].len) return static_cast<int>(i);
    }
    return std::nullopt;
}

StGraph make_k2n(int n) {
    if (n < 1) throw std::invalid_argument("make_k2n: n must be at least 1");
    std::vector<GraphEdge> edges;
    edges.reserve(2 * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        edges.push_back({0, 2 + i, 1});
        edges.push_back({2 + i, 1, 1});
    }
    return StGraph(2 + n, std::move(edges), 0, 1);
}

namespace {

// Orientation sources for every edge: the endpoint with lexicographically
// smaller (distance from s, id).
std::vector<char> orient_from_s(const StGraph& g) {
    std::vector<Rat> ds = distances_from(g, g.s());
    std::vector<char> u_first(g.edges().size(), 1);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const GraphEdge& e = g.edges()[i];
        if (std::pair(ds[e.v], e.v) < std::pair(ds[e.u], e.u)) u_first[i] = 0;
    }
    return u_first;
}

struct SubstitutionResult {
    std::vector<GraphEdge> edges;
    int vertex_count = 0;
    std::vector<CopyInfo> copies;             // one per host edge, in edge order
    std::vector<int> inner_template_ids;      // inner index -> template vertex id
};

// Replaces every edge of `host` by a copy of `tmpl`, returning the raw edge
// list plus per-edge copy records. Shared plumbing of oslash and power.
SubstitutionResult substitute_edges(const StGraph& host, const StGraph& tmpl) {
    Rat d_st = distances_from(tmpl, tmpl.s())[tmpl.t()];
    std::vector<char> u_first = orient_from_s(host);

    std::vector<int> inner_ids;
    std::vector<int> inner_index(tmpl.vertex_count(), -1);
    for (int v = 0; v < tmpl.vertex_count(); ++v)
        if (v != tmpl.s() && v != tmpl.t()) {
            inner_index[v] = static_cast<int>(inner_ids.size());
            inner_ids.push_back(v);
        }
    int inner_count = static_cast<int>(inner_ids.size());

    SubstitutionResult out;
    out.inner_template_ids = inner_ids;
    out.vertex_count = host.vertex_count();
    out.edges.reserve(host.edges().size() * tmpl.edges().size());
    out.copies.reserve(host.edges().size());

    std::set<std::pair<int, int>> seen;
    for (size_t ei = 0; ei < host.edges().size(); ++ei) {
        const GraphEdge& he = host.edges()[ei];
        int from = u_first[ei] ? he.u : he.v;
        int to = u_first[ei] ? he.v : he.u;

        CopyInfo info;
        info.s = from;
        info.t = to;
        info.replaced_len = he.len;
        info.inner.resize(inner_count);
        for (int i = 0; i < inner_count; ++i) info.inner[i] = out.vertex_count + i;
        out.vertex_count += inner_count;

        Rat ratio = he.len / d_st;
        auto map_vertex = [&](int tv) {
            if (tv == tmpl.s()) return from;
            if (tv == tmpl.t()) return to;
            return info.inner[inner_index[tv]];
        };
        for (const GraphEdge& ge : tmpl.edges()) {
            int a = map_vertex(ge.u);
            int b = map_vertex(ge.v);
            if (!seen.insert(std::minmax(a, b)).second)
                throw std::invalid_argument("substitution would create a parallel edge");
            out.edges.push_back({a, b, ratio * ge.len});
        }
        out.copies.push_back(std::move(info));
    }
    return out;
}

StGraph unit_edge() { return StGraph(2, {{0, 1, 1}}, 0, 1); }

}  // namespace

StGraph oslash(const StGraph& H, const StGraph& G) {
    SubstitutionResult sub = substitute_edges(H, G);
    return StGraph(sub.vertex_count, std::move(sub.edges), H.s(), H.t());
}

StGraph power(const StGraph& G, int k, const PowerOptions& opts) {
    if (k < 0) throw std::invalid_argument("power: k must be nonnegative");

    long long inner_per_edge = G.vertex_count() - 2;
    long long tmpl_edges = static_cast<long long>(G.edges().size());
    {
        // Projected size of the final graph, checked before building.
        long long v = 2, e = 1;
        for (int i = 0; i < k; ++i) {
            if (e > opts.vertex_budget || v + e * inner_per_edge > opts.vertex_budget)
                throw BudgetError("power: vertex budget exceeded at level " + std::to_string(i + 1));
            v += e * inner_per_edge;
            e *= tmpl_edges;
        }
        if (v > opts.vertex_budget) throw BudgetError("power: vertex budget exceeded");
    }

    PowerMeta meta;
    meta.levels = k;
    meta.template_vertices = G.vertex_count();
    meta.template_edges = G.edges();
    meta.template_s = G.s();
    meta.template_t = G.t();

    StGraph cur = unit_edge();
    std::vector<VertexAddress> addresses{{Terminal::S, {}, -1}, {Terminal::T, {}, -1}};
    std::vector<std::vector<int>> edge_path{{}};  // template-edge string per current edge

    for (int level = 0; level < k; ++level) {
        SubstitutionResult sub = substitute_edges(cur, G);
        std::vector<std::vector<int>> next_paths;
        next_paths.reserve(sub.edges.size());
        for (size_t ei = 0; ei < sub.copies.size(); ++ei) {
            sub.copies[ei].path = edge_path[ei];
            for (int g = 0; g < static_cast<int>(tmpl_edges); ++g) {
                std::vector<int> p = edge_path[ei];
                p.push_back(g);
                next_paths.push_back(std::move(p));
            }
            for (int w = 0; w < static_cast<int>(sub.copies[ei].inner.size()); ++w)
                addresses.push_back({Terminal::Inner, edge_path[ei], w});
        }
        meta.copies_by_level.push_back(std::move(sub.copies));
        edge_path = std::move(next_paths);
        cur = StGraph(sub.vertex_count, std::move(sub.edges), cur.s(), cur.t());
    }

    Rat d_st = k > 0 ? distances_from(G, G.s())[G.t()] : Rat(1);
    StGraph out = cur.scaled(rat_pow(d_st, static_cast<unsigned>(k)));
    out.set_addresses(std::move(addresses));
    out.set_power_meta(std::move(meta));
    return out;
}

std::vector<Rat> distances_from(const StGraph& g, int source) {
    if (source < 0 || source >= g.vertex_count()) throw std::invalid_argument("distances_from: bad source");
    std::vector<Rat> dist(g.vertex_count());
    std::vector<char> done(g.vertex_count(), 0);
    std::vector<char> reached(g.vertex_count(), 0);
    using Item = std::pair<Rat, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[source] = 0;
    reached[source] = 1;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (auto [w, ei] : g.adjacency(v)) {
            Rat nd = d + g.edges()[ei].len;
            if (!reached[w] || nd < dist[w]) {
                reached[w] = 1;
                dist[w] = nd;
                pq.emplace(std::move(nd), w);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const StGraph& g, int threads) {
    int n = g.vertex_count();
    std::vector<Rat> data(static_cast<size_t>(n) * n);
    parallel_for(n, threads, [&](long long src) {
        std::vector<Rat> d = distances_from(g, static_cast<int>(src));
        for (int v = 0; v < n; ++v) data[static_cast<size_t>(src) * n + v] = std::move(d[v]);
    });
    return DistanceMatrix(n, std::move(data));
}

namespace {

// Geodesic DAG: edge u->v participates iff d_s(u) + len + d_t(v) == d(s,t).
struct GeodesicDag {
    std::vector<std::vector<int>> next;  // successors of each vertex
    std::vector<BigInt> paths_to_t;      // geodesic count from v to t in the DAG
};

GeodesicDag build_dag(const StGraph& g) {
    std::vector<Rat> ds = distances_from(g, g.s());
    std::vector<Rat> dt = distances_from(g, g.t());
    const Rat& total = ds[g.t()];

    GeodesicDag dag;
    dag.next.assign(g.vertex_count(), {});
    for (const GraphEdge& e : g.edges()) {
        if (ds[e.u] + e.len + dt[e.v] == total) dag.next[e.u].push_back(e.v);
        if (ds[e.v] + e.len + dt[e.u] == total) dag.next[e.v].push_back(e.u);
    }
    for (auto& succ : dag.next) std::sort(succ.begin(), succ.end());

    // Count paths in topological (decreasing d_t) order.
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dt[a] < dt[b]; });
    dag.paths_to_t.assign(g.vertex_count(), 0);
    dag.paths_to_t[g.t()] = 1;
    for (int v : order) {
        if (v == g.t()) continue;
        BigInt c = 0;
        for (int w : dag.next[v]) c += dag.paths_to_t[w];
        dag.paths_to_t[v] = c;
    }
    return dag;
}

BigInt uniform_big_below(SeedStream& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    unsigned bits = static_cast<unsigned>(msb(bound)) + 1;
    unsigned words = (bits + 63) / 64;
    for (;;) {
        BigInt v = 0;
        for (unsigned i = 0; i < words; ++i) v = (v << 64) | BigInt(rng.next());
        v >>= words * 64 - bits;
        if (v < bound) return v;
    }
}

}  // namespace

BigInt count_st_geodesics(const StGraph& g) { return build_dag(g).paths_to_t[g.s()]; }

GeodesicSet st_geodesics(const StGraph& g, long long cap, uint64_t seed) {
    if (cap < 1) throw std::invalid_argument("st_geodesics: cap must be at least 1");
    GeodesicDag dag = build_dag(g);
    GeodesicSet out;
    out.total = dag.paths_to_t[g.s()];

    if (out.total <= cap) {
        std::vector<int> path{g.s()};
        // Depth-first enumeration over DAG successors (sorted, so deterministic).
        auto dfs = [&](auto&& self, int v) -> void {
            if (v == g.t()) {
                out.paths.push_back(path);
                return;
            }
            for (int w : dag.next[v]) {
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        };
        dfs(dfs, g.s());
        return out;
    }

    out.sampled = true;
    SeedStream rng(seed);
    out.paths.reserve(static_cast<size_t>(cap));
    for (long long i = 0; i < cap; ++i) {
        std::vector<int> path{g.s()};
        int v = g.s();
        while (v != g.t()) {
            BigInt r = uniform_big_below(rng, dag.paths_to_t[v]);
            for (int w : dag.next[v]) {
                if (r < dag.paths_to_t[w]) {
                    v = w;
                    break;
                }
                r -= dag.paths_to_t[w];
            }
            path.push_back(v);
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

std::vector<CopyDescriptor> level_copies(const StGraph& P, int k) {
    const PowerMeta* meta = P.power_meta();
    if (!meta) throw std::invalid_argument("level_copies: graph was not built by power()");
    if (k < 1 || k > meta->levels)
        throw std::invalid_argument("level_copies: level must be in [1, " + std::to_string(meta->levels) + "]");

    // Template terminal distance, for the copy scale factor.
    StGraph tmpl(meta->template_vertices, meta->template_edges, meta->template_s, meta->template_t);
    Rat d_st = distances_from(tmpl, tmpl.s())[tmpl.t()];
    Rat host_scale = rat_pow(d_st, static_cast<unsigned>(meta->levels));

    std::vector<int> inner_ids;
    for (int v = 0; v < meta->template_vertices; ++v)
        if (v != meta->template_s && v != meta->template_t) inner_ids.push_back(v);

    std::vector<CopyDescriptor> out;
    for (const CopyInfo& info : meta->copies_by_level[k - 1]) {
        CopyDescriptor d;
        d.level = k;
        d.path = info.path;
        d.scale = host_scale * info.replaced_len / d_st;
        d.vertex_map.assign(meta->template_vertices, -1);
        d.vertex_map[meta->template_s] = info.s;
        d.vertex_map[meta->template_t] = info.t;
        for (size_t i = 0; i < inner_ids.size(); ++i) d.vertex_map[inner_ids[i]] = info.inner[i];
        out.push_back(std::move(d));
    }
    return out;
}

CopyCheck verify_copy(const StGraph& host, const std::vector<int>& mapped, const StGraph& tmpl) {
    if (static_cast<int>(mapped.size()) != tmpl.vertex_count())
        throw std::invalid_argument("verify_copy: bijection size must equal template vertex count");
    for (int h : mapped)
        if (h < 0 || h >= host.vertex_count()) throw std::invalid_argument("verify_copy: host vertex out of range");

    DistanceMatrix td = all_pairs_distances(tmpl);
    std::vector<std::vector<Rat>> hd(mapped.size());
    for (size_t i = 0; i < mapped.size(); ++i) hd[i] = distances_from(host, mapped[i]);

    CopyCheck out;
    Rat scale = 0;
    for (size_t u = 0; u < mapped.size() && scale == 0; ++u)
        for (size_t v = u + 1; v < mapped.size() && scale == 0; ++v)
            if (td.at(static_cast<int>(u), static_cast<int>(v)) > 0)
                scale = hd[u][mapped[v]] / td.at(static_cast<int>(u), static_cast<int>(v));
    if (scale == 0) {
        out.witness = {0, 1};
        return out;
    }
    for (size_t u = 0; u < mapped.size(); ++u)
        for (size_t v = u + 1; v < mapped.size(); ++v)
            if (hd[u][mapped[v]] != scale * td.at(static_cast<int>(u), static_cast<int>(v))) {
                out.witness = {static_cast<int>(u), static_cast<int>(v)};
                return out;
            }
    out.scale = scale;
    return out;
}

}  // namespace cutgap
