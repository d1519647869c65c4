#include "kms/graph.hpp"

#include <algorithm>

#include "kms/error.hpp"

namespace kms {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= 1ULL << v;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

bool set_order_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices() < b.vertices();
}

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.vertices()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxOrder)
        throw Error(ErrorCode::size_out_of_range, "order " + std::to_string(n) + " outside 0.." +
                                                      std::to_string(kMaxOrder));
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw Error(ErrorCode::vertex_out_of_range, "self-loop at " + std::to_string(u));
        g.rows_[u] |= 1ULL << v;
        g.rows_[v] |= 1ULL << u;
    }
    return g;
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > kMaxOrder) throw Error(ErrorCode::size_out_of_range, "too many rows");
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int u = 0; u < n; ++u) {
        if ((rows[u] & ~all) != 0 || ((rows[u] >> u) & 1ULL))
            throw Error(ErrorCode::vertex_out_of_range, "row " + std::to_string(u) + " is not simple");
        for (std::uint64_t b = rows[u]; b != 0; b &= b - 1) {
            int v = std::countr_zero(b);
            if (!((rows[v] >> u) & 1ULL))
                throw Error(ErrorCode::vertex_out_of_range, "adjacency rows are not symmetric");
        }
    }
    return Graph(std::move(rows));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw Error(ErrorCode::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " not in 0.." + std::to_string(order() - 1));
}

int Graph::size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) out[v] = std::popcount(rows_[v]);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (std::uint64_t b = rows_[u] & ~((2ULL << u) - 1); b != 0; b &= b - 1)
            out.push_back({u, std::countr_zero(b)});
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::vertex_out_of_range, "self-loop");
    auto rows = rows_;
    rows[u] |= 1ULL << v;
    rows[v] |= 1ULL << u;
    return Graph(std::move(rows));
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto rows = rows_;
    rows[u] &= ~(1ULL << v);
    rows[v] &= ~(1ULL << u);
    return Graph(std::move(rows));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorCode::vertex_out_of_range, "permutation has wrong length");
    std::vector<int> where(n, -1);
    for (int i = 0; i < n; ++i) {
        check_vertex(perm[i]);
        if (where[perm[i]] != -1) throw Error(ErrorCode::vertex_out_of_range, "not a permutation");
        where[perm[i]] = i;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (std::uint64_t b = rows_[perm[i]]; b != 0; b &= b - 1)
            rows[i] |= 1ULL << where[std::countr_zero(b)];
    return Graph(std::move(rows));
}

Graph path_graph(int n) {
    if (n < 1) throw Error(ErrorCode::size_out_of_range, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::size_out_of_range, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw Error(ErrorCode::size_out_of_range, "complete graph needs at least one vertex");
    Graph g(n);
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = VertexSet::range(n).bits() & ~(1ULL << v);
    return Graph::from_rows(std::move(rows));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error(ErrorCode::size_out_of_range, "bipartite sides must be non-empty");
    return join(empty_graph(a), empty_graph(b));
}

Graph empty_graph(int n) {
    if (n < 1) throw Error(ErrorCode::size_out_of_range, "empty graph needs at least one vertex");
    return Graph(n);
}

Graph build_basic(BasicKind kind, int a, int b) {
    switch (kind) {
        case BasicKind::path: return path_graph(a);
        case BasicKind::cycle: return cycle_graph(a);
        case BasicKind::complete: return complete_graph(a);
        case BasicKind::complete_bipartite: return complete_bipartite(a, b);
        case BasicKind::empty: return empty_graph(a);
    }
    throw Error(ErrorCode::size_out_of_range, "unknown graph kind");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order(), m = h.order();
    if (n + m > kMaxOrder) throw Error(ErrorCode::size_out_of_range, "union too large");
    std::vector<std::uint64_t> rows(g.rows());
    for (int v = 0; v < m; ++v) rows.push_back(h.row(v) << n);
    return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order(), m = h.order();
    if (n + m > kMaxOrder) throw Error(ErrorCode::size_out_of_range, "join too large");
    const std::uint64_t left = VertexSet::range(n).bits();
    const std::uint64_t right = VertexSet::range(n + m).bits() & ~left;
    std::vector<std::uint64_t> rows;
    rows.reserve(n + m);
    for (int v = 0; v < n; ++v) rows.push_back(g.row(v) | right);
    for (int v = 0; v < m; ++v) rows.push_back((h.row(v) << n) | left);
    return Graph::from_rows(std::move(rows));
}

Graph split_star(int n, int k) {
    if (k < 1 || k > n || n > kMaxOrder)
        throw Error(ErrorCode::parameter_out_of_range,
                    "S_{n,k} needs 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (k == n) return complete_graph(n);
    return join(complete_graph(k), empty_graph(n - k));
}

Graph delete_vertices(const Graph& g, VertexSet removed) {
    const int n = g.order();
    for (int v : removed.vertices())
        if (v >= n)
            throw Error(ErrorCode::vertex_out_of_range, "vertex " + std::to_string(v) + " not in graph");
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!removed.contains(v)) keep.push_back(v);
    std::vector<std::uint64_t> rows;
    rows.reserve(keep.size());
    for (int v : keep) {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (g.adjacent(v, keep[j])) r |= 1ULL << j;
        rows.push_back(r);
    }
    return Graph::from_rows(std::move(rows));
}

VertexSet component_of(const Graph& g, int start, VertexSet within) {
    const std::uint64_t mask = within.bits();
    std::uint64_t seen = 1ULL << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

ComponentStats component_stats(const Graph& g) {
    ComponentStats stats;
    std::uint64_t left = g.vertex_set().bits();
    while (left != 0) {
        VertexSet comp = component_of(g, std::countr_zero(left), VertexSet(left));
        left &= ~comp.bits();
        stats.components.push_back(comp);
        const int size = comp.size();
        if (size == 1)
            ++stats.isolated;
        else if (size % 2 == 1)
            ++stats.odd_nontrivial;
    }
    stats.odd_total = stats.isolated + stats.odd_nontrivial;
    return stats;
}

RemovalCounts removal_counts(const Graph& g, VertexSet removed) {
    RemovalCounts counts;
    std::uint64_t left = g.vertex_set().bits() & ~removed.bits();
    const std::uint64_t alive = left;
    while (left != 0) {
        const int v = std::countr_zero(left);
        if ((g.row(v) & alive) == 0) {
            ++counts.isolated;
            left &= left - 1;
            continue;
        }
        VertexSet comp = component_of(g, v, VertexSet(alive));
        left &= ~comp.bits();
        if (comp.size() % 2 == 1) ++counts.odd_nontrivial;
    }
    return counts;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return component_of(g, 0, g.vertex_set()) == g.vertex_set();
}

}  // namespace kms
