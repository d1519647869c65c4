#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kms {

/// Largest order a Graph can hold (one 64-bit adjacency row per vertex).
inline constexpr int kMaxOrder = 64;

/// A set of vertices stored as a bit mask over 0..63.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    static VertexSet range(int n) { return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }

    VertexSet with(int v) const { return VertexSet(bits_ | (1ULL << v)); }
    std::vector<int> vertices() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Order by size, then lexicographically by the sorted vertex list.
bool set_order_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    /// Rows must be symmetric and loop-free; throws otherwise.
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const;
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1ULL; }
    std::uint64_t row(int v) const { return rows_[v]; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    std::vector<int> degrees() const;
    VertexSet vertex_set() const { return VertexSet::range(order()); }

    /// Edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Vertex i of the result is vertex perm[i] of this graph.
    Graph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}
    void check_vertex(int v) const;

    std::vector<std::uint64_t> rows_;
};

enum class BasicKind { path, cycle, complete, complete_bipartite, empty };

/// Path and cycle vertices follow traversal order; complete_bipartite puts
/// the first side on 0..a-1 and the second on a..a+b-1.
Graph build_basic(BasicKind kind, int a, int b = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

/// G ∨ H: G keeps labels 0..|G|-1, H is shifted after it.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// S_{n,k} = K_k ∨ (n-k)K_1 with the clique on 0..k-1.
Graph split_star(int n, int k);
/// Induced subgraph on the survivors, relabeled in increasing order.
Graph delete_vertices(const Graph& g, VertexSet removed);

struct ComponentStats {
    std::vector<VertexSet> components;
    int isolated = 0;     // i
    int odd_nontrivial = 0;  // odd
    int odd_total = 0;    // o = i + odd
};

ComponentStats component_stats(const Graph& g);

/// Counts (i, odd) of G - removed without materializing the subgraph.
struct RemovalCounts {
    int isolated = 0;
    int odd_nontrivial = 0;
};
RemovalCounts removal_counts(const Graph& g, VertexSet removed);

/// Connected component of `start` inside the vertex subset `within`.
VertexSet component_of(const Graph& g, int start, VertexSet within);

bool is_connected(const Graph& g);

// graph6 codec

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);
/// Reads one graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace kms
