#include "kms/enumerator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>

#include "kms/error.hpp"
#include "kms/spectra.hpp"

namespace kms {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Column j of a labeling: bit (j-1-i) holds adjacency of positions i and j,
// so comparing columns as integers is comparing their bits in graph6 order.
std::uint32_t column_bits(const Graph& g, const std::vector<int>& perm, int j, int v) {
    std::uint32_t col = 0;
    for (int i = 0; i < j; ++i) col = (col << 1) | (g.adjacent(perm[i], v) ? 1U : 0U);
    return col;
}

class MinimalLabeling {
public:
    explicit MinimalLabeling(const Graph& g) : g_(g), n_(g.order()), perm_(n_), used_(n_, false), twins_(n_, 0) {
        // swapping twins is an automorphism, so only the first unused one of a class needs trying
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < v; ++u) {
                const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((g.row(u) & mask) == (g.row(v) & mask)) twins_[v] |= std::uint64_t{1} << u;
            }
    }

    // Smallest column sequence over all labelings.
    std::vector<std::uint32_t> minimize() {
        best_.assign(n_, kUnset);
        search_min(0);
        return best_;
    }

    // True unless some labeling beats `target`.
    bool nothing_smaller_than(const std::vector<std::uint32_t>& target) {
        best_ = target;
        return !search_smaller(0);
    }

private:
    void search_min(int j) {
        if (j == n_) return;
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || shadowed(v)) continue;
            const std::uint32_t col = column_bits(g_, perm_, j, v);
            if (col > best_[j]) continue;
            if (col < best_[j]) {
                best_[j] = col;
                std::fill(best_.begin() + j + 1, best_.end(), kUnset);
            }
            perm_[j] = v;
            used_[v] = true;
            search_min(j + 1);
            used_[v] = false;
        }
    }

    bool search_smaller(int j) {
        if (j == n_) return false;
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || shadowed(v)) continue;
            const std::uint32_t col = column_bits(g_, perm_, j, v);
            if (col > best_[j]) continue;
            if (col < best_[j]) return true;
            perm_[j] = v;
            used_[v] = true;
            const bool found = search_smaller(j + 1);
            used_[v] = false;
            if (found) return true;
        }
        return false;
    }

    bool shadowed(int v) const {
        for (std::uint64_t t = twins_[v]; t; t &= t - 1)
            if (!used_[std::countr_zero(t)]) return true;
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> perm_;
    std::vector<bool> used_;
    std::vector<std::uint64_t> twins_;  // earlier vertices with the same neighbours apart from each other
    std::vector<std::uint32_t> best_;
};

std::vector<std::uint32_t> own_columns(const Graph& g) {
    std::vector<int> identity(g.order());
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::uint32_t> cols(g.order());
    for (int j = 0; j < g.order(); ++j) cols[j] = column_bits(g, identity, j, j);
    return cols;
}

std::uint64_t code_from_columns(const std::vector<std::uint32_t>& cols) {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < cols.size(); ++j) code = (code << j) | cols[j];
    return code;
}

void check_cap(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw Error(ErrorCode::order_exceeds_cap, "canonical form supports n <= " + std::to_string(kCanonicalCap));
}

// Backtracking isomorphism for orders past the canonical-form cap.
class Matcher {
public:
    Matcher(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()), map_(n_, -1), taken_(n_, false) {
        // visit g's vertices so each one after the first has an earlier neighbour where possible
        std::vector<bool> placed(n_, false);
        while (static_cast<int>(order_.size()) < n_) {
            int start = -1;
            for (int v = 0; v < n_; ++v)
                if (!placed[v] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
            std::vector<int> queue{start};
            placed[start] = true;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                order_.push_back(queue[i]);
                for (int w : VertexSet(g.row(queue[i])).vertices())
                    if (!placed[w]) {
                        placed[w] = true;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool run() { return extend(0); }

private:
    bool extend(int depth) {
        if (depth == n_) return true;
        const int v = order_[depth];
        for (int w = 0; w < n_; ++w) {
            if (taken_[w] || h_.degree(w) != g_.degree(v)) continue;
            bool consistent = true;
            for (int i = 0; i < depth && consistent; ++i) {
                const int u = order_[i];
                consistent = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
            }
            if (!consistent) continue;
            map_[v] = w;
            taken_[w] = true;
            if (extend(depth + 1)) return true;
            taken_[w] = false;
            map_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> taken_;
};

std::vector<std::int64_t> distance_profile(const Graph& g) {
    if (!is_connected(g)) return {};
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::int64_t> sums(g.order());
    for (int v = 0; v < g.order(); ++v) sums[v] = d.row_sum(v);
    std::sort(sums.begin(), sums.end());
    return sums;
}

}  // namespace

std::uint64_t pattern_code(const Graph& g) {
    if (g.order() > 11) throw Error(ErrorCode::order_exceeds_cap, "pattern code holds at most 11 vertices");
    return code_from_columns(own_columns(g));
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1ULL) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

Graph CanonicalForm::graph() const { return graph_from_code(n, code); }

CanonicalForm canonical_form(const Graph& g) {
    check_cap(g);
    return {g.order(), code_from_columns(MinimalLabeling(g).minimize())};
}

bool is_canonical(const Graph& g) {
    check_cap(g);
    return MinimalLabeling(g).nothing_smaller_than(own_columns(g));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    if (g.order() <= kCanonicalCap) return canonical_form(g) == canonical_form(h);
    if (distance_profile(g) != distance_profile(h)) return false;
    return Matcher(g, h).run();
}

std::vector<Graph> all_graphs(int n) {
    if (n < 1) throw Error(ErrorCode::size_out_of_range, "order must be at least 1");
    if (n > kBuiltinEnumerationCap)
        throw Error(ErrorCode::order_exceeds_cap, "built-in enumeration stops at n = " +
                                                      std::to_string(kBuiltinEnumerationCap));
    // Prefixes of a minimal labeling are minimal, so canonical graphs on j+1
    // vertices are canonical graphs on j vertices plus one new column.
    std::vector<Graph> level{Graph(1)};
    for (int j = 1; j < n; ++j) {
        std::vector<std::pair<std::uint64_t, Graph>> next;
        for (const Graph& parent : level) {
            for (std::uint64_t col = 0; col < (1ULL << j); ++col) {
                std::vector<std::uint64_t> rows = parent.rows();
                rows.push_back(0);
                for (int i = 0; i < j; ++i) {
                    if (!((col >> (j - 1 - i)) & 1ULL)) continue;
                    rows[i] |= 1ULL << j;
                    rows[j] |= 1ULL << i;
                }
                Graph child = Graph::from_rows(std::move(rows));
                if (is_canonical(child)) next.emplace_back(pattern_code(child), std::move(child));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [code, graph] : next) level.push_back(std::move(graph));
    }
    return level;
}

std::vector<Graph> connected_graphs(int n) {
    if (n > kBuiltinEnumerationCap)
        throw Error(ErrorCode::order_exceeds_cap,
                    "built-in enumeration stops at n = " + std::to_string(kBuiltinEnumerationCap) +
                        "; supply a graph6 file for larger orders");
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace kms
