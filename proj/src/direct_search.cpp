#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "kms/error.hpp"
#include "kms/matching.hpp"

namespace kms {
namespace {

class Search {
public:
    Search(const Graph& g, std::vector<int> targets, int cap, const SearchOptions& options)
        : cap_(cap), budget_(options.node_budget), residual_(std::move(targets)) {
        edges_ = g.edges();
        // most constrained edges first
        std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return std::min(g.degree(a.u), g.degree(a.v)) > std::min(g.degree(b.u), g.degree(b.v));
        });
        remaining_ = g.degrees();
        weights_.assign(edges_.size(), 0);
    }

    std::optional<KMatching> run() {
        const int total = std::accumulate(residual_.begin(), residual_.end(), 0);
        if (total % 2 != 0) return std::nullopt;
        for (std::size_t v = 0; v < residual_.size(); ++v)
            if (residual_[v] > cap_ * remaining_[v]) return std::nullopt;
        if (!descend(0)) return std::nullopt;
        KMatching out;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (weights_[i] > 0) out.weights.push_back({edges_[i], weights_[i]});
        std::sort(out.weights.begin(), out.weights.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
            return std::pair(a.edge.u, a.edge.v) < std::pair(b.edge.u, b.edge.v);
        });
        return out;
    }

private:
    std::string state_key(std::size_t idx) const {
        std::string key(residual_.size() + 1, '\0');
        key[0] = static_cast<char>(idx);
        for (std::size_t v = 0; v < residual_.size(); ++v) key[v + 1] = static_cast<char>(residual_[v]);
        return key;
    }

    bool feasible(int v) const { return residual_[v] <= cap_ * remaining_[v]; }

    bool descend(std::size_t idx) {
        if (idx == edges_.size()) return true;
        if (++nodes_ > budget_)
            throw Error(ErrorCode::budget_exceeded, "direct search exceeded " + std::to_string(budget_) + " nodes");
        std::string key = state_key(idx);
        if (failed_.contains(key)) return false;

        const auto [u, v] = edges_[idx];
        int hi = std::min({cap_, residual_[u], residual_[v]});
        int lo = 0;
        // the last open edge at a vertex must close it exactly
        if (remaining_[u] == 1) lo = std::max(lo, residual_[u]);
        if (remaining_[v] == 1) lo = std::max(lo, residual_[v]);
        if (remaining_[u] == 1 && remaining_[v] == 1 && residual_[u] != residual_[v]) lo = hi + 1;

        --remaining_[u];
        --remaining_[v];
        for (int w = hi; w >= lo; --w) {
            residual_[u] -= w;
            residual_[v] -= w;
            weights_[idx] = w;
            if (feasible(u) && feasible(v) && descend(idx + 1)) return true;
            residual_[u] += w;
            residual_[v] += w;
        }
        weights_[idx] = 0;
        ++remaining_[u];
        ++remaining_[v];
        failed_.insert(std::move(key));
        return false;
    }

    int cap_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> residual_;
    std::vector<int> remaining_;
    std::vector<int> weights_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<KMatching> direct_search(const Graph& g, const std::vector<int>& targets, int cap,
                                       const SearchOptions& options) {
    if (static_cast<int>(targets.size()) != g.order())
        throw Error(ErrorCode::parameter_out_of_range, "one target per vertex required");
    if (cap < 0 || cap > options.max_cap)
        throw Error(ErrorCode::budget_exceeded, "weight cap " + std::to_string(cap) + " outside 0.." +
                                                    std::to_string(options.max_cap));
    if (g.size() > options.max_edges)
        throw Error(ErrorCode::budget_exceeded, std::to_string(g.size()) + " edges exceed the search limit of " +
                                                    std::to_string(options.max_edges));
    for (int t : targets)
        if (t < 0 || t > cap) throw Error(ErrorCode::parameter_out_of_range, "targets must lie in 0..cap");
    return Search(g, targets, cap, options).run();
}

bool direct_property_oracle(const Graph& g, const PropertyQuery& q, const SearchOptions& options) {
    const int n = g.order();
    validate_query(n, q);
    if (q.property != Property::perfect_k_matching && !is_connected(g))
        throw Error(ErrorCode::disconnected_input, "property is defined for connected graphs");

    auto every_vertex_deficient = [&](int deficit) {
        for (int v = 0; v < n; ++v) {
            std::vector<int> targets(n, q.k);
            targets[v] = q.k - deficit;
            if (!direct_search(g, targets, q.k, options)) return false;
        }
        return true;
    };

    switch (q.property) {
        case Property::perfect_k_matching:
            return direct_search(g, std::vector<int>(n, q.k), q.k, options).has_value();
        case Property::kd_critical:
            return every_vertex_deficient(q.d);
        case Property::gfc:
            if (q.k % 2 == 1) return every_vertex_deficient(1);
            return empty_set_is_unique_barrier(g, q.k);
        case Property::gbc:
            return empty_set_is_unique_barrier(g, q.k);
    }
    return false;
}

}  // namespace kms
