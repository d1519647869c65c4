#include "kms/matching.hpp"

#include <algorithm>

#include "kms/error.hpp"

namespace kms {

SubsetProfile::SubsetProfile(const Graph& g, int cap) : n_(g.order()) {
    if (n_ > cap || n_ > 30)
        throw Error(ErrorCode::order_exceeds_cap,
                    "order " + std::to_string(n_) + " exceeds subset-scan cap " + std::to_string(cap));
    counts_.resize(std::uint64_t{1} << n_);
    for (std::uint64_t mask = 0; mask < counts_.size(); ++mask) {
        const VertexSet s(mask);
        const RemovalCounts rc = removal_counts(g, s);
        counts_[mask] = {s.size(), rc.isolated, rc.odd_nontrivial};
    }
}

int barrier_value(const SubsetCounts& c, int k) {
    const int base = k * c.isolated - k * c.size;
    return k % 2 == 0 ? base : base + c.odd_nontrivial;
}

DeficiencyReport deficiency(const SubsetProfile& profile, int k) {
    if (k < 1) throw Error(ErrorCode::parameter_out_of_range, "k must be at least 1");
    DeficiencyReport report;
    report.k = k;
    report.value = barrier_value(profile[0], k);
    for (std::uint64_t mask = 0; mask < profile.subset_count(); ++mask) {
        const int value = barrier_value(profile[mask], k);
        if (value > report.value) {
            report.value = value;
            report.barriers.clear();
        }
        if (value == report.value) report.barriers.emplace_back(mask);
    }
    std::sort(report.barriers.begin(), report.barriers.end(), set_order_less);
    for (VertexSet s : report.barriers) report.barrier_stats.push_back(profile[s.bits()]);
    return report;
}

DeficiencyReport deficiency(const Graph& g, int k, int cap) {
    if (k < 1) throw Error(ErrorCode::parameter_out_of_range, "k must be at least 1");
    return deficiency(SubsetProfile(g, cap), k);
}

std::vector<VertexSet> k_barriers(const Graph& g, int k, int cap) {
    return deficiency(g, k, cap).barriers;
}

const char* to_string(Property p) {
    switch (p) {
        case Property::perfect_k_matching: return "perfect-k-matching";
        case Property::gfc: return "gfc";
        case Property::gbc: return "gbc";
        case Property::kd_critical: return "kd-critical";
    }
    return "?";
}

Property property_from_string(const std::string& name) {
    for (Property p : {Property::perfect_k_matching, Property::gfc, Property::gbc, Property::kd_critical})
        if (name == to_string(p)) return p;
    throw Error(ErrorCode::invalid_query, "unknown property '" + name + "'");
}

void validate_query(int n, const PropertyQuery& q) {
    const std::string k = std::to_string(q.k), ns = std::to_string(n);
    if (q.k < 1) throw Error(ErrorCode::invalid_query, "k must be at least 1");
    switch (q.property) {
        case Property::perfect_k_matching:
            if (q.k % 2 == 1 && n % 2 == 1)
                throw Error(ErrorCode::parity_mismatch,
                            "perfect " + k + "-matching with odd k needs even order, got n=" + ns);
            return;
        case Property::gfc:
        case Property::gbc: {
            const bool gfc = q.property == Property::gfc;
            if (q.k < 2) throw Error(ErrorCode::invalid_query, std::string(to_string(q.property)) + " needs k >= 2");
            if (n < 3) throw Error(ErrorCode::invalid_query, "needs order n >= 3");
            if (gfc && n % 2 == 0) throw Error(ErrorCode::parity_mismatch, "GFC_k is defined for odd order, got n=" + ns);
            if (!gfc && n % 2 == 1) throw Error(ErrorCode::parity_mismatch, "GBC_k is defined for even order, got n=" + ns);
            return;
        }
        case Property::kd_critical:
            if (q.k < 3 || q.k % 2 == 0) throw Error(ErrorCode::invalid_query, "k-d-critical needs odd k >= 3");
            if (q.d < 1 || q.d >= q.k)
                throw Error(ErrorCode::invalid_query, "k-d-critical needs 1 <= d < k, got d=" + std::to_string(q.d));
            if (n < 3) throw Error(ErrorCode::invalid_query, "needs order n >= 3");
            if ((n - q.d) % 2 != 0)
                throw Error(ErrorCode::parity_mismatch,
                            "k-d-critical needs n ≡ d (mod 2), got n=" + ns + " d=" + std::to_string(q.d));
            return;
    }
}

PropertyVerdict decide_property(const Graph& g, const SubsetProfile& profile, const PropertyQuery& q) {
    const int n = g.order();
    validate_query(n, q);
    if (q.property != Property::perfect_k_matching && !is_connected(g))
        throw Error(ErrorCode::disconnected_input, std::string(to_string(q.property)) + " is defined for connected graphs");

    const std::uint64_t full = VertexSet::range(n).bits();
    const int k = q.k;
    const bool odd_k = k % 2 == 1;
    bool skip_empty = true, skip_full = false;
    // slack(c) >= 0 iff the inequality holds for that subset
    auto slack = [&](const SubsetCounts& c) -> int {
        switch (q.property) {
            case Property::perfect_k_matching:
                return odd_k ? k * c.size - (c.odd_nontrivial + k * c.isolated) : c.size - c.isolated;
            case Property::gfc:
                return odd_k ? k * c.size - 1 - (c.odd_nontrivial + k * c.isolated) : c.size - 1 - c.isolated;
            case Property::gbc:
                return odd_k ? k * c.size - 2 - (c.odd_nontrivial + k * c.isolated) : c.size - 1 - c.isolated;
            case Property::kd_critical:
                return k * c.size - q.d - (c.odd_nontrivial + k * c.isolated);
        }
        return 0;
    };
    switch (q.property) {
        case Property::perfect_k_matching: skip_empty = false; break;
        case Property::gfc:
        case Property::gbc: skip_full = true; break;
        case Property::kd_critical: break;
    }

    PropertyVerdict verdict{true, std::nullopt};
    int worst = 0;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if ((mask == 0 && skip_empty) || (mask == full && skip_full)) continue;
        const int s = slack(profile[mask]);
        if (s >= 0) continue;
        const VertexSet set(mask);
        if (verdict.holds || s < worst || (s == worst && set_order_less(set, *verdict.witness))) {
            verdict.holds = false;
            verdict.witness = set;
            worst = s;
        }
    }
    return verdict;
}

PropertyVerdict decide_property(const Graph& g, const PropertyQuery& q, int cap) {
    validate_query(g.order(), q);
    return decide_property(g, SubsetProfile(g, cap), q);
}

std::vector<int> KMatching::weighted_degrees(int n) const {
    std::vector<int> deg(n, 0);
    for (const auto& we : weights) {
        deg[we.edge.u] += we.weight;
        deg[we.edge.v] += we.weight;
    }
    return deg;
}

bool KMatching::is_valid(const Graph& g, int k) const {
    for (const auto& we : weights)
        if (we.weight < 0 || we.weight > k || !g.adjacent(we.edge.u, we.edge.v)) return false;
    for (int d : weighted_degrees(g.order()))
        if (d > k) return false;
    return true;
}

bool empty_set_is_unique_barrier(const Graph& g, int k, int cap) {
    const auto barriers = k_barriers(g, k, cap);
    return barriers.size() == 1 && barriers.front().empty();
}

bool no_nonempty_barrier(const Graph& g, int k, int cap) {
    const auto barriers = k_barriers(g, k, cap);
    return std::none_of(barriers.begin(), barriers.end(), [](VertexSet s) { return !s.empty(); });
}

}  // namespace kms
