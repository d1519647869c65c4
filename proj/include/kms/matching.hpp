#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kms/graph.hpp"

namespace kms {

/// Default limit on n for anything that scans all 2^n vertex subsets.
inline constexpr int kSubsetCap = 20;

/// (|S|, i(G - S), odd(G - S)) for one subset S.
struct SubsetCounts {
    int size = 0;
    int isolated = 0;
    int odd_nontrivial = 0;
};

/// Component counts of G - S for every S, indexed by the subset's bit mask.
/// Shared by every k, so a graph only pays for the scan once.
class SubsetProfile {
public:
    explicit SubsetProfile(const Graph& g, int cap = kSubsetCap);

    int order() const { return n_; }
    const SubsetCounts& operator[](std::uint64_t mask) const { return counts_[mask]; }
    std::uint64_t subset_count() const { return counts_.size(); }

private:
    int n_;
    std::vector<SubsetCounts> counts_;
};

/// odd(G-S) + k i(G-S) - k|S| for odd k; k i(G-S) - k|S| for even k.
int barrier_value(const SubsetCounts& c, int k);

struct DeficiencyReport {
    int k = 0;
    int value = 0;
    std::vector<VertexSet> barriers;       // every maximizer, by size then lexicographic
    std::vector<SubsetCounts> barrier_stats;  // parallel to barriers
};

/// def_k(G) by exhaustive subset scan. Throws order-exceeds-cap past `cap`.
DeficiencyReport deficiency(const Graph& g, int k, int cap = kSubsetCap);
DeficiencyReport deficiency(const SubsetProfile& profile, int k);

std::vector<VertexSet> k_barriers(const Graph& g, int k, int cap = kSubsetCap);

enum class Property { perfect_k_matching, gfc, gbc, kd_critical };

const char* to_string(Property p);
Property property_from_string(const std::string& name);

struct PropertyQuery {
    Property property = Property::perfect_k_matching;
    int k = 1;
    int d = 0;  // kd_critical only
};

struct PropertyVerdict {
    bool holds = false;
    std::optional<VertexSet> witness;  // a violating S when !holds
};

/// Decides the property through its subset characterization:
///   perfect, odd k:  odd(G-S) + k i(G-S) <= k|S|       for all S ⊆ V
///   perfect, even k: i(G-S) <= |S|                     for all S ⊆ V
///   GFC/GBC, even k: i(G-S) <= |S| - 1                 for ∅ ≠ S ⊂ V
///   GFC, odd k:      odd(G-S) + k i(G-S) <= k|S| - 1   for ∅ ≠ S ⊂ V
///   GBC, odd k:      odd(G-S) + k i(G-S) <= k|S| - 2   for ∅ ≠ S ⊂ V
///   k-d-critical:    odd(G-S) + k i(G-S) <= k|S| - d   for ∅ ≠ S ⊆ V
/// Parity or range violations of the query are errors, never a false verdict.
PropertyVerdict decide_property(const Graph& g, const PropertyQuery& q, int cap = kSubsetCap);
PropertyVerdict decide_property(const Graph& g, const SubsetProfile& profile, const PropertyQuery& q);

/// Throws the error decide_property would raise for this graph order, if any.
void validate_query(int n, const PropertyQuery& q);

struct WeightedEdge {
    Edge edge;
    int weight;
};

/// Integer edge weights in 0..k.
struct KMatching {
    std::vector<WeightedEdge> weights;

    std::vector<int> weighted_degrees(int n) const;
    bool is_valid(const Graph& g, int k) const;
};

struct SearchOptions {
    int max_edges = 30;
    int max_cap = 7;
    std::uint64_t node_budget = 50'000'000;
};

/// Finds weights in 0..cap whose weighted degree equals targets[v] at every
/// vertex, or proves none exists. Throws budget-exceeded past the node budget.
std::optional<KMatching> direct_search(const Graph& g, const std::vector<int>& targets, int cap,
                                       const SearchOptions& options = {});

/// The property from its definition, by constructive search where one exists:
/// perfect k-matching and k-d-criticality by direct_search, GFC with odd k via
/// the k-1 deficient pattern at each vertex, and the remaining GFC/GBC cases
/// by requiring the barrier list to be exactly {∅}.
bool direct_property_oracle(const Graph& g, const PropertyQuery& q, const SearchOptions& options = {});

/// {∅} is the only k-barrier.
bool empty_set_is_unique_barrier(const Graph& g, int k, int cap = kSubsetCap);
/// No non-empty set attains def_k(G).
bool no_nonempty_barrier(const Graph& g, int k, int cap = kSubsetCap);

}  // namespace kms
