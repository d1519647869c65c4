#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kms/graph.hpp"

namespace kms {

/// Largest order canonical_form accepts.
inline constexpr int kCanonicalCap = 10;
/// Largest order connected_graphs generates without an external file.
inline constexpr int kBuiltinEnumerationCap = 8;

/// Lexicographically smallest upper-triangle bit string over all relabelings.
/// Bits run in graph6 order, (0,1),(0,2),(1,2),(0,3),..., with the first pair
/// as the most significant bit of `code`, so numeric and lexicographic order agree.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;

    Graph graph() const;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Upper-triangle code of g under its current labeling.
std::uint64_t pattern_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

CanonicalForm canonical_form(const Graph& g);
/// g's own pattern equals its canonical form.
bool is_canonical(const Graph& g);

/// Canonical forms for n <= 10, a degree-guided backtracking matcher beyond.
bool are_isomorphic(const Graph& g, const Graph& h);

/// One canonical representative per isomorphism class of connected graphs of
/// order n, in increasing code order. Throws order-exceeds-cap beyond n = 8.
std::vector<Graph> connected_graphs(int n);

/// Every graph (connected or not) of order n, canonical, increasing code order.
std::vector<Graph> all_graphs(int n);

}  // namespace kms
