#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kms/graph.hpp"
#include "kms/matching.hpp"
#include "kms/quotient.hpp"
#include "kms/spectra.hpp"

namespace kms {

enum class TheoremId { T1, T2, T3, T4, T5 };

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);

/// One parameter cell of a theorem.
///   T1: perfect k-matching, k odd, n even >= 6
///   T2: k-d-critical, k >= 3 odd, 1 <= d < k, n ≡ d (mod 2), n >= 3
///   T3: GFC_k, k >= 3 odd, n odd >= 3
///   T4: GBC_k, k >= 3 odd, n even >= 4
///   T5: GFC_k (n odd) or GBC_k (n even), k even >= 2, n >= 3
struct TheoremSpec {
    TheoremId id = TheoremId::T1;
    int n = 0;
    int k = 0;
    int d = 0;
};

/// Throws invalid-spec when the cell is outside the theorem's hypotheses.
void validate(const TheoremSpec& spec);

/// "i" or "ii": the statement branch covering this order.
std::string branch_of(const TheoremSpec& spec);
PropertyQuery property_for(const TheoremSpec& spec);

struct Threshold {
    double value = 0.0;
    FamilySpec family;   // the exceptional graph's construction
    Graph exceptional;
};

/// The branch's spectral threshold and the graph attaining it.
Threshold threshold_for(const TheoremSpec& spec);

struct GraphSource {
    std::vector<Graph> graphs;
    std::string description;
    bool exhaustive = false;
};

/// Built-in enumeration of connected graphs (n <= 8).
GraphSource enumerated_source(int n);
/// graph6 file; every graph must have order n (source-order-mismatch otherwise).
GraphSource file_source(const std::string& path, int n);
/// Every K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p} ∪ tK_1) with p <= 3, plus seeded random
/// connected graphs, with isomorphic duplicates removed. Not exhaustive.
GraphSource sampled_source(int n, int random_count = 200, std::uint64_t seed = 20260101);

struct RunOptions {
    int workers = 1;
    double eps = kCompareEps;
    EigenOptions eigen;
};

struct VerdictRow {
    std::string graph6;
    double lambda1 = 0.0;
    double threshold = 0.0;
    Comparison cmp = Comparison::equal;
    bool property = false;
    bool exception = false;
    bool violation = false;
};

struct TheoremReport {
    TheoremSpec spec;
    std::string branch;
    std::string source;
    bool exhaustive = false;
    double eps = kCompareEps;
    double tol = 1e-10;
    std::vector<VerdictRow> rows;  // sorted by canonical form (graph6 past n = 10)
    int violations = 0;
    int exceptions = 0;
    /// every exception row compares equal to the threshold and lacks the property
    bool exceptions_consistent = true;
    std::string note;

    bool passed() const { return violations == 0 && exceptions == 1 && exceptions_consistent; }
};

TheoremReport verify_theorem(const TheoremSpec& spec, const GraphSource& source, const RunOptions& options = {});

struct WitnessCheck {
    std::string label;
    Graph graph;
    VertexSet witness;
    bool property_fails = false;    // decide_property says no
    bool witness_violates = false;  // the given S breaks the inequality
};

struct SharpnessResult {
    double threshold = 0.0;
    double exceptional_lambda1 = 0.0;  // by the eigensolver on the built graph
    bool attains_threshold = false;
    std::vector<WitnessCheck> checks;  // first entry is the exceptional graph

    bool ok() const;
};

SharpnessResult sharpness_check(const TheoremSpec& spec, const RunOptions& options = {});

struct Minimizer {
    Graph graph;
    double lambda1 = 0.0;
    int candidates = 0;  // graphs lacking the property
    int ties = 0;        // other candidates within eps of the minimum
};

/// Among graphs lacking the property, the one with the least lambda1(D(G)).
Minimizer minimizer_search(const PropertyQuery& query, const GraphSource& source, const RunOptions& options = {});

enum class LemmaId { L2_6, L2_7, L2_8 };

const char* to_string(LemmaId id);
LemmaId lemma_from_string(const std::string& name);

struct LemmaRanges {
    int max_n = 30;
    int composition_max_n = 12;
    int composition_max_s = 3;
    int composition_max_p = 3;
};

struct LemmaInstance {
    std::string clause;   // "i", "ii", ...
    std::string params;
    std::string lhs_graph;
    std::string rhs_graph;
    double lhs = 0.0;
    double rhs = 0.0;
    Comparison cmp = Comparison::equal;
    bool strict = false;            // "<" rather than "<= with equality iff"
    bool equality_expected = false;
    bool ok = false;
};

struct LemmaReport {
    LemmaId lemma = LemmaId::L2_8;
    std::vector<LemmaInstance> instances;
    int failures = 0;
};

LemmaReport lemma_numeric_check(LemmaId lemma, const LemmaRanges& ranges = {}, const RunOptions& options = {});

/// The runnable exhaustive cells (n <= 8).
std::vector<TheoremSpec> exhaustive_cells();

/// 10 significant digits.
std::string format_number(double x);

std::string to_csv(const TheoremReport& report);
std::string to_json(const TheoremReport& report);
std::string to_csv(const LemmaReport& report);
std::string to_json(const LemmaReport& report);

/// Runs fn(i) for i in [0, count) on `workers` threads.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn);

}  // namespace kms

#include "kms/detail/parallel.hpp"
