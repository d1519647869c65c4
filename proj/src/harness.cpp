#include "kms/harness.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kms/enumerator.hpp"
#include "kms/error.hpp"

namespace kms {

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::T5: return "T5";
    }
    return "?";
}

TheoremId theorem_from_string(const std::string& name) {
    for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5})
        if (name == to_string(id)) return id;
    throw Error(ErrorCode::invalid_spec, "unknown theorem '" + name + "' (expected T1..T5)");
}

void validate(const TheoremSpec& spec) {
    const auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::invalid_spec, std::string(to_string(spec.id)) + ": " + why);
    };
    const int n = spec.n, k = spec.k;
    if (n > kMaxOrder) fail("order too large");
    switch (spec.id) {
        case TheoremId::T1:
            if (k < 1 || k % 2 == 0) fail("k must be odd");
            if (n < 6 || n % 2 == 1) fail("n must be even and at least 6");
            break;
        case TheoremId::T2:
            if (k < 3 || k % 2 == 0) fail("k must be odd and at least 3");
            if (spec.d < 1 || spec.d >= k) fail("d must satisfy 1 <= d < k");
            if (n < 3) fail("n must be at least 3");
            if ((n - spec.d) % 2 != 0) fail("n and d must have the same parity");
            break;
        case TheoremId::T3:
            if (k < 3 || k % 2 == 0) fail("k must be odd and at least 3");
            if (n < 3 || n % 2 == 0) fail("n must be odd and at least 3");
            break;
        case TheoremId::T4:
            if (k < 3 || k % 2 == 0) fail("k must be odd and at least 3");
            if (n < 4 || n % 2 == 1) fail("n must be even and at least 4");
            break;
        case TheoremId::T5:
            if (k < 2 || k % 2 == 1) fail("k must be even and at least 2");
            if (n < 3) fail("n must be at least 3");
            break;
    }
}

std::string branch_of(const TheoremSpec& spec) {
    validate(spec);
    const bool small_even = spec.n % 2 == 0 && spec.n <= 8;
    switch (spec.id) {
        case TheoremId::T1: return spec.n <= 8 ? "i" : "ii";
        case TheoremId::T3: return "i";
        case TheoremId::T2:
        case TheoremId::T4:
        case TheoremId::T5: return small_even ? "ii" : "i";
    }
    return "i";
}

PropertyQuery property_for(const TheoremSpec& spec) {
    validate(spec);
    switch (spec.id) {
        case TheoremId::T1: return {Property::perfect_k_matching, spec.k, 0};
        case TheoremId::T2: return {Property::kd_critical, spec.k, spec.d};
        case TheoremId::T3: return {Property::gfc, spec.k, 0};
        case TheoremId::T4: return {Property::gbc, spec.k, 0};
        case TheoremId::T5: return {spec.n % 2 == 1 ? Property::gfc : Property::gbc, spec.k, 0};
    }
    return {};
}

namespace {

FamilySpec exceptional_family(const TheoremSpec& spec) {
    const std::string branch = branch_of(spec);
    if (spec.id == TheoremId::T1)
        return branch == "i" ? FamilySpec::split_star(spec.n, spec.n / 2 - 1) : FamilySpec::pendant_pair(spec.n);
    return branch == "i" ? FamilySpec::pendant_clique(spec.n) : FamilySpec::split_star(spec.n, spec.n / 2);
}

}  // namespace

Threshold threshold_for(const TheoremSpec& spec) {
    const FamilySpec family = exceptional_family(spec);
    return {closed_form_lambda1(family).value, family, build_family(family)};
}

// ---- sources ----------------------------------------------------------------

GraphSource enumerated_source(int n) {
    return {connected_graphs(n), "enumerated connected graphs, n=" + std::to_string(n), true};
}

GraphSource file_source(const std::string& path, int n) {
    GraphSource source{read_graph6_file(path), "graph6 file " + path, true};
    for (const Graph& g : source.graphs)
        if (g.order() != n)
            throw Error(ErrorCode::source_order_mismatch, path + " holds a graph of order " +
                                                              std::to_string(g.order()) + ", expected " + std::to_string(n));
    return source;
}

namespace {

// Cheap isomorphism invariant used to bucket candidates before exact tests.
std::vector<std::int64_t> invariant_key(const Graph& g) {
    std::vector<std::int64_t> key{g.size()};
    auto degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    key.insert(key.end(), degs.begin(), degs.end());
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::int64_t> sums(g.order());
    for (int v = 0; v < g.order(); ++v) sums[v] = d.row_sum(v);
    std::sort(sums.begin(), sums.end());
    key.insert(key.end(), sums.begin(), sums.end());
    return key;
}

void add_unique(std::vector<Graph>& out, std::map<std::vector<std::int64_t>, std::vector<std::size_t>>& buckets,
                Graph g) {
    auto& bucket = buckets[invariant_key(g)];
    for (std::size_t idx : bucket)
        if (are_isomorphic(out[idx], g)) return;
    bucket.push_back(out.size());
    out.push_back(std::move(g));
}

}  // namespace

GraphSource sampled_source(int n, int random_count, std::uint64_t seed) {
    if (n < 3 || n > 20) throw Error(ErrorCode::parameter_out_of_range, "sampled mode supports 3 <= n <= 20");
    std::vector<Graph> graphs;
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets;

    // K_s ∨ (K_a ∪ K_b ∪ K_c ∪ tK_1), a >= b >= c, zero-size parts dropped
    for (int s = 1; s < n; ++s)
        for (int a = 0; a <= n - s; ++a)
            for (int b = 0; b <= std::min(a, n - s - a); ++b)
                for (int c = 0; c <= std::min(b, n - s - a - b); ++c) {
                    const int t = n - s - a - b - c;
                    std::vector<int> parts;
                    for (int p : {a, b, c})
                        if (p > 0) parts.push_back(p);
                    add_unique(graphs, buckets, build_family(FamilySpec::general(s, parts, t)));
                }

    std::mt19937_64 rng(seed);
    const double densities[] = {0.3, 0.5, 0.7, 0.9};
    for (int made = 0, attempt = 0; made < random_count && attempt < 100 * random_count; ++attempt) {
        std::bernoulli_distribution edge(densities[attempt % 4]);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.push_back({u, v});
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        add_unique(graphs, buckets, std::move(g));
        ++made;
    }
    return {std::move(graphs),
            "sampled: K_s v (K_a u K_b u K_c u tK_1) families plus " + std::to_string(random_count) +
                " random connected graphs (seed " + std::to_string(seed) + "), n=" + std::to_string(n),
            false};
}

// ---- verification -----------------------------------------------------------

namespace {

struct SortKey {
    std::uint64_t code = 0;
    std::string graph6;
    friend auto operator<=>(const SortKey&, const SortKey&) = default;
};

SortKey sort_key(const Graph& g) {
    if (g.order() <= kCanonicalCap) return {canonical_form(g).code, write_graph6(g)};
    return {0, write_graph6(g)};
}

void check_source(const GraphSource& source, int n) {
    for (const Graph& g : source.graphs) {
        if (g.order() != n)
            throw Error(ErrorCode::source_order_mismatch,
                        "source graph of order " + std::to_string(g.order()) + ", expected " + std::to_string(n));
        if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, "source graph " + write_graph6(g) + " is disconnected");
    }
}

}  // namespace

TheoremReport verify_theorem(const TheoremSpec& spec, const GraphSource& source, const RunOptions& options) {
    validate(spec);
    check_source(source, spec.n);
    const Threshold threshold = threshold_for(spec);
    const PropertyQuery query = property_for(spec);

    TheoremReport report;
    report.spec = spec;
    report.branch = branch_of(spec);
    report.source = source.description;
    report.exhaustive = source.exhaustive;
    report.eps = options.eps;
    report.tol = options.eigen.tol;

    const std::size_t count = source.graphs.size();
    std::vector<VerdictRow> rows(count);
    std::vector<SortKey> keys(count);
    parallel_for(count, options.workers, [&](std::size_t i) {
        const Graph& g = source.graphs[i];
        VerdictRow& row = rows[i];
        row.graph6 = write_graph6(g);
        row.lambda1 = distance_spectral_radius(g, options.eigen).lambda1;
        row.threshold = threshold.value;
        row.cmp = compare(row.lambda1, threshold.value, options.eps);
        row.property = decide_property(g, query).holds;
        row.exception = are_isomorphic(g, threshold.exceptional);
        row.violation = row.cmp != Comparison::above && !row.property && !row.exception;
        keys[i] = sort_key(g);
    });

    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t i : order) {
        const VerdictRow& row = rows[i];
        report.violations += row.violation;
        if (row.exception) {
            ++report.exceptions;
            if (row.cmp != Comparison::equal || row.property) report.exceptions_consistent = false;
        }
        report.rows.push_back(row);
    }

    if (!source.exhaustive)
        report.note = "non-exhaustive: sampled graphs only; the statement quantifies over every connected graph of order " +
                      std::to_string(spec.n);
    return report;
}

bool SharpnessResult::ok() const {
    return attains_threshold && !checks.empty() &&
           std::all_of(checks.begin(), checks.end(),
                       [](const WitnessCheck& c) { return c.property_fails && c.witness_violates; });
}

namespace {

VertexSet first_vertices(int count) { return VertexSet::range(count); }

// Direct evaluation of the query's inequality at one subset.
bool violates(const Graph& g, VertexSet s, const PropertyQuery& q) {
    const RemovalCounts rc = removal_counts(g, s);
    const int k = q.k, size = s.size();
    const int lhs_odd = rc.odd_nontrivial + k * rc.isolated;
    const bool odd_k = k % 2 == 1;
    switch (q.property) {
        case Property::perfect_k_matching: return odd_k ? lhs_odd > k * size : rc.isolated > size;
        case Property::gfc: return odd_k ? lhs_odd > k * size - 1 : rc.isolated > size - 1;
        case Property::gbc: return odd_k ? lhs_odd > k * size - 2 : rc.isolated > size - 1;
        case Property::kd_critical: return lhs_odd > k * size - q.d;
    }
    return false;
}

WitnessCheck witness_check(const std::string& label, const Graph& g, VertexSet s, const PropertyQuery& q) {
    return {label, g, s, !decide_property(g, q).holds, violates(g, s, q)};
}

}  // namespace

SharpnessResult sharpness_check(const TheoremSpec& spec, const RunOptions& options) {
    const Threshold threshold = threshold_for(spec);
    const PropertyQuery query = property_for(spec);
    SharpnessResult result;
    result.threshold = threshold.value;
    result.exceptional_lambda1 = distance_spectral_radius(threshold.exceptional, options.eigen).lambda1;
    result.attains_threshold = compare(result.exceptional_lambda1, threshold.value, options.eps) == Comparison::equal;

    // In build_family labels the core clique comes first, so the witness is
    // vertex 0 for the apex families and 0..k-1 for S_{n,k}.
    const FamilySpec& fam = threshold.family;
    const VertexSet core = first_vertices(fam.s);
    result.checks.push_back(witness_check(fam.describe(), threshold.exceptional, core, query));

    const int n = spec.n;
    if (spec.id == TheoremId::T1 && branch_of(spec) == "ii") {
        const int s = n / 2 - 1;
        result.checks.push_back(witness_check(FamilySpec::split_star(n, s).describe(), split_star(n, s), first_vertices(s), query));
    }
    if (spec.id == TheoremId::T5) {
        const int s = n % 2 == 1 ? (n - 1) / 2 : n / 2;
        if (n % 2 == 1 || branch_of(spec) == "i")
            result.checks.push_back(
                witness_check(FamilySpec::split_star(n, s).describe(), split_star(n, s), first_vertices(s), query));
    }
    return result;
}

Minimizer minimizer_search(const PropertyQuery& query, const GraphSource& source, const RunOptions& options) {
    const std::size_t count = source.graphs.size();
    std::vector<char> lacking(count, 0);
    std::vector<double> lambda(count, 0.0);
    parallel_for(count, options.workers, [&](std::size_t i) {
        const Graph& g = source.graphs[i];
        if (decide_property(g, query).holds) return;
        lacking[i] = 1;
        lambda[i] = distance_spectral_radius(g, options.eigen).lambda1;
    });

    Minimizer best;
    std::size_t best_idx = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (!lacking[i]) continue;
        ++best.candidates;
        if (best_idx == count || compare(lambda[i], lambda[best_idx], options.eps) == Comparison::below) best_idx = i;
    }
    if (best_idx == count) throw Error(ErrorCode::empty_candidate_set, "every source graph has the property");
    best.graph = source.graphs[best_idx];
    best.lambda1 = lambda[best_idx];
    for (std::size_t i = 0; i < count; ++i)
        if (lacking[i] && i != best_idx && compare(lambda[i], best.lambda1, options.eps) == Comparison::equal) ++best.ties;
    return best;
}

std::vector<TheoremSpec> exhaustive_cells() {
    std::vector<TheoremSpec> cells;
    for (int n : {6, 8})
        for (int k : {1, 3, 5}) cells.push_back({TheoremId::T1, n, k, 0});
    for (int k : {3, 5})
        for (int d = 1; d < k; ++d)
            for (int n = 3; n <= 8; ++n)
                if ((n - d) % 2 == 0) cells.push_back({TheoremId::T2, n, k, d});
    for (int n : {3, 5, 7})
        for (int k : {3, 5}) cells.push_back({TheoremId::T3, n, k, 0});
    for (int n : {4, 6, 8})
        for (int k : {3, 5}) cells.push_back({TheoremId::T4, n, k, 0});
    for (int n = 3; n <= 8; ++n)
        for (int k : {2, 4}) cells.push_back({TheoremId::T5, n, k, 0});
    return cells;
}

}  // namespace kms
