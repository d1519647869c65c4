#include "kms/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kms/error.hpp"

namespace kms {

Partition::Partition(int n, std::vector<std::vector<int>> cells) : n_(n), cells_(std::move(cells)) {
    std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto& cell : cells_) {
        if (cell.empty()) throw Error(ErrorCode::invalid_partition, "empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n) throw Error(ErrorCode::invalid_partition, "vertex " + std::to_string(v) + " out of range");
            if (seen[v]++) throw Error(ErrorCode::invalid_partition, "vertex " + std::to_string(v) + " in two cells");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw Error(ErrorCode::invalid_partition, "cells do not cover every vertex");
}

namespace {

void check_orders(const Matrix& m, const Partition& p) {
    if (m.order() != p.order())
        throw Error(ErrorCode::invalid_partition, "partition order " + std::to_string(p.order()) +
                                                      " does not match matrix order " + std::to_string(m.order()));
}

double block_row_sum(const Matrix& m, int row, const std::vector<int>& cols) {
    double s = 0.0;
    for (int c : cols) s += m(row, c);
    return s;
}

}  // namespace

bool is_equitable(const Matrix& m, const Partition& p) {
    check_orders(m, p);
    for (const auto& rows : p.cells())
        for (const auto& cols : p.cells()) {
            const double first = block_row_sum(m, rows.front(), cols);
            for (int r : rows)
                if (block_row_sum(m, r, cols) != first) return false;
        }
    return true;
}

QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p) {
    check_orders(m, p);
    const int k = p.cell_count();
    QuotientMatrix q{Matrix(k), is_equitable(m, p)};
    for (int i = 0; i < k; ++i) {
        const auto& rows = p.cells()[i];
        for (int j = 0; j < k; ++j) {
            double total = 0.0;
            for (int r : rows) total += block_row_sum(m, r, p.cells()[j]);
            q.b(i, j) = total / static_cast<double>(rows.size());
        }
    }
    return q;
}

// ---- families -------------------------------------------------------------

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::invalid_spec, what);
}

}  // namespace

FamilySpec FamilySpec::pendant_pair(int n) {
    require(n >= 3 && n <= kMaxOrder, "K_1 ∨ (K_{n-3} ∪ 2K_1) needs n >= 3");
    return {Family::pendant_pair, n, 1, {}, 0};
}

FamilySpec FamilySpec::pendant_clique(int n) {
    require(n >= 2 && n <= kMaxOrder, "K_1 ∨ (K_{n-2} ∪ K_1) needs n >= 2");
    return {Family::pendant_clique, n, 1, {}, 0};
}

FamilySpec FamilySpec::clique_odd(int n, int s) {
    require(s >= 1 && n >= 2 * s + 1 && n <= kMaxOrder, "K_s ∨ (K_{n-2s-1} ∪ (s+1)K_1) needs s >= 1, n >= 2s+1");
    return {Family::clique_odd, n, s, {}, 0};
}

FamilySpec FamilySpec::clique_even(int n, int s) {
    require(s >= 1 && n >= 2 * s && n <= kMaxOrder, "K_s ∨ (K_{n-2s} ∪ sK_1) needs s >= 1, n >= 2s");
    return {Family::clique_even, n, s, {}, 0};
}

FamilySpec FamilySpec::split_star(int n, int k) {
    require(k >= 1 && k <= n && n <= kMaxOrder, "S_{n,k} needs 1 <= k <= n");
    return {Family::split_star, n, k, {}, 0};
}

FamilySpec FamilySpec::general(int s, std::vector<int> parts, int isolated) {
    require(s >= 1, "core clique must be non-empty");
    require(isolated >= 0, "isolated count must be non-negative");
    for (int p : parts) require(p >= 1, "clique parts must be positive");
    const int n = s + std::accumulate(parts.begin(), parts.end(), 0) + isolated;
    require(n <= kMaxOrder, "order too large");
    return {Family::general, n, s, std::move(parts), isolated};
}

FamilySpec FamilySpec::as_general() const {
    std::vector<int> parts;
    int iso = 0;
    switch (family) {
        case Family::pendant_pair: parts = {n - 3}; iso = 2; break;
        case Family::pendant_clique: parts = {n - 2}; iso = 1; break;
        case Family::clique_odd: parts = {n - 2 * s - 1}; iso = s + 1; break;
        case Family::clique_even: parts = {n - 2 * s}; iso = s; break;
        case Family::split_star: iso = n - s; break;
        case Family::general: parts = this->parts; iso = isolated; break;
    }
    std::erase(parts, 0);
    return general(s, std::move(parts), iso);
}

std::string FamilySpec::describe() const {
    const std::string N = std::to_string(n), S = std::to_string(s);
    switch (family) {
        case Family::pendant_pair: return "K1v(K" + std::to_string(n - 3) + "u2K1)";
        case Family::pendant_clique: return "K1v(K" + std::to_string(n - 2) + "uK1)";
        case Family::clique_odd: return "K" + S + "v(K" + std::to_string(n - 2 * s - 1) + "u" + std::to_string(s + 1) + "K1)";
        case Family::clique_even: return "K" + S + "v(K" + std::to_string(n - 2 * s) + "u" + S + "K1)";
        case Family::split_star: return "S_{" + N + "," + S + "}";
        case Family::general: {
            std::string out = "K" + S + "v(";
            for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "uK" : "K") + std::to_string(parts[i]);
            if (isolated > 0) out += (parts.empty() ? "" : "u") + std::to_string(isolated) + "K1";
            return out + ")";
        }
    }
    return "?";
}

Graph build_family(const FamilySpec& spec) {
    const FamilySpec g = spec.as_general();
    Graph rest = Graph(0);
    for (int part : g.parts) rest = disjoint_union(rest, complete_graph(part));
    if (g.isolated > 0) rest = disjoint_union(rest, Graph(g.isolated));
    return join(complete_graph(g.s), rest);
}

namespace {

struct Cells {
    std::vector<std::vector<int>> cells;  // in general order: core, parts..., independent
    std::vector<int> natural_order;       // indices into cells
};

Cells general_cells(const FamilySpec& spec) {
    const FamilySpec g = spec.as_general();
    Cells out;
    int next = 0;
    auto take = [&](int size) {
        std::vector<int> cell(size);
        std::iota(cell.begin(), cell.end(), next);
        next += size;
        out.cells.push_back(std::move(cell));
    };
    take(g.s);
    for (int part : g.parts) take(part);
    if (g.isolated > 0) take(g.isolated);

    out.natural_order.resize(out.cells.size());
    std::iota(out.natural_order.begin(), out.natural_order.end(), 0);
    const bool big_clique_first = spec.family == Family::pendant_clique || spec.family == Family::clique_odd ||
                                  spec.family == Family::clique_even;
    if (big_clique_first && !g.parts.empty()) std::swap(out.natural_order[0], out.natural_order[1]);
    return out;
}

}  // namespace

Partition natural_partition(const FamilySpec& spec) {
    Cells c = general_cells(spec);
    std::vector<std::vector<int>> cells;
    for (int idx : c.natural_order) cells.push_back(c.cells[idx]);
    return Partition(spec.as_general().n, std::move(cells));
}

QuotientMatrix family_quotient(const FamilySpec& spec) {
    const FamilySpec g = spec.as_general();
    // sizes and kinds in general order
    struct Cell {
        int size;
        bool core;
        bool independent;
    };
    std::vector<Cell> cells{{g.s, true, false}};
    for (int part : g.parts) cells.push_back({part, false, false});
    if (g.isolated > 0) cells.push_back({g.isolated, false, true});

    const int k = static_cast<int>(cells.size());
    Matrix b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const Cell& from = cells[i];
            const Cell& to = cells[j];
            double value;
            if (i == j)
                value = from.independent ? 2.0 * (to.size - 1) : to.size - 1;
            else if (from.core || to.core)
                value = to.size;
            else
                value = 2.0 * to.size;
            b(i, j) = value;
        }
    }

    const std::vector<int> order = general_cells(spec).natural_order;
    QuotientMatrix q{Matrix(k), true};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) q.b(i, j) = b(order[i], order[j]);
    return q;
}

namespace {

std::vector<std::vector<std::int64_t>> integer_rows(const Matrix& m) {
    std::vector<std::vector<std::int64_t>> rows(m.order(), std::vector<std::int64_t>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) {
            const double v = m(i, j);
            if (v != std::round(v)) throw Error(ErrorCode::invalid_spec, "quotient entry is not an integer");
            rows[i][j] = static_cast<std::int64_t>(std::llround(v));
        }
    return rows;
}

}  // namespace

ClosedForm closed_form_lambda1(const FamilySpec& spec) {
    const double n = spec.n;
    if (spec.family == Family::split_star && spec.n % 2 == 1 && 2 * spec.s == spec.n - 1)
        return {0.25 * (std::sqrt(5 * n * n + 2 * n - 3) + 3 * n - 5), ClosedFormKind::split_star_odd};
    if (spec.family == Family::split_star && spec.n % 2 == 0 && 2 * spec.s == spec.n)
        return {0.25 * (std::sqrt(5 * n * n - 4 * n + 4) + 3 * n - 6), ClosedFormKind::split_star_even};
    if (spec.family == Family::pendant_clique) return {theta(spec.n), ClosedFormKind::pendant_cubic};

    const auto poly = characteristic_polynomial(integer_rows(family_quotient(spec).b));
    return {largest_real_root(std::span<const std::int64_t>(poly)), ClosedFormKind::quotient_numeric};
}

}  // namespace kms
