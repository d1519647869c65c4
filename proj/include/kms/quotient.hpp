#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kms/graph.hpp"
#include "kms/spectra.hpp"

namespace kms {

/// Ordered, disjoint, non-empty cells covering 0..n-1.
class Partition {
public:
    /// Throws invalid-partition unless the cells partition 0..n-1.
    Partition(int n, std::vector<std::vector<int>> cells);

    int order() const { return n_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::vector<int>>& cells() const { return cells_; }

private:
    int n_;
    std::vector<std::vector<int>> cells_;
};

struct QuotientMatrix {
    Matrix b;  // b(i, j) = average row sum of block (i, j)
    bool equitable = false;
};

QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p);
bool is_equitable(const Matrix& m, const Partition& p);

// Polynomials are stored highest degree first: {1, -1, -11, -7} is x^3 - x^2 - 11x - 7.

/// det(xI - M) for an integer matrix (Berkowitz, division free).
std::vector<std::int64_t> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& m);

/// Largest real root of a monic polynomial, bisection to 1e-12 then Newton.
/// Throws no-real-root when there is none.
double largest_real_root(std::span<const double> coeffs);
double largest_real_root(std::span<const std::int64_t> coeffs);

/// Evaluate in long double (Horner).
long double evaluate(std::span<const double> coeffs, long double x);
long double evaluate(std::span<const std::int64_t> coeffs, long double x);

/// q(x) = x^3 + (3-n)x^2 + (9-5n)x - 3n + 5, whose largest root is lambda1(D(K_1 ∨ (K_{n-2} ∪ K_1))).
std::vector<std::int64_t> pendant_clique_cubic(int n);

/// theta(n): the largest root of pendant_clique_cubic(n).
double theta(int n);

enum class Family {
    pendant_pair,     // K_1 ∨ (K_{n-3} ∪ 2K_1)
    pendant_clique,   // K_1 ∨ (K_{n-2} ∪ K_1)
    clique_odd,       // K_s ∨ (K_{n-2s-1} ∪ (s+1)K_1)
    clique_even,      // K_s ∨ (K_{n-2s} ∪ sK_1)
    split_star,       // S_{n,k} = K_k ∨ (n-k)K_1
    general,          // K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p} ∪ iK_1)
};

/// One of the extremal families. Use the named constructors; they validate.
struct FamilySpec {
    Family family = Family::split_star;
    int n = 0;
    int s = 0;                 // clique core size (k for split_star)
    std::vector<int> parts;    // general only
    int isolated = 0;          // general only

    static FamilySpec pendant_pair(int n);
    static FamilySpec pendant_clique(int n);
    static FamilySpec clique_odd(int n, int s);
    static FamilySpec clique_even(int n, int s);
    static FamilySpec split_star(int n, int k);
    static FamilySpec general(int s, std::vector<int> parts, int isolated);

    /// Normalized as K_s ∨ (K_{parts...} ∪ iK_1) with zero-size parts dropped.
    FamilySpec as_general() const;
    std::string describe() const;
};

/// The graph itself. Labels: core clique first, then each clique part in
/// order, then the isolated vertices.
Graph build_family(const FamilySpec& spec);

/// Natural cells, empty ones dropped: pendant_clique and clique_* use
/// {big clique, core, independent}; pendant_pair uses {apex, K_{n-3}, 2K_1};
/// split_star uses {clique, independent}; general uses
/// {core, part_1, ..., part_p, independent}.
Partition natural_partition(const FamilySpec& spec);

/// Equitable quotient of D(build_family(spec)) under natural_partition,
/// computed from the parameters alone.
QuotientMatrix family_quotient(const FamilySpec& spec);

enum class ClosedFormKind {
    split_star_odd,    // S_{n,(n-1)/2}
    split_star_even,   // S_{n,n/2}
    pendant_cubic,     // root of q(x)
    quotient_numeric,  // no published closed form; root of the quotient's characteristic polynomial
};

struct ClosedForm {
    double value = 0.0;
    ClosedFormKind kind = ClosedFormKind::quotient_numeric;
};

ClosedForm closed_form_lambda1(const FamilySpec& spec);

}  // namespace kms
