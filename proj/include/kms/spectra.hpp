#pragma once

#include <cstdint>
#include <vector>

#include "kms/graph.hpp"

namespace kms {

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}
    Matrix(int n, std::vector<double> data);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const { return n_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double row_sum(int i) const;
    bool is_symmetric() const;
    std::vector<std::vector<double>> to_rows() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

/// Hop distances of a connected graph.
class DistanceMatrix {
public:
    int order() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    std::int64_t row_sum(int u) const;
    int diameter() const;
    Matrix to_matrix() const;

private:
    friend DistanceMatrix distance_matrix(const Graph& g);
    int n_ = 0;
    std::vector<int> d_;
};

struct Eigenpair {
    double lambda1 = 0.0;
    std::vector<double> vector;  // positive, unit 2-norm
    double residual = 0.0;       // ||Mx - lambda1 x||_2
    int iterations = 0;
    bool used_jacobi = false;
};

struct EigenOptions {
    double tol = 1e-10;
    int max_iterations = 1'000'000;
};

/// Throws disconnected-input for a disconnected graph.
DistanceMatrix distance_matrix(const Graph& g);

/// W(G), the sum of distances over unordered pairs.
std::int64_t wiener(const Graph& g);

/// Dominant eigenpair of a symmetric nonnegative irreducible matrix.
///
/// Power iteration from the all-ones vector with a Rayleigh-quotient estimate,
/// stopping once the residual is at most tol * lambda1. If that has not
/// happened after half the iteration budget the full matrix is diagonalized
/// with cyclic Jacobi instead. Throws max-iterations-exceeded only when both
/// routes fail to reach the tolerance.
Eigenpair dominant_eigenpair(const Matrix& m, const EigenOptions& options = {});

/// lambda1(D(G)) with its Perron vector. Requires a connected graph, n >= 2.
Eigenpair distance_spectral_radius(const Graph& g, const EigenOptions& options = {});

/// 2 W(G) / n.
double rayleigh_lower_bound(const Graph& g);

/// All eigenvalues (ascending) and eigenvectors (columns) by cyclic Jacobi.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
};
SymmetricEigen jacobi_eigen(const Matrix& m, double tol = 1e-14, int max_sweeps = 100);

inline constexpr double kCompareEps = 1e-9;

enum class Comparison { below, equal, above };

/// Three-way comparison of a against b at absolute tolerance eps.
Comparison compare(double a, double b, double eps = kCompareEps);

const char* to_string(Comparison c);

}  // namespace kms
