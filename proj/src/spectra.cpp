#include "kms/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "kms/error.hpp"

namespace kms {

Matrix::Matrix(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorCode::parameter_out_of_range, "matrix data does not match order");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw Error(ErrorCode::parameter_out_of_range, "matrix rows must be square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

double Matrix::row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
}

bool Matrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
    return rows;
}

std::int64_t DistanceMatrix::row_sum(int u) const {
    std::int64_t s = 0;
    for (int v = 0; v < n_; ++v) s += (*this)(u, v);
    return s;
}

int DistanceMatrix::diameter() const {
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

Matrix DistanceMatrix::to_matrix() const {
    Matrix m(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) m(u, v) = (*this)(u, v);
    return m;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, "distance matrix needs a connected graph");
    DistanceMatrix dm;
    dm.n_ = n;
    dm.d_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = 1ULL << s;
        std::uint64_t frontier = seen;
        for (int dist = 1; frontier != 0; ++dist) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.row(std::countr_zero(b));
            next &= ~seen;
            for (std::uint64_t b = next; b != 0; b &= b - 1)
                dm.d_[static_cast<std::size_t>(s) * n + std::countr_zero(b)] = dist;
            seen |= next;
            frontier = next;
        }
    }
    return dm;
}

std::int64_t wiener(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::int64_t total = 0;
    for (int u = 0; u < d.order(); ++u) total += d.row_sum(u);
    return total / 2;
}

double rayleigh_lower_bound(const Graph& g) {
    return 2.0 * static_cast<double>(wiener(g)) / g.order();
}

namespace {

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void multiply(const Matrix& m, const std::vector<double>& x, std::vector<double>& y) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
}

double residual_of(const Matrix& m, const std::vector<double>& x, double lambda) {
    std::vector<double> y(x.size());
    multiply(m, x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    return std::sqrt(s);
}

Eigenpair jacobi_fallback(const Matrix& m, int iterations) {
    SymmetricEigen eig = jacobi_eigen(m);
    const int n = m.order();
    Eigenpair out;
    out.lambda1 = eig.values.back();
    out.vector.resize(n);
    double sign = 0.0;
    for (int i = 0; i < n; ++i) sign += eig.vectors(i, n - 1);
    for (int i = 0; i < n; ++i) out.vector[i] = (sign < 0 ? -1.0 : 1.0) * eig.vectors(i, n - 1);
    const double nrm = norm2(out.vector);
    for (double& v : out.vector) v /= nrm;
    out.residual = residual_of(m, out.vector, out.lambda1);
    out.iterations = iterations;
    out.used_jacobi = true;
    return out;
}

}  // namespace

Eigenpair dominant_eigenpair(const Matrix& m, const EigenOptions& options) {
    const int n = m.order();
    if (n == 0) throw Error(ErrorCode::parameter_out_of_range, "empty matrix");
    if (!(options.tol > 0.0)) throw Error(ErrorCode::parameter_out_of_range, "tolerance must be positive");
    if (!m.is_symmetric()) throw Error(ErrorCode::parameter_out_of_range, "matrix is not symmetric");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) < 0.0) throw Error(ErrorCode::parameter_out_of_range, "matrix has a negative entry");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    Eigenpair out;
    const int switch_at = options.max_iterations / 2;
    for (int it = 1; it <= options.max_iterations; ++it) {
        multiply(m, x, y);
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * y[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
        res = std::sqrt(res);
        if (res <= options.tol * std::max(lambda, 1.0) || lambda == 0.0) {
            out.lambda1 = lambda;
            out.vector = x;
            out.residual = res;
            out.iterations = it;
            return out;
        }
        if (it >= switch_at) {
            out = jacobi_fallback(m, it);
            if (out.residual <= options.tol * std::max(out.lambda1, 1.0)) return out;
            throw Error(ErrorCode::max_iterations_exceeded,
                        "best estimate " + std::to_string(out.lambda1) + " with residual " +
                            std::to_string(out.residual));
        }
        const double nrm = norm2(y);
        for (int i = 0; i < n; ++i) x[i] = y[i] / nrm;
    }
    throw Error(ErrorCode::max_iterations_exceeded, "iteration budget too small");
}

Eigenpair distance_spectral_radius(const Graph& g, const EigenOptions& options) {
    if (g.order() < 2) throw Error(ErrorCode::size_out_of_range, "distance spectral radius needs n >= 2");
    return dominant_eigenpair(distance_matrix(g).to_matrix(), options);
}

SymmetricEigen jacobi_eigen(const Matrix& input, double tol, int max_sweeps) {
    const int n = input.order();
    Matrix a = input;
    Matrix v(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));

    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol * std::max(scale, 1.0); ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
    SymmetricEigen out{std::vector<double>(n), Matrix(n)};
    for (int c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

Comparison compare(double a, double b, double eps) {
    if (a < b - eps) return Comparison::below;
    if (a > b + eps) return Comparison::above;
    return Comparison::equal;
}

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::below: return "below";
        case Comparison::equal: return "equal";
        case Comparison::above: return "above";
    }
    return "?";
}

}  // namespace kms
