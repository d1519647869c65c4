#include <algorithm>
#include <cmath>

#include "kms/error.hpp"
#include "kms/quotient.hpp"

namespace kms {
namespace {

using Poly = std::vector<long double>;

long double eval(const Poly& c, long double x) {
    long double acc = 0.0L;
    for (long double a : c) acc = acc * x + a;
    return acc;
}

long double eval_derivative(const Poly& c, long double x) {
    const int deg = static_cast<int>(c.size()) - 1;
    long double acc = 0.0L;
    for (int i = 0; i < deg; ++i) acc = acc * x + c[i] * (deg - i);
    return acc;
}

long double refine(const Poly& c, long double lo, long double hi) {
    long double flo = eval(c, lo);
    for (int it = 0; it < 400 && hi - lo > 1e-12L * std::max(1.0L, std::fabs(lo)); ++it) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = eval(c, mid);
        if (fm == 0.0L) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    long double x = 0.5L * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const long double d = eval_derivative(c, x);
        if (d == 0.0L) break;
        const long double next = x - eval(c, x) / d;
        if (next < lo || next > hi) break;
        x = next;
    }
    return x;
}

// Real roots, ascending; roots of the derivative split the line into monotone pieces.
std::vector<long double> real_roots(const Poly& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1) return {-c[1] / c[0]};

    Poly deriv(deg);
    for (int i = 0; i < deg; ++i) deriv[i] = c[i] * (deg - i);
    long double bound = 0.0L;
    for (int i = 1; i <= deg; ++i) bound = std::max(bound, std::fabs(c[i] / c[0]));
    bound += 1.0L;

    std::vector<long double> points{-bound};
    for (long double r : real_roots(deriv))
        if (r > -bound && r < bound) points.push_back(r);
    points.push_back(bound);

    std::vector<long double> roots;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const long double l = points[i], r = points[i + 1];
        const long double fl = eval(c, l), fr = eval(c, r);
        if (fl == 0.0L) {
            roots.push_back(l);
        } else if ((fl < 0 && fr > 0) || (fl > 0 && fr < 0)) {
            roots.push_back(refine(c, l, r));
        }
    }
    return roots;
}

long double largest(const Poly& c) {
    if (c.empty() || c[0] == 0.0L) throw Error(ErrorCode::no_real_root, "leading coefficient is zero");
    auto roots = real_roots(c);
    if (roots.empty()) throw Error(ErrorCode::no_real_root, "polynomial has no real root");
    return *std::max_element(roots.begin(), roots.end());
}

}  // namespace

long double evaluate(std::span<const double> coeffs, long double x) {
    return eval(Poly(coeffs.begin(), coeffs.end()), x);
}

long double evaluate(std::span<const std::int64_t> coeffs, long double x) {
    Poly c;
    for (auto a : coeffs) c.push_back(static_cast<long double>(a));
    return eval(c, x);
}

double largest_real_root(std::span<const double> coeffs) {
    return static_cast<double>(largest(Poly(coeffs.begin(), coeffs.end())));
}

double largest_real_root(std::span<const std::int64_t> coeffs) {
    Poly c;
    for (auto a : coeffs) c.push_back(static_cast<long double>(a));
    return static_cast<double>(largest(c));
}

std::vector<std::int64_t> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::parameter_out_of_range, "matrix rows must be square");

    // Berkowitz: p_k = T_k p_{k-1}, where T_k is lower-triangular Toeplitz with
    // first column (1, -a_kk, -R C, -R M C, ..., -R M^{k-2} C).
    std::vector<std::int64_t> p{1};
    for (int k = 0; k < n; ++k) {
        std::vector<std::int64_t> column{1, -a[k][k]};
        std::vector<std::int64_t> v(k);  // M^j C
        for (int i = 0; i < k; ++i) v[i] = a[i][k];
        for (int j = 0; j < k; ++j) {
            std::int64_t rv = 0;
            for (int i = 0; i < k; ++i) rv += a[k][i] * v[i];
            column.push_back(-rv);
            std::vector<std::int64_t> next(k, 0);
            for (int r = 0; r < k; ++r)
                for (int i = 0; i < k; ++i) next[r] += a[r][i] * v[i];
            v = std::move(next);
        }
        std::vector<std::int64_t> q(k + 2, 0);
        for (int r = 0; r < k + 2; ++r)
            for (int c = 0; c <= std::min(r, k); ++c) q[r] += column[r - c] * p[c];
        p = std::move(q);
    }
    return p;
}

std::vector<std::int64_t> pendant_clique_cubic(int n) {
    return {1, 3 - n, 9 - 5 * static_cast<std::int64_t>(n), -3 * static_cast<std::int64_t>(n) + 5};
}

double theta(int n) {
    const auto q = pendant_clique_cubic(n);
    return largest_real_root(std::span<const std::int64_t>(q));
}

}  // namespace kms
