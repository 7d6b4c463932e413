#ifndef DUNKL_POLYKERNEL_HPP
#define DUNKL_POLYKERNEL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "dunkl/core.hpp"

namespace dunkl {

/// Coefficients of a monic three-term recurrence
///   x p_n = p_{n+1} + b_n p_n + u_n p_{n-1}.
/// u[0] is unused; `mass` is the total integral of the weight.
struct RecurrenceCoeffs {
    std::vector<double> b;
    std::vector<double> u;
    int degree_max = 0;
    double mass = 1.0;
};

namespace detail {

inline void require_gt(double v, double bound, const char* what)
{
    if (!(v > bound)) {
        throw DomainError(std::string(what) + " must exceed " + std::to_string(bound) +
                          " (got " + std::to_string(v) + ")");
    }
}

inline void require_degree(int n)
{
    if (n < 0) throw DomainError("polynomial degree must be non-negative");
}

} // namespace detail

/// Monic p_n(x) from recurrence data.
template <typename T>
T monic_eval(const RecurrenceCoeffs& rc, int n, const T& x)
{
    detail::require_degree(n);
    if (n > rc.degree_max + 1) throw UsageError("degree beyond the stored recurrence");
    T p_prev(0.0);
    T p(1.0);
    for (int k = 0; k < n; ++k) {
        T next = (x - rc.b[k]) * p;
        if (k > 0) next = next - rc.u[k] * p_prev;
        p_prev = p;
        p = next;
    }
    return p;
}

// --- Laguerre, weight x^alpha e^{-x} on [0, inf) ---

inline RecurrenceCoeffs laguerre_recurrence(int n, double alpha)
{
    detail::require_gt(alpha, -1.0, "Laguerre alpha");
    RecurrenceCoeffs rc;
    rc.degree_max = n;
    rc.b.resize(n + 1);
    rc.u.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        rc.b[k] = 2.0 * k + alpha + 1.0;
        if (k > 0) rc.u[k] = k * (k + alpha);
    }
    rc.mass = std::exp(math::log_gamma(alpha + 1.0));
    return rc;
}

/// L_n^{(alpha)}(x).
template <typename T>
T laguerre_eval(int n, double alpha, const T& x)
{
    detail::require_degree(n);
    detail::require_gt(alpha, -1.0, "Laguerre alpha");
    // monic recurrence, rescaled by (-1)^k/k per step so values stay O(1)
    T p_prev(0.0);
    T p(1.0);
    for (int k = 0; k < n; ++k) {
        const double b = 2.0 * k + alpha + 1.0;
        const double u = k * (k + alpha);
        // L_{k+1} = ((b - x) L_k - (k + alpha) L_{k-1}) / (k+1)
        T next = (b - x) * p;
        if (k > 0) next = next - (u / k) * p_prev;
        next = next / static_cast<double>(k + 1);
        p_prev = p;
        p = next;
    }
    return p;
}

/// Squared norm of L_n^{(alpha)}: Gamma(n+alpha+1)/n!.
inline double laguerre_norm_sq(int n, double alpha)
{
    return std::exp(math::log_gamma(n + alpha + 1.0) - math::log_factorial(n));
}

// --- Jacobi, weight (1-x)^alpha (1+x)^beta on [-1, 1] ---

inline RecurrenceCoeffs jacobi_recurrence(int n, double alpha, double beta)
{
    detail::require_gt(alpha, -1.0, "Jacobi alpha");
    detail::require_gt(beta, -1.0, "Jacobi beta");
    const double s = alpha + beta;
    RecurrenceCoeffs rc;
    rc.degree_max = n;
    rc.b.resize(n + 1);
    rc.u.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            rc.b[k] = (beta - alpha) / (s + 2.0);
        } else {
            const double t = 2.0 * k + s;
            rc.b[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
        }
        if (k == 1) {
            rc.u[k] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
        } else if (k > 1) {
            const double t = 2.0 * k + s;
            rc.u[k] = 4.0 * k * (k + alpha) * (k + beta) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
        }
    }
    rc.mass = std::exp((s + 1.0) * std::log(2.0) + math::log_gamma(alpha + 1.0) +
                       math::log_gamma(beta + 1.0) - math::log_gamma(s + 2.0));
    return rc;
}

/// Leading coefficient of P_n^{(alpha,beta)}: (n+alpha+beta+1)_n / (2^n n!).
inline double jacobi_leading(int n, double alpha, double beta)
{
    double c = 1.0;
    const double s = alpha + beta;
    for (int k = 0; k < n; ++k) c *= (n + s + 1.0 + k) / (2.0 * (k + 1));
    return c;
}

/// P_n^{(alpha,beta)}(x).
template <typename T>
T jacobi_eval(int n, double alpha, double beta, const T& x)
{
    detail::require_degree(n);
    detail::require_gt(alpha, -1.0, "Jacobi alpha");
    detail::require_gt(beta, -1.0, "Jacobi beta");
    const RecurrenceCoeffs rc = jacobi_recurrence(n, alpha, beta);
    return jacobi_leading(n, alpha, beta) * monic_eval(rc, n, x);
}

/// Squared norm of P_n^{(alpha,beta)} against its weight.
inline double jacobi_norm_sq(int n, double alpha, double beta)
{
    const double s = alpha + beta;
    if (n == 0) return jacobi_recurrence(0, alpha, beta).mass;
    return std::exp((s + 1.0) * std::log(2.0) - std::log(2.0 * n + s + 1.0) +
                    math::log_gamma(n + alpha + 1.0) + math::log_gamma(n + beta + 1.0) -
                    math::log_gamma(n + s + 1.0) - math::log_factorial(n));
}

// --- generalized Hermite, weight |x|^{2mu} e^{-x^2} on R ---

inline RecurrenceCoeffs generalized_hermite_recurrence(int n, double mu)
{
    detail::require_gt(mu, -0.5, "generalized Hermite mu");
    RecurrenceCoeffs rc;
    rc.degree_max = n;
    rc.b.assign(n + 1, 0.0);
    rc.u.assign(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) rc.u[k] = 0.5 * mu_number(k, mu);
    rc.mass = std::exp(math::log_gamma(mu + 0.5));
    return rc;
}

/// Normalized H_n^{mu}(x); e^{-x^2/2} H_n^{mu}(x) is orthonormal under |x|^{2mu}.
template <typename T>
T generalized_hermite_eval(int n, double mu, const T& x)
{
    detail::require_degree(n);
    detail::require_gt(mu, -0.5, "generalized Hermite mu");
    const int k = n / 2;
    const int p = n % 2;
    const double c = math::parity_sign(k) *
                     std::exp(0.5 * (math::log_factorial(k) - math::log_gamma(k + p + mu + 0.5)));
    T val = c * laguerre_eval(k, mu - 0.5 + p, x * x);
    if (p == 1) val = val * x;
    return val;
}

// --- dual -1 Hahn polynomials ---

struct DualMinusOneHahnFamily {
    double alpha = 0.0;
    double beta = 0.0;
    int N = 0;
    double xi = 0.0;
    double zeta = 0.0;
    RecurrenceCoeffs coeffs;
    std::vector<double> grid;
    std::vector<double> weights;
};

/// Builds recurrence data, spectrum grid and weights. Weights sum to 1;
/// orthogonality constants are v_n = u_1...u_n (see dual_m1_hahn_norm).
inline DualMinusOneHahnFamily dual_m1_hahn_family(double alpha, double beta, int N)
{
    if (N < 0) throw DomainError("dual -1 Hahn family needs N >= 0");
    DualMinusOneHahnFamily f;
    f.alpha = alpha;
    f.beta = beta;
    f.N = N;
    const bool even = N % 2 == 0;
    if (even) {
        f.xi = (beta - N - 1.0) / 2.0;
        f.zeta = (alpha - N - 1.0) / 2.0;
    } else {
        f.xi = alpha / 2.0;
        f.zeta = beta / 2.0;
    }

    RecurrenceCoeffs& rc = f.coeffs;
    rc.degree_max = N;
    rc.b.resize(N + 1);
    rc.u.assign(N + 1, 0.0);
    for (int n = 0; n <= N; ++n) {
        if (even) {
            rc.b[n] = -math::parity_sign(n) * (2.0 * f.xi + 2.0 * f.zeta) - 1.0;
        } else {
            rc.b[n] = math::parity_sign(n) * (2.0 * f.zeta - 2.0 * f.xi) - 1.0;
        }
    }
    for (int n = 1; n <= N; ++n) {
        rc.u[n] = 4.0 * mu_number(n, f.xi) * mu_number(N - n + 1, f.zeta);
        if (!(rc.u[n] > 0.0)) {
            throw DegenerateFamilyError("dual -1 Hahn family: u_" + std::to_string(n) +
                                        " = " + std::to_string(rc.u[n]) + " is not positive");
        }
    }
    rc.mass = 1.0;

    f.grid.resize(N + 1);
    for (int l = 0; l <= N; ++l) {
        const double mag = even ? 2.0 * l + 1.0 - alpha - beta : 2.0 * l + 1.0 + alpha + beta;
        f.grid[l] = math::parity_sign(l) * mag;
    }
    for (int i = 0; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            if (f.grid[i] == f.grid[j]) throw DegenerateFamilyError("dual -1 Hahn grid has repeated points");
        }
    }

    using math::pochhammer;
    f.weights.resize(N + 1);
    const double a2 = alpha / 2.0;
    const double b2 = beta / 2.0;
    if (even) {
        const int m = N / 2;
        const double pre = pochhammer(1.0 - b2, m) / pochhammer(1.0 - a2 - b2, m);
        for (int l = 0; l <= N; ++l) {
            const int j = l / 2;
            const int q = l % 2;
            f.weights[l] = math::parity_sign(j) * pochhammer(-m, j + q) / std::exp(math::log_factorial(j)) *
                           pochhammer(1.0 - a2, j) * pochhammer(1.0 - a2 - b2, j) /
                           (pochhammer(1.0 - b2, j) * pochhammer(m + 1.0 - a2 - b2, j + q)) * pre;
        }
    } else {
        const double m = N / 2.0;
        const int mp = (N - 1) / 2;
        const double pre = math::pochhammer_real(0.5 + b2, m + 0.5) / math::pochhammer_real(1.0 + a2 + b2, m + 0.5);
        for (int l = 0; l <= N; ++l) {
            const int j = l / 2;
            const int q = l % 2;
            f.weights[l] = math::parity_sign(j) * pochhammer(-mp, j) / std::exp(math::log_factorial(j)) *
                           pochhammer(0.5 + a2, j + q) * pochhammer(1.0 + a2 + b2, j) /
                           (pochhammer(0.5 + b2, j + q) * pochhammer(m + 1.5 + a2 + b2, j)) * pre;
        }
    }
    return f;
}

/// Monic Q_n(x) of the family.
template <typename T>
T dual_m1_hahn_eval(const DualMinusOneHahnFamily& f, int n, const T& x)
{
    if (n < 0 || n > f.N) throw UsageError("dual -1 Hahn degree must lie in [0, N]");
    return monic_eval(f.coeffs, n, x);
}

/// v_n = u_1 ... u_n.
inline double dual_m1_hahn_norm(const DualMinusOneHahnFamily& f, int n)
{
    if (n < 0 || n > f.N) throw UsageError("dual -1 Hahn degree must lie in [0, N]");
    double v = 1.0;
    for (int k = 1; k <= n; ++k) v *= f.coeffs.u[k];
    return v;
}

} // namespace dunkl

#endif
