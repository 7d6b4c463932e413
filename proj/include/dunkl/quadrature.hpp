#ifndef DUNKL_QUADRATURE_HPP
#define DUNKL_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dunkl/core.hpp"
#include "dunkl/dual.hpp"
#include "dunkl/polykernel.hpp"

namespace dunkl {

inline constexpr int default_nodes = 64;

enum class WeightKind { generalized_hermite, laguerre, jacobi };

/// Weight function together with its parameters.
///   generalized_hermite: |x|^{2 a} e^{-x^2} on R
///   laguerre:            x^a e^{-x} on [0, inf)
///   jacobi:              (1-x)^a (1+x)^b on [-1, 1]
struct WeightSpec {
    WeightKind kind = WeightKind::generalized_hermite;
    double a = 0.0;
    double b = 0.0;

    static WeightSpec generalized_hermite(double mu) { return {WeightKind::generalized_hermite, mu, 0.0}; }
    static WeightSpec laguerre(double alpha) { return {WeightKind::laguerre, alpha, 0.0}; }
    static WeightSpec jacobi(double alpha, double beta) { return {WeightKind::jacobi, alpha, beta}; }

    std::string str() const
    {
        switch (kind) {
        case WeightKind::generalized_hermite: return "generalized-hermite(mu=" + std::to_string(a) + ")";
        case WeightKind::laguerre: return "laguerre(alpha=" + std::to_string(a) + ")";
        case WeightKind::jacobi: return "jacobi(alpha=" + std::to_string(a) + ", beta=" + std::to_string(b) + ")";
        }
        return "unknown";
    }
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exact_degree = 0;
    WeightSpec weight;

    std::size_t size() const { return nodes.size(); }
};

inline RecurrenceCoeffs recurrence_for(const WeightSpec& w, int n)
{
    switch (w.kind) {
    case WeightKind::generalized_hermite: return generalized_hermite_recurrence(n, w.a);
    case WeightKind::laguerre: return laguerre_recurrence(n, w.a);
    case WeightKind::jacobi: return jacobi_recurrence(n, w.a, w.b);
    }
    throw UsageError("unknown weight kind");
}

/// Golub-Welsch rule with n_nodes points for the given weight.
inline QuadratureRule gauss_rule(const WeightSpec& w, int n_nodes)
{
    if (n_nodes < 1) throw UsageError("quadrature needs at least one node");
    const RecurrenceCoeffs rc = recurrence_for(w, n_nodes);

    Eigen::VectorXd diag(n_nodes);
    Eigen::VectorXd sub(std::max(n_nodes - 1, 0));
    for (int k = 0; k < n_nodes; ++k) diag[k] = rc.b[k];
    for (int k = 1; k < n_nodes; ++k) sub[k - 1] = std::sqrt(rc.u[k]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
        throw NumericalError("tridiagonal eigensolve did not converge for " + w.str() + " with " +
                             std::to_string(n_nodes) + " nodes");
    }

    QuadratureRule rule;
    rule.weight = w;
    rule.exact_degree = 2 * n_nodes - 1;
    rule.nodes.resize(n_nodes);
    rule.weights.resize(n_nodes);
    // Weights from the Christoffel function 1 / sum_k p_k(x)^2 with orthonormal
    // p_k; squared eigenvector components lose relative accuracy in the tails.
    for (int i = 0; i < n_nodes; ++i) {
        const double x = es.eigenvalues()[i];
        double p_prev = 0.0;
        double p = 1.0 / std::sqrt(rc.mass);
        double sum = p * p;
        for (int k = 0; k + 1 < n_nodes; ++k) {
            const double next = ((x - rc.b[k]) * p - (k > 0 ? std::sqrt(rc.u[k]) : 0.0) * p_prev) / std::sqrt(rc.u[k + 1]);
            p_prev = p;
            p = next;
            sum += p * p;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / sum;
    }

    if (w.kind == WeightKind::generalized_hermite) {
        // exact symmetry about the origin
        for (int i = 0; i < n_nodes / 2; ++i) {
            const int j = n_nodes - 1 - i;
            const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
            const double wt = 0.5 * (rule.weights[i] + rule.weights[j]);
            rule.nodes[i] = -x;
            rule.nodes[j] = x;
            rule.weights[i] = rule.weights[j] = wt;
        }
        if (n_nodes % 2 == 1) rule.nodes[n_nodes / 2] = 0.0;
    }
    for (double wt : rule.weights) {
        if (!(wt > 0.0)) throw NumericalError("non-positive quadrature weight for " + w.str());
    }
    return rule;
}

namespace detail {

template <typename V>
auto conj_if(const V& v)
{
    if constexpr (std::is_same_v<V, complex>) {
        return std::conj(v);
    } else {
        return v;
    }
}

template <typename F>
using value_of = std::decay_t<std::invoke_result_t<F, double>>;

} // namespace detail

/// Sum_i w_i f(x_i) g(x_i) against |x|^{2 mu} e^{-x^2}. f and g are the
/// wavefunctions with their e^{-x^2/2} factor removed.
template <typename F, typename G>
double inner_product_1d(F&& f, G&& g, double mu, const QuadratureRule& rule)
{
    if (rule.weight.kind != WeightKind::generalized_hermite) {
        throw UsageError("inner_product_1d needs a generalized-hermite rule, got " + rule.weight.str());
    }
    if (std::abs(rule.weight.a - mu) > 1e-14) {
        throw UsageError("inner_product_1d: rule built for mu=" + std::to_string(rule.weight.a) +
                         ", called with mu=" + std::to_string(mu));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        acc += rule.weights[i] * g(x) * f(x);
    }
    return acc;
}

/// Nodes in (0, pi/2) and weights for integrals over one quadrant against
/// |cos phi|^{2 mu_x} |sin phi|^{2 mu_y}.
inline std::pair<std::vector<double>, std::vector<double>> angular_rule(const MuParams& mu, int n_nodes)
{
    const QuadratureRule jr = gauss_rule(WeightSpec::jacobi(mu.x - 0.5, mu.y - 0.5), n_nodes);
    const double scale = std::exp(-(mu.sum() + 1.0) * std::log(2.0));
    std::vector<double> phis(jr.size());
    std::vector<double> ws(jr.size());
    for (std::size_t i = 0; i < jr.size(); ++i) {
        phis[i] = 0.5 * std::acos(-jr.nodes[i]);
        ws[i] = jr.weights[i] * scale;
    }
    return {phis, ws};
}

/// Integral over [0, 2pi) of conj(g) f |cos phi|^{2 mu_x} |sin phi|^{2 mu_y}.
template <typename F, typename G>
auto angular_inner_product(F&& f, G&& g, const MuParams& mu, int n_nodes = default_nodes)
{
    using R = std::common_type_t<detail::value_of<F>, detail::value_of<G>>;
    const auto [phis, ws] = angular_rule(mu, n_nodes);
    R acc(0.0);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double p = phis[i];
        const double images[4] = {p, pi - p, pi + p, -p};
        R part(0.0);
        for (double q : images) part += R(detail::conj_if(g(q))) * R(f(q));
        acc += ws[i] * part;
    }
    return acc;
}

/// Integral over [0, inf) of e^{-rho^2} rho^{2 n_f + 2 n_g} f g rho^{1 + 2 mu_x + 2 mu_y}.
/// f and g are radial functions with e^{-rho^2/2} rho^{2n} removed.
template <typename F, typename G>
double radial_inner_product(F&& f, G&& g, const MuParams& mu, double n_f, double n_g,
                            int n_nodes = default_nodes)
{
    const QuadratureRule lr = gauss_rule(WeightSpec::laguerre(n_f + n_g + mu.sum()), n_nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < lr.size(); ++i) {
        const double rho = std::sqrt(lr.nodes[i]);
        acc += 0.5 * lr.weights[i] * f(rho) * g(rho);
    }
    return acc;
}

/// x -> f'(x) + (mu/x)(f(x) - f(-x)). f must accept Dual<double>.
template <typename F>
auto dunkl_derivative_apply(F f, double mu)
{
    return [f, mu](double x) {
        const double fp = f(Dual<double>(x, 1.0)).d;
        if (std::abs(x) < 1e-6) {
            const double fm = f(Dual<double>(-x, 1.0)).d;
            return fp + mu * (fp + fm);
        }
        return fp + mu * (f(x) - f(-x)) / x;
    };
}

/// <g, D f> + <D g, f> under |x|^{2 mu}; f and g are full wavefunctions
/// (Gaussian included) accepting Dual<double>.
template <typename F, typename G>
double antihermiticity_defect(F f, G g, double mu, const QuadratureRule& rule)
{
    if (rule.weight.kind != WeightKind::generalized_hermite) {
        throw UsageError("antihermiticity_defect needs a generalized-hermite rule, got " + rule.weight.str());
    }
    const auto df = dunkl_derivative_apply(f, mu);
    const auto dg = dunkl_derivative_apply(g, mu);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        const double w = rule.weights[i] * std::exp(x * x);
        acc += w * (g(x) * df(x) + dg(x) * f(x));
    }
    return acc;
}

} // namespace dunkl

#endif
