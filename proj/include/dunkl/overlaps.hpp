#ifndef DUNKL_OVERLAPS_HPP
#define DUNKL_OVERLAPS_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dunkl/core.hpp"
#include "dunkl/operator_algebra.hpp"
#include "dunkl/polykernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/wavefunctions.hpp"

namespace dunkl {

enum class Provenance { closed_form, diagonalization, quadrature };

inline std::string provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::diagonalization: return "diagonalization";
    case Provenance::quadrature: return "quadrature";
    }
    return "unknown";
}

enum class RowBasis { q_eigen, polar };

/// Overlaps <row|m, N-m>; columns are Cartesian states with increasing m = n_x.
struct OverlapTable {
    int level = 0;
    int sector = 1;
    Matrix matrix;
    Provenance provenance = Provenance::closed_form;
    RowBasis rows = RowBasis::q_eigen;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    /// Which weight index pairs with row l (closed form only).
    std::string weight_indexing;

    /// ||T T^dag - I||_max
    double unitarity_defect() const
    {
        const Matrix I = Matrix::Identity(matrix.rows(), matrix.cols());
        return max_abs(matrix * matrix.adjoint() - I);
    }
};

/// Rescales each row so its first entry above rel_tol * (row max) is real positive.
inline void apply_phase_convention(Matrix& m, double rel_tol = 1e-8)
{
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const double big = m.row(r).cwiseAbs().maxCoeff();
        if (big == 0.0) continue;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const complex z = m(r, c);
            if (std::abs(z) > rel_tol * big) {
                m.row(r) *= std::abs(z) / z;
                break;
            }
        }
    }
}

inline double max_entry_difference(const OverlapTable& a, const OverlapTable& b)
{
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
        throw UsageError("overlap tables have different shapes");
    }
    return max_abs(a.matrix - b.matrix);
}

namespace detail {

inline std::vector<std::string> cartesian_labels(int N)
{
    std::vector<std::string> out;
    for (const auto& c : cartesian_states(N)) out.push_back(c.str());
    return out;
}

inline std::vector<std::string> q_labels(int N)
{
    std::vector<std::string> out;
    for (int l = 0; l <= N; ++l) out.push_back("q_" + std::to_string(l));
    return out;
}

inline std::vector<std::string> polar_labels(int N)
{
    std::vector<std::string> out;
    for (const auto& p : polar_states(N)) out.push_back(p.str());
    return out;
}

} // namespace detail

/// Dual -1 Hahn parameters (alpha, beta) attached to level N.
inline std::pair<double, double> overlap_hahn_parameters(int N, const MuParams& mu)
{
    if (N % 2 == 0) return {2.0 * mu.y + N + 1.0, 2.0 * mu.x + N + 1.0};
    return {2.0 * mu.x, 2.0 * mu.y};
}

/// A_m = (-1)^m sqrt([m]_{mu_x} [N-m+1]_{mu_y}).
inline double overlap_A(int m, int N, const MuParams& mu)
{
    return math::parity_sign(m) * std::sqrt(mu_number(m, mu.x) * mu_number(N - m + 1, mu.y));
}

/// Diagonal coefficient of the three-term recurrence in m.
inline double overlap_B(int m, int N, const MuParams& mu)
{
    if (N % 2 == 0) return -math::parity_sign(m) * mu.sum() - 0.5;
    return math::parity_sign(m) * (mu.x - mu.y) + 0.5;
}

/// <q_l | m, N-m> from dual -1 Hahn polynomials.
inline OverlapTable q_overlap_closed_form(int N, const MuParams& mu)
{
    require_level(N);
    const auto [alpha, beta] = overlap_hahn_parameters(N, mu);
    const DualMinusOneHahnFamily fam = dual_m1_hahn_family(alpha, beta, N);
    for (double w : fam.weights) {
        if (!(w > 0.0)) throw ParameterError("dual -1 Hahn weight is not positive; mu must exceed -1/2");
    }
    const double sigma = N % 2 == 0 ? 1.0 : -1.0;

    OverlapTable t;
    t.level = N;
    t.sector = N % 2 == 0 ? 1 : -1;
    t.provenance = Provenance::closed_form;
    t.rows = RowBasis::q_eigen;
    t.row_labels = detail::q_labels(N);
    t.col_labels = detail::cartesian_labels(N);
    t.matrix = Matrix::Zero(N + 1, N + 1);

    bool reversed = true;
    bool direct = true;
    for (int l = 0; l <= N; ++l) {
        const double target = 2.0 * sigma * q_eigenvalue(l, mu);
        int idx = 0;
        for (int i = 1; i <= N; ++i) {
            if (std::abs(fam.grid[i] - target) < std::abs(fam.grid[idx] - target)) idx = i;
        }
        reversed = reversed && idx == N - l;
        direct = direct && idx == l;
        const double x = fam.grid[idx];
        const double sw = std::sqrt(fam.weights[idx]);
        double aprod = 1.0;
        double scale = 1.0;
        for (int m = 0; m <= N; ++m) {
            if (m > 0) {
                aprod *= overlap_A(m, N, mu);
                scale /= 2.0 * sigma;
            }
            t.matrix(l, m) = sw * dual_m1_hahn_eval(fam, m, x) * scale / aprod;
        }
    }
    t.weight_indexing = N == 0 ? "omega_l" : reversed ? "omega_{N-l}" : direct ? "omega_l" : "mixed";
    apply_phase_convention(t.matrix);
    return t;
}

/// Same table from diagonalizing the Q block.
inline OverlapTable q_overlap_oracle(int N, const MuParams& mu)
{
    const LevelBlock Q = symmetry_block(Symmetry::Q, N, mu);
    const EigenDecomposition d = eigen_decompose(Q);
    for (std::size_t i = 1; i < d.values.size(); ++i) {
        if (d.values[i] - d.values[i - 1] < 1e-8) {
            throw DegeneracyError("Q block at level " + std::to_string(N) + " has eigenvalues " +
                                  std::to_string(d.values[i - 1]) + " and " + std::to_string(d.values[i]) +
                                  " closer than 1e-8");
        }
    }
    OverlapTable t;
    t.level = N;
    t.sector = N % 2 == 0 ? 1 : -1;
    t.provenance = Provenance::diagonalization;
    t.rows = RowBasis::q_eigen;
    t.row_labels = detail::q_labels(N);
    t.col_labels = detail::cartesian_labels(N);
    t.matrix = Matrix::Zero(N + 1, N + 1);
    for (int l = 0; l <= N; ++l) {
        const double q = q_eigenvalue(l, mu);
        std::size_t best = 0;
        for (std::size_t i = 1; i < d.values.size(); ++i) {
            if (std::abs(d.values[i] - q) < std::abs(d.values[best] - q)) best = i;
        }
        t.matrix.row(l) = d.vectors.col(static_cast<Eigen::Index>(best)).adjoint();
    }
    apply_phase_convention(t.matrix);
    return t;
}

struct MixingCoefficient {
    HalfInt n;
    int sector = 1;
    complex value;
};

/// zeta_n (sector +1) or xi_n (sector -1).
inline MixingCoefficient mixing_coefficient(HalfInt n, int sector, const MuParams& mu)
{
    const double nv = n.value();
    const double s = mu.sum();
    if (sector == 1) {
        if (!n.is_integer() || n.twice() <= 0) throw DomainError("zeta_n needs a positive integer n");
        return {n, sector, complex(s, -2.0 * std::sqrt(nv * (nv + s))) / (2.0 * nv + s)};
    }
    if (sector == -1) {
        if (n.is_integer()) throw DomainError("xi_n needs a positive half-integer n");
        return {n, sector, complex(mu.x - mu.y, 2.0 * std::sqrt((nv + mu.x) * (nv + mu.y))) / (2.0 * nv + s)};
    }
    throw DomainError("sector must be +1 or -1");
}

/// Converts a Q-eigenbasis table (column 0 real positive) to polar rows.
inline OverlapTable polar_from_q_table(const OverlapTable& qt, const MuParams& mu)
{
    if (qt.rows != RowBasis::q_eigen) throw UsageError("polar_from_q_table expects a Q-eigenbasis table");
    const int N = qt.level;
    const std::vector<PolarIndex> labels = polar_states(N);
    auto row_of = [&](int k, int tn, int sx, int sy) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto& p = labels[i];
            if (p.k == k && p.n.twice() == tn && p.s_x == sx && p.s_y == sy) return static_cast<Eigen::Index>(i);
        }
        throw UsageError("polar label not found");
    };
    const complex I(0.0, 1.0);
    const Matrix& T = qt.matrix;
    Matrix P = Matrix::Zero(N + 1, N + 1);

    if (N % 2 == 0) {
        P.row(row_of(N / 2, 0, 1, 1)) += T.row(0);
        for (int j = 1; j <= N / 2; ++j) {
            const complex z = mixing_coefficient(HalfInt::integer(j), 1, mu).value;
            const complex h = std::exp(-I * std::arg(z) / 2.0);
            const int k = N / 2 - j;
            const Eigen::Index pp = row_of(k, 2 * j, 1, 1);
            const Eigen::Index mm = row_of(k, 2 * j, -1, -1);
            // row q_{2j}
            P.row(pp) += (1.0 + z) / 2.0 * std::conj(h) * T.row(2 * j);
            P.row(mm) += (1.0 - z) / (2.0 * I) * std::conj(h) * T.row(2 * j);
            // row q_{2j-1}
            const complex h1 = I * h;
            P.row(pp) += (1.0 - z) / 2.0 * std::conj(h1) * T.row(2 * j - 1);
            P.row(mm) += (1.0 + z) / (2.0 * I) * std::conj(h1) * T.row(2 * j - 1);
        }
    } else {
        for (int j = 0; j <= (N - 1) / 2; ++j) {
            const int tn = 2 * j + 1;
            const complex x = mixing_coefficient(HalfInt::from_twice(tn), -1, mu).value;
            const complex h = std::exp(I * std::arg(x) / 2.0);
            const int k = (N - tn) / 2;
            const Eigen::Index mp = row_of(k, tn, -1, 1);
            const Eigen::Index pm = row_of(k, tn, 1, -1);
            for (int p = 0; p < 2; ++p) {
                const double sg = p == 0 ? 1.0 : -1.0;
                const complex ph = p == 0 ? h : I * h;
                P.row(mp) += (1.0 + sg * x) / 2.0 * std::conj(ph) * T.row(2 * j + p);
                P.row(pm) += (sg * x - 1.0) / (2.0 * I) * std::conj(ph) * T.row(2 * j + p);
            }
        }
    }

    OverlapTable t;
    t.level = N;
    t.sector = qt.sector;
    t.provenance = qt.provenance;
    t.rows = RowBasis::polar;
    t.row_labels = detail::polar_labels(N);
    t.col_labels = detail::cartesian_labels(N);
    t.weight_indexing = qt.weight_indexing;
    t.matrix = P;
    apply_phase_convention(t.matrix);
    return t;
}

/// <k,n;s_x,s_y | m,N-m> from the closed form.
inline OverlapTable polar_cartesian_overlap(int N, const MuParams& mu)
{
    return polar_from_q_table(q_overlap_closed_form(N, mu), mu);
}

namespace detail {

/// Samples of polar and Cartesian states on the (radial x angular x image)
/// product grid, with Gaussians stripped, plus the matching weights.
struct OverlapGrid {
    std::vector<double> rho;
    std::vector<double> phi;
    std::vector<double> weight;
};

inline OverlapGrid overlap_grid(const MuParams& mu, int n_nodes)
{
    const QuadratureRule lr = gauss_rule(WeightSpec::laguerre(mu.sum()), n_nodes);
    const auto [phis, aw] = angular_rule(mu, n_nodes);
    OverlapGrid g;
    for (std::size_t r = 0; r < lr.size(); ++r) {
        const double rho = std::sqrt(lr.nodes[r]);
        for (std::size_t a = 0; a < phis.size(); ++a) {
            const double p = phis[a];
            for (double img : {p, pi - p, pi + p, -p}) {
                g.rho.push_back(rho);
                g.phi.push_back(img);
                g.weight.push_back(0.5 * lr.weights[r] * aw[a]);
            }
        }
    }
    return g;
}

inline double polar_reduced(const PolarIndex& p, const MuParams& mu, double rho, double phi)
{
    double r = p_radial_reduced(p.k, p.n, mu, rho);
    for (int i = 0; i < p.n.twice(); ++i) r *= rho;
    return r * phi_angular(p, mu, phi);
}

inline double cartesian_reduced(const CartesianIndex& c, const MuParams& mu, double rho, double phi)
{
    return generalized_hermite_eval(c.n_x, mu.x, rho * std::cos(phi)) *
           generalized_hermite_eval(c.n_y, mu.y, rho * std::sin(phi));
}

} // namespace detail

/// Weighted 2D overlap of a polar and a Cartesian wavefunction by quadrature.
inline complex overlap_quadrature_oracle(const PolarIndex& polar, const CartesianIndex& cart, const MuParams& mu,
                                         int n_nodes = default_nodes)
{
    polar.validate();
    if (polar.level() != cart.level()) return 0.0;
    const detail::OverlapGrid g = detail::overlap_grid(mu, n_nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.rho.size(); ++i) {
        acc += g.weight[i] * detail::polar_reduced(polar, mu, g.rho[i], g.phi[i]) *
               detail::cartesian_reduced(cart, mu, g.rho[i], g.phi[i]);
    }
    return acc;
}

/// Full polar table at level N by quadrature.
inline OverlapTable overlap_quadrature_table(int N, const MuParams& mu, int n_nodes = default_nodes)
{
    require_level(N);
    const detail::OverlapGrid g = detail::overlap_grid(mu, n_nodes);
    const auto ps = polar_states(N);
    const auto cs = cartesian_states(N);
    const Eigen::Index npts = static_cast<Eigen::Index>(g.rho.size());
    Eigen::MatrixXd A(N + 1, npts);
    Eigen::MatrixXd B(N + 1, npts);
    for (Eigen::Index i = 0; i < npts; ++i) {
        const double w = g.weight[i];
        for (int r = 0; r <= N; ++r) {
            A(r, i) = w * detail::polar_reduced(ps[r], mu, g.rho[i], g.phi[i]);
            B(r, i) = detail::cartesian_reduced(cs[r], mu, g.rho[i], g.phi[i]);
        }
    }
    OverlapTable t;
    t.level = N;
    t.sector = N % 2 == 0 ? 1 : -1;
    t.provenance = Provenance::quadrature;
    t.rows = RowBasis::polar;
    t.row_labels = detail::polar_labels(N);
    t.col_labels = detail::cartesian_labels(N);
    t.matrix = (A * B.transpose()).cast<complex>();
    apply_phase_convention(t.matrix);
    return t;
}

/// Max residual of q_l M_m = A_{m+1} M_{m+1} + B_m M_m + A_m M_{m-1} over a
/// Q-eigenbasis table.
inline double q_recurrence_residual(const OverlapTable& qt, const MuParams& mu)
{
    const int N = qt.level;
    double worst = 0.0;
    for (int l = 0; l <= N; ++l) {
        const double q = q_eigenvalue(l, mu);
        for (int m = 0; m <= N; ++m) {
            complex rhs = overlap_B(m, N, mu) * qt.matrix(l, m);
            if (m < N) rhs += overlap_A(m + 1, N, mu) * qt.matrix(l, m + 1);
            if (m > 0) rhs += overlap_A(m, N, mu) * qt.matrix(l, m - 1);
            worst = std::max(worst, std::abs(q * qt.matrix(l, m) - rhs));
        }
    }
    return worst;
}

} // namespace dunkl

#endif
