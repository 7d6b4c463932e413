#ifndef DUNKL_OPERATOR_ALGEBRA_HPP
#define DUNKL_OPERATOR_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dunkl/core.hpp"
#include "dunkl/report.hpp"
#include "dunkl/wavefunctions.hpp"

namespace dunkl {

using Matrix = Eigen::MatrixXcd;

/// Operator restricted to the level-N eigenspace, basis |n_x, N-n_x> with
/// increasing n_x.
struct LevelBlock {
    int level = 0;
    Matrix matrix;

    std::vector<CartesianIndex> basis() const { return cartesian_states(level); }
    int dim() const { return level + 1; }
};

/// Map between neighbouring levels.
struct LadderMap {
    int from_level = 0;
    int to_level = 0;
    Matrix matrix;
};

enum class Ladder { Ax, Ax_dag, Ay, Ay_dag };
enum class Reflection { Rx, Ry };
enum class Symmetry { H, J1, J2, J3, Q };

inline void require_level(int N)
{
    if (N < 0) throw DomainError("level must be non-negative");
}

inline LadderMap ladder_block(Ladder which, int N, const MuParams& mu)
{
    require_level(N);
    LadderMap m;
    m.from_level = N;
    const bool raising = which == Ladder::Ax_dag || which == Ladder::Ay_dag;
    m.to_level = raising ? N + 1 : N - 1;
    m.matrix = Matrix::Zero(std::max(m.to_level + 1, 0), N + 1);
    for (int nx = 0; nx <= N; ++nx) {
        const int ny = N - nx;
        switch (which) {
        case Ladder::Ax_dag: m.matrix(nx + 1, nx) = std::sqrt(mu_number(nx + 1, mu.x)); break;
        case Ladder::Ay_dag: m.matrix(nx, nx) = std::sqrt(mu_number(ny + 1, mu.y)); break;
        case Ladder::Ax:
            if (nx > 0) m.matrix(nx - 1, nx) = std::sqrt(mu_number(nx, mu.x));
            break;
        case Ladder::Ay:
            if (ny > 0) m.matrix(nx, nx) = std::sqrt(mu_number(ny, mu.y));
            break;
        }
    }
    return m;
}

inline LevelBlock reflection_block(Reflection which, int N)
{
    require_level(N);
    LevelBlock b{N, Matrix::Zero(N + 1, N + 1)};
    for (int nx = 0; nx <= N; ++nx) {
        const int n = which == Reflection::Rx ? nx : N - nx;
        b.matrix(nx, nx) = math::parity_sign(n);
    }
    return b;
}

/// Single-oscillator energy operators H_x, H_y on level N.
inline LevelBlock partial_hamiltonian(Reflection axis, int N, const MuParams& mu)
{
    require_level(N);
    LevelBlock b{N, Matrix::Zero(N + 1, N + 1)};
    for (int nx = 0; nx <= N; ++nx) {
        b.matrix(nx, nx) = axis == Reflection::Rx ? nx + mu.x + 0.5 : (N - nx) + mu.y + 0.5;
    }
    return b;
}

inline LevelBlock symmetry_block(Symmetry which, int N, const MuParams& mu)
{
    require_level(N);
    const Matrix I = Matrix::Identity(N + 1, N + 1);
    if (which == Symmetry::H) return {N, energy_level(N, mu) * I};
    if (which == Symmetry::J3) {
        return {N, 0.5 * (partial_hamiltonian(Reflection::Rx, N, mu).matrix -
                          partial_hamiltonian(Reflection::Ry, N, mu).matrix)};
    }
    // A_x^dag A_y and A_x A_y^dag, both level preserving
    Matrix xd_y = Matrix::Zero(N + 1, N + 1);
    if (N > 0) xd_y = ladder_block(Ladder::Ax_dag, N - 1, mu).matrix * ladder_block(Ladder::Ay, N, mu).matrix;
    const Matrix x_yd = ladder_block(Ladder::Ax, N + 1, mu).matrix * ladder_block(Ladder::Ay_dag, N, mu).matrix;
    const complex i(0.0, 1.0);
    switch (which) {
    case Symmetry::J1: return {N, 0.5 * (xd_y + x_yd)};
    case Symmetry::J2: return {N, (xd_y - x_yd) / (2.0 * i)};
    case Symmetry::Q: {
        const Matrix Rx = reflection_block(Reflection::Rx, N).matrix;
        const Matrix Ry = reflection_block(Reflection::Ry, N).matrix;
        return {N, (x_yd - xd_y) * Rx - mu.x * Ry - mu.y * Rx - 0.5 * Rx * Ry};
    }
    default: break;
    }
    throw UsageError("unknown symmetry operator");
}

inline void require_same_level(const LevelBlock& a, const LevelBlock& b)
{
    if (a.level != b.level) {
        throw UsageError("level mismatch: " + std::to_string(a.level) + " vs " + std::to_string(b.level));
    }
}

inline LevelBlock commutator(const LevelBlock& a, const LevelBlock& b)
{
    require_same_level(a, b);
    return {a.level, a.matrix * b.matrix - b.matrix * a.matrix};
}

inline LevelBlock anticommutator(const LevelBlock& a, const LevelBlock& b)
{
    require_same_level(a, b);
    return {a.level, a.matrix * b.matrix + b.matrix * a.matrix};
}

inline double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Report check_sd2_relations(int N, const MuParams& mu)
{
    const complex i(0.0, 1.0);
    const LevelBlock J1 = symmetry_block(Symmetry::J1, N, mu);
    const LevelBlock J2 = symmetry_block(Symmetry::J2, N, mu);
    const LevelBlock J3 = symmetry_block(Symmetry::J3, N, mu);
    const LevelBlock H = symmetry_block(Symmetry::H, N, mu);
    const LevelBlock Rx = reflection_block(Reflection::Rx, N);
    const LevelBlock Ry = reflection_block(Reflection::Ry, N);

    Report r;
    r.add("sd2 {J1,Rx}=0", max_abs(anticommutator(J1, Rx).matrix));
    r.add("sd2 {J1,Ry}=0", max_abs(anticommutator(J1, Ry).matrix));
    r.add("sd2 {J2,Rx}=0", max_abs(anticommutator(J2, Rx).matrix));
    r.add("sd2 {J2,Ry}=0", max_abs(anticommutator(J2, Ry).matrix));
    r.add("sd2 [J3,Rx]=0", max_abs(commutator(J3, Rx).matrix));
    r.add("sd2 [J3,Ry]=0", max_abs(commutator(J3, Ry).matrix));
    r.add("sd2 [J2,J3]=iJ1", max_abs(commutator(J2, J3).matrix - i * J1.matrix));
    r.add("sd2 [J3,J1]=iJ2", max_abs(commutator(J3, J1).matrix - i * J2.matrix));
    const Matrix rhs = i * (J3.matrix + J3.matrix * (mu.x * Rx.matrix + mu.y * Ry.matrix) -
                            0.5 * H.matrix * (mu.x * Rx.matrix - mu.y * Ry.matrix));
    r.add("sd2 [J1,J2]=i(J3+J3(mxRx+myRy)-H(mxRx-myRy)/2)", max_abs(commutator(J1, J2).matrix - rhs));
    for (const auto& [name, blk] : {std::pair{"J1", &J1}, std::pair{"J2", &J2}, std::pair{"J3", &J3}}) {
        r.add(std::string("sd2 [H,") + name + "]=0", max_abs(commutator(H, *blk).matrix));
    }
    return r;
}

/// C = J1^2 + J2^2 + J3^2 + mu_x Rx/2 + mu_y Ry/2 + mu_x mu_y Rx Ry on level N.
inline LevelBlock casimir_block(int N, const MuParams& mu)
{
    const Matrix J1 = symmetry_block(Symmetry::J1, N, mu).matrix;
    const Matrix J2 = symmetry_block(Symmetry::J2, N, mu).matrix;
    const Matrix J3 = symmetry_block(Symmetry::J3, N, mu).matrix;
    const Matrix Rx = reflection_block(Reflection::Rx, N).matrix;
    const Matrix Ry = reflection_block(Reflection::Ry, N).matrix;
    return {N, J1 * J1 + J2 * J2 + J3 * J3 + 0.5 * mu.x * Rx + 0.5 * mu.y * Ry + mu.x * mu.y * Rx * Ry};
}

inline Report check_casimir(int N, const MuParams& mu)
{
    const LevelBlock C = casimir_block(N, mu);
    const double E = energy_level(N, mu);
    Report r;
    r.add("casimir C=(H^2-1)/4", max_abs(C.matrix - (E * E - 1.0) / 4.0 * Matrix::Identity(N + 1, N + 1)));
    r.add("casimir [C,J1]=0", max_abs(commutator(C, symmetry_block(Symmetry::J1, N, mu)).matrix));
    r.add("casimir [C,J2]=0", max_abs(commutator(C, symmetry_block(Symmetry::J2, N, mu)).matrix));
    r.add("casimir [C,J3]=0", max_abs(commutator(C, symmetry_block(Symmetry::J3, N, mu)).matrix));
    r.add("casimir [C,Rx]=0", max_abs(commutator(C, reflection_block(Reflection::Rx, N)).matrix));
    r.add("casimir [C,Ry]=0", max_abs(commutator(C, reflection_block(Reflection::Ry, N)).matrix));
    return r;
}

/// Parabose relations on every level N <= N_max - 2.
inline Report check_parabose(int N_max, const MuParams& mu)
{
    if (N_max < 2) throw UsageError("check_parabose needs N_max >= 2");
    Report r;
    auto L = [&](Ladder w, int N) -> Matrix {
        if (N < 0) return Matrix::Zero(0, 0);
        return ladder_block(w, N, mu).matrix;
    };
    // maps level N -> N through level N+1 or N-1; empty operands give zero
    auto via = [&](Ladder second, Ladder first, int N) -> Matrix {
        const Matrix f = ladder_block(first, N, mu).matrix;
        if (f.rows() == 0) return Matrix::Zero(N + 1, N + 1);
        return ladder_block(second, f.rows() - 1, mu).matrix * f;
    };
    for (int N = 0; N <= N_max - 2; ++N) {
        const Matrix I = Matrix::Identity(N + 1, N + 1);
        for (const auto axis : {Reflection::Rx, Reflection::Ry}) {
            const bool x = axis == Reflection::Rx;
            const std::string ax = x ? "x" : "y";
            const Ladder a = x ? Ladder::Ax : Ladder::Ay;
            const Ladder ad = x ? Ladder::Ax_dag : Ladder::Ay_dag;
            const double m = x ? mu.x : mu.y;
            const Matrix R = reflection_block(axis, N).matrix;
            const Matrix Hn = partial_hamiltonian(axis, N, mu).matrix;

            r.add_max("parabose [A" + ax + ",A" + ax + "+]=1+2mu R" + ax,
                      max_abs(via(a, ad, N) - via(ad, a, N) - (I + 2.0 * m * R)));
            r.add_max("parabose H" + ax + "={A" + ax + ",A" + ax + "+}/2",
                      max_abs(0.5 * (via(a, ad, N) + via(ad, a, N)) - Hn));

            const Matrix Aup = L(ad, N);
            const Matrix Hup = partial_hamiltonian(axis, N + 1, mu).matrix;
            const Matrix Rup = reflection_block(axis, N + 1).matrix;
            r.add_max("parabose [H" + ax + ",A" + ax + "+]=A" + ax + "+", max_abs(Hup * Aup - Aup * Hn - Aup));
            r.add_max("parabose {A" + ax + "+,R" + ax + "}=0", max_abs(Rup * Aup + Aup * R));
            if (N > 0) {
                const Matrix Adn = L(a, N);
                const Matrix Hdn = partial_hamiltonian(axis, N - 1, mu).matrix;
                const Matrix Rdn = reflection_block(axis, N - 1).matrix;
                r.add_max("parabose [H" + ax + ",A" + ax + "]=-A" + ax, max_abs(Hdn * Adn - Adn * Hn + Adn));
                r.add_max("parabose {A" + ax + ",R" + ax + "}=0", max_abs(Rdn * Adn + Adn * R));
            }
        }
        // the two oscillators commute
        r.add_max("parabose [Ax,Ay+]=0", max_abs(via(Ladder::Ax, Ladder::Ay_dag, N) - via(Ladder::Ay_dag, Ladder::Ax, N)));
        r.add_max("parabose [Ay,Ax+]=0", max_abs(via(Ladder::Ay, Ladder::Ax_dag, N) - via(Ladder::Ax_dag, Ladder::Ay, N)));
        {
            const Matrix up = L(Ladder::Ax_dag, N + 1) * L(Ladder::Ay_dag, N) -
                              L(Ladder::Ay_dag, N + 1) * L(Ladder::Ax_dag, N);
            r.add_max("parabose [Ax+,Ay+]=0", max_abs(up));
            if (N >= 2) {
                const Matrix dn = L(Ladder::Ax, N - 1) * L(Ladder::Ay, N) - L(Ladder::Ay, N - 1) * L(Ladder::Ax, N);
                r.add_max("parabose [Ax,Ay]=0", max_abs(dn));
            }
        }
    }
    return r;
}

// --- sl_{-1}(2) modules ---

struct Sl12Module {
    Matrix A0;
    Matrix Aplus;
    Matrix Aminus;
    Matrix R;
};

/// Module V^{(eps, mu)} truncated to basis vectors v_0 ... v_{dim-1}.
inline Sl12Module sl12_module(int epsilon, double mu, int dim)
{
    Sl12Module m;
    m.A0 = Matrix::Zero(dim, dim);
    m.Aplus = Matrix::Zero(dim, dim);
    m.Aminus = Matrix::Zero(dim, dim);
    m.R = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        m.A0(n, n) = n + mu + 0.5;
        m.R(n, n) = epsilon * math::parity_sign(n);
        if (n + 1 < dim) m.Aplus(n + 1, n) = std::sqrt(mu_number(n + 1, mu));
        if (n > 0) m.Aminus(n - 1, n) = std::sqrt(mu_number(n, mu));
    }
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Tensor-product Casimir restricted to n_1 + n_2 = N, in the level basis.
inline LevelBlock sl12_coupled_casimir(int N, const MuParams& mu, int eps1 = 1, int eps2 = 1)
{
    require_level(N);
    const int dim = N + 2;
    const Sl12Module m1 = sl12_module(eps1, mu.x, dim);
    const Sl12Module m2 = sl12_module(eps2, mu.y, dim);
    const Matrix I = Matrix::Identity(dim, dim);
    const Matrix R1 = kron(m1.R, I);
    const Matrix R2 = kron(I, m2.R);
    const Matrix Qt = (kron(m1.Aminus, I) * kron(I, m2.Aplus) - kron(m1.Aplus, I) * kron(I, m2.Aminus)) * R1 -
                      0.5 * R1 * R2 - eps1 * mu.x * R2 - eps2 * mu.y * R1;
    LevelBlock b{N, Matrix::Zero(N + 1, N + 1)};
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= N; ++j) b.matrix(i, j) = Qt(i * dim + (N - i), j * dim + (N - j));
    }
    return b;
}

inline Report sl12_casimir_check(int N, const MuParams& mu)
{
    Report r;
    const LevelBlock Q = symmetry_block(Symmetry::Q, N, mu);
    r.add("sl12 Qtilde=Q", max_abs(sl12_coupled_casimir(N, mu).matrix - Q.matrix));

    for (const auto& [name, m] : {std::pair{"x", mu.x}, std::pair{"y", mu.y}}) {
        for (int eps : {1, -1}) {
            const Sl12Module s = sl12_module(eps, m, N + 2);
            const Matrix I = Matrix::Identity(N + 2, N + 2);
            const Matrix C = s.Aplus * s.Aminus * s.R - s.A0 * s.R + 0.5 * s.R;
            r.add_max(std::string("sl12 single-module Casimir=-eps mu (") + name + ")",
                      max_abs(C + eps * m * I));
        }
    }
    const Matrix Rt = reflection_block(Reflection::Rx, N).matrix * reflection_block(Reflection::Ry, N).matrix;
    r.add("sl12 Rtilde=(-1)^N", max_abs(Rt - math::parity_sign(N) * Matrix::Identity(N + 1, N + 1)));
    return r;
}

// --- spectra ---

struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors; // columns
};

/// Makes the largest-magnitude entry of v real positive (first one on ties).
inline void normalize_phase_largest(Eigen::Ref<Eigen::VectorXcd> v)
{
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best]) * (1.0 + 1e-12)) best = i;
    }
    if (std::abs(v[best]) > 0.0) v *= std::abs(v[best]) / v[best];
}

/// Eigen-decomposition of a Hermitian block; ascending eigenvalues.
inline EigenDecomposition eigen_decompose(const LevelBlock& b)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(b.matrix);
    if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolve failed");
    EigenDecomposition d;
    d.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    d.vectors = es.eigenvectors();
    for (Eigen::Index c = 0; c < d.vectors.cols(); ++c) normalize_phase_largest(d.vectors.col(c));
    return d;
}

/// q_l = (-1)^{l+1} (l + mu_x + mu_y + 1/2), l = 0..N.
inline double q_eigenvalue(int l, const MuParams& mu)
{
    return -math::parity_sign(l) * (l + mu.sum() + 0.5);
}

inline std::vector<double> expected_q_spectrum(int N, const MuParams& mu)
{
    std::vector<double> v;
    for (int l = 0; l <= N; ++l) v.push_back(q_eigenvalue(l, mu));
    std::sort(v.begin(), v.end());
    return v;
}

/// Eigenvalues of J2 = -(angular symmetry)/2 at level N, sorted.
inline std::vector<double> expected_j2_spectrum(int N, const MuParams& mu)
{
    std::vector<double> v;
    if (N % 2 == 0) v.push_back(0.0);
    for (int tn = (N % 2 == 0) ? 2 : 1; tn <= N; tn += 2) {
        const JacobiDunklIndex idx{HalfInt::from_twice(tn), N % 2 == 0 ? 1 : -1, 1};
        const double lam = jacobi_dunkl_eigenvalue(idx, mu);
        v.push_back(-0.5 * lam);
        v.push_back(0.5 * lam);
    }
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace dunkl

#endif
