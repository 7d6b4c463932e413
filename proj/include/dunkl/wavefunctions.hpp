#ifndef DUNKL_WAVEFUNCTIONS_HPP
#define DUNKL_WAVEFUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "dunkl/core.hpp"
#include "dunkl/dual.hpp"
#include "dunkl/polykernel.hpp"

namespace dunkl {

struct CartesianIndex {
    int n_x = 0;
    int n_y = 0;

    int level() const { return n_x + n_y; }
    std::string str() const { return "|" + std::to_string(n_x) + "," + std::to_string(n_y) + ">"; }
    friend bool operator==(const CartesianIndex&, const CartesianIndex&) = default;
};

inline char sign_char(int s) { return s > 0 ? '+' : '-'; }

struct PolarIndex {
    int k = 0;
    HalfInt n;
    int s_x = 1;
    int s_y = 1;

    /// Throws DomainError when the labels do not describe a state.
    void validate() const
    {
        if (k < 0) throw DomainError("polar index: k must be non-negative");
        if (n.twice() < 0) throw DomainError("polar index: n must be non-negative");
        if ((s_x != 1 && s_x != -1) || (s_y != 1 && s_y != -1)) {
            throw DomainError("polar index: parities must be +1 or -1");
        }
        const bool same = s_x == s_y;
        if (same && !n.is_integer()) throw DomainError("polar index: s_x s_y = +1 needs integer n, got " + n.str());
        if (!same && n.is_integer()) {
            throw DomainError("polar index: s_x s_y = -1 needs half-integer n, got " + n.str());
        }
        if (n.twice() == 0 && s_x == -1 && s_y == -1) {
            throw ZeroFunctionError("polar index: the state n=0 with parities (-,-) vanishes identically");
        }
    }

    bool valid() const
    {
        try {
            validate();
        } catch (const DomainError&) {
            return false;
        }
        return true;
    }

    /// Level N = 2(k+n).
    int level() const { return 2 * k + n.twice(); }

    std::string str() const
    {
        return "|" + std::to_string(k) + "," + n.str() + ";" + sign_char(s_x) + sign_char(s_y) + ">";
    }
    friend bool operator==(const PolarIndex&, const PolarIndex&) = default;
};

struct JacobiDunklIndex {
    HalfInt n;
    int epsilon = 1;
    int branch = 1;

    void validate() const
    {
        if (epsilon != 1 && epsilon != -1) throw DomainError("Jacobi-Dunkl index: epsilon must be +1 or -1");
        if (branch != 1 && branch != -1) throw DomainError("Jacobi-Dunkl index: branch must be +1 or -1");
        if (n.twice() < 0) throw DomainError("Jacobi-Dunkl index: n must be non-negative");
        if (epsilon == 1 && !n.is_integer()) throw DomainError("Jacobi-Dunkl index: epsilon=+1 needs integer n");
        if (epsilon == -1 && n.is_integer()) throw DomainError("Jacobi-Dunkl index: epsilon=-1 needs half-integer n");
    }
};

// --- energies ---

inline double energy_level(int N, const MuParams& mu) { return N + mu.sum() + 1.0; }

inline double energy_cartesian(const CartesianIndex& idx, const MuParams& mu)
{
    if (idx.n_x < 0 || idx.n_y < 0) throw DomainError("Cartesian index must be non-negative");
    return idx.n_x + idx.n_y + mu.sum() + 1.0;
}

inline double energy_polar(const PolarIndex& idx, const MuParams& mu)
{
    idx.validate();
    return 2.0 * (idx.k + idx.n.value()) + mu.sum() + 1.0;
}

// --- state lists at a level ---

/// Cartesian basis of level N ordered by increasing n_x.
inline std::vector<CartesianIndex> cartesian_states(int N)
{
    std::vector<CartesianIndex> out;
    for (int nx = 0; nx <= N; ++nx) out.push_back({nx, N - nx});
    return out;
}

/// Polar basis of level N: increasing n; (+,+) before (-,-), (+,-) before (-,+).
inline std::vector<PolarIndex> polar_states(int N)
{
    std::vector<PolarIndex> out;
    for (int tn = N % 2; tn <= N; tn += 2) {
        const int k = (N - tn) / 2;
        const HalfInt n = HalfInt::from_twice(tn);
        if (N % 2 == 0) {
            out.push_back({k, n, 1, 1});
            if (tn > 0) out.push_back({k, n, -1, -1});
        } else {
            out.push_back({k, n, 1, -1});
            out.push_back({k, n, -1, 1});
        }
    }
    return out;
}

// --- Cartesian wavefunctions ---

/// e^{-x^2/2} H_n^{mu}(x).
template <typename T>
T psi_1d(int n, double mu, const T& x)
{
    using std::exp;
    return exp(-0.5 * (x * x)) * generalized_hermite_eval(n, mu, x);
}

template <typename T>
T psi_cartesian(const CartesianIndex& idx, const MuParams& mu, const T& x, const T& y)
{
    using std::exp;
    return exp(-0.5 * (x * x + y * y)) * generalized_hermite_eval(idx.n_x, mu.x, x) *
           generalized_hermite_eval(idx.n_y, mu.y, y);
}

// --- angular functions ---

/// Normalization constant of the angular factor for a validated index.
inline double phi_angular_norm(const PolarIndex& idx, const MuParams& mu)
{
    using math::log_factorial;
    using math::log_gamma;
    const double n = idx.n.value();
    const double s = mu.sum();
    double lc = 0.0;
    if (idx.s_x == 1 && idx.s_y == 1) {
        if (idx.n.twice() == 0) {
            lc = log_gamma(s + 1.0) - std::log(2.0) - log_gamma(mu.x + 0.5) - log_gamma(mu.y + 0.5);
        } else {
            lc = std::log(2.0 * n + s) + log_gamma(n + s) + log_factorial(idx.n.floor()) - std::log(2.0) -
                 log_gamma(n + mu.x + 0.5) - log_gamma(n + mu.y + 0.5);
        }
    } else if (idx.s_x == -1 && idx.s_y == -1) {
        lc = std::log(2.0 * n + s) + log_gamma(n + s + 1.0) + log_factorial(idx.n.floor() - 1) - std::log(2.0) -
             log_gamma(n + mu.x + 0.5) - log_gamma(n + mu.y + 0.5);
    } else if (idx.s_x == 1) {
        lc = std::log(2.0 * n + s) + log_gamma(n + s + 0.5) + log_gamma(n + 0.5) - std::log(2.0) -
             log_gamma(n + mu.x) - log_gamma(n + mu.y + 1.0);
    } else {
        lc = std::log(2.0 * n + s) + log_gamma(n + s + 0.5) + log_gamma(n + 0.5) - std::log(2.0) -
             log_gamma(n + mu.x + 1.0) - log_gamma(n + mu.y);
    }
    return std::exp(0.5 * lc);
}

/// Normalized angular factor Phi_n^{s_x s_y}(phi).
template <typename T>
T phi_angular(const PolarIndex& idx, const MuParams& mu, const T& phi)
{
    using std::cos;
    using std::sin;
    idx.validate();
    const double c = phi_angular_norm(idx, mu);
    const T x = -cos(2.0 * phi);
    const int nf = idx.n.floor();
    if (idx.s_x == 1 && idx.s_y == 1) return c * jacobi_eval(nf, mu.x - 0.5, mu.y - 0.5, x);
    if (idx.s_x == -1 && idx.s_y == -1) {
        return c * sin(phi) * cos(phi) * jacobi_eval(nf - 1, mu.x + 0.5, mu.y + 0.5, x);
    }
    if (idx.s_x == 1) return c * sin(phi) * jacobi_eval(nf, mu.x - 0.5, mu.y + 0.5, x);
    return c * cos(phi) * jacobi_eval(nf, mu.x + 0.5, mu.y - 0.5, x);
}

// --- radial functions ---

/// P_k(rho) with the factor e^{-rho^2/2} rho^{2n} removed.
template <typename T>
T p_radial_reduced(int k, HalfInt n, const MuParams& mu, const T& rho)
{
    if (k < 0) throw DomainError("radial index k must be non-negative");
    const double a = n.twice() + mu.sum();
    const double c = std::exp(0.5 * (std::log(2.0) + math::log_factorial(k) - math::log_gamma(k + a + 1.0)));
    return c * laguerre_eval(k, a, rho * rho);
}

template <typename T>
T p_radial(int k, HalfInt n, const MuParams& mu, const T& rho)
{
    using std::exp;
    using std::pow;
    T r = exp(-0.5 * (rho * rho)) * p_radial_reduced(k, n, mu, rho);
    for (int i = 0; i < n.twice(); ++i) r = r * rho;
    return r;
}

/// Full polar wavefunction P_k(rho) Phi(phi).
inline double psi_polar(const PolarIndex& idx, const MuParams& mu, double rho, double phi)
{
    return p_radial(idx.k, idx.n, mu, rho) * phi_angular(idx, mu, phi);
}

// --- Jacobi-Dunkl eigenfunctions of the angular symmetry ---

/// F = (first + i * coeff * second) / sqrt(2), or F = first alone for n = 0.
struct JacobiDunklParts {
    PolarIndex first;
    PolarIndex second;
    double coeff = 0.0;
    bool single = false;
};

inline JacobiDunklParts jacobi_dunkl_parts(const JacobiDunklIndex& idx)
{
    idx.validate();
    JacobiDunklParts p;
    if (idx.epsilon == 1) {
        p.first = {0, idx.n, 1, 1};
        if (idx.n.twice() == 0) {
            p.single = true;
            return p;
        }
        p.second = {0, idx.n, -1, -1};
        p.coeff = idx.branch;
    } else {
        p.first = {0, idx.n, -1, 1};
        p.second = {0, idx.n, 1, -1};
        p.coeff = -idx.branch;
    }
    return p;
}

inline double jacobi_dunkl_eigenvalue(const JacobiDunklIndex& idx, const MuParams& mu)
{
    idx.validate();
    const double n = idx.n.value();
    if (idx.epsilon == 1) return idx.branch * 2.0 * std::sqrt(n * (n + mu.sum()));
    return idx.branch * 2.0 * std::sqrt((n + mu.x) * (n + mu.y));
}

inline complex jacobi_dunkl_F(const JacobiDunklIndex& idx, const MuParams& mu, double phi)
{
    const JacobiDunklParts p = jacobi_dunkl_parts(idx);
    const double a = phi_angular(p.first, mu, phi);
    if (p.single) return {a, 0.0};
    const double b = phi_angular(p.second, mu, phi);
    return complex(a, p.coeff * b) / std::sqrt(2.0);
}

/// i [d/dphi + mu_y cot(phi)(1 - R_y) - mu_x tan(phi)(1 - R_x)] applied to F
/// at phi, with R_x: phi -> pi - phi and R_y: phi -> -phi.
inline complex apply_angular_symmetry(const JacobiDunklIndex& idx, const MuParams& mu, double phi)
{
    const JacobiDunklParts p = jacobi_dunkl_parts(idx);
    auto F = [&](auto t) {
        using D = decltype(t);
        const D a = phi_angular(p.first, mu, t);
        const D b = p.single ? D(0.0) : phi_angular(p.second, mu, t);
        return std::pair<D, D>{a, b};
    };
    const auto [a, b] = F(Dual<double>(phi, 1.0));
    const auto [ay, by] = F(-phi);
    const auto [ax, bx] = F(pi - phi);
    const complex f(a.v, p.coeff * b.v);
    const complex df(a.d, p.coeff * b.d);
    const complex fy(ay, p.coeff * by);
    const complex fx(ax, p.coeff * bx);
    const complex r = df + mu.y / std::tan(phi) * (f - fy) - mu.x * std::tan(phi) * (f - fx);
    const double scale = p.single ? 1.0 : 1.0 / std::sqrt(2.0);
    return complex(0.0, 1.0) * r * scale;
}

/// Angular operator B_phi applied to Phi at phi.
inline double apply_angular_operator(const PolarIndex& idx, const MuParams& mu, double phi)
{
    using D = Dual<double>;
    const Dual<D> t(D(phi, 1.0), D(1.0, 0.0));
    const Dual<D> v = phi_angular(idx, mu, t);
    const double f = v.v.v;
    const double d1 = v.v.d;
    const double d2 = v.d.d;
    const double fx = phi_angular(idx, mu, pi - phi);
    const double fy = phi_angular(idx, mu, -phi);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return -0.5 * d2 + (mu.x * s / c - mu.y * c / s) * d1 + mu.x * (f - fx) / (2.0 * c * c) +
           mu.y * (f - fy) / (2.0 * s * s);
}

} // namespace dunkl

#endif
