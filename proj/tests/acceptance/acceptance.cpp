// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dunkl/dunkl.hpp"

using namespace dunkl;

namespace {

const std::vector<MuParams> mus = {MuParams(0.3, 0.5), MuParams(1.2, 0.1), MuParams(0.0, 0.0)};

int failures = 0;

void report(int id, const std::string& what, double residual, double tol)
{
    const bool ok = residual < tol;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (residual %.3e, tol %.0e)\n", ok ? "PASS" : "FAIL", id, what.c_str(), residual,
                tol);
}

double sorted_gap(std::vector<double> a, std::vector<double> b)
{
    if (a.size() != b.size()) return INFINITY;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
    return w;
}

void spectrum_and_degeneracy()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        for (int N = 0; N <= 10; ++N) {
            const double E = N + mu.x + mu.y + 1.0;
            worst = std::max(worst, std::abs(double(cartesian_states(N).size()) - (N + 1)));
            worst = std::max(worst, std::abs(double(polar_states(N).size()) - (N + 1)));
            worst = std::max(worst, std::abs(energy_level(N, mu) - E) / E);
            for (const auto& c : cartesian_states(N)) worst = std::max(worst, std::abs(energy_cartesian(c, mu) - E) / E);
            for (const auto& p : polar_states(N)) worst = std::max(worst, std::abs(energy_polar(p, mu) - E) / E);
        }
    }
    // energies compared to a few ulps (relative)
    report(1, "spectrum and degeneracy", worst, 1e-15);
}

void orthonormality()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        const QuadratureRule rx = gauss_rule(WeightSpec::generalized_hermite(mu.x), 24);
        const QuadratureRule ry = gauss_rule(WeightSpec::generalized_hermite(mu.y), 24);
        std::vector<CartesianIndex> cs;
        std::vector<PolarIndex> ps;
        for (int N = 0; N <= 6; ++N) {
            for (const auto& c : cartesian_states(N)) cs.push_back(c);
            for (const auto& p : polar_states(N)) ps.push_back(p);
        }
        for (const auto& a : cs) {
            for (const auto& b : cs) {
                double s = 0.0;
                for (std::size_t i = 0; i < rx.size(); ++i) {
                    for (std::size_t j = 0; j < ry.size(); ++j) {
                        const double x = rx.nodes[i];
                        const double y = ry.nodes[j];
                        s += rx.weights[i] * ry.weights[j] * generalized_hermite_eval(a.n_x, mu.x, x) *
                             generalized_hermite_eval(b.n_x, mu.x, x) * generalized_hermite_eval(a.n_y, mu.y, y) *
                             generalized_hermite_eval(b.n_y, mu.y, y);
                    }
                }
                worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
            }
        }
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                const double ang = angular_inner_product([&](double t) { return phi_angular(a, mu, t); },
                                                         [&](double t) { return phi_angular(b, mu, t); }, mu);
                const double rad = radial_inner_product([&](double r) { return p_radial_reduced(a.k, a.n, mu, r); },
                                                        [&](double r) { return p_radial_reduced(b.k, b.n, mu, r); },
                                                        mu, a.n.value(), b.n.value());
                worst = std::max(worst, std::abs(ang * rad - (a == b ? 1.0 : 0.0)));
            }
        }
    }
    report(2, "orthonormality of Cartesian and polar states", worst, 1e-8);
}

void algebra_suite()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        for (int N = 0; N <= 10; ++N) {
            worst = std::max(worst, check_sd2_relations(N, mu).max_residual());
            worst = std::max(worst, check_casimir(N, mu).max_residual());
        }
        worst = std::max(worst, check_parabose(10, mu).max_residual());
    }
    report(3, "Schwinger-Dunkl, parabose and Casimir relations", worst, 1e-12);
}

void operator_spectra()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        const double s = mu.x + mu.y;
        for (int N = 0; N <= 10; ++N) {
            std::vector<double> q;
            for (int l = 0; l <= N; ++l) q.push_back(math::parity_sign(l + 1) * (l + s + 0.5));
            worst = std::max(worst, sorted_gap(eigen_decompose(symmetry_block(Symmetry::Q, N, mu)).values, q));

            // J2 is -1/2 times the angular symmetry
            std::vector<double> j;
            if (N % 2 == 0) {
                j.push_back(0.0);
                for (int n = 1; 2 * n <= N; ++n) {
                    const double v = std::sqrt(n * (n + s));
                    j.push_back(v);
                    j.push_back(-v);
                }
            } else {
                for (double n = 0.5; 2 * n <= N; n += 1.0) {
                    const double v = std::sqrt((n + mu.x) * (n + mu.y));
                    j.push_back(v);
                    j.push_back(-v);
                }
            }
            worst = std::max(worst, sorted_gap(eigen_decompose(symmetry_block(Symmetry::J2, N, mu)).values, j));
        }
    }
    report(4, "spectra of Q and J2", worst, 1e-10);
}

void oracle_triangle()
{
    double diag = 0.0;
    double quad = 0.0;
    double unit = 0.0;
    for (const auto& mu : mus) {
        for (int N = 0; N <= 8; ++N) {
            const OverlapTable qc = q_overlap_closed_form(N, mu);
            const OverlapTable qd = q_overlap_oracle(N, mu);
            const OverlapTable pc = polar_from_q_table(qc, mu);
            const OverlapTable pd = polar_from_q_table(qd, mu);
            const OverlapTable pq = overlap_quadrature_table(N, mu);
            diag = std::max({diag, max_entry_difference(qc, qd), max_entry_difference(pc, pd)});
            quad = std::max(quad, max_entry_difference(pc, pq));
            unit = std::max({unit, qc.unitarity_defect(), pc.unitarity_defect(), pq.unitarity_defect()});
        }
    }
    report(5, "overlaps: closed form vs diagonalization", diag, 1e-10);
    report(5, "overlaps: closed form vs quadrature", quad, 1e-7);
    report(5, "overlaps: unitarity", unit, 1e-10);
}

void hahn_orthogonality()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        for (int N = 0; N <= 10; ++N) {
            const auto [alpha, beta] = overlap_hahn_parameters(N, mu);
            const DualMinusOneHahnFamily f = dual_m1_hahn_family(alpha, beta, N);
            for (int n = 0; n <= N; ++n) {
                for (int m = 0; m <= N; ++m) {
                    double s = 0.0;
                    for (int l = 0; l <= N; ++l) {
                        s += f.weights[l] * dual_m1_hahn_eval(f, n, f.grid[l]) * dual_m1_hahn_eval(f, m, f.grid[l]);
                    }
                    const double want = n == m ? dual_m1_hahn_norm(f, n) : 0.0;
                    const double scale = std::sqrt(dual_m1_hahn_norm(f, n) * dual_m1_hahn_norm(f, m));
                    worst = std::max(worst, std::abs(s - want) / scale);
                }
            }
        }
    }
    report(6, "dual -1 Hahn orthogonality", worst, 1e-9);
}

void anti_hermiticity()
{
    double worst = 0.0;
    for (double mu : {0.0, 0.3, 0.5, 1.2, -0.35}) {
        const QuadratureRule rule = gauss_rule(WeightSpec::generalized_hermite(mu), default_nodes);
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                const double d = antihermiticity_defect([a, mu](auto t) { return psi_1d(a, mu, t); },
                                                        [b, mu](auto t) { return psi_1d(b, mu, t); }, mu, rule);
                worst = std::max(worst, std::abs(d));
            }
        }
    }
    report(7, "anti-Hermiticity of the Dunkl derivative", worst, 1e-10);
}

void classical_reduction()
{
    const MuParams zero(0.0, 0.0);
    double spec = 0.0;
    for (int N = 0; N <= 10; ++N) {
        std::vector<double> want;
        for (int m = 0; m <= N; ++m) want.push_back(-N / 2.0 + m);
        spec = std::max(spec, sorted_gap(eigen_decompose(symmetry_block(Symmetry::J2, N, zero)).values, want));
    }
    report(8, "classical J2 spectrum", spec, 1e-10);

    // overlap of each mu = 0 state with the textbook Hermite function
    const QuadratureRule r = gauss_rule(WeightSpec::generalized_hermite(0.0), 40);
    auto classical = [](int n, double x) {
        const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(pi));
        return std::hermite(n, x) * std::exp(-x * x / 2) / norm;
    };
    double worst = 0.0;
    for (int N = 0; N <= 6; ++N) {
        for (const auto& c : cartesian_states(N)) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                for (std::size_t j = 0; j < r.size(); ++j) {
                    const double x = r.nodes[i];
                    const double y = r.nodes[j];
                    s += r.weights[i] * r.weights[j] * std::exp(x * x + y * y) * psi_cartesian(c, zero, x, y) *
                         classical(c.n_x, x) * classical(c.n_y, y);
                }
            }
            worst = std::max(worst, 1.0 - s);
        }
    }
    report(8, "classical wavefunctions (1 - overlap)", worst, 1e-10);
}

void sl12_identification()
{
    double worst = 0.0;
    for (const auto& mu : mus) {
        for (int N = 0; N <= 8; ++N) {
            worst = std::max(worst, max_abs(sl12_coupled_casimir(N, mu).matrix - symmetry_block(Symmetry::Q, N, mu).matrix));
        }
    }
    report(9, "sl_-1(2) coupled Casimir equals Q", worst, 1e-13);
}

} // namespace

int main()
{
    spectrum_and_degeneracy();
    orthonormality();
    algebra_suite();
    operator_spectra();
    oracle_triangle();
    hahn_orthogonality();
    anti_hermiticity();
    classical_reduction();
    sl12_identification();
    std::printf("%s: %d failing check(s)\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
