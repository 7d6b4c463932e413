#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"

#include "dunkl/io.hpp"
#include "dunkl/overlaps.hpp"

using namespace dunkl;
using Catch::Approx;

namespace {

const std::vector<MuParams>& mus()
{
    static const std::vector<MuParams> v = {MuParams(0.3, 0.5), MuParams(1.2, 0.1), MuParams(0.0, 0.0)};
    return v;
}

} // namespace

TEST_CASE("level 0 tables", "[overlaps]")
{
    const MuParams mu(0.3, 0.5);
    const OverlapTable t = q_overlap_closed_form(0, mu);
    REQUIRE(t.matrix.rows() == 1);
    CHECK(std::abs(t.matrix(0, 0)) == Approx(1.0));
    CHECK(q_overlap_oracle(0, mu).matrix(0, 0).real() == Approx(1.0));
    const OverlapTable p = polar_cartesian_overlap(0, mu);
    CHECK(p.row_labels[0] == "|0,0;++>");
    CHECK(std::abs(p.matrix(0, 0)) == Approx(1.0));
    const complex g = overlap_quadrature_oracle({0, HalfInt::integer(0), 1, 1}, {0, 0}, mu);
    CHECK(std::abs(g) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("level 1 against a hand-diagonalized 2x2 block", "[overlaps]")
{
    const MuParams mu(0.3, 0.5);
    // Q at level 1 in basis |0,1>, |1,0>
    const double a = std::sqrt(mu_number(1, mu.x) * mu_number(1, mu.y));
    const double d0 = -mu.x * (-1) - mu.y * 1 - 0.5 * (-1);
    const double d1 = -mu.x * 1 - mu.y * (-1) - 0.5 * (-1);
    const Matrix Q = symmetry_block(Symmetry::Q, 1, mu).matrix;
    CHECK(Q(0, 0).real() == Approx(d0));
    CHECK(Q(1, 1).real() == Approx(d1));
    CHECK(std::abs(Q(0, 1)) == Approx(a));
    const double off = Q(0, 1).real();
    const OverlapTable t = q_overlap_closed_form(1, mu);
    for (int l = 0; l <= 1; ++l) {
        const double q = q_eigenvalue(l, mu);
        // (d0 - q) v0 + off v1 = 0
        double v0 = off;
        double v1 = q - d0;
        const double nrm = std::hypot(v0, v1);
        v0 /= nrm;
        v1 /= nrm;
        if (v0 < 0) {
            v0 = -v0;
            v1 = -v1;
        }
        CHECK(t.matrix(l, 0).real() == Approx(v0).epsilon(1e-12));
        CHECK(t.matrix(l, 1).real() == Approx(v1).epsilon(1e-12));
    }
}

TEST_CASE("closed form agrees with diagonalization", "[overlaps][property]")
{
    for (const auto& mu : mus()) {
        for (int N = 0; N <= 8; ++N) {
            const OverlapTable c = q_overlap_closed_form(N, mu);
            const OverlapTable d = q_overlap_oracle(N, mu);
            CHECK(c.provenance == Provenance::closed_form);
            CHECK(d.provenance == Provenance::diagonalization);
            CHECK(max_entry_difference(c, d) < 1e-10);
            CHECK(c.unitarity_defect() < 1e-10);
            CHECK(d.unitarity_defect() < 1e-10);
            CHECK(q_recurrence_residual(c, mu) < 1e-10);
            CHECK(c.weight_indexing == (N == 0 || N % 2 ? "omega_l" : "omega_{N-l}"));
            const auto ev = eigen_decompose(symmetry_block(Symmetry::Q, N, mu)).values;
            const auto want = expected_q_spectrum(N, mu);
            for (int i = 0; i <= N; ++i) CHECK(ev[i] == Approx(want[i]));
        }
    }
}

TEST_CASE("mixing coefficients", "[overlaps]")
{
    const MuParams mu(0.3, 0.5);
    for (int n = 1; n <= 6; ++n) {
        CHECK(std::abs(mixing_coefficient(HalfInt::integer(n), 1, mu).value) == Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(mixing_coefficient(HalfInt::from_twice(2 * n - 1), -1, MuParams(1.4, 0.05)).value) ==
              Approx(1.0).epsilon(1e-15));
        const complex z0 = mixing_coefficient(HalfInt::integer(n), 1, MuParams(0.0, 0.0)).value;
        CHECK(z0.real() == Approx(0.0).margin(1e-15));
        CHECK(z0.imag() == Approx(-1.0));
    }
    const complex x = mixing_coefficient(HalfInt::from_twice(1), -1, mu).value;
    CHECK(x.real() == Approx(-0.11111111111111111111).epsilon(1e-14));
    CHECK(x.imag() == Approx(0.99380798999990653174).epsilon(1e-14));
    CHECK_THROWS_AS(mixing_coefficient(HalfInt::integer(0), 1, mu), DomainError);
    CHECK_THROWS_AS(mixing_coefficient(HalfInt::integer(1), -1, mu), DomainError);
}

TEST_CASE("polar tables against the quadrature oracle", "[overlaps][property]")
{
    for (const auto& mu : mus()) {
        for (int N = 0; N <= 8; ++N) {
            const OverlapTable p = polar_cartesian_overlap(N, mu);
            const OverlapTable pd = polar_from_q_table(q_overlap_oracle(N, mu), mu);
            const OverlapTable pq = overlap_quadrature_table(N, mu);
            INFO("N=" << N << " mu=(" << mu.x << "," << mu.y << ")");
            CHECK(p.rows == RowBasis::polar);
            CHECK(p.unitarity_defect() < 1e-10);
            CHECK(pq.unitarity_defect() < 1e-10);
            CHECK(max_entry_difference(p, pd) < 1e-10);
            CHECK(max_entry_difference(p, pq) < 1e-7);
        }
    }
}

TEST_CASE("single-entry quadrature oracle at level 3", "[overlaps]")
{
    const MuParams mu(0.3, 0.5);
    const OverlapTable p = polar_cartesian_overlap(3, mu);
    Matrix m(4, 4);
    const auto ps = polar_states(3);
    const auto cs = cartesian_states(3);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m(r, c) = overlap_quadrature_oracle(ps[r], cs[c], mu, 24);
    }
    apply_phase_convention(m);
    CHECK(max_abs(m - p.matrix) < 1e-7);
    CHECK(overlap_quadrature_oracle(ps[0], {1, 1}, mu) == complex(0.0));
}

TEST_CASE("classical limit matches circular harmonics", "[overlaps]")
{
    // level 1, mu = 0: |0,1/2;+-> ~ sin(phi) ~ y, |0,1/2;-+> ~ cos(phi) ~ x
    const OverlapTable p = polar_cartesian_overlap(1, MuParams(0.0, 0.0));
    CHECK(p.row_labels[0] == "|0,1/2;+->");
    CHECK(std::abs(p.matrix(0, 0)) == Approx(1.0)); // |0,1>
    CHECK(std::abs(p.matrix(0, 1)) == Approx(0.0).margin(1e-14));
    CHECK(std::abs(p.matrix(1, 1)) == Approx(1.0));
}

TEST_CASE("phase convention", "[overlaps]")
{
    Matrix m(2, 3);
    m << complex(1e-20, 0), complex(0, -2), complex(1, 1), complex(-3, 0), complex(0, 0), complex(0, 1);
    apply_phase_convention(m);
    CHECK(m(0, 1).real() == Approx(2.0));
    CHECK(m(0, 1).imag() == Approx(0.0).margin(1e-15));
    CHECK(m(1, 0).real() == Approx(3.0));
}

TEST_CASE("CSV and JSON serialization", "[overlaps][io]")
{
    CHECK(io::format_double(0.1) == "1.0000000000000001e-01");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(io::format_double(-0.0) == "0.0000000000000000e+00");
    CHECK(io::csv_field("|1,0>") == "\"|1,0>\"");
    CHECK(io::csv_field("plain") == "plain");
    const OverlapTable t = polar_cartesian_overlap(2, MuParams(0.3, 0.5));
    const std::string rows = io::overlap_csv_rows(t);
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 9);
    CHECK(rows.rfind("closed-form,\"|1,0;++>\",\"|0,2>\",", 0) == 0);
    const auto j = io::overlap_json(t);
    CHECK(j["real"].size() == 3);
    CHECK(j["provenance"] == "closed-form");
    CHECK(j["rows"][2] == "|0,1;-->");
}
