// Prints the Cartesian/polar overlap table of one energy level and compares
// it with a direct quadrature of the wavefunctions.
//
//   overlap_demo [N] [mu_x] [mu_y]

#include <cstdio>
#include <cstdlib>

#include "dunkl/dunkl.hpp"

int main(int argc, char** argv)
{
    const int N = argc > 1 ? std::atoi(argv[1]) : 3;
    const dunkl::MuParams mu(argc > 2 ? std::atof(argv[2]) : 0.3, argc > 3 ? std::atof(argv[3]) : 0.5);

    const auto table = dunkl::polar_cartesian_overlap(N, mu);
    const auto quad = dunkl::overlap_quadrature_table(N, mu);

    std::printf("level %d, mu = (%g, %g), energy %g\n\n", N, mu.x, mu.y, dunkl::energy_level(N, mu));
    std::printf("%-14s", "");
    for (const auto& c : table.col_labels) std::printf("%20s", c.c_str());
    std::printf("\n");
    for (Eigen::Index r = 0; r < table.matrix.rows(); ++r) {
        std::printf("%-14s", table.row_labels[r].c_str());
        for (Eigen::Index c = 0; c < table.matrix.cols(); ++c) {
            const auto z = table.matrix(r, c);
            std::printf("   %+.5f%+.5fi", z.real(), z.imag());
        }
        std::printf("\n");
    }
    std::printf("\nunitarity defect      %.3e\n", table.unitarity_defect());
    std::printf("max |closed - quad|   %.3e\n", dunkl::max_entry_difference(table, quad));
    return 0;
}
