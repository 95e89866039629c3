// Library usage walkthrough: Casimir energy, a fermion vacuum in a background
// flux, and the decay of the regulated Fock-space ratio.

#include <cstdio>
#include <numbers>

#include "zetavev/oracle.hpp"
#include "zetavev/scenarios.hpp"

int main()
{
    using namespace zetavev;

    for (double x : {0.5, 1.0, 2.0}) {
        std::printf("casimir(X=%g) = %.12f   (-pi/6X = %.12f)\n", x, casimir_energy(x),
                    -std::numbers::pi / (6.0 * x));
    }

    const auto family = SpectralFamily::ascending(2.0 * std::numbers::pi, 1.0, 1, 2);
    const double smoothed =
        0.5 * smoothed_sum_finite_part(family, 1, SmoothingSchedule::for_family(family, 2));
    std::printf("heat-kernel finite part, X=1: %.12f\n\n", smoothed);

    FermionParams p;
    p.X = 1.0;
    p.m = 0.1;
    p.n_plus = 1;
    std::printf("%8s %12s %12s %12s %12s\n", "flux", "Q", "Q5", "H_F", "C+");
    for (double flux = 0.0; flux <= 3.0; flux += 0.5) {
        p.flux = flux;
        const auto r = fermion_background_report(p);
        std::printf("%8.3f %12.8f %12.8f %12.8f %12.8f\n", flux, r.real("Q"), r.real("Q5"),
                    r.real("H_F"), r.real("C_plus"));
    }

    std::printf("\n%10s %14s\n", "T", "|fock ratio|");
    for (double t : {1e2, 1e3, 1e4, 1e5, 1e6}) {
        const auto ratio = fock_ratio({1.0, 0.0, 4}, TimeParameter(t));
        std::printf("%10.0e %14.6e\n", t, std::abs(ratio.value));
    }
    return 0;
}
