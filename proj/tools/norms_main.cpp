// One-shot norm / seminorm estimates, one CSV row per invocation.
#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "gausswidth/csv.hpp"
#include "gausswidth/norms.hpp"
#include "gausswidth/test_functions.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Gaussian Sobolev norm and seminorm estimators"};
    app.require_subcommand(1);

    std::string function_id, space, integrator = "mc", mixed_flavor = "cube";
    std::string output;
    double s = 1.0, p = 2.0, cube_lo = 0.0, cube_hi = 1.0;
    double r_min = 0.0, r_max = 0.0;
    int dim = 1, samples = 20000, shells = 0;
    std::uint64_t seed = 1;

    auto* est = app.add_subcommand("estimate", "estimate one norm value");
    est->add_option("--function", function_id, "test function id")->required();
    est->add_option("--space", space,
                    "Wsp | WspG | Wkernel | mixed (also lp | sobolev)")
        ->required();
    est->add_option("--s", s, "smoothness order");
    est->add_option("--p", p, "integrability");
    est->add_option("--dim", dim, "dimension");
    est->add_option("--samples", samples, "MC sample budget");
    est->add_option("--seed", seed, "RNG seed");
    est->add_option("--integrator", integrator, "mc | quad");
    est->add_option("--mixed-flavor", mixed_flavor, "cube | kernel");
    est->add_option("--cube-lo", cube_lo, "cube lower corner");
    est->add_option("--cube-hi", cube_hi, "cube upper corner");
    est->add_option("--r-min", r_min, "radial grid override");
    est->add_option("--r-max", r_max, "radial grid override");
    est->add_option("--shells", shells, "radial shell count override");
    est->add_option("--output", output, "CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        gw::TestFunction f = gw::test_function(function_id, dim);
        gw::IntegratorConfig icfg;
        icfg.points = samples;
        icfg.seed = seed;
        icfg.kind = integrator == "quad"
                        ? gw::IntegratorConfig::Kind::TensorQuadrature
                        : gw::IntegratorConfig::Kind::MonteCarlo;
        if (r_min > 0.0) icfg.radial.r_min = r_min;
        if (r_max > 0.0) icfg.radial.r_max = r_max;
        if (shells > 0) icfg.radial.shells = shells;
        gw::Cube cube{cube_lo, cube_hi};
        gw::MixedFlavor mf = mixed_flavor == "kernel"
                                 ? gw::MixedFlavor::GaussKernel
                                 : gw::MixedFlavor::CubeGagliardo;

        gw::NormEstimate e;
        if (space == "lp")
            e = gw::lp_gamma_norm(f, p, icfg);
        else if (space == "sobolev")
            e = gw::sobolev_norm_integer(f, static_cast<int>(std::llround(s)), p,
                                         icfg);
        else if (space == "Wsp" || space == "gagliardo-cube")
            e = gw::gagliardo_seminorm_cube(f, s, p, cube, icfg);
        else if (space == "WspG" || space == "gagliardo-gauss")
            e = gw::gagliardo_seminorm_gauss(f, s, p, icfg);
        else if (space == "Wkernel" || space == "kernel")
            e = gw::kernel_seminorm_gauss(f, s, p, icfg);
        else if (space == "mixed")
            e = gw::mixed_seminorm(f, s, p, mf, cube, icfg);
        else {
            std::cerr << "unknown --space " << space << "\n";
            return 2;
        }
        gw::CsvWriter csv(
            {"function", "space", "s", "p", "value", "stderr", "diverged"});
        csv.add_row({function_id, space, gw::CsvWriter::num(s),
                     gw::CsvWriter::num(p), gw::CsvWriter::num(e.value),
                     gw::CsvWriter::num(e.std_error), e.diverged ? "1" : "0"});
        if (output.empty())
            std::cout << csv.text();
        else
            csv.write_file(output);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
