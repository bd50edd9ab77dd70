#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mtp/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Explicit multi-point Taylor (Hermite) interpolation"};
    app.require_subcommand(1);

    mtp::cli::Invocation call;
    std::string problem_path;
    double tolerance = 0;
    std::string out_path;

    auto add_common = [&](CLI::App* sub, bool takes_problem) {
        if (takes_problem)
            sub->add_option("problem", problem_path, "Problem file (mtp-problem v1)")->required();
        sub->add_option("--out", out_path, "Write CSV to FILE instead of stdout");
    };

    auto* build = app.add_subcommand("build", "Print monomial coefficients and the F-coefficient table");
    add_common(build, true);

    auto* verify = app.add_subcommand("verify", "Check every derivative condition at every node");
    add_common(verify, true);
    auto* tolerance_opt = verify->add_option("--tolerance", tolerance,
                                             "Max absolute residual in floating mode (default 1e-9)");

    auto* compare = app.add_subcommand("compare", "Compare against the Vandermonde and Newton-Hermite oracles");
    add_common(compare, true);

    auto* grid = app.add_subcommand("grid", "Evaluate on the problem's grid against the catalog function");
    add_common(grid, true);
    grid->add_flag("--stp-compare", call.stp_compare, "Add the same-degree single-point Taylor column");

    auto* identities = app.add_subcommand("identities", "Exhaustive exact checks of the underlying identities");
    add_common(identities, false);
    identities->add_option("--n-max", call.n_max, "Largest n")->capture_default_str();
    identities->add_option("--k-max", call.k_max, "Largest k")->capture_default_str();
    identities->add_option("--m-max", call.m_max, "Largest node count m")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : mtp::cli::parse_failure;
    }

    call.command = app.get_subcommands().front()->get_name();
    if (!problem_path.empty())
        call.problem_path = problem_path;
    if (*tolerance_opt)
        call.tolerance = tolerance;
    if (!out_path.empty())
        call.out_path = out_path;

    return mtp::cli::run(call, std::cout, std::cerr);
}
