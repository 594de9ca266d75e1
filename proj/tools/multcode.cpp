#include <iostream>

#include "CLI11.hpp"
#include "mcode/jobs.hpp"

namespace {

void add_common_options(CLI::App* cmd, mcode::JobSpec& job) {
    cmd->add_option("--p", job.field.p, "field characteristic (prime)")->required();
    cmd->add_option("--e", job.field.e, "extension degree");
    cmd->add_option("--modulus", job.field.modulus,
                    "modulus coefficients c0,...,ce for extension fields")
        ->delimiter(',');
    cmd->add_option("--m", job.m, "number of variables");
    cmd->add_option("--r", job.r, "multiplicity");
    cmd->add_option("--k", job.k, "degree bound (polynomials of degree < k)");
    cmd->add_option("--grid", job.grid, "full | random:s1,s2,... | grid JSON file");
    cmd->add_option("--j", job.j_descriptor, "classical | box:r1,r2,... | set JSON file");
    cmd->add_option("--format", job.format, "pretty | csv | json")
        ->check(CLI::IsMember({"pretty", "csv", "json"}));
    cmd->add_option("--out", job.out_path, "write the artifact to this file");
    cmd->add_option("--cap", job.cap, "codeword cap for exhaustive distance search");
    cmd->add_option("--seed", job.seed, "seed for random grid sampling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicity codes over Cartesian grids: dimensions, duals, parity checks"};
    app.require_subcommand(1);

    mcode::JobSpec job;
    using Command = mcode::JobSpec::Command;

    auto* gen = app.add_subcommand("gen", "print a generator matrix");
    auto* dual = app.add_subcommand("dual", "print a parity-check matrix of M(S,r,k)");
    auto* dim = app.add_subcommand("dim", "print the code dimension");
    auto* check = app.add_subcommand("check", "verify G H^T = 0 and rank complementarity");
    auto* distance = app.add_subcommand("distance", "exact folded distances plus bounds");
    auto* bounds = app.add_subcommand("bounds", "Schwartz-Zippel distance bounds");

    for (CLI::App* cmd : {gen, dual, dim, check, distance, bounds}) add_common_options(cmd, job);
    dual->add_flag("--show-basis", job.show_basis, "also print the dual basis polynomials");
    check->add_option("--h-file", job.h_path, "verify this parity-check matrix (JSON) instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) job.command = Command::Gen;
    if (dual->parsed()) job.command = Command::Dual;
    if (dim->parsed()) job.command = Command::Dim;
    if (check->parsed()) job.command = Command::Check;
    if (distance->parsed()) job.command = Command::Distance;
    if (bounds->parsed()) job.command = Command::Bounds;

    return mcode::run_job(job, std::cout, std::cerr);
}
